//! Dispersive force of a gain-line slab against the ideal-lens prediction.
//!
//! `eta` is the ratio of the two. It stays close to 1 while the kernel only
//! samples frequencies where `ε(iξ) ≈ −1`, and drifts away as `a → 2b`.
//!
//! ```text
//! cargo run --release --example eta_sweep
//! ```

use casimir::ideal::ideal_lens_force;
use casimir::lifshitz::casimir_force_dispersive;
use casimir::{CavityGeometry, DispersionModel, QuadratureSpec, Result, UnitsContext};

fn main() -> Result<()> {
    let units = UnitsContext::natural();
    let spec = QuadratureSpec::default();
    let model = DispersionModel::drude_gain(10.0);
    let b = 3.0;

    println!("{:>6} {:>14} {:>14} {:>8} {:>10}", "a", "force", "ideal", "eta", "error");
    for i in 0..=28 {
        let a = 3.0 + 0.1 * i as f64;
        let geometry = CavityGeometry::slab_interior(a, b)?;
        let force = casimir_force_dispersive(&geometry, &model, &spec, units)?;
        let ideal = ideal_lens_force(&geometry, units)?;
        println!(
            "{a:>6.2} {:>14.6e} {:>14.6e} {:>8.4} {:>10.1e}",
            force.force_per_area,
            ideal.force_per_area,
            force.force_per_area / ideal.force_per_area,
            force.error_estimate
        );
    }

    let at_mirror_image = CavityGeometry::slab_interior(2.0 * b, b)?;
    if let Err(e) = casimir_force_dispersive(&at_mirror_image, &model, &spec, units) {
        println!("\na = 2b: {e}");
    }
    Ok(())
}

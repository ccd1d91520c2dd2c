//! Repulsion between a mirror and a magnetic slab on the opposite mirror.
//!
//! Prints the force on the upper mirror and the force rescaled by
//! `(a − b)⁴ / (ħcπ²/240)` as the vacuum gap opens, and locates the gap at
//! which the repulsion turns into attraction.
//!
//! ```text
//! cargo run --release --example magnetic_repulsion
//! ```

use casimir::magnetic::rescaled_force_curve;
use casimir::{DispersionModel, LayerStack, QuadratureSpec, Result};

fn main() -> Result<()> {
    let b = 3.0;
    let template = LayerStack::new(4.0, b, DispersionModel::magnetic_drude(5.0, 10.0))?;
    let gaps: Vec<f64> = (0..40).map(|i| 0.05 * 1.15f64.powi(i)).collect();
    let a_values: Vec<f64> = gaps.iter().map(|g| b + g).collect();

    let curve = rescaled_force_curve(&template, &a_values, &QuadratureSpec::default())?;
    let gap = curve.column("gap").expect("gap column");
    let force = curve.column("force").expect("force column");
    let rescaled = curve.column("rescaled_force").expect("rescaled column");

    println!("{:>10} {:>14} {:>10}", "a - b", "force", "rescaled");
    for i in 0..gap.len() {
        println!("{:>10.4} {:>14.6e} {:>10.5}", gap[i], force[i], rescaled[i]);
    }

    if let Some(i) = force.windows(2).position(|w| w[0] > 0.0 && w[1] <= 0.0) {
        println!("\nrepulsion ends between a - b = {:.3} and {:.3}", gap[i], gap[i + 1]);
    }
    Ok(())
}

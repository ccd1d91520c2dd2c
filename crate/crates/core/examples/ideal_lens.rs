//! Closed-form force of a cavity with an ideal `ε = μ = −1` slab.
//!
//! The slab folds space, so the mirrors at distance `a` act as if they were
//! `|a − 2b|` apart, and the force flips sign at `a = 2b`.
//!
//! ```text
//! cargo run --example ideal_lens
//! ```

use casimir::ideal::{effective_distance, empty_cavity_force, ideal_lens_force};
use casimir::{CavityGeometry, Result, UnitsContext};

fn main() -> Result<()> {
    let units = UnitsContext::natural();
    let b = 3.0;
    println!("{:>6} {:>8} {:>14} {:>14}  direction", "a", "a'", "lens force", "empty cavity");
    for a in [3.0, 3.5, 4.0, 4.5, 5.0, 5.5, 6.5, 7.0, 8.0, 10.0] {
        let geometry = CavityGeometry::slab_interior(a, b)?;
        let lens = ideal_lens_force(&geometry, units)?;
        let empty = empty_cavity_force(a, units)?;
        println!(
            "{a:>6.2} {:>8.3} {:>14.6e} {:>14.6e}  {}",
            effective_distance(&geometry)?,
            lens.force_per_area,
            empty.force_per_area,
            if lens.is_repulsive() { "repulsive" } else { "attractive" }
        );
    }
    Ok(())
}

//! How close to an ideal lens a thin aluminium foil would float.
//!
//! ```text
//! cargo run --example levitation
//! ```

use casimir::ideal::{foil_weight_per_area, ideal_casimir_force, levitation_balance, STANDARD_GRAVITY};
use casimir::{Result, UnitsContext};

fn main() -> Result<()> {
    let units = UnitsContext::si();
    let density = 2700.0;

    println!("{:>12} {:>14} {:>16}", "t (um)", "weight (N/m2)", "balance a' (um)");
    for t_um in [0.1, 0.25, 0.5, 1.0, 2.0, 5.0] {
        let t = t_um * 1e-6;
        let weight = foil_weight_per_area(t, density, STANDARD_GRAVITY)?;
        let balance = levitation_balance(t, density, STANDARD_GRAVITY, units)?;
        println!("{t_um:>12.2} {weight:>14.5e} {:>16.4}", balance * 1e6);
    }

    let repulsion = ideal_casimir_force(0.5e-6, units)?;
    println!(
        "\nrepulsion at a' = 0.5 um: {:.4e} N/m^2 (hbar c = {:.6e} J m)",
        repulsion.force_per_area,
        units.hbar_c()
    );
    Ok(())
}

//! The Lifshitz kernel `h(q)` and the polylogarithms it is built from.
//!
//! ```text
//! cargo run --example kernel_table
//! ```

use std::f64::consts::PI;

use casimir::quadrature::integrate_semi_infinite;
use casimir::special::{kernel_h, polylog, ZETA3};
use casimir::{QuadratureSpec, Result};

fn main() -> Result<()> {
    println!("Li2(1) = {:.15}  (pi^2/6 = {:.15})", polylog(2, 1.0)?, PI * PI / 6.0);
    println!("Li3(1) = {:.15}  (zeta(3) = {ZETA3:.15})", polylog(3, 1.0)?);
    println!("Li2(1/2) = {:.15}", polylog(2, 0.5)?);
    println!();

    println!("{:>5} {:>22}", "q", "h(q)");
    for i in 0..=12 {
        let q = 0.5 * i as f64;
        println!("{q:>5.1} {:>22.15e}", kernel_h(q)?);
    }

    let spec = QuadratureSpec::default().with_rel_tol(1e-12);
    let total = integrate_semi_infinite(|q| kernel_h(q).unwrap_or(f64::NAN), &spec)?;
    println!();
    println!(
        "integral of h over [0, inf) = {:.15} +- {:.1e}  (pi^4/240 = {:.15})",
        total.value,
        total.error_estimate,
        PI.powi(4) / 240.0
    );
    Ok(())
}

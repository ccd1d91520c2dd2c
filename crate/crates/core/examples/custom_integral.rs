//! The adaptive half-line integrator on its own.
//!
//! ```text
//! cargo run --example custom_integral
//! ```

use std::f64::consts::PI;

use casimir::quadrature::{integrate_double_semi_infinite, integrate_semi_infinite};
use casimir::{QuadratureSpec, Result};

fn main() -> Result<()> {
    let spec = QuadratureSpec::default().with_rel_tol(1e-10);

    let planck = integrate_semi_infinite(|x| if x > 0.0 { x.powi(3) / x.exp_m1() } else { 0.0 }, &spec)?;
    println!(
        "int x^3/(e^x - 1) = {:.14} (exact {:.14}), est. error {:.1e}, {} evaluations",
        planck.value,
        PI.powi(4) / 15.0,
        planck.error_estimate,
        planck.evaluations
    );

    let slow = integrate_semi_infinite(|x| (1.0 + x).powf(-1.5), &spec)?;
    println!("int (1+x)^-1.5 = {:.14} (exact 2), converged: {}", slow.value, slow.converged);

    // Narrow integrands want a matching decay scale.
    let narrow = spec.with_decay_scale(1e-3);
    let spike = integrate_semi_infinite(|x| (-1e3 * x).exp(), &narrow)?;
    println!("int exp(-1000 x) = {:.14e} (exact 1e-3)", spike.value);

    let gaussian = integrate_double_semi_infinite(|u, xi| (-(u * u + xi * xi)).exp(), &spec)?;
    println!("quarter-plane Gaussian = {:.14} (exact {:.14})", gaussian.value, PI / 4.0);
    Ok(())
}

//! Permittivity of a single gain line on the imaginary and real axes.
//!
//! On the imaginary axis `ε(iξ)` rises from −1 at `ξ = 0` to 1 at infinity,
//! passing through zero at `ξ = ω₀`. On the real axis a small linewidth keeps
//! the resonance finite.
//!
//! ```text
//! cargo run --example gain_line
//! ```

use casimir::{DispersionModel, Result};

fn main() -> Result<()> {
    let lossless = DispersionModel::drude_gain(10.0);
    let broadened = DispersionModel::DrudeGain { omega0: 10.0, gamma: 0.5 };
    lossless.validate()?;
    broadened.validate()?;

    println!("{:>6} {:>12} {:>12} {:>12}", "xi", "eps(i xi)", "Re eps(xi)", "Im eps(xi)");
    for i in 0..=20 {
        let x = 2.5 * i as f64;
        let imag_axis = lossless.eps_at_imag(x)?;
        let real_axis = broadened.eps_at_real(x)?;
        println!("{x:>6.1} {imag_axis:>12.6} {:>12.6} {:>12.6}", real_axis.re, real_axis.im);
    }

    match lossless.eps_at_real(10.0) {
        Ok(eps) => println!("\nlossless line at resonance: {eps}"),
        Err(e) => println!("\nlossless line at resonance: {e}"),
    }
    Ok(())
}

//! Dispersive Lifshitz force for the impedance-matched lens medium.
//!
//! For a slab whose tensors perform the frequency-dependent fold
//! `x → x/ε(ω)`, the regularized vacuum stress is that of an empty cavity of
//! size `a'(ξ) = a − b + b/ε(iξ)`:
//!
//! `σxx = (ħ/π²) ∫∫ w u / (e^{2a'w} − 1) du dξ`,  `w² = u² + ξ²/c²`.
//!
//! Where `a' < 0` the stress integral diverges, but only through a term `−wu`
//! that does not depend on the cavity; dropping it and integrating over `u`
//! in closed form leaves the single frequency integral
//!
//! `f = −(ħ/π²) ∫₀^∞ h(|a'|ξ/c) / a'³ dξ`
//!
//! with the kernel [`kernel_h`](crate::special::kernel_h).

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::dispersion::DispersionModel;
use crate::error::{CasimirError, Result};
use crate::ideal::{ideal_lens_force, signed_distance, CavityGeometry, ForceResult};
use crate::quadrature::{integrate_double_semi_infinite, integrate_semi_infinite, QuadratureSpec};
use crate::special::kernel_h_unchecked;
use crate::units::UnitsContext;

/// Number of frequencies probed to find the narrowest kernel.
const DECAY_PROBES: usize = 32;

/// One point of the Lifshitz double integral.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LifshitzIntegrand {
    pub u: f64,
    /// Imaginary frequency expressed as a wavenumber `ξ/c`.
    pub xi: f64,
    pub w: f64,
    pub a_prime: f64,
}

impl LifshitzIntegrand {
    pub fn new(u: f64, xi: f64, a_prime: f64) -> Self {
        Self {
            u,
            xi,
            w: u.hypot(xi),
            a_prime,
        }
    }

    /// `w u / (e^{2a'w} − 1)` with the cavity-independent `−wu` dropped for
    /// `a' < 0`; the `w → 0` limit is 0.
    pub fn value(&self) -> f64 {
        if self.w == 0.0 {
            return 0.0;
        }
        regularized_term(self.a_prime, self.w, self.u)
    }
}

/// Stress `σxx` inside a cavity of fixed transformed size.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StressResult {
    /// Positive stress pulls the mirrors together.
    pub stress_xx: f64,
    pub a_prime: f64,
    pub error_estimate: f64,
    pub converged: bool,
    pub evaluations: usize,
    pub units: UnitsContext,
}

/// `w u / (e^{2a'w} − 1)` for `a' > 0`, and `−w u / (e^{2|a'|w} − 1)` for
/// `a' < 0`.
///
/// The two branches differ exactly by the divergent, cavity-independent
/// `−wu` term.
pub fn regularized_kernel_term(a_prime: f64, w: f64, u: f64) -> Result<f64> {
    if a_prime == 0.0 || !a_prime.is_finite() {
        return Err(CasimirError::Domain {
            name: "a_prime",
            value: a_prime,
            reason: "must be finite and non-zero",
        });
    }
    if !(w > 0.0 && w.is_finite()) {
        return Err(CasimirError::Domain {
            name: "w",
            value: w,
            reason: "must be positive and finite",
        });
    }
    Ok(regularized_term(a_prime, w, u))
}

fn regularized_term(a_prime: f64, w: f64, u: f64) -> f64 {
    let magnitude = w * u / (2.0 * a_prime.abs() * w).exp_m1();
    magnitude.copysign(a_prime)
}

/// Lifshitz stress of a cavity of fixed size `a' > 0`, from the full double
/// integral. Equals `ħcπ²/(240 a'⁴)`.
pub fn lifshitz_stress(a_prime: f64, spec: &QuadratureSpec, units: UnitsContext) -> Result<StressResult> {
    if !(a_prime > 0.0 && a_prime.is_finite()) {
        return Err(CasimirError::Domain {
            name: "a_prime",
            value: a_prime,
            reason: "the stress integral needs a positive distance",
        });
    }
    let spec = spec.with_decay_scale(0.5 / a_prime);
    let integral = integrate_double_semi_infinite(
        |u, xi| LifshitzIntegrand::new(u, xi, a_prime).value(),
        &spec,
    )?;
    let prefactor = units.hbar_c() / (PI * PI);
    Ok(StressResult {
        stress_xx: prefactor * integral.value,
        a_prime,
        error_estimate: prefactor * integral.error_estimate,
        converged: integral.converged,
        evaluations: integral.evaluations,
        units,
    })
}

/// Dispersive Casimir force on the mirrors of a lens cavity.
///
/// Frequencies where `ε(iξ) = 0` push `|a'|` to infinity and contribute
/// nothing. A transformed distance that passes through zero (for example a
/// gain line with `a ≥ 2b`) makes the integral diverge and is rejected.
pub fn casimir_force_dispersive(
    geometry: &CavityGeometry,
    model: &DispersionModel,
    spec: &QuadratureSpec,
    units: UnitsContext,
) -> Result<ForceResult> {
    geometry.require_interior()?;
    model.validate()?;
    let (a, b) = (geometry.a, geometry.b);
    check_no_zero_crossing(a, b, model)?;

    let c = units.c;
    let distance_at = |k: f64| signed_distance(a, b, model.eps_imag_unchecked(c * k));

    // The kernel decays on the scale 1/|a'|; resolve the narrowest one.
    let narrowest = (0..DECAY_PROBES)
        .map(|j| {
            let exponent = -3.0 + 6.0 * j as f64 / (DECAY_PROBES - 1) as f64;
            10f64.powf(exponent) / a
        })
        .filter_map(distance_at)
        .map(f64::abs)
        .fold(f64::INFINITY, f64::min);
    let narrowest = if narrowest.is_finite() { narrowest } else { a };
    let spec = spec.with_decay_scale(0.5 / narrowest);

    let integral = integrate_semi_infinite(
        |k| match distance_at(k) {
            Some(d) if d.is_finite() => kernel_h_unchecked(d.abs() * k) / d.powi(3),
            _ => 0.0,
        },
        &spec,
    )?;

    let prefactor = units.hbar_c() / (PI * PI);
    Ok(ForceResult {
        force_per_area: -prefactor * integral.value,
        effective_distance: signed_distance(a, b, model.eps_imag_unchecked(0.0)),
        error_estimate: prefactor * integral.error_estimate,
        converged: integral.converged,
        units,
    })
}

fn check_no_zero_crossing(a: f64, b: f64, model: &DispersionModel) -> Result<()> {
    match *model {
        DispersionModel::ConstantLens { eps_value } if a - b + b / eps_value == 0.0 => {
            Err(CasimirError::DivergentForce(
                "the lens images the mirrors onto each other at every frequency".into(),
            ))
        }
        // ε(iξ) rises monotonically from −1 to 1, so a − b + b/ε hits zero
        // where ε = −b/(a − b), which lies in [−1, 0) exactly when a ≥ 2b.
        DispersionModel::DrudeGain { .. } if a >= 2.0 * b => Err(CasimirError::DivergentForce(
            format!("gain line with a = {a} >= 2b = {} images the mirrors onto each other", 2.0 * b),
        )),
        _ => Ok(()),
    }
}

/// Ratio of the dispersive force to the ideal-lens force at `a' = |a − 2b|`,
/// signed so that perfect agreement gives `+1`.
pub fn ratio_eta(geometry: &CavityGeometry, model: &DispersionModel, spec: &QuadratureSpec) -> Result<f64> {
    let units = UnitsContext::natural();
    let ideal = ideal_lens_force(geometry, units)?;
    let dispersive = casimir_force_dispersive(geometry, model, spec, units)?;
    Ok(dispersive.force_per_area / ideal.force_per_area)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::{empty_cavity_force, CASIMIR_COEFFICIENT};
    use approx::assert_relative_eq;

    #[test]
    fn regularized_terms() {
        let e2 = 1.0 / (2f64.exp() - 1.0);
        assert_relative_eq!(regularized_kernel_term(1.0, 1.0, 1.0).unwrap(), e2, max_relative = 1e-15);
        assert_relative_eq!(regularized_kernel_term(-1.0, 1.0, 1.0).unwrap(), -e2, max_relative = 1e-15);
        assert!((0.156_518 - e2).abs() < 1e-6);
        assert!(regularized_kernel_term(0.0, 1.0, 1.0).is_err());
        assert!(regularized_kernel_term(1.0, 0.0, 1.0).is_err());
    }

    #[test]
    fn regularization_identity() {
        // wu/(e^{2a'w} − 1) evaluated naively at a' < 0 equals the regularized
        // branch minus wu.
        for &(a, w, u) in &[(1.0, 1.0, 1.0), (0.3, 2.0, 0.5), (2.5, 0.7, 0.1)] {
            let naive_negative = w * u / ((-2.0 * a * w) as f64).exp_m1();
            let reg = regularized_kernel_term(-a, w, u).unwrap();
            assert_relative_eq!(naive_negative, reg - w * u, max_relative = 1e-13);
            let pair = regularized_kernel_term(a, w, u).unwrap() + naive_negative;
            assert_relative_eq!(pair, -w * u, max_relative = 1e-13);
        }
    }

    #[test]
    fn integrand_limit_at_origin() {
        assert_eq!(LifshitzIntegrand::new(0.0, 0.0, 1.0).value(), 0.0);
        let tiny = LifshitzIntegrand::new(1e-12, 0.0, 1.0).value();
        assert!(tiny.is_finite() && tiny >= 0.0 && tiny < 1e-12);
    }

    #[test]
    fn stress_scales_quartically() {
        let spec = QuadratureSpec::default();
        let one = lifshitz_stress(1.0, &spec, UnitsContext::natural()).unwrap();
        let two = lifshitz_stress(2.0, &spec, UnitsContext::natural()).unwrap();
        assert!(one.converged && two.converged);
        assert_relative_eq!(one.stress_xx, CASIMIR_COEFFICIENT, max_relative = 1e-6);
        assert_relative_eq!(two.stress_xx * 16.0, one.stress_xx, max_relative = 1e-6);
        let far = lifshitz_stress(1e3, &spec, UnitsContext::natural()).unwrap();
        assert!(far.stress_xx < 1e-12);
        assert!(lifshitz_stress(-1.0, &spec, UnitsContext::natural()).is_err());
    }

    #[test]
    fn empty_cavity_through_kernel() {
        let geom = CavityGeometry::slab_interior(2.0, 1.0).unwrap();
        let vacuum = DispersionModel::ConstantLens { eps_value: 1.0 };
        let spec = QuadratureSpec::default();
        let f = casimir_force_dispersive(&geom, &vacuum, &spec, UnitsContext::natural()).unwrap();
        let expected = empty_cavity_force(2.0, UnitsContext::natural()).unwrap();
        assert!(f.converged);
        assert_relative_eq!(f.force_per_area, expected.force_per_area, max_relative = 1e-8);
        let f = casimir_force_dispersive(&geom, &DispersionModel::Vacuum, &spec, UnitsContext::natural())
            .unwrap();
        assert_relative_eq!(f.force_per_area, expected.force_per_area, max_relative = 1e-8);
    }

    #[test]
    fn rejects_divergent_configurations() {
        let spec = QuadratureSpec::default();
        let units = UnitsContext::natural();
        let geom = CavityGeometry::slab_interior(6.0, 3.0).unwrap();
        let lens = DispersionModel::ConstantLens { eps_value: -1.0 };
        assert!(matches!(
            casimir_force_dispersive(&geom, &lens, &spec, units),
            Err(CasimirError::DivergentForce(_))
        ));
        let gain = DispersionModel::drude_gain(10.0);
        let wide = CavityGeometry::slab_interior(7.0, 3.0).unwrap();
        assert!(matches!(
            casimir_force_dispersive(&wide, &gain, &spec, units),
            Err(CasimirError::DivergentForce(_))
        ));
        assert!(ratio_eta(&geom, &gain, &spec).is_err());
    }

    #[test]
    fn lens_ratio_is_one_on_both_sides() {
        let spec = QuadratureSpec::default();
        let lens = DispersionModel::ConstantLens { eps_value: -1.0 };
        for &(a, b) in &[(4.0, 3.0), (3.0, 3.0), (8.0, 3.0), (1.0, 0.2)] {
            let geom = CavityGeometry::slab_interior(a, b).unwrap();
            assert_relative_eq!(ratio_eta(&geom, &lens, &spec).unwrap(), 1.0, max_relative = 1e-7);
        }
    }
}

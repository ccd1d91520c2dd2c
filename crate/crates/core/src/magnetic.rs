//! Three-layer stress for a passive magnetic slab resting on the lower mirror.
//!
//! Layout along `x`: perfect mirror at 0, slab with `ε = 1`, `μ(iξ)` on
//! `[0, b]`, vacuum on `[b, a]`, perfect mirror at `a`. The stress on the
//! upper mirror is
//!
//! `σxx = (ħ/π²) ∫∫ u w ϱ du dξ`
//!
//! where, with `K = sinh(bs)`, `L = cosh(bs)`, `M = sinh((a−b)w)`,
//! `N = cosh((a−b)w)`, `w² = u² + ξ²/c²` and `s² = u² + εμξ²/c²`,
//!
//! `ϱ = [sw(ε + μ + (K² + L²)(ε − μ)) + 2e^{−2(a−b)w}(Lwε − Ks)(Kwμ − Ls)]
//!      / [8(KNs + LMwε)(LMs + KNwμ)]`.
//!
//! Pulling `e^{bs}` out of `K, L` and `e^{(a−b)w}` out of `M, N` leaves
//! `ϱ = e^{−2(a−b)w} · P/Q` with `P`, `Q` built only from `e^{−2bs}` and
//! `e^{−2(a−b)w}`, so nothing overflows. The same factorization shows that
//! `ϱ` vanishes as the gap grows at fixed `(u, ξ)`: there is no
//! gap-independent part left to subtract.

use std::f64::consts::PI;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dispersion::DispersionModel;
use crate::error::{check_non_negative, CasimirError, Result};
use crate::ideal::{ForceResult, CASIMIR_COEFFICIENT};
use crate::profile::{RowStatus, SweepProfile};
use crate::quadrature::{integrate_double_semi_infinite, QuadratureSpec};
use crate::units::UnitsContext;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LayerStack {
    /// Mirror separation.
    pub a: f64,
    /// Slab thickness; the vacuum gap is `a − b`.
    pub b: f64,
    pub model: DispersionModel,
}

impl LayerStack {
    pub fn new(a: f64, b: f64, model: DispersionModel) -> Result<Self> {
        let stack = Self { a, b, model };
        stack.validate()?;
        Ok(stack)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.a.is_finite() && self.b.is_finite() && self.b > 0.0 && self.b < self.a) {
            return Err(CasimirError::Geometry(format!(
                "magnetic stack needs 0 < b < a, got a = {}, b = {}",
                self.a, self.b
            )));
        }
        self.model.validate()?;
        if !self.model.is_non_electric() {
            return Err(CasimirError::Model(
                "the layered stress is implemented for ε = 1 media only".into(),
            ));
        }
        Ok(())
    }

    pub fn gap(&self) -> f64 {
        self.a - self.b
    }

    /// Same slab and material with a different mirror separation.
    pub fn with_separation(&self, a: f64) -> Result<Self> {
        Self::new(a, self.b, self.model)
    }
}

/// `u·w·ϱ` at transverse wavenumber `u` and imaginary frequency `ξ`
/// (natural units).
pub fn magnetic_integrand(u: f64, xi: f64, stack: &LayerStack) -> Result<f64> {
    check_non_negative("u", u)?;
    check_non_negative("xi", xi)?;
    stack.validate()?;
    let mu = stack.model.mu_imag_unchecked(xi);
    layered_integrand(u, xi, stack.a, stack.b, mu)
}

/// `u·w·ϱ` with `ξ` already expressed as a wavenumber and `ε = 1`.
fn layered_integrand(u: f64, k: f64, a: f64, b: f64, mu: f64) -> Result<f64> {
    const EPS: f64 = 1.0;
    let w = u.hypot(k);
    if w == 0.0 {
        // u·w·ϱ → 0 at the origin.
        return Ok(0.0);
    }
    let s = (u * u + EPS * mu * k * k).sqrt();
    let gap = a - b;

    let slab_decay = (-2.0 * b * s).exp();
    let gap_decay = (-2.0 * gap * w).exp();
    // K, L, M, N with e^{bs} and e^{(a−b)w} removed.
    let sk = -(-2.0 * b * s).exp_m1() / 2.0;
    let sl = (1.0 + slab_decay) / 2.0;
    let gm = -(-2.0 * gap * w).exp_m1() / 2.0;
    let gn = (1.0 + gap_decay) / 2.0;

    let numerator = s * w * (EPS + mu) * slab_decay
        + s * w * (sk * sk + sl * sl) * (EPS - mu)
        + 2.0 * gap_decay * (sl * w * EPS - sk * s) * (sk * w * mu - sl * s);
    let denominator = 8.0 * (sk * gn * s + sl * gm * w * EPS) * (sl * gm * s + sk * gn * w * mu);
    if denominator == 0.0 || !denominator.is_finite() {
        return Err(CasimirError::DegenerateMode { u, xi: k });
    }
    Ok(u * w * gap_decay * numerator / denominator)
}

/// Force on the upper mirror; positive is repulsive.
///
/// For `Ω = 0` this reduces to the empty-cavity attraction `−ħcπ²/(240a⁴)`.
pub fn magnetic_force(stack: &LayerStack, spec: &QuadratureSpec, units: UnitsContext) -> Result<ForceResult> {
    stack.validate()?;
    let (a, b) = (stack.a, stack.b);
    let c = units.c;
    let spec = spec.with_decay_scale(0.5 / stack.gap());

    let mut failure = None;
    let integral = integrate_double_semi_infinite(
        |u, k| {
            let mu = stack.model.mu_imag_unchecked(c * k);
            match layered_integrand(u, k, a, b, mu) {
                Ok(v) => v,
                Err(e) => {
                    failure.get_or_insert(e);
                    0.0
                }
            }
        },
        &spec,
    )?;
    if let Some(e) = failure {
        return Err(e);
    }

    let prefactor = units.hbar_c() / (PI * PI);
    Ok(ForceResult {
        force_per_area: -prefactor * integral.value,
        effective_distance: None,
        error_estimate: prefactor * integral.error_estimate,
        converged: integral.converged,
        units,
    })
}

/// Force times `(a − b)⁴`, divided by `ħcπ²/240`, for each mirror separation
/// (natural units).
///
/// Columns: `a`, `gap`, `force`, `rescaled_force`, `error_estimate`. Rows that
/// fail keep their place with `NaN` values and a `nonconverged` status.
pub fn rescaled_force_curve(
    stack_template: &LayerStack,
    a_values: &[f64],
    spec: &QuadratureSpec,
) -> Result<SweepProfile> {
    force_curve(stack_template, a_values, spec, UnitsContext::natural())
}

/// [`rescaled_force_curve`] in an arbitrary unit system; the rescaling uses
/// `ħcπ²/240` of that system.
pub fn force_curve(
    stack_template: &LayerStack,
    a_values: &[f64],
    spec: &QuadratureSpec,
    units: UnitsContext,
) -> Result<SweepProfile> {
    stack_template.validate()?;
    if let Some(&bad) = a_values.iter().find(|&&a| !(a > stack_template.b)) {
        return Err(CasimirError::Geometry(format!(
            "every a must exceed b = {}, got {bad}",
            stack_template.b
        )));
    }

    let casimir = units.hbar_c() * CASIMIR_COEFFICIENT;
    let rows: Vec<(Vec<f64>, RowStatus)> = a_values
        .par_iter()
        .map(|&a| {
            let gap = a - stack_template.b;
            let result = stack_template
                .with_separation(a)
                .and_then(|stack| magnetic_force(&stack, spec, units));
            match result {
                Ok(f) => {
                    let rescaled = f.force_per_area * gap.powi(4) / casimir;
                    let status = if f.converged { RowStatus::Ok } else { RowStatus::Nonconverged };
                    (vec![a, gap, f.force_per_area, rescaled, f.error_estimate], status)
                }
                Err(_) => (vec![a, gap, f64::NAN, f64::NAN, f64::NAN], RowStatus::Nonconverged),
            }
        })
        .collect();

    let mut profile = SweepProfile::new("a", ["gap", "force", "rescaled_force", "error_estimate"]);
    for (values, status) in rows {
        profile.push_row(values, status)?;
    }
    Ok(profile)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lifshitz::LifshitzIntegrand;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn window_stack(a: f64) -> LayerStack {
        LayerStack::new(a, 3.0, DispersionModel::magnetic_drude(5.0, 10.0)).unwrap()
    }

    #[test]
    fn stack_validation() {
        let m = DispersionModel::magnetic_drude(5.0, 10.0);
        assert!(LayerStack::new(3.0, 3.0, m).is_err());
        assert!(LayerStack::new(2.0, 3.0, m).is_err());
        assert!(LayerStack::new(4.0, 3.0, DispersionModel::drude_gain(10.0)).is_err());
        assert!(LayerStack::new(4.0, 3.0, DispersionModel::Vacuum).is_ok());
    }

    #[test]
    fn finite_at_origin() {
        let stack = window_stack(3.3);
        assert_eq!(magnetic_integrand(0.0, 0.0, &stack).unwrap(), 0.0);
        let near = magnetic_integrand(1e-9, 1e-9, &stack).unwrap();
        assert!(near.is_finite() && near.abs() < 1e-6);
        assert!(magnetic_integrand(-1.0, 0.0, &stack).is_err());
    }

    #[test]
    fn no_overflow_for_wide_gaps() {
        // Naive sinh/cosh would overflow once (a − b)·w passes ~700.
        let stack = window_stack(3.0 + 500.0);
        let v = magnetic_integrand(2.0, 1.0, &stack).unwrap();
        assert!(v.is_finite());
        assert_eq!(v, 0.0);
        let thick = LayerStack::new(1000.0, 900.0, DispersionModel::magnetic_drude(5.0, 10.0)).unwrap();
        assert!(magnetic_integrand(3.0, 3.0, &thick).unwrap().is_finite());
    }

    #[test]
    fn integrand_vanishes_as_gap_grows() {
        let mut prev = f64::INFINITY;
        for gap in [0.5, 1.0, 2.0, 4.0, 8.0] {
            let v = magnetic_integrand(0.7, 0.4, &window_stack(3.0 + gap)).unwrap().abs();
            assert!(v < prev);
            prev = v;
        }
        assert!(prev < 1e-4);
    }

    #[test]
    fn finite_on_log_grid() {
        let stack = window_stack(3.314);
        for i in 0..=28 {
            for j in 0..=28 {
                let u = 10f64.powf(-4.0 + 7.0 * i as f64 / 28.0);
                let xi = 10f64.powf(-4.0 + 7.0 * j as f64 / 28.0);
                assert!(magnetic_integrand(u, xi, &stack).unwrap().is_finite());
            }
        }
    }

    #[test]
    fn vacuum_slab_is_empty_cavity() {
        let stack = LayerStack::new(1.0, 0.4, DispersionModel::magnetic_drude(0.0, 10.0)).unwrap();
        let f = magnetic_force(&stack, &QuadratureSpec::default(), UnitsContext::natural()).unwrap();
        assert!(f.converged);
        assert_relative_eq!(f.force_per_area, -CASIMIR_COEFFICIENT, max_relative = 1e-6);
    }

    #[test]
    fn repulsive_near_resonance_gap() {
        let f = magnetic_force(&window_stack(3.0 + PI / 10.0), &QuadratureSpec::default(), UnitsContext::natural())
            .unwrap();
        assert!(f.converged);
        assert!(f.is_repulsive());
    }

    #[test]
    fn curve_rejects_short_separations() {
        let spec = QuadratureSpec::default();
        assert!(rescaled_force_curve(&window_stack(4.0), &[3.5, 2.0], &spec).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(50))]

        #[test]
        fn reduces_to_lifshitz_integrand(
            a in 0.2..6.0f64,
            frac in 0.05..0.95f64,
            u in 1e-3..5.0f64,
            xi in 1e-3..5.0f64,
        ) {
            let stack = LayerStack::new(a, a * frac, DispersionModel::magnetic_drude(0.0, 10.0)).unwrap();
            let layered = magnetic_integrand(u, xi, &stack).unwrap();
            let plain = LifshitzIntegrand::new(u, xi, a).value();
            prop_assert!((layered - plain).abs() <= 1e-8 * plain.abs().max(1e-300));
        }
    }
}

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::dispersion::DispersionModel;
use crate::ideal::{
    foil_weight_per_area, ideal_casimir_force, ideal_lens_force, levitation_balance, CavityGeometry,
    ForceResult, CASIMIR_COEFFICIENT,
};
use crate::lifshitz::casimir_force_dispersive;
use crate::magnetic::{force_curve, magnetic_force, LayerStack};
use crate::profile::{RowStatus, SweepProfile};
use crate::special::kernel_h;
use crate::units::{UnitsContext, UnitsMode};

use super::config::{Mode, RunConfig};
use super::CliError;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ForceReport {
    pub mode: Mode,
    pub force_per_area: f64,
    pub effective_distance: Option<f64>,
    pub error_estimate: f64,
    pub converged: bool,
    pub repulsive: bool,
    pub units: UnitsMode,
    /// Ratio to the ideal-lens force (`lifshitz` mode, `a ≠ 2b`).
    pub eta: Option<f64>,
    /// `f·(a − b)⁴ / (ħcπ²/240)` (`magnetic` mode).
    pub rescaled_force: Option<f64>,
}

impl ForceReport {
    fn from_result(mode: Mode, result: &ForceResult) -> Self {
        Self {
            mode,
            force_per_area: result.force_per_area,
            effective_distance: result.effective_distance,
            error_estimate: result.error_estimate,
            converged: result.converged,
            repulsive: result.is_repulsive(),
            units: result.units.mode,
            eta: None,
            rescaled_force: None,
        }
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let mode = match self.mode {
            Mode::Ideal => "ideal",
            Mode::Lifshitz => "lifshitz",
            Mode::Magnetic => "magnetic",
        };
        let unit = match self.units {
            UnitsMode::Natural => "natural units",
            UnitsMode::Si => "N/m^2",
        };
        let _ = writeln!(out, "mode: {mode}");
        let _ = writeln!(out, "force_per_area: {:.10e} ({unit})", self.force_per_area);
        let _ = writeln!(
            out,
            "direction: {}",
            if self.repulsive { "repulsive" } else { "attractive" }
        );
        match self.effective_distance {
            Some(d) => {
                let _ = writeln!(out, "effective_distance: {d:.10e}");
            }
            None => {
                let _ = writeln!(out, "effective_distance: n/a");
            }
        }
        let _ = writeln!(out, "error_estimate: {:.3e}", self.error_estimate);
        if let Some(eta) = self.eta {
            let _ = writeln!(out, "eta: {eta:.10}");
        }
        if let Some(r) = self.rescaled_force {
            let _ = writeln!(out, "rescaled_force: {r:.10}");
        }
        let _ = writeln!(out, "converged: {}", self.converged);
        out
    }
}

fn interior_geometry(config: &RunConfig) -> Result<CavityGeometry, CliError> {
    let a = config.require_a()?;
    let b = config.require_b()?;
    CavityGeometry::slab_interior(a, b).map_err(|e| CliError::invalid("b", e.to_string()))
}

fn layer_stack(config: &RunConfig, model: DispersionModel) -> Result<LayerStack, CliError> {
    let a = config.require_a()?;
    let b = config.require_b()?;
    LayerStack::new(a, b, model).map_err(|e| match e {
        crate::CasimirError::Model(m) => CliError::invalid("model", m),
        other => CliError::invalid("b", other.to_string()),
    })
}

pub fn cmd_force(config: &RunConfig) -> Result<ForceReport, CliError> {
    let units = config.units();
    let spec = config.quadrature()?;
    let mode = config.mode();
    match mode {
        Mode::Ideal => {
            let result = match config.a_prime {
                Some(a_prime) => ideal_casimir_force(a_prime, units)?,
                None => ideal_lens_force(&interior_geometry(config)?, units)?,
            };
            Ok(ForceReport::from_result(mode, &result))
        }
        Mode::Lifshitz => {
            let geometry = interior_geometry(config)?;
            let model = config.model.build()?;
            let result = casimir_force_dispersive(&geometry, &model, &spec, units)?;
            let mut report = ForceReport::from_result(mode, &result);
            report.eta = ideal_lens_force(&geometry, units)
                .ok()
                .map(|ideal| result.force_per_area / ideal.force_per_area);
            Ok(report)
        }
        Mode::Magnetic => {
            let model = config.model.build()?;
            let stack = layer_stack(config, model)?;
            let result = magnetic_force(&stack, &spec, units)?;
            let mut report = ForceReport::from_result(mode, &result);
            report.rescaled_force = Some(
                result.force_per_area * stack.gap().powi(4) / (units.hbar_c() * CASIMIR_COEFFICIENT),
            );
            Ok(report)
        }
    }
}

fn annotate(profile: SweepProfile, command: &str, config: &RunConfig) -> Result<SweepProfile, CliError> {
    let spec = config.quadrature()?;
    Ok(profile
        .with_metadata("generator", concat!("casimir ", env!("CARGO_PKG_VERSION")))
        .with_metadata("command", command)
        .with_metadata("config", config.to_json())
        .with_metadata(
            "quadrature",
            format!(
                "rel_tol={:e} abs_tol={:e} max_subdivisions={}",
                spec.rel_tol, spec.abs_tol, spec.max_subdivisions
            ),
        ))
}

/// Force against mirror separation `a` for the configured mode.
pub fn cmd_sweep(config: &RunConfig) -> Result<SweepProfile, CliError> {
    let units = config.units();
    let spec = config.quadrature()?;
    let grid = config.sweep.grid(None)?;
    let b = config.require_b()?;

    let profile = match config.mode() {
        Mode::Ideal => {
            let mut profile = SweepProfile::new("a", ["a_prime", "force"]);
            for &a in &grid {
                let row = CavityGeometry::slab_interior(a, b)
                    .and_then(|g| ideal_lens_force(&g, units))
                    .map(|f| vec![a, (a - 2.0 * b).abs(), f.force_per_area]);
                match row {
                    Ok(values) => profile.push_row(values, RowStatus::Ok)?,
                    Err(_) => profile.push_row(vec![a, (a - 2.0 * b).abs(), f64::NAN], RowStatus::Nonconverged)?,
                }
            }
            profile
        }
        Mode::Lifshitz => {
            let model = config.model.build()?;
            let rows: Vec<_> = grid
                .par_iter()
                .map(|&a| {
                    let computed = CavityGeometry::slab_interior(a, b).and_then(|g| {
                        let f = casimir_force_dispersive(&g, &model, &spec, units)?;
                        let ideal = ideal_lens_force(&g, units)?;
                        Ok((f, ideal.force_per_area))
                    });
                    match computed {
                        Ok((f, ideal)) => {
                            let status = if f.converged { RowStatus::Ok } else { RowStatus::Nonconverged };
                            let eta = f.force_per_area / ideal;
                            (vec![a, f.force_per_area, ideal, eta, f.error_estimate], status)
                        }
                        Err(_) => (vec![a, f64::NAN, f64::NAN, f64::NAN, f64::NAN], RowStatus::Nonconverged),
                    }
                })
                .collect();
            let mut profile = SweepProfile::new("a", ["force", "ideal_force", "eta", "error_estimate"]);
            for (values, status) in rows {
                profile.push_row(values, status)?;
            }
            profile
        }
        Mode::Magnetic => {
            let model = config.model.build()?;
            let template = LayerStack {
                a: grid.iter().copied().fold(f64::NEG_INFINITY, f64::max),
                b,
                model,
            };
            template.validate().map_err(|e| CliError::invalid("to", e.to_string()))?;
            force_curve(&template, &grid, &spec, units).map_err(|e| CliError::invalid("from", e.to_string()))?
        }
    };
    annotate(profile, "sweep", config)
}

/// `h(q)` on a grid, by default `q ∈ [0, 6]` with 121 points.
pub fn cmd_kernel(config: &RunConfig) -> Result<SweepProfile, CliError> {
    let grid = config.sweep.grid(Some((0.0, 6.0, 121)))?;
    let mut profile = SweepProfile::new("q", ["h"]);
    for q in grid {
        let h = kernel_h(q).map_err(|e| CliError::invalid("from", e.to_string()))?;
        profile.push_row(vec![q, h], RowStatus::Ok)?;
    }
    annotate(profile, "kernel", config)
}

/// `ε`, `μ` at `iξ` and at the real frequency `ω = ξ`, by default for
/// `ξ ∈ [0, 50]` with 101 points. Real-axis poles are flagged per row.
pub fn cmd_permittivity(config: &RunConfig) -> Result<SweepProfile, CliError> {
    let model = config.model.build()?;
    let grid = config.sweep.grid(Some((0.0, 50.0, 101)))?;
    let mut profile = SweepProfile::new(
        "xi",
        ["eps_imag", "mu_imag", "eps_real_re", "eps_real_im", "mu_real_re", "mu_real_im"],
    );
    for x in grid {
        let eps_i = model.eps_at_imag(x).map_err(|e| CliError::invalid("from", e.to_string()))?;
        let mu_i = model.mu_at_imag(x).map_err(|e| CliError::invalid("from", e.to_string()))?;
        let (values, status) = match (model.eps_at_real(x), model.mu_at_real(x)) {
            (Ok(e), Ok(m)) => (vec![x, eps_i, mu_i, e.re, e.im, m.re, m.im], RowStatus::Ok),
            _ => (
                vec![x, eps_i, mu_i, f64::NAN, f64::NAN, f64::NAN, f64::NAN],
                RowStatus::Nonconverged,
            ),
        };
        profile.push_row(values, status)?;
    }
    annotate(profile, "permittivity", config)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LevitationReport {
    pub thickness: f64,
    pub density: f64,
    pub gravity: f64,
    /// `ρ g t` in N/m².
    pub weight_per_area: f64,
    /// Transformed distance (m) at which the ideal repulsion equals the
    /// weight; `None` when the foil is weightless and the balance is unbounded.
    pub balance_distance: Option<f64>,
    pub candidate_distance: Option<f64>,
    pub candidate_force: Option<f64>,
    pub levitates_at_candidate: Option<bool>,
}

impl LevitationReport {
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "foil: t = {:e} m, rho = {} kg/m^3, g = {} m/s^2", self.thickness, self.density, self.gravity);
        let _ = writeln!(out, "weight_per_area: {:.6e} N/m^2", self.weight_per_area);
        match self.balance_distance {
            Some(d) => {
                let _ = writeln!(out, "balance_distance: {d:.6e} m ({:.4} um)", d * 1e6);
            }
            None => {
                let _ = writeln!(out, "balance_distance: unbounded");
            }
        }
        if let (Some(d), Some(f), Some(lev)) =
            (self.candidate_distance, self.candidate_force, self.levitates_at_candidate)
        {
            let _ = writeln!(out, "force_at_candidate: {f:.6e} N/m^2 (a' = {d:e} m)");
            let _ = writeln!(out, "levitates: {lev}");
        }
        out
    }
}

/// Levitation balance of a foil under the ideal-lens repulsion, always in SI.
pub fn cmd_levitate(config: &RunConfig) -> Result<LevitationReport, CliError> {
    if config.units == Some(UnitsMode::Natural) {
        return Err(CliError::invalid("units", "levitate works in SI units"));
    }
    let units = UnitsContext::si();
    let lev = &config.levitate;
    let (thickness, density, gravity) = (lev.thickness(), lev.density(), lev.gravity());
    for (field, value) in [("thickness", thickness), ("density", density), ("gravity", gravity)] {
        if !(value.is_finite() && value >= 0.0) {
            return Err(CliError::invalid(field, format!("must be a non-negative SI value, got {value}")));
        }
    }
    let weight = foil_weight_per_area(thickness, density, gravity)?;
    let balance = levitation_balance(thickness, density, gravity, units)?;

    let (candidate_force, levitates) = match lev.candidate {
        None => (None, None),
        Some(d) if d.is_finite() && d > 0.0 => {
            let f = ideal_casimir_force(d, units)?.force_per_area;
            (Some(f), Some(f >= weight))
        }
        Some(d) => return Err(CliError::invalid("candidate", format!("must be positive, got {d}"))),
    };

    Ok(LevitationReport {
        thickness,
        density,
        gravity,
        weight_per_area: weight,
        balance_distance: balance.is_finite().then_some(balance),
        candidate_distance: lev.candidate,
        candidate_force,
        levitates_at_candidate: levitates,
    })
}

//! Dispersion-free transformation-optics picture of the lens cavity.
//!
//! A slab with `ε = μ = −1` of thickness `b` folds the coordinate normal to the
//! mirrors, so a cavity of physical size `a` behaves like an empty cavity of
//! size `a' = |a − 2b|`. When `a < 2b`, widening the physical cavity shrinks
//! the transformed one and the usual Casimir attraction turns into repulsion.
//!
//! Sign convention used throughout the crate: a positive force per area pushes
//! the mirrors apart.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::dispersion::DispersionModel;
use crate::error::{check_non_negative, CasimirError, Result};
use crate::units::UnitsContext;

/// `π²/240`, the Casimir coefficient of an ideal parallel-plate cavity.
pub const CASIMIR_COEFFICIENT: f64 = PI * PI / 240.0;

/// Standard gravity in m/s².
pub const STANDARD_GRAVITY: f64 = 9.81;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum Arrangement {
    /// Medium slab strictly between the two mirrors.
    #[default]
    SlabInterior,
    /// Medium slab resting on the lower mirror, vacuum gap `a − b` above it.
    SlabOnLowerMirror,
}

/// Mirror separation `a`, slab thickness `b`, and where the slab sits.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CavityGeometry {
    pub a: f64,
    pub b: f64,
    #[serde(default)]
    pub arrangement: Arrangement,
}

impl CavityGeometry {
    /// Slab between the mirrors; requires `0 < b ≤ a` (`b = a` fills the cavity).
    pub fn slab_interior(a: f64, b: f64) -> Result<Self> {
        Self::new(a, b, Arrangement::SlabInterior)
    }

    pub fn new(a: f64, b: f64, arrangement: Arrangement) -> Result<Self> {
        let geometry = Self { a, b, arrangement };
        geometry.validate()?;
        Ok(geometry)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.a.is_finite() && self.b.is_finite()) {
            return Err(CasimirError::Geometry(format!(
                "a and b must be finite, got a = {}, b = {}",
                self.a, self.b
            )));
        }
        if !(self.b > 0.0 && self.b <= self.a) {
            return Err(CasimirError::Geometry(format!(
                "need 0 < b <= a, got a = {}, b = {}",
                self.a, self.b
            )));
        }
        Ok(())
    }

    pub(crate) fn require_interior(&self) -> Result<()> {
        self.validate()?;
        if self.arrangement != Arrangement::SlabInterior {
            return Err(CasimirError::Geometry(
                "transformed distance is defined for a slab between the mirrors".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ForceResult {
    /// Force per unit area; positive means repulsion.
    pub force_per_area: f64,
    /// Transformed cavity size `a'`, when the computation has a single one.
    pub effective_distance: Option<f64>,
    pub error_estimate: f64,
    pub converged: bool,
    pub units: UnitsContext,
}

impl ForceResult {
    pub fn is_repulsive(&self) -> bool {
        self.force_per_area > 0.0
    }
}

/// Coordinate fold produced by an `ε = μ = −1` slab occupying `[0, b]`.
pub fn map_coordinate(x: f64, b: f64) -> f64 {
    if x < 0.0 {
        x
    } else if x <= b {
        -x
    } else {
        x - 2.0 * b
    }
}

/// `a' = |a − 2b|` for the ideal lens.
pub fn effective_distance(geometry: &CavityGeometry) -> Result<f64> {
    geometry.require_interior()?;
    Ok((geometry.a - 2.0 * geometry.b).abs())
}

/// Frequency-dependent transformed size `a − b + b/ε(iξ)`.
///
/// The result is signed: negative values mean the mirrors are imaged past each
/// other and the contribution at this frequency is repulsive.
pub fn dispersive_effective_distance(
    geometry: &CavityGeometry,
    model: &DispersionModel,
    xi: f64,
) -> Result<f64> {
    geometry.require_interior()?;
    let eps = model.eps_at_imag(xi)?;
    signed_distance(geometry.a, geometry.b, eps).ok_or(CasimirError::DivergentDistance { xi })
}

pub(crate) fn signed_distance(a: f64, b: f64, eps: f64) -> Option<f64> {
    if eps == 0.0 {
        None
    } else {
        Some(a - b + b / eps)
    }
}

/// `ħcπ²/(240 a'⁴)`, the repulsive force of the ideal lens cavity.
pub fn ideal_casimir_force(a_prime: f64, units: UnitsContext) -> Result<ForceResult> {
    let magnitude = casimir_magnitude(a_prime, units)?;
    Ok(ForceResult {
        force_per_area: magnitude,
        effective_distance: Some(a_prime.abs()),
        error_estimate: 0.0,
        converged: true,
        units,
    })
}

/// Ordinary attraction `−ħcπ²/(240 a⁴)` of an empty cavity.
pub fn empty_cavity_force(a: f64, units: UnitsContext) -> Result<ForceResult> {
    let magnitude = casimir_magnitude(a, units)?;
    Ok(ForceResult {
        force_per_area: -magnitude,
        effective_distance: Some(a.abs()),
        error_estimate: 0.0,
        converged: true,
        units,
    })
}

/// Ideal-lens force with its sign: repulsive for `a < 2b`, attractive for
/// `a > 2b` where the transformed cavity grows with `a`.
pub fn ideal_lens_force(geometry: &CavityGeometry, units: UnitsContext) -> Result<ForceResult> {
    geometry.require_interior()?;
    let signed = geometry.a - 2.0 * geometry.b;
    let mut result = ideal_casimir_force(signed, units)?;
    if signed > 0.0 {
        result.force_per_area = -result.force_per_area;
    }
    Ok(result)
}

fn casimir_magnitude(distance: f64, units: UnitsContext) -> Result<f64> {
    if distance == 0.0 {
        return Err(CasimirError::DivergentForce(
            "transformed distance a' = 0 images the mirrors onto each other".into(),
        ));
    }
    if !distance.is_finite() {
        return Err(CasimirError::Domain {
            name: "a_prime",
            value: distance,
            reason: "must be finite",
        });
    }
    Ok(units.hbar_c() * CASIMIR_COEFFICIENT / distance.powi(4))
}

/// Weight per area `ρ g t` of a foil.
pub fn foil_weight_per_area(thickness: f64, density: f64, gravity: f64) -> Result<f64> {
    check_non_negative("thickness", thickness)?;
    check_non_negative("density", density)?;
    check_non_negative("gravity", gravity)?;
    Ok(density * gravity * thickness)
}

/// Transformed distance at which the ideal repulsion carries a foil:
/// `a' = (ħcπ²/(240 ρ g t))^{1/4}`.
///
/// A weightless foil (any zero input) is carried at every distance and yields
/// `f64::INFINITY`.
pub fn levitation_balance(
    thickness: f64,
    density: f64,
    gravity: f64,
    units: UnitsContext,
) -> Result<f64> {
    let weight = foil_weight_per_area(thickness, density, gravity)?;
    if weight == 0.0 {
        return Ok(f64::INFINITY);
    }
    Ok((units.hbar_c() * CASIMIR_COEFFICIENT / weight).powf(0.25))
}

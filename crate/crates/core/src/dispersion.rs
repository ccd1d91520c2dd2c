//! Material response models.
//!
//! Every model satisfies the crossing relation `ε(−ω*) = ε*(ω)` (and likewise
//! for `μ`), so on the positive imaginary axis `ω = iξ` both responses are
//! real. The imaginary-axis formulas below are exact substitutions of
//! `ω = iξ` into the real-axis ones.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{check_finite, check_non_negative, CasimirError, Result};

/// Closed family of causal responses `ε(ω)`, `μ(ω)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum DispersionModel {
    /// Empty space, `ε = μ = 1`.
    Vacuum,
    /// Frequency-independent impedance-matched lens, `ε = μ = eps_value`.
    ///
    /// With `eps_value = −1` this is the ideal perfect lens. It is not causal
    /// (it does not tend to unity at high frequency) and is kept as a declared
    /// idealization.
    ConstantLens { eps_value: f64 },
    /// Single gain line, `ε(ω) = 1 − 2ω₀² / (ω₀² − ω² − iγω)`.
    ///
    /// On the imaginary axis `ε(iξ) = 1 − 2ω₀² / (ω₀² + ξ² + γξ)`, which stays
    /// near `−1` for `ξ ≪ ω₀`.
    DrudeGain {
        omega0: f64,
        #[serde(default)]
        gamma: f64,
    },
    /// Purely magnetic response, `ε = 1`, `μ(ω) = 1 + Ω² / (ω₀² − ω²)`.
    MagneticDrude {
        #[serde(rename = "Omega")]
        coupling: f64,
        omega0: f64,
    },
}

impl DispersionModel {
    pub fn drude_gain(omega0: f64) -> Self {
        Self::DrudeGain { omega0, gamma: 0.0 }
    }

    pub fn magnetic_drude(coupling: f64, omega0: f64) -> Self {
        Self::MagneticDrude { coupling, omega0 }
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            Self::Vacuum => Ok(()),
            Self::ConstantLens { eps_value } => {
                if !eps_value.is_finite() || eps_value == 0.0 {
                    return Err(CasimirError::Model(format!(
                        "constant lens needs a finite non-zero eps, got {eps_value}"
                    )));
                }
                Ok(())
            }
            Self::DrudeGain { omega0, gamma } => {
                if !(omega0.is_finite() && omega0 > 0.0) {
                    return Err(CasimirError::Model(format!(
                        "drude-gain omega0 must be positive, got {omega0}"
                    )));
                }
                if !(gamma.is_finite() && gamma >= 0.0) {
                    return Err(CasimirError::Model(format!(
                        "drude-gain gamma must be non-negative, got {gamma}"
                    )));
                }
                Ok(())
            }
            Self::MagneticDrude { coupling, omega0 } => {
                if !(omega0.is_finite() && omega0 > 0.0) {
                    return Err(CasimirError::Model(format!(
                        "magnetic-drude omega0 must be positive, got {omega0}"
                    )));
                }
                // Omega = 0 is the vacuum slab used by the reduction checks.
                if !(coupling.is_finite() && coupling >= 0.0) {
                    return Err(CasimirError::Model(format!(
                        "magnetic-drude Omega must be non-negative, got {coupling}"
                    )));
                }
                Ok(())
            }
        }
    }

    /// Whether `ε ≡ 1` at every frequency.
    pub fn is_non_electric(&self) -> bool {
        matches!(self, Self::Vacuum | Self::MagneticDrude { .. })
    }

    /// `ε(iξ)` for `ξ ≥ 0`.
    pub fn eps_at_imag(&self, xi: f64) -> Result<f64> {
        check_non_negative("xi", xi)?;
        Ok(self.eps_imag_unchecked(xi))
    }

    /// `μ(iξ)` for `ξ ≥ 0`.
    pub fn mu_at_imag(&self, xi: f64) -> Result<f64> {
        check_non_negative("xi", xi)?;
        Ok(self.mu_imag_unchecked(xi))
    }

    /// Complex `ε(ω)` on the real axis.
    ///
    /// Negative `ω` is accepted so that the crossing relation can be checked
    /// directly.
    pub fn eps_at_real(&self, omega: f64) -> Result<Complex64> {
        check_finite("omega", omega)?;
        match *self {
            Self::Vacuum | Self::MagneticDrude { .. } => Ok(Complex64::new(1.0, 0.0)),
            Self::ConstantLens { eps_value } => Ok(Complex64::new(eps_value, 0.0)),
            Self::DrudeGain { omega0, gamma } => {
                let w0 = omega0 * omega0;
                let denom = Complex64::new(w0 - omega * omega, -gamma * omega);
                if denom.norm() == 0.0 {
                    return Err(CasimirError::Singularity { omega });
                }
                Ok(1.0 - 2.0 * w0 / denom)
            }
        }
    }

    /// Complex `μ(ω)` on the real axis.
    pub fn mu_at_real(&self, omega: f64) -> Result<Complex64> {
        check_finite("omega", omega)?;
        match *self {
            Self::Vacuum | Self::DrudeGain { .. } => Ok(Complex64::new(1.0, 0.0)),
            Self::ConstantLens { eps_value } => Ok(Complex64::new(eps_value, 0.0)),
            Self::MagneticDrude { coupling, omega0 } => {
                let denom = omega0 * omega0 - omega * omega;
                if denom == 0.0 {
                    return Err(CasimirError::Singularity { omega });
                }
                Ok(Complex64::new(1.0 + coupling * coupling / denom, 0.0))
            }
        }
    }

    pub(crate) fn eps_imag_unchecked(&self, xi: f64) -> f64 {
        match *self {
            Self::Vacuum | Self::MagneticDrude { .. } => 1.0,
            Self::ConstantLens { eps_value } => eps_value,
            Self::DrudeGain { omega0, gamma } => {
                if xi.is_infinite() {
                    return 1.0;
                }
                let w0 = omega0 * omega0;
                let d = w0 + xi * xi + gamma * xi;
                // (ξ² + γξ − ω₀²)/(ξ² + γξ + ω₀²), written to stay exact at ξ = ω₀.
                (xi * xi + gamma * xi - w0) / d
            }
        }
    }

    pub(crate) fn mu_imag_unchecked(&self, xi: f64) -> f64 {
        match *self {
            Self::Vacuum | Self::DrudeGain { .. } => 1.0,
            Self::ConstantLens { eps_value } => eps_value,
            Self::MagneticDrude { coupling, omega0 } => {
                if xi.is_infinite() {
                    return 1.0;
                }
                1.0 + coupling * coupling / (omega0 * omega0 + xi * xi)
            }
        }
    }

    /// Largest resonance frequency of the model, if it has one.
    pub fn resonance(&self) -> Option<f64> {
        match *self {
            Self::DrudeGain { omega0, .. } | Self::MagneticDrude { omega0, .. } => Some(omega0),
            Self::Vacuum | Self::ConstantLens { .. } => None,
        }
    }

    /// The same model with every frequency parameter multiplied by `factor`.
    pub fn with_frequencies_scaled(&self, factor: f64) -> Self {
        match *self {
            Self::Vacuum | Self::ConstantLens { .. } => *self,
            Self::DrudeGain { omega0, gamma } => Self::DrudeGain {
                omega0: omega0 * factor,
                gamma: gamma * factor,
            },
            Self::MagneticDrude { coupling, omega0 } => Self::MagneticDrude {
                coupling: coupling * factor,
                omega0: omega0 * factor,
            },
        }
    }
}

use serde::{Deserialize, Serialize};

/// Reduced Planck constant in J·s (CODATA 2018, exact).
pub const HBAR: f64 = 1.054_571_817e-34;
/// Speed of light in vacuum in m/s (exact).
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum UnitsMode {
    /// `ħ = c = 1`; lengths and frequencies are dimensionless.
    #[default]
    Natural,
    /// Lengths in metres, angular frequencies in rad/s, forces in N/m².
    Si,
}

/// Unit system in which a force computation is carried out.
///
/// All quadratures run with frequencies measured as wavenumbers `ξ/c`, so the
/// only unit-dependent pieces are the overall `ħc` prefactor and the factor
/// `c` used to turn a wavenumber back into the frequency a dispersion model
/// expects.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct UnitsContext {
    pub mode: UnitsMode,
    pub hbar: f64,
    pub c: f64,
}

impl UnitsContext {
    pub const fn natural() -> Self {
        Self {
            mode: UnitsMode::Natural,
            hbar: 1.0,
            c: 1.0,
        }
    }

    pub const fn si() -> Self {
        Self {
            mode: UnitsMode::Si,
            hbar: HBAR,
            c: SPEED_OF_LIGHT,
        }
    }

    pub const fn from_mode(mode: UnitsMode) -> Self {
        match mode {
            UnitsMode::Natural => Self::natural(),
            UnitsMode::Si => Self::si(),
        }
    }

    pub fn hbar_c(&self) -> f64 {
        self.hbar * self.c
    }
}

impl Default for UnitsContext {
    fn default() -> Self {
        Self::natural()
    }
}

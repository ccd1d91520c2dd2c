use thiserror::Error;

pub type Result<T, E = CasimirError> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CasimirError {
    #[error("{name} = {value} is out of range: {reason}")]
    Domain {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("material response has a pole at omega = {omega}")]
    Singularity { omega: f64 },

    /// `ε(iξ) = 0`, so the transformed cavity size `a − b + b/ε` is unbounded.
    #[error("effective cavity distance diverges at xi = {xi}")]
    DivergentDistance { xi: f64 },

    #[error("Casimir force diverges: {0}")]
    DivergentForce(String),

    #[error("vanishing mode denominator at u = {u}, xi = {xi}")]
    DegenerateMode { u: f64, xi: f64 },

    #[error("integrand returned {value} at x = {abscissa}")]
    Integrand { abscissa: f64, value: f64 },

    #[error("invalid geometry: {0}")]
    Geometry(String),

    #[error("invalid dispersion model: {0}")]
    Model(String),
}

pub(crate) fn check_finite(name: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(CasimirError::Domain {
            name,
            value,
            reason: "must be finite",
        })
    }
}

pub(crate) fn check_non_negative(name: &'static str, value: f64) -> Result<f64> {
    check_finite(name, value)?;
    if value < 0.0 {
        return Err(CasimirError::Domain {
            name,
            value,
            reason: "must be non-negative",
        });
    }
    Ok(value)
}

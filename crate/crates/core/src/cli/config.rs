//! Run configuration: a JSON document, optionally overridden by flags.

use serde::{Deserialize, Serialize};

use crate::dispersion::DispersionModel;
use crate::ideal::STANDARD_GRAVITY;
use crate::profile::csv_metadata;
use crate::quadrature::QuadratureSpec;
use crate::units::{UnitsContext, UnitsMode};

use super::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    #[default]
    Ideal,
    Lifshitz,
    Magnetic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum ModelKind {
    DrudeGain,
    MagneticDrude,
    ConstantLens,
    Vacuum,
}

/// Flat model parameters as they appear on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize, Default)]
#[serde(default, deny_unknown_fields)]
pub struct ModelConfig {
    pub kind: Option<ModelKind>,
    pub omega0: Option<f64>,
    pub gamma: Option<f64>,
    #[serde(rename = "Omega")]
    pub coupling: Option<f64>,
    pub eps: Option<f64>,
}

impl ModelConfig {
    pub fn build(&self) -> Result<DispersionModel, CliError> {
        let kind = self.kind.ok_or_else(|| CliError::missing("model"))?;
        let need = |value: Option<f64>, field: &'static str| value.ok_or_else(|| CliError::missing(field));
        let model = match kind {
            ModelKind::Vacuum => DispersionModel::Vacuum,
            ModelKind::ConstantLens => DispersionModel::ConstantLens {
                eps_value: need(self.eps, "eps")?,
            },
            ModelKind::DrudeGain => DispersionModel::DrudeGain {
                omega0: need(self.omega0, "omega0")?,
                gamma: self.gamma.unwrap_or(0.0),
            },
            ModelKind::MagneticDrude => DispersionModel::MagneticDrude {
                coupling: need(self.coupling, "Omega")?,
                omega0: need(self.omega0, "omega0")?,
            },
        };
        model
            .validate()
            .map_err(|e| CliError::invalid("model", e.to_string()))?;
        Ok(model)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize, Default)]
#[serde(default, deny_unknown_fields)]
pub struct SweepConfig {
    pub from: Option<f64>,
    pub to: Option<f64>,
    pub points: Option<usize>,
}

impl SweepConfig {
    /// Evenly spaced grid including both ends.
    pub fn grid(&self, default: Option<(f64, f64, usize)>) -> Result<Vec<f64>, CliError> {
        let (from, to, points) = match (self.from, self.to, self.points, default) {
            (Some(f), Some(t), Some(n), _) => (f, t, n),
            (f, t, n, Some((df, dt, dn))) => (f.unwrap_or(df), t.unwrap_or(dt), n.unwrap_or(dn)),
            (None, _, _, None) => return Err(CliError::missing("from")),
            (_, None, _, None) => return Err(CliError::missing("to")),
            (_, _, None, None) => return Err(CliError::missing("points")),
        };
        if !from.is_finite() {
            return Err(CliError::invalid("from", "must be finite"));
        }
        if !to.is_finite() {
            return Err(CliError::invalid("to", "must be finite"));
        }
        match points {
            0 => Err(CliError::invalid("points", "must be at least 1")),
            1 => Ok(vec![from]),
            n => Ok((0..n)
                .map(|i| {
                    if i + 1 == n {
                        to
                    } else {
                        from + (to - from) * i as f64 / (n - 1) as f64
                    }
                })
                .collect()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize, Default)]
#[serde(default, deny_unknown_fields)]
pub struct LevitateConfig {
    pub thickness: Option<f64>,
    pub density: Option<f64>,
    pub gravity: Option<f64>,
    pub candidate: Option<f64>,
}

impl LevitateConfig {
    pub const DEFAULT_THICKNESS: f64 = 0.5e-6;
    pub const DEFAULT_DENSITY: f64 = 2700.0;

    pub fn thickness(&self) -> f64 {
        self.thickness.unwrap_or(Self::DEFAULT_THICKNESS)
    }

    pub fn density(&self) -> f64 {
        self.density.unwrap_or(Self::DEFAULT_DENSITY)
    }

    pub fn gravity(&self) -> f64 {
        self.gravity.unwrap_or(STANDARD_GRAVITY)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize, Default)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub mode: Option<Mode>,
    pub a: Option<f64>,
    pub b: Option<f64>,
    pub a_prime: Option<f64>,
    pub model: ModelConfig,
    pub units: Option<UnitsMode>,
    pub rel_tol: Option<f64>,
    pub sweep: SweepConfig,
    pub levitate: LevitateConfig,
}

impl RunConfig {
    /// Parses a JSON document, or the `config` metadata line of a CSV written
    /// by a previous sweep.
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let json = if text.trim_start().starts_with('#') {
            csv_metadata(text, "config")
                .ok_or_else(|| CliError::invalid("config", "CSV input has no `config` metadata line"))?
        } else {
            text
        };
        serde_json::from_str(json).map_err(|e| CliError::invalid("config", e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("config serializes")
    }

    /// Fields set in `overrides` replace those in `self`.
    pub fn merge(mut self, overrides: &RunConfig) -> Self {
        fn take<T: Copy>(slot: &mut Option<T>, value: Option<T>) {
            if value.is_some() {
                *slot = value;
            }
        }
        take(&mut self.mode, overrides.mode);
        take(&mut self.a, overrides.a);
        take(&mut self.b, overrides.b);
        take(&mut self.a_prime, overrides.a_prime);
        take(&mut self.model.kind, overrides.model.kind);
        take(&mut self.model.omega0, overrides.model.omega0);
        take(&mut self.model.gamma, overrides.model.gamma);
        take(&mut self.model.coupling, overrides.model.coupling);
        take(&mut self.model.eps, overrides.model.eps);
        take(&mut self.units, overrides.units);
        take(&mut self.rel_tol, overrides.rel_tol);
        take(&mut self.sweep.from, overrides.sweep.from);
        take(&mut self.sweep.to, overrides.sweep.to);
        take(&mut self.sweep.points, overrides.sweep.points);
        take(&mut self.levitate.thickness, overrides.levitate.thickness);
        take(&mut self.levitate.density, overrides.levitate.density);
        take(&mut self.levitate.gravity, overrides.levitate.gravity);
        take(&mut self.levitate.candidate, overrides.levitate.candidate);
        self
    }

    pub fn mode(&self) -> Mode {
        self.mode.unwrap_or_default()
    }

    pub fn units(&self) -> UnitsContext {
        UnitsContext::from_mode(self.units.unwrap_or_default())
    }

    pub fn quadrature(&self) -> Result<QuadratureSpec, CliError> {
        let spec = QuadratureSpec::default();
        match self.rel_tol {
            None => Ok(spec),
            Some(t) if t.is_finite() && t > 0.0 => Ok(spec.with_rel_tol(t)),
            Some(_) => Err(CliError::invalid("rel_tol", "must be positive")),
        }
    }

    pub fn require_a(&self) -> Result<f64, CliError> {
        positive(self.a, "a")
    }

    pub fn require_b(&self) -> Result<f64, CliError> {
        positive(self.b, "b")
    }
}

fn positive(value: Option<f64>, field: &'static str) -> Result<f64, CliError> {
    match value {
        None => Err(CliError::missing(field)),
        Some(v) if v.is_finite() && v > 0.0 => Ok(v),
        Some(v) => Err(CliError::invalid(field, format!("must be positive, got {v}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip_and_merge() {
        let base = RunConfig::parse(
            r#"{"mode":"lifshitz","a":4,"b":3,"model":{"kind":"drude-gain","omega0":10}}"#,
        )
        .unwrap();
        assert_eq!(base.mode(), Mode::Lifshitz);
        assert_eq!(
            base.model.build().unwrap(),
            DispersionModel::drude_gain(10.0)
        );
        let flags = RunConfig {
            a: Some(4.5),
            ..RunConfig::default()
        };
        let merged = base.merge(&flags);
        assert_eq!(merged.a, Some(4.5));
        assert_eq!(merged.b, Some(3.0));
        assert_eq!(RunConfig::parse(&merged.to_json()).unwrap(), merged);
    }

    #[test]
    fn errors_name_fields() {
        let err = RunConfig::parse(r#"{"a": "x"}"#).unwrap_err();
        assert_eq!(err.field(), Some("config"));
        let err = RunConfig::parse(r#"{"model":{"kind":"magnetic-drude","omega0":10}}"#)
            .unwrap()
            .model
            .build()
            .unwrap_err();
        assert_eq!(err.field(), Some("Omega"));
        let cfg = RunConfig {
            a: Some(-1.0),
            ..RunConfig::default()
        };
        assert_eq!(cfg.require_a().unwrap_err().field(), Some("a"));
        assert_eq!(cfg.require_b().unwrap_err().field(), Some("b"));
        assert!(RunConfig::parse(r#"{"bogus": 1}"#).is_err());
    }

    #[test]
    fn grid() {
        let sweep = SweepConfig {
            from: Some(0.0),
            to: Some(1.0),
            points: Some(5),
        };
        assert_eq!(sweep.grid(None).unwrap(), vec![0.0, 0.25, 0.5, 0.75, 1.0]);
        let partial = SweepConfig {
            points: Some(3),
            ..SweepConfig::default()
        };
        assert_eq!(partial.grid(Some((0.0, 6.0, 121))).unwrap(), vec![0.0, 3.0, 6.0]);
        assert_eq!(partial.grid(None).unwrap_err().field(), Some("from"));
        assert_eq!(
            SweepConfig { points: Some(0), ..sweep }.grid(None).unwrap_err().field(),
            Some("points")
        );
    }
}

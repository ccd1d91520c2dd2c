//! Command-line front end: `force`, `sweep`, `levitate`, `kernel` and
//! `permittivity`.
//!
//! Every subcommand reads an optional JSON config (`--config <path>`, `-` for
//! stdin, or a CSV written by an earlier sweep) and lets flags override its
//! fields. Exit codes: 0 success, 1 usage or config error, 2 computed but not
//! converged.

mod commands;
mod config;

use std::ffi::OsString;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::error::CasimirError;
use crate::units::UnitsMode;

pub use commands::{
    cmd_force, cmd_kernel, cmd_levitate, cmd_permittivity, cmd_sweep, ForceReport, LevitationReport,
};
pub use config::{LevitateConfig, Mode, ModelConfig, ModelKind, RunConfig, SweepConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_NONCONVERGED: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid `{field}`: {message}")]
    Config { field: &'static str, message: String },
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: io::Error,
    },
    #[error(transparent)]
    Compute(#[from] CasimirError),
}

impl CliError {
    pub(crate) fn missing(field: &'static str) -> Self {
        Self::Config {
            field,
            message: "required but not given".into(),
        }
    }

    pub(crate) fn invalid(field: &'static str, message: impl Into<String>) -> Self {
        Self::Config {
            field,
            message: message.into(),
        }
    }

    pub fn field(&self) -> Option<&'static str> {
        match self {
            Self::Config { field, .. } => Some(field),
            _ => None,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "casimir", version, about = "Casimir forces with left-handed and magnetic metamaterials")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Force per area for one configuration.
    Force(Flags),
    /// Force (and ratio to the ideal lens) over a range of mirror separations.
    Sweep(Flags),
    /// Foil thickness and density at which the ideal repulsion balances gravity.
    Levitate(Flags),
    /// Tabulate the Lifshitz kernel h(q).
    Kernel(Flags),
    /// Tabulate ε and μ on the imaginary and real frequency axes.
    Permittivity(Flags),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum UnitsFlag {
    Natural,
    Si,
}

impl From<UnitsFlag> for UnitsMode {
    fn from(flag: UnitsFlag) -> Self {
        match flag {
            UnitsFlag::Natural => UnitsMode::Natural,
            UnitsFlag::Si => UnitsMode::Si,
        }
    }
}

#[derive(Debug, Clone, Default, Args)]
pub struct Flags {
    /// JSON config file, `-` for stdin, or a CSV from an earlier sweep.
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub mode: Option<Mode>,
    /// Mirror separation.
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<f64>,
    /// Slab thickness.
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<f64>,
    /// Transformed distance for `--mode ideal`.
    #[arg(long = "a-prime", allow_hyphen_values = true)]
    pub a_prime: Option<f64>,
    #[arg(long, value_enum)]
    pub model: Option<ModelKind>,
    #[arg(long, allow_hyphen_values = true)]
    pub omega0: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub gamma: Option<f64>,
    /// Magnetic coupling strength Ω.
    #[arg(long = "Omega", allow_hyphen_values = true)]
    pub coupling: Option<f64>,
    /// Constant lens permittivity (= permeability).
    #[arg(long, allow_hyphen_values = true)]
    pub eps: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub from: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub to: Option<f64>,
    #[arg(long)]
    pub points: Option<usize>,
    /// Write the CSV here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub units: Option<UnitsFlag>,
    #[arg(long = "rel-tol", allow_hyphen_values = true)]
    pub rel_tol: Option<f64>,
    /// Structured JSON on stdout.
    #[arg(long)]
    pub json: bool,
    /// Foil thickness in m.
    #[arg(long, allow_hyphen_values = true)]
    pub thickness: Option<f64>,
    /// Foil density in kg/m³.
    #[arg(long, allow_hyphen_values = true)]
    pub density: Option<f64>,
    /// Gravitational acceleration in m/s².
    #[arg(long, allow_hyphen_values = true)]
    pub gravity: Option<f64>,
    /// Transformed distance (m) at which to report the repulsion.
    #[arg(long, allow_hyphen_values = true)]
    pub candidate: Option<f64>,
}

impl Flags {
    fn overrides(&self) -> RunConfig {
        RunConfig {
            mode: self.mode,
            a: self.a,
            b: self.b,
            a_prime: self.a_prime,
            model: ModelConfig {
                kind: self.model,
                omega0: self.omega0,
                gamma: self.gamma,
                coupling: self.coupling,
                eps: self.eps,
            },
            units: self.units.map(Into::into),
            rel_tol: self.rel_tol,
            sweep: SweepConfig {
                from: self.from,
                to: self.to,
                points: self.points,
            },
            levitate: LevitateConfig {
                thickness: self.thickness,
                density: self.density,
                gravity: self.gravity,
                candidate: self.candidate,
            },
        }
    }

    /// Config file (if any) with flag overrides applied.
    pub fn resolve(&self, stdin: &mut dyn Read) -> Result<RunConfig, CliError> {
        let base = match &self.config {
            None => RunConfig::default(),
            Some(path) => {
                let mut text = String::new();
                let io_err = |source| CliError::Io {
                    path: path.display().to_string(),
                    source,
                };
                if path.as_os_str() == "-" {
                    stdin.read_to_string(&mut text).map_err(io_err)?;
                } else {
                    text = std::fs::read_to_string(path).map_err(io_err)?;
                }
                RunConfig::parse(&text)?
            }
        };
        Ok(base.merge(&self.overrides()))
    }
}

/// Parses `args` (including the program name) and runs the subcommand.
/// Returns the process exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let informational = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let sink: &mut dyn Write = if informational { stdout } else { stderr };
            let _ = write!(sink, "{}", e.render());
            return if informational { EXIT_OK } else { EXIT_USAGE };
        }
    };
    match dispatch(&cli.command, stdin, stdout) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(command: &Command, stdin: &mut dyn Read, stdout: &mut dyn Write) -> Result<i32, CliError> {
    let flags = match command {
        Command::Force(f)
        | Command::Sweep(f)
        | Command::Levitate(f)
        | Command::Kernel(f)
        | Command::Permittivity(f) => f,
    };
    let config = flags.resolve(stdin)?;
    let io_err = |source| CliError::Io {
        path: "stdout".into(),
        source,
    };

    match command {
        Command::Force(_) => {
            let report = cmd_force(&config)?;
            if flags.json {
                writeln!(stdout, "{}", serde_json::to_string_pretty(&report).expect("report serializes"))
                    .map_err(io_err)?;
            } else {
                write!(stdout, "{}", report.render()).map_err(io_err)?;
            }
            Ok(if report.converged { EXIT_OK } else { EXIT_NONCONVERGED })
        }
        Command::Levitate(_) => {
            let report = cmd_levitate(&config)?;
            if flags.json {
                writeln!(stdout, "{}", serde_json::to_string_pretty(&report).expect("report serializes"))
                    .map_err(io_err)?;
            } else {
                write!(stdout, "{}", report.render()).map_err(io_err)?;
            }
            Ok(EXIT_OK)
        }
        Command::Sweep(_) | Command::Kernel(_) | Command::Permittivity(_) => {
            let profile = match command {
                Command::Sweep(_) => cmd_sweep(&config)?,
                Command::Kernel(_) => cmd_kernel(&config)?,
                _ => cmd_permittivity(&config)?,
            };
            if let Some(path) = &flags.out {
                profile.write_csv(path).map_err(|source| CliError::Io {
                    path: path.display().to_string(),
                    source,
                })?;
            }
            if flags.json {
                writeln!(stdout, "{}", serde_json::to_string_pretty(&profile).expect("profile serializes"))
                    .map_err(io_err)?;
            } else if flags.out.is_none() {
                write!(stdout, "{}", profile.to_csv()).map_err(io_err)?;
            }
            Ok(if profile.all_ok() { EXIT_OK } else { EXIT_NONCONVERGED })
        }
    }
}

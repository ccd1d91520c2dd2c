//! Tabulated sweep results and their CSV form.

use std::fmt::Write as _;
use std::io;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{CasimirError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RowStatus {
    Ok,
    /// The quadrature did not reach its tolerance, or the point failed.
    Nonconverged,
}

impl RowStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Ok => "ok",
            Self::Nonconverged => "nonconverged",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProfileRow {
    pub values: Vec<f64>,
    pub status: RowStatus,
}

/// Ordered table of `(parameter, quantities…)` rows plus a metadata echo of
/// the run that produced it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepProfile {
    pub parameter_name: String,
    /// Column names; the first one is the swept parameter.
    pub columns: Vec<String>,
    pub rows: Vec<ProfileRow>,
    pub metadata: Vec<(String, String)>,
}

impl SweepProfile {
    pub fn new<S: Into<String>>(parameter_name: &str, other_columns: impl IntoIterator<Item = S>) -> Self {
        let mut columns = vec![parameter_name.to_owned()];
        columns.extend(other_columns.into_iter().map(Into::into));
        Self {
            parameter_name: parameter_name.to_owned(),
            columns,
            rows: Vec::new(),
            metadata: Vec::new(),
        }
    }

    pub fn push_row(&mut self, values: Vec<f64>, status: RowStatus) -> Result<()> {
        if values.len() != self.columns.len() {
            return Err(CasimirError::Domain {
                name: "row length",
                value: values.len() as f64,
                reason: "must match the number of columns",
            });
        }
        self.rows.push(ProfileRow { values, status });
        Ok(())
    }

    pub fn with_metadata(mut self, key: impl Into<String>, value: impl Into<String>) -> Self {
        self.metadata.push((key.into(), value.into()));
        self
    }

    pub fn metadata(&self, key: &str) -> Option<&str> {
        self.metadata
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let idx = self.columns.iter().position(|c| c == name)?;
        Some(self.rows.iter().map(|r| r.values[idx]).collect())
    }

    pub fn all_ok(&self) -> bool {
        self.rows.iter().all(|r| r.status == RowStatus::Ok)
    }

    /// `#`-prefixed metadata lines, a header, then one line per row.
    ///
    /// Values are written in scientific notation with 17 significant digits,
    /// which round-trips every `f64`.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for (key, value) in &self.metadata {
            let _ = writeln!(out, "# {key}: {value}");
        }
        out.push_str(&self.columns.join(","));
        out.push_str(",status\n");
        for row in &self.rows {
            for v in &row.values {
                let _ = write!(out, "{v:.16e},");
            }
            out.push_str(row.status.as_str());
            out.push('\n');
        }
        out
    }

    pub fn write_csv(&self, path: impl AsRef<Path>) -> io::Result<()> {
        std::fs::write(path, self.to_csv())
    }
}

/// Value of a `# key: value` metadata line in CSV text.
pub fn csv_metadata<'a>(csv: &'a str, key: &str) -> Option<&'a str> {
    csv.lines()
        .take_while(|l| l.starts_with('#'))
        .filter_map(|l| l.trim_start_matches('#').trim_start().split_once(": "))
        .find(|(k, _)| *k == key)
        .map(|(_, v)| v)
}

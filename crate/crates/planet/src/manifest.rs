//! Run manifests: every CLI command records the resolved inputs it ran
//! with, next to its outputs, so a run can be reproduced exactly (the
//! timestamp is the only field that varies between identical runs).

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fit::GridSpec;

#[derive(Debug, Clone, Serialize)]
pub struct GridRecord {
    pub eps_min: f64,
    pub eps_max: f64,
    pub step: f64,
}

impl From<&GridSpec> for GridRecord {
    fn from(grid: &GridSpec) -> Self {
        Self {
            eps_min: grid.eps_min(),
            eps_max: grid.eps_max(),
            step: grid.step(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RunManifest {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<PathBuf>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub registry_size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub grid: Option<GridRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    /// Remaining resolved flags, keyed by flag name.
    pub flags: BTreeMap<String, String>,
    pub tool_version: String,
    pub timestamp_unix: u64,
}

impl RunManifest {
    pub fn new(command: &str) -> Self {
        Self {
            command: command.to_string(),
            input: None,
            registry_size: None,
            grid: None,
            seed: None,
            flags: BTreeMap::new(),
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            timestamp_unix: SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0),
        }
    }

    pub fn flag(mut self, name: &str, value: impl ToString) -> Self {
        self.flags.insert(name.to_string(), value.to_string());
        self
    }

    /// Serializes to pretty JSON and writes `manifest.json` into `dir`
    /// atomically.
    pub fn write(&self, dir: &Path) -> Result<PathBuf> {
        let path = dir.join("manifest.json");
        let mut body = serde_json::to_string_pretty(self).expect("manifest serializes");
        body.push('\n');
        write_atomic(&path, body.as_bytes())?;
        Ok(path)
    }
}

/// Writes through a temp file in the same directory and renames into
/// place, so readers never observe a partial file.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let dir = path.parent().unwrap_or_else(|| Path::new("."));
    let file_name = path
        .file_name()
        .and_then(|n| n.to_str())
        .unwrap_or("output");
    let tmp = dir.join(format!(".{file_name}.tmp"));
    let io_err = |source| Error::Io {
        path: path.to_path_buf(),
        source,
    };
    std::fs::write(&tmp, bytes).map_err(io_err)?;
    std::fs::rename(&tmp, path).map_err(io_err)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn manifest_round_trips_as_json() {
        let grid = GridSpec::default();
        let manifest = RunManifest::new("fit")
            .flag("family", "all")
            .flag("target", "cdf");
        let manifest = RunManifest {
            input: Some(PathBuf::from("fixture.tsv")),
            registry_size: Some(541),
            grid: Some(GridRecord::from(&grid)),
            seed: Some(7),
            ..manifest
        };
        let json = serde_json::to_string(&manifest).unwrap();
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(value["command"], "fit");
        assert_eq!(value["registry_size"], 541);
        assert_eq!(value["flags"]["family"], "all");
        assert_eq!(value["grid"]["step"], 0.005);
    }

    #[test]
    fn atomic_write_replaces_content() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("file.csv");
        write_atomic(&path, b"one\n").unwrap();
        write_atomic(&path, b"two\n").unwrap();
        assert_eq!(std::fs::read_to_string(&path).unwrap(), "two\n");
        assert!(!dir.path().join(".file.csv.tmp").exists());
    }
}

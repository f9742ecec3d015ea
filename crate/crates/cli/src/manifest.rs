//! The run manifest written next to every generated code file: everything
//! needed to reproduce the output bit for bit, plus the verification status.
//!
//! The manifest is TOML. All fields are deterministic except the
//! `[volatile]` section, which holds the wall-clock timestamp and is the
//! only part excluded when comparing manifests for reproducibility.

use std::path::Path;

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct Manifest {
    pub run: RunSection,
    pub params: ParamsSection,
    pub result: ResultSection,
    pub volatile: VolatileSection,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct RunSection {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub pipeline: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct ParamsSection {
    pub n: usize,
    pub k1: usize,
    pub k2: usize,
    pub k3: usize,
    pub k4: usize,
    pub k5: usize,
    pub k6: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
    pub delta: f64,
    pub min_length: bool,
    pub hamming_only: bool,
    pub optimize_d: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct ResultSection {
    /// Final word length of the emitted code.
    pub length: usize,
    pub alphabet: String,
    /// Binary word length fed to the derandomizer.
    pub base_length: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub run_bound: Option<usize>,
    pub verified: bool,
    /// Constraints confirmed by the oracle, e.g. ["c1", "c4"].
    pub constraints: Vec<String>,
    /// With --min-length: the boundary certificate for the base length.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub threshold_at_base: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub threshold_below_base: Option<bool>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct VolatileSection {
    /// Seconds since the Unix epoch at write time; excluded from
    /// reproducibility comparisons.
    pub timestamp_unix: u64,
}

impl Manifest {
    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("manifest serializes")
    }

    pub fn from_toml(text: &str) -> Result<Manifest, String> {
        toml::from_str(text).map_err(|e| e.to_string())
    }

    /// Equality ignoring the volatile section.
    pub fn same_run(&self, other: &Manifest) -> bool {
        self.run == other.run && self.params == other.params && self.result == other.result
    }
}

pub fn manifest_path(code_path: &Path) -> std::path::PathBuf {
    let mut s = code_path.as_os_str().to_os_string();
    s.push(".manifest");
    std::path::PathBuf::from(s)
}

pub fn unix_timestamp() -> u64 {
    std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0)
}

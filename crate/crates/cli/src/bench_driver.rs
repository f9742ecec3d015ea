//! Grid driver for the rejection-sampling baseline: one record per
//! (n, k) cell comparing the deterministic construction length with the
//! smallest length at which random codes reach a 50% pass rate.
//!
//! File outputs are byte-reproducible from (grid, trials, seed); wall-clock
//! timings go to the console only.

use serde::{Deserialize, Serialize};

use dnaword_core::bench::baseline_length;
use dnaword_core::constraint::ConstraintSpec;
use dnaword_core::pipeline::{deterministic_length, GenerateOptions, Pipeline};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct BenchRecord {
    pub pipeline: String,
    pub n: usize,
    pub k: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
    pub delta: f64,
    pub deterministic_length: usize,
    /// Smallest length with a >= 50% random pass rate, when one exists at or
    /// below the deterministic length.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub baseline_length: Option<usize>,
    pub trials: usize,
    /// The derived per-cell seed actually used for sampling.
    pub seed: u64,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct RecordsFile {
    pub master_seed: u64,
    pub record: Vec<BenchRecord>,
}

/// splitmix64-style derivation of one independent seed per grid cell.
pub fn cell_seed(master: u64, index: u64) -> u64 {
    let mut z = master.wrapping_add((index + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub struct BenchConfig {
    pub pipeline: Pipeline,
    pub n_values: Vec<usize>,
    pub k_values: Vec<usize>,
    pub gamma: Option<f64>,
    pub d: Option<usize>,
    pub delta: f64,
    pub trials: usize,
    pub master_seed: u64,
}

fn cell_spec(cfg: &BenchConfig, k: usize) -> ConstraintSpec {
    let mut spec = ConstraintSpec::uniform(k);
    if let Some(g) = cfg.gamma {
        spec.gamma = g;
    }
    if let Some(d) = cfg.d {
        spec.d = d;
    }
    spec
}

/// Runs the whole grid in deterministic (n, k) order. Returns the records
/// plus per-cell wall times in milliseconds (same order).
pub fn run_grid(cfg: &BenchConfig) -> Result<(Vec<BenchRecord>, Vec<u128>), dnaword_core::Error> {
    let opts = GenerateOptions { delta: cfg.delta, ..Default::default() };
    let mut records = Vec::new();
    let mut timings = Vec::new();
    let mut index = 0u64;
    for &n in &cfg.n_values {
        for &k in &cfg.k_values {
            let spec = cell_spec(cfg, k);
            let started = std::time::Instant::now();
            let deterministic = deterministic_length(n, &spec, cfg.pipeline, &opts)?;
            let seed = cell_seed(cfg.master_seed, index);
            let baseline =
                baseline_length(n, &spec, cfg.pipeline, None, cfg.trials, seed, deterministic)?;
            timings.push(started.elapsed().as_millis());
            records.push(BenchRecord {
                pipeline: cfg.pipeline.as_str().to_string(),
                n,
                k,
                gamma: cfg.pipeline.needs_gamma().then_some(spec.gamma),
                d: cfg.pipeline.needs_run_bound().then_some(spec.d),
                delta: cfg.delta,
                deterministic_length: deterministic,
                baseline_length: baseline,
                trials: cfg.trials,
                seed,
            });
            index += 1;
        }
    }
    Ok((records, timings))
}

/// Fixed-width text table over the records.
pub fn render_table(records: &[BenchRecord]) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "{:<8} {:>6} {:>4} {:>14} {:>10} {:>7} {:>20}\n",
        "pipeline", "n", "k", "deterministic", "baseline", "trials", "seed"
    ));
    for r in records {
        let baseline =
            r.baseline_length.map(|l| l.to_string()).unwrap_or_else(|| "not found".to_string());
        out.push_str(&format!(
            "{:<8} {:>6} {:>4} {:>14} {:>10} {:>7} {:>20}\n",
            r.pipeline, r.n, r.k, r.deterministic_length, baseline, r.trials, r.seed
        ));
    }
    out
}

pub fn render_records(master_seed: u64, records: &[BenchRecord]) -> String {
    toml::to_string(&RecordsFile { master_seed, record: records.to_vec() })
        .expect("records serialize")
}

//! The four subcommands: generate, verify, minlen, bench.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage/parameter error,
//! 3 I/O error. All configuration is explicit flags; there are no
//! environment variables and no hidden state.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use dnaword_core::constraint::{ConstraintId, ConstraintSet, ConstraintSpec};
use dnaword_core::expectation::{exceeds_threshold, exceeds_threshold_hamming_only};
use dnaword_core::length::{ell_star, min_length, min_length_hamming_only};
use dnaword_core::pipeline::{generate, GenerateOptions, Pipeline};
use dnaword_core::word::Alphabet;

use crate::bench_driver::{render_records, render_table, run_grid, BenchConfig};
use crate::format::{read_code_file, read_energy_table, write_code_file, CodeFileError};
use crate::manifest::{
    manifest_path, unix_timestamp, Manifest, ParamsSection, ResultSection, RunSection,
    VolatileSection,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "dnaword",
    version,
    about = "Deterministic codeword-set design over binary/DNA alphabets, with a brute-force verifier"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Construct a code with a chosen pipeline and write it with a manifest.
    Generate(GenerateArgs),
    /// Check a code file against selected constraints.
    Verify(VerifyArgs),
    /// Report the minimal feasible word length and the analytic budget.
    Minlen(MinlenArgs),
    /// Compare deterministic lengths against a rejection-sampling baseline.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    /// One of: c1-4, c1-6, c1-7, c12378, c1-8a, c1-8b.
    #[arg(long)]
    pub pipeline: String,
    /// Number of words.
    #[arg(long)]
    pub n: usize,
    /// Sets every dissimilarity parameter k1..k6 at once.
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub k1: Option<usize>,
    #[arg(long)]
    pub k2: Option<usize>,
    #[arg(long)]
    pub k3: Option<usize>,
    #[arg(long)]
    pub k4: Option<usize>,
    #[arg(long)]
    pub k5: Option<usize>,
    #[arg(long)]
    pub k6: Option<usize>,
    /// GC fraction in \[0,1\] (pipelines with a GC constraint).
    #[arg(long)]
    pub gamma: Option<f64>,
    /// Run-length bound (pipelines with a run constraint).
    #[arg(long)]
    pub d: Option<usize>,
    /// c1 = 2 + delta for the analytic length budget.
    #[arg(long, default_value_t = 1.0)]
    pub delta: f64,
    /// Use the computational minimal length instead of the analytic budget.
    #[arg(long)]
    pub min_length: bool,
    /// c12378 / c1-8a / c1-8b: plan only for the basic constraint.
    #[arg(long)]
    pub hamming_only: bool,
    /// c1-8b: substitute the run bound d' <= d minimizing the length.
    #[arg(long)]
    pub optimize_d: bool,
    /// Output code file; the manifest goes to `<out>.manifest`.
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Code file to check.
    #[arg(long)]
    pub input: PathBuf,
    /// Comma-separated list, e.g. c1,c4 or c1,c2,c3,c7,c8.
    #[arg(long, value_delimiter = ',', required = true)]
    pub constraints: Vec<String>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub k1: Option<usize>,
    #[arg(long)]
    pub k2: Option<usize>,
    #[arg(long)]
    pub k3: Option<usize>,
    #[arg(long)]
    pub k4: Option<usize>,
    #[arg(long)]
    pub k5: Option<usize>,
    #[arg(long)]
    pub k6: Option<usize>,
    #[arg(long)]
    pub gamma: Option<f64>,
    #[arg(long)]
    pub d: Option<usize>,
    /// Free-energy tolerance (c9).
    #[arg(long)]
    pub sigma: Option<f64>,
    /// JSON file with 16 integers, row-major base order A,C,G,T (c9).
    #[arg(long)]
    pub energy_table: Option<PathBuf>,
    /// Cap on reported violations.
    #[arg(long, default_value_t = 100)]
    pub limit: usize,
}

#[derive(Debug, Args)]
pub struct MinlenArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub k1: Option<usize>,
    #[arg(long)]
    pub k4: Option<usize>,
    /// Minimal length for the basic-constraint-only scheme.
    #[arg(long)]
    pub hamming_only: bool,
    #[arg(long, default_value_t = 1.0)]
    pub delta: f64,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// One of: c1-4, c1-6, c1-7, c12378, c1-8a, c1-8b.
    #[arg(long)]
    pub pipeline: String,
    /// Comma-separated list of code sizes, e.g. 4,8.
    #[arg(long = "n", value_delimiter = ',', required = true)]
    pub n_values: Vec<usize>,
    /// Comma-separated list of uniform k values, e.g. 1,2.
    #[arg(long = "k", value_delimiter = ',', required = true)]
    pub k_values: Vec<usize>,
    #[arg(long)]
    pub gamma: Option<f64>,
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(long, default_value_t = 1.0)]
    pub delta: f64,
    /// Random codes sampled per candidate length.
    #[arg(long, default_value_t = 50)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Text table output path.
    #[arg(long)]
    pub out_table: PathBuf,
    /// TOML records output path.
    #[arg(long)]
    pub out_records: PathBuf,
}

pub enum CmdError {
    Usage(String),
    Io(String),
    Verification(String),
}

impl CmdError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CmdError::Usage(_) => EXIT_USAGE,
            CmdError::Io(_) => EXIT_IO,
            CmdError::Verification(_) => EXIT_VERIFICATION,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CmdError::Usage(m) | CmdError::Io(m) | CmdError::Verification(m) => m,
        }
    }
}

impl From<dnaword_core::Error> for CmdError {
    fn from(e: dnaword_core::Error) -> CmdError {
        match e {
            dnaword_core::Error::VerificationFailed { .. } => CmdError::Verification(e.to_string()),
            _ => CmdError::Usage(e.to_string()),
        }
    }
}

impl From<CodeFileError> for CmdError {
    fn from(e: CodeFileError) -> CmdError {
        match e {
            CodeFileError::Io(_) => CmdError::Io(e.to_string()),
            CodeFileError::Parse(_) => CmdError::Usage(e.to_string()),
        }
    }
}

type CmdResult = Result<i32, CmdError>;

/// Dispatches a parsed command line; prints to stdout/stderr and returns the
/// process exit code.
pub fn run(cli: Cli) -> i32 {
    let result = match cli.command {
        Command::Generate(args) => cmd_generate(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Minlen(args) => cmd_minlen(args),
        Command::Bench(args) => cmd_bench(args),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message());
            e.exit_code()
        }
    }
}

fn parse_pipeline(name: &str) -> Result<Pipeline, CmdError> {
    Pipeline::parse(name).ok_or_else(|| {
        CmdError::Usage(format!(
            "unknown pipeline {name:?}; expected one of c1-4, c1-6, c1-7, c12378, c1-8a, c1-8b"
        ))
    })
}

fn need(value: Option<usize>, uniform: Option<usize>, flag: &str) -> Result<usize, CmdError> {
    value
        .or(uniform)
        .ok_or_else(|| CmdError::Usage(format!("missing required parameter --{flag} (or --k)")))
}

struct ResolvedSpec {
    spec: ConstraintSpec,
    gamma_given: bool,
    d_given: bool,
}

fn resolve_spec(
    pipeline: Pipeline,
    k: Option<usize>,
    ks: [Option<usize>; 6],
    gamma: Option<f64>,
    d: Option<usize>,
) -> Result<ResolvedSpec, CmdError> {
    let [k1, k2, k3, k4, k5, k6] = ks;
    let mut spec = ConstraintSpec::uniform(0);
    spec.k1 = need(k1, k, "k1")?;
    match pipeline {
        Pipeline::C14 => {
            spec.k4 = need(k4, k, "k4")?;
        }
        Pipeline::C16 | Pipeline::C17 => {
            spec.k2 = need(k2, k, "k2")?;
            spec.k3 = need(k3, k, "k3")?;
            spec.k4 = need(k4, k, "k4")?;
            spec.k5 = need(k5, k, "k5")?;
            spec.k6 = need(k6, k, "k6")?;
        }
        Pipeline::C12378 => {
            spec.k2 = need(k2, k, "k2")?;
            spec.k3 = need(k3, k, "k3")?;
        }
        Pipeline::C18A | Pipeline::C18B => {
            spec.k2 = need(k2, k, "k2")?;
            spec.k3 = need(k3, k, "k3")?;
            spec.k4 = need(k4, k, "k4")?;
            spec.k5 = need(k5, k, "k5")?;
            spec.k6 = need(k6, k, "k6")?;
        }
    }
    if pipeline.needs_gamma() {
        spec.gamma = gamma.ok_or_else(|| {
            CmdError::Usage(format!("pipeline {pipeline} requires --gamma"))
        })?;
    }
    if pipeline.needs_run_bound() {
        spec.d = d.ok_or_else(|| CmdError::Usage(format!("pipeline {pipeline} requires --d")))?;
    }
    Ok(ResolvedSpec { spec, gamma_given: gamma.is_some(), d_given: d.is_some() })
}

fn cmd_generate(args: GenerateArgs) -> CmdResult {
    let pipeline = parse_pipeline(&args.pipeline)?;
    let resolved = resolve_spec(
        pipeline,
        args.k,
        [args.k1, args.k2, args.k3, args.k4, args.k5, args.k6],
        args.gamma,
        args.d,
    )?;
    let spec = resolved.spec;
    let opts = GenerateOptions {
        delta: args.delta,
        use_min_length: args.min_length,
        hamming_only: args.hamming_only,
        optimize_run_bound: args.optimize_d,
    };

    let generated = generate(args.n, &spec, pipeline, &opts)?;
    write_code_file(&args.out, &generated.code)?;

    // boundary certificate for the planned base length, when it was minimal
    let (at_base, below_base) = if args.min_length || args.hamming_only {
        let base = generated.base_length;
        let at = if args.hamming_only {
            exceeds_threshold_hamming_only(args.n, base, spec.k1)?
        } else if pipeline == Pipeline::C14 || pipeline == Pipeline::C16 || pipeline == Pipeline::C17
        {
            exceeds_threshold(args.n, base, spec.k1, spec.k4)?
        } else {
            exceeds_threshold(args.n, base, spec.k1, spec.k1)?
        };
        let below = if base == 1 {
            false
        } else if args.hamming_only {
            exceeds_threshold_hamming_only(args.n, base - 1, spec.k1)?
        } else if pipeline == Pipeline::C14 || pipeline == Pipeline::C16 || pipeline == Pipeline::C17
        {
            exceeds_threshold(args.n, base - 1, spec.k1, spec.k4)?
        } else {
            exceeds_threshold(args.n, base - 1, spec.k1, spec.k1)?
        };
        (Some(at), Some(below))
    } else {
        (None, None)
    };

    let manifest = Manifest {
        run: RunSection {
            tool: "dnaword".into(),
            version: env!("CARGO_PKG_VERSION").into(),
            command: "generate".into(),
            pipeline: pipeline.as_str().into(),
        },
        params: ParamsSection {
            n: args.n,
            k1: spec.k1,
            k2: spec.k2,
            k3: spec.k3,
            k4: spec.k4,
            k5: spec.k5,
            k6: spec.k6,
            gamma: resolved.gamma_given.then_some(spec.gamma),
            d: resolved.d_given.then_some(spec.d),
            delta: args.delta,
            min_length: args.min_length,
            hamming_only: args.hamming_only,
            optimize_d: args.optimize_d,
        },
        result: ResultSection {
            length: generated.code.word_len(),
            alphabet: match generated.code.alphabet() {
                Alphabet::Binary => "binary".into(),
                Alphabet::Dna => "dna".into(),
            },
            base_length: generated.base_length,
            run_bound: generated.run_bound,
            verified: true,
            constraints: generated.checked.iter().map(|c| c.as_str().to_string()).collect(),
            threshold_at_base: at_base,
            threshold_below_base: below_base,
        },
        volatile: VolatileSection { timestamp_unix: unix_timestamp() },
    };
    let mpath = manifest_path(&args.out);
    std::fs::write(&mpath, manifest.to_toml())
        .map_err(|e| CmdError::Io(format!("{}: {e}", mpath.display())))?;

    println!(
        "wrote {} words of length {} ({}, verified {}) to {}",
        generated.code.n(),
        generated.code.word_len(),
        pipeline,
        manifest.result.constraints.join(","),
        args.out.display()
    );
    Ok(EXIT_OK)
}

fn parse_constraint_list(names: &[String]) -> Result<Vec<ConstraintId>, CmdError> {
    let mut ids = Vec::new();
    for name in names {
        let id = ConstraintId::ALL
            .into_iter()
            .find(|c| c.as_str() == name.to_lowercase())
            .ok_or_else(|| CmdError::Usage(format!("unknown constraint {name:?}")))?;
        if !ids.contains(&id) {
            ids.push(id);
        }
    }
    Ok(ids)
}

fn cmd_verify(args: VerifyArgs) -> CmdResult {
    let code = read_code_file(&args.input)?;
    let ids = parse_constraint_list(&args.constraints)?;

    let mut spec = ConstraintSpec::uniform(0);
    spec.enabled = ConstraintSet::of(&ids);
    for id in &ids {
        match id {
            ConstraintId::C1 => spec.k1 = need(args.k1, args.k, "k1")?,
            ConstraintId::C2 => spec.k2 = need(args.k2, args.k, "k2")?,
            ConstraintId::C3 => spec.k3 = need(args.k3, args.k, "k3")?,
            ConstraintId::C4 => spec.k4 = need(args.k4, args.k, "k4")?,
            ConstraintId::C5 => spec.k5 = need(args.k5, args.k, "k5")?,
            ConstraintId::C6 => spec.k6 = need(args.k6, args.k, "k6")?,
            ConstraintId::C7 => {
                spec.gamma = args
                    .gamma
                    .ok_or_else(|| CmdError::Usage("c7 requires --gamma".to_string()))?;
            }
            ConstraintId::C8 => {
                spec.d = args.d.ok_or_else(|| CmdError::Usage("c8 requires --d".to_string()))?;
            }
            ConstraintId::C9 => {
                spec.sigma = args
                    .sigma
                    .ok_or_else(|| CmdError::Usage("c9 requires --sigma".to_string()))?;
            }
        }
    }
    let table = if spec.enabled.contains(ConstraintId::C9) {
        let path = args
            .energy_table
            .as_ref()
            .ok_or_else(|| CmdError::Usage("c9 requires --energy-table".to_string()))?;
        Some(read_energy_table(path)?)
    } else {
        None
    };

    let report =
        dnaword_core::constraint::check_all_with_limit(&code, &spec, table.as_ref(), args.limit)?;
    if report.is_empty() {
        println!(
            "ok: {} words of length {} satisfy {}",
            code.n(),
            code.word_len(),
            args.constraints.join(",")
        );
        return Ok(EXIT_OK);
    }
    for v in report.items() {
        println!("{v}");
    }
    if report.total() > report.items().len() {
        println!("... ({} more not shown)", report.total() - report.items().len());
    }
    println!("total violations: {}", report.total());
    Ok(EXIT_VERIFICATION)
}

fn cmd_minlen(args: MinlenArgs) -> CmdResult {
    let k1 = need(args.k1, args.k, "k1")?;
    if args.hamming_only {
        let m = min_length_hamming_only(args.n, k1)?;
        let budget = ell_star(args.n, k1, k1, args.delta)?;
        println!("min={m}, ell_star={budget}");
    } else {
        let k4 = need(args.k4, args.k, "k4")?;
        let m = min_length(args.n, k1, k4)?;
        let budget = ell_star(args.n, k1, k4, args.delta)?;
        println!("min={m}, ell_star={budget}");
    }
    Ok(EXIT_OK)
}

fn cmd_bench(args: BenchArgs) -> CmdResult {
    let pipeline = parse_pipeline(&args.pipeline)?;
    if pipeline.needs_gamma() && args.gamma.is_none() {
        return Err(CmdError::Usage(format!("pipeline {pipeline} requires --gamma")));
    }
    if pipeline.needs_run_bound() && args.d.is_none() {
        return Err(CmdError::Usage(format!("pipeline {pipeline} requires --d")));
    }
    if args.n_values.is_empty() || args.k_values.is_empty() {
        return Err(CmdError::Usage("bench needs at least one n and one k".to_string()));
    }
    let cfg = BenchConfig {
        pipeline,
        n_values: args.n_values,
        k_values: args.k_values,
        gamma: args.gamma,
        d: args.d,
        delta: args.delta,
        trials: args.trials,
        master_seed: args.seed,
    };
    let (records, timings) = run_grid(&cfg)?;

    let table = render_table(&records);
    std::fs::write(&args.out_table, &table)
        .map_err(|e| CmdError::Io(format!("{}: {e}", args.out_table.display())))?;
    std::fs::write(&args.out_records, render_records(cfg.master_seed, &records))
        .map_err(|e| CmdError::Io(format!("{}: {e}", args.out_records.display())))?;

    print!("{table}");
    for (r, ms) in records.iter().zip(&timings) {
        println!("# n={} k={}: {} ms", r.n, r.k, ms);
    }
    Ok(EXIT_OK)
}

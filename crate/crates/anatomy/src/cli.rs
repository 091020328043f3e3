// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! The `giant-anatomy` command line.
//!
//! Exit status is 0 when a verdict passes or the command has none, 1 when
//! a verdict fails, and 2 for usage, input and sampling errors.

use std::fs::File;
use std::io::{self, BufReader, Write};
use std::path::{Path, PathBuf};

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use giant_anatomy_core::contiguous::{GiantOptions, ParityPolicy};
use giant_anatomy_core::direct::extract_anatomy;
use giant_anatomy_core::stats::{
    compare, summarize, tau_concentration, theory_check, Metric, Pipeline, SamplerSpec, Verdict,
    MIN_COMPARE_ROWS, MIN_TAU_VALUES,
};
use giant_anatomy_core::ModelParams;
use serde::Serialize;

use crate::report::{to_json, Envelope, Kind, RunInfo};
use crate::{dataset, edgelist, runner};

#[derive(Debug, Parser)]
#[command(
    name = "giant-anatomy",
    version,
    about = "Sample and dissect supercritical random graph giants"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Draw one giant; write its edge list and an anatomy sidecar
    Sample(SampleArgs),
    /// Dissect the largest component of an edge list
    Anatomy(AnatomyArgs),
    /// Run the cut-off line algorithm on fresh Poisson cells
    Cola(ColaArgs),
    /// Compare Monte-Carlo means with the closed-form predictions
    Theory(TheoryArgs),
    /// Two-sample KS comparison of two pipelines
    Compare(CompareArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Model {
    Contiguous,
    Direct,
    Cloning,
    PoissonConfig,
    PoissonGeometric,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Parity {
    Reject,
    Selfloop,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Edgelist,
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct ModelArgs {
    #[arg(long, default_value_t = 10_000)]
    pub n: usize,
    #[arg(long, default_value_t = 2.0)]
    pub lambda: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = Model::Contiguous)]
    pub model: Model,
    /// Condition on a simple graph
    #[arg(long, num_args = 0..=1, default_missing_value = "true")]
    pub simple: Option<bool>,
    #[arg(long, value_enum, default_value_t = Parity::Reject)]
    pub parity: Parity,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Defaults to standard output
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SampleArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct AnatomyArgs {
    /// Edge-list file, or `-` for standard input
    pub input: PathBuf,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct ColaArgs {
    #[arg(long, default_value_t = 10_000)]
    pub n: usize,
    #[arg(long, default_value_t = 2.0)]
    pub lambda: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 200)]
    pub reps: u64,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct TheoryArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long, default_value_t = 200)]
    pub reps: u64,
    /// Also write the replicate summaries as CSV
    #[arg(long)]
    pub dataset: Option<PathBuf>,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    /// Pipeline A; `--simple` defaults to on for the contiguous model
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long, default_value_t = 200)]
    pub reps: u64,
    #[arg(long, value_enum, default_value_t = Model::Direct)]
    pub model_b: Model,
    /// Defaults to `--lambda`
    #[arg(long)]
    pub lambda_b: Option<f64>,
    /// Defaults to `--seed` + 1
    #[arg(long)]
    pub seed_b: Option<u64>,
    /// Family-wise significance, split evenly over the metrics
    #[arg(long, default_value_t = 0.001)]
    pub significance: f64,
    /// Comma-separated metric names
    #[arg(long, value_delimiter = ',')]
    pub metrics: Vec<String>,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Runtime(anyhow::Error),
}

impl From<anyhow::Error> for CliError {
    fn from(e: anyhow::Error) -> Self {
        Self::Runtime(e)
    }
}

impl From<giant_anatomy_core::Error> for CliError {
    fn from(e: giant_anatomy_core::Error) -> Self {
        Self::Runtime(e.into())
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Result of a successful command.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Done,
    Verdict(Verdict),
}

impl Outcome {
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Done | Outcome::Verdict(Verdict::Pass) => 0,
            Outcome::Verdict(Verdict::Fail) => 1,
        }
    }
}

fn value_name<T: ValueEnum>(v: T) -> String {
    v.to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_owned()
}

fn check_scale(n: usize, lambda: f64, reps: u64) -> Result<ModelParams, CliError> {
    if n < 10 {
        return Err(usage(format!("--n must be at least 10, got {n}")));
    }
    if lambda.is_nan() || lambda <= 1.0 || lambda.is_infinite() {
        return Err(usage(format!("--lambda must exceed 1, got {lambda}")));
    }
    if reps == 0 {
        return Err(usage("--reps must be at least 1"));
    }
    ModelParams::new(n, lambda).map_err(|e| usage(e.to_string()))
}

impl ModelArgs {
    fn pipeline(&self, simple_default: bool) -> Result<Pipeline, CliError> {
        let parity = match self.parity {
            Parity::Reject => ParityPolicy::Reject,
            Parity::Selfloop => ParityPolicy::SelfLoop,
        };
        let simple = self
            .simple
            .unwrap_or(simple_default && self.model == Model::Contiguous);
        Ok(match self.model {
            Model::Contiguous => Pipeline::Contiguous(GiantOptions { simple, parity }),
            Model::Direct => Pipeline::Direct,
            multi if simple => {
                return Err(usage(format!(
                    "--model {} produces multigraphs and cannot be combined with --simple",
                    value_name(multi)
                )))
            }
            Model::Cloning => Pipeline::Cloning,
            Model::PoissonConfig => Pipeline::PoissonConfig(parity),
            Model::PoissonGeometric => Pipeline::PoissonGeometric(parity),
        })
    }

    fn spec(&self, simple_default: bool, reps: u64) -> Result<SamplerSpec, CliError> {
        check_scale(self.n, self.lambda, reps)?;
        Ok(SamplerSpec {
            pipeline: self.pipeline(simple_default)?,
            n: self.n,
            lambda: self.lambda,
        })
    }

    fn run_info(&self, spec: &SamplerSpec, reps: u64) -> RunInfo {
        let (simple, parity) = match spec.pipeline {
            Pipeline::Contiguous(o) => (Some(o.simple), Some(o.parity)),
            Pipeline::PoissonConfig(p) | Pipeline::PoissonGeometric(p) => (None, Some(p)),
            Pipeline::Direct | Pipeline::Cloning => (None, None),
        };
        RunInfo {
            n: self.n,
            lambda: self.lambda,
            seed: self.seed,
            reps,
            model: value_name(self.model),
            simple,
            parity: parity.map(|p| match p {
                ParityPolicy::Reject => "reject".to_owned(),
                ParityPolicy::SelfLoop => "selfloop".to_owned(),
            }),
            ..RunInfo::default()
        }
    }
}

fn pick_format(out: &OutputArgs, allowed: &[Format]) -> Result<Format, CliError> {
    match out.format {
        None => Ok(allowed[0]),
        Some(f) if allowed.contains(&f) => Ok(f),
        Some(f) => Err(usage(format!(
            "--format {} is not available here; use one of: {}",
            value_name(f),
            allowed
                .iter()
                .map(|&a| value_name(a))
                .collect::<Vec<_>>()
                .join(", ")
        ))),
    }
}

fn write_bytes(path: Option<&Path>, bytes: &[u8]) -> anyhow::Result<()> {
    match path {
        Some(p) => std::fs::write(p, bytes).with_context(|| format!("writing {}", p.display())),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(bytes)?;
            out.flush()?;
            Ok(())
        }
    }
}

fn json<T: Serialize>(value: &T) -> anyhow::Result<Vec<u8>> {
    Ok(to_json(value)?.into_bytes())
}

/// Path of the anatomy sidecar written next to a sampled edge list.
pub fn sidecar_path(output: &Path) -> PathBuf {
    let mut name = output.as_os_str().to_owned();
    name.push(".anatomy.json");
    PathBuf::from(name)
}

fn sample(args: &SampleArgs) -> Result<Outcome, CliError> {
    pick_format(&args.out, &[Format::Edgelist])?;
    let spec = args.model.spec(false, 1)?;
    let mut stream = giant_anatomy_core::stats::replicate_stream(args.model.seed, 0);
    let anatomy = spec.anatomy(&mut stream)?;
    let text = edgelist::to_string(&anatomy.giant);
    write_bytes(args.out.output.as_deref(), text.as_bytes())?;
    if let Some(path) = &args.out.output {
        let sidecar = Envelope::new(Kind::Anatomy, None, summarize(&anatomy));
        write_bytes(Some(&sidecar_path(path)), &json(&sidecar)?)?;
    }
    Ok(Outcome::Done)
}

fn anatomy(args: &AnatomyArgs) -> Result<Outcome, CliError> {
    let format = pick_format(&args.out, &[Format::Json, Format::Csv])?;
    let graph = if args.input.as_os_str() == "-" {
        edgelist::read_edgelist(io::stdin().lock())
    } else {
        let file = File::open(&args.input).with_context(|| format!("opening {}", args.input.display()))?;
        edgelist::read_edgelist(BufReader::new(file))
    }
    .with_context(|| format!("reading {}", args.input.display()))?;
    let summary = summarize(&extract_anatomy(&graph)?);
    let bytes = match format {
        Format::Csv => {
            let mut buf = Vec::new();
            dataset::write_dataset(&[summary], &mut buf).context("writing CSV")?;
            buf
        }
        _ => json(&Envelope::new(Kind::Anatomy, None, summary))?,
    };
    write_bytes(args.out.output.as_deref(), &bytes)?;
    Ok(Outcome::Done)
}

#[derive(Serialize)]
struct ColaRow {
    index: u64,
    tau: f64,
    core_size: usize,
    exhausted: bool,
}

fn cola(args: &ColaArgs) -> Result<Outcome, CliError> {
    let format = pick_format(&args.out, &[Format::Csv, Format::Json])?;
    let params = check_scale(args.n, args.lambda, args.reps)?;
    if format == Format::Json && args.reps < MIN_TAU_VALUES as u64 {
        return Err(usage(format!(
            "--format json needs --reps of at least {MIN_TAU_VALUES}"
        )));
    }
    let runs = runner::cola_runs(args.n, args.lambda, args.reps, args.seed, runner::thread_count())?;
    let bytes = match format {
        Format::Json => {
            let taus: Vec<f64> = runs.iter().map(|r| r.tau).collect();
            let grid = [0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 3.5, 4.0];
            let report = tau_concentration(&taus, &params, &grid)?;
            let run = RunInfo {
                n: args.n,
                lambda: args.lambda,
                seed: args.seed,
                reps: args.reps,
                model: "cloning".to_owned(),
                ..RunInfo::default()
            };
            let verdict = report.verdict;
            write_bytes(
                args.out.output.as_deref(),
                &json(&Envelope::new(Kind::Tau, Some(run), report))?,
            )?;
            return Ok(Outcome::Verdict(verdict));
        }
        _ => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for (i, r) in runs.iter().enumerate() {
                w.serialize(ColaRow {
                    index: i as u64,
                    tau: r.tau,
                    core_size: r.core_size(),
                    exhausted: r.exhausted(),
                })
                .context("writing CSV")?;
            }
            w.into_inner().map_err(|e| anyhow::anyhow!("writing CSV: {e}"))?
        }
    };
    write_bytes(args.out.output.as_deref(), &bytes)?;
    Ok(Outcome::Done)
}

fn theory(args: &TheoryArgs) -> Result<Outcome, CliError> {
    pick_format(&args.out, &[Format::Json])?;
    let spec = args.model.spec(false, args.reps)?;
    let rows = runner::monte_carlo(&spec, args.reps, args.model.seed, runner::thread_count())?;
    if let Some(path) = &args.dataset {
        let file = File::create(path).with_context(|| format!("creating {}", path.display()))?;
        dataset::write_dataset(&rows, file).context("writing dataset")?;
    }
    let report = theory_check(&rows, &spec.params()?)?;
    let verdict = report.verdict;
    let env = Envelope::new(Kind::Theory, Some(args.model.run_info(&spec, args.reps)), report);
    write_bytes(args.out.output.as_deref(), &json(&env)?)?;
    Ok(Outcome::Verdict(verdict))
}

fn compare_cmd(args: &CompareArgs) -> Result<Outcome, CliError> {
    pick_format(&args.out, &[Format::Json])?;
    if args.reps < MIN_COMPARE_ROWS as u64 {
        return Err(usage(format!(
            "compare needs --reps of at least {MIN_COMPARE_ROWS}"
        )));
    }
    let spec_a = args.model.spec(true, args.reps)?;
    let lambda_b = args.lambda_b.unwrap_or(args.model.lambda);
    let seed_b = args.seed_b.unwrap_or(args.model.seed.wrapping_add(1));
    let model_b = ModelArgs {
        n: args.model.n,
        lambda: lambda_b,
        seed: seed_b,
        model: args.model_b,
        simple: None,
        parity: args.model.parity,
    };
    let spec_b = model_b.spec(true, args.reps)?;
    let metrics = if args.metrics.is_empty() {
        Metric::LIMIT_TRIPLE.to_vec()
    } else {
        args.metrics
            .iter()
            .map(|name| Metric::parse(name.trim()).ok_or_else(|| usage(format!("unknown metric {name:?}"))))
            .collect::<Result<Vec<_>, _>>()?
    };
    if !(args.significance > 0.0 && args.significance < 1.0) {
        return Err(usage("--significance must lie in (0, 1)"));
    }
    let threads = runner::thread_count();
    let a = runner::monte_carlo(&spec_a, args.reps, args.model.seed, threads)?;
    let b = runner::monte_carlo(&spec_b, args.reps, seed_b, threads)?;
    let report = compare(&a, &b, &metrics, args.significance)?;
    let verdict = report.verdict;
    let run = RunInfo {
        model_b: Some(value_name(args.model_b)),
        lambda_b: Some(lambda_b),
        seed_b: Some(seed_b),
        ..args.model.run_info(&spec_a, args.reps)
    };
    write_bytes(
        args.out.output.as_deref(),
        &json(&Envelope::new(Kind::Compare, Some(run), report))?,
    )?;
    Ok(Outcome::Verdict(verdict))
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Sample(a) => sample(a),
        Command::Anatomy(a) => anatomy(a),
        Command::Cola(a) => cola(a),
        Command::Theory(a) => theory(a),
        Command::Compare(a) => compare_cmd(a),
    }
}

/// Parses `args` (including the program name), runs, reports errors on
/// standard error and returns the exit status.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match run(&cli) {
        Ok(outcome) => outcome.exit_code(),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(CliError::Runtime(e)) => {
            eprintln!("error: {e:#}");
            2
        }
    }
}

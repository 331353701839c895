//! Command-line front end.
//!
//! Everything the `torus-dispersion` binary does lives here so it can be
//! driven in-process: [`Cli`] is the clap parser and [`run`] turns a parsed
//! command line into an [`Outcome`] (text plus exit code).
//!
//! Exit codes: 0 success, 1 verification failure, 2 budget exceeded,
//! 3 input error.

use std::fmt::Write as _;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bounds::{split_cube_bound, theorem1_bound, theorem1_bound_in, BoundReport};
use crate::error::{Error, Result};
use crate::exact::{
    cyclic_gap_dispersion_1d, exact_dispersion_boxes, exact_dispersion_periodic,
    sampled_dispersion_lower_bound, sampled_dispersion_lower_bound_boxes, DispersionResult, Method,
    SampleOptions, SearchOptions, Witness, DEFAULT_BUDGET,
};
use crate::generators::GeneratorSpec;
use crate::scalar::{Exact, Scalar};
use crate::torus::PointSet;
use crate::witness::{witness_theorem1, WitnessOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_BUDGET: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

/// Tolerance for comparing float-mode volumes against closed-form bounds.
pub const FLOAT_BOUND_TOLERANCE: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Ranges {
    Periodic,
    Boxes,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Exact,
    Witness,
    Sample,
    Gap1d,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GeneratorKind {
    Random,
    Grid,
    Kronecker,
    Fibonacci,
    #[value(name = "equispaced-1d")]
    Equispaced1d,
}

#[derive(Debug, Parser)]
#[command(name = "torus-dispersion", version, about = "Largest empty boxes of point sets on the torus and in the unit cube")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute the dispersion of a point set.
    Compute(RunArgs),
    /// Construct an empty periodic box of volume at least min{1, d/n}.
    Witness(RunArgs),
    /// Write a generated point set as CSV (or JSON).
    Generate(GenerateArgs),
    /// Recompute and check the min{1, d/n} bound and witness emptiness.
    Verify(VerifyArgs),
    /// Dispersion against d/n over a range of sizes and dimensions, as CSV.
    Sweep(SweepArgs),
    /// Print the closed-form bounds for (n, d).
    Bounds(BoundsArgs),
}

#[derive(Clone, Debug, Args)]
pub struct SourceArgs {
    /// CSV point file, one point per row.
    #[arg(long, conflicts_with = "gen")]
    pub input: Option<PathBuf>,
    /// Generator spec as JSON, e.g. '{"kind":"random","n":10,"d":2,"seed":1}'.
    #[arg(long)]
    pub gen: Option<String>,
    /// Dimension; required for an empty input file, checked otherwise.
    #[arg(long)]
    pub dim: Option<usize>,
}

#[derive(Clone, Debug, Args)]
pub struct RunArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    #[arg(long, value_enum, default_value = "periodic")]
    pub ranges: Ranges,
    #[arg(long, value_enum, default_value = "exact")]
    pub mode: Mode,
    #[arg(long, default_value_t = 10_000)]
    pub trials: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Largest candidate product the exact search may cover.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u128,
    /// Concurrent slices of the exact search; the result does not depend on it.
    #[arg(long, default_value_t = 1)]
    pub workers: usize,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Witness mode: try the arc on every axis and keep the longest.
    #[arg(long)]
    pub best_axis: bool,
    /// Exact rational arithmetic.
    #[arg(long)]
    pub rational: bool,
    /// Report wall time (makes the output run-dependent).
    #[arg(long)]
    pub timing: bool,
}

#[derive(Clone, Debug, Args)]
pub struct GenerateArgs {
    #[arg(long)]
    pub gen: String,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Clone, Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub run: RunArgs,
    /// Verify this many seeded random sets instead of one input; set `i`
    /// has d = 1 + i mod max-d, n = 1 + (i / max-d) mod max-n, seed = seed + i.
    #[arg(long)]
    pub random_suite: Option<usize>,
    #[arg(long, default_value_t = 10)]
    pub max_n: usize,
    #[arg(long, default_value_t = 3)]
    pub max_d: usize,
}

#[derive(Clone, Debug, Args)]
pub struct SweepArgs {
    #[arg(long, value_enum)]
    pub kind: GeneratorKind,
    /// Sizes (grid: points per axis), comma separated; may be empty.
    #[arg(long, value_delimiter = ',', num_args = 0..)]
    pub n: Vec<usize>,
    /// Dimensions, comma separated.
    #[arg(long, value_delimiter = ',', default_value = "2")]
    pub d: Vec<usize>,
    #[arg(long, value_enum, default_value = "periodic")]
    pub ranges: Ranges,
    #[arg(long, value_enum, default_value = "exact")]
    pub mode: Mode,
    #[arg(long, default_value_t = 10_000)]
    pub trials: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u128,
    #[arg(long, default_value_t = 1)]
    pub workers: usize,
    #[arg(long)]
    pub best_axis: bool,
    #[arg(long)]
    pub rational: bool,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Clone, Debug, Args)]
pub struct BoundsArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub d: usize,
    #[arg(long)]
    pub eps: Option<f64>,
}

/// Text for stdout (or the `--output` file) and the process exit code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub exit_code: i32,
    pub output: Option<PathBuf>,
}

/// Settings shared by compute, witness, verify and sweep.
#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub ranges: Ranges,
    pub mode: Mode,
    pub search: SearchOptions,
    pub sample: SampleOptions,
    pub witness: WitnessOptions,
    pub rational: bool,
    pub timing: bool,
}

impl RunConfig {
    fn from_args(args: &RunArgs) -> Self {
        Self {
            ranges: args.ranges,
            mode: args.mode,
            search: SearchOptions {
                budget: args.budget,
                workers: args.workers,
            },
            sample: SampleOptions {
                trials: args.trials,
                seed: args.seed,
            },
            witness: WitnessOptions {
                best_axis: args.best_axis,
            },
            rational: args.rational,
            timing: args.timing,
        }
    }

    fn validate(&self, dim: usize) -> Result<()> {
        match (self.ranges, self.mode) {
            (Ranges::Boxes, Mode::Witness) => Err(Error::InvalidInput(
                "witness mode constructs periodic boxes; use --ranges periodic".into(),
            )),
            (Ranges::Boxes, Mode::Gap1d) => Err(Error::InvalidInput(
                "gap1d mode is a periodic computation; use --ranges periodic".into(),
            )),
            (_, Mode::Gap1d) if dim != 1 => Err(Error::InvalidInput(format!(
                "gap1d mode needs d = 1, the input has d = {dim}"
            ))),
            _ => Ok(()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WitnessJson {
    pub anchors: Vec<f64>,
    pub lengths: Vec<f64>,
}

/// The JSON report of `compute`. Field order is the output order.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub n: usize,
    pub d: usize,
    pub ranges: Ranges,
    pub mode: Mode,
    pub volume: f64,
    /// `p/q` in rational mode, `null` otherwise.
    pub volume_exact: Option<String>,
    pub witness: Option<WitnessJson>,
    pub method: &'static str,
    pub exact: bool,
    pub bound_theorem1: f64,
    pub bound_split_cube: f64,
    pub meets_theorem1: bool,
    pub witness_empty: bool,
    pub candidates_examined: u128,
    /// `null` unless timing was requested, so reports are reproducible.
    pub wall_time_ms: Option<f64>,
}

/// Parses CSV point data: one point per row, `d` numeric columns, optional
/// header (a first row that is not all numbers).
pub fn parse_points(text: &str, dim: Option<usize>) -> Result<PointSet> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut rows: Vec<Vec<f64>> = Vec::new();
    let mut width = dim;
    for (idx, record) in reader.records().enumerate() {
        let record = record.map_err(|e| Error::Parse {
            line: e.position().map_or(idx + 1, |p| p.line() as usize),
            message: e.to_string(),
        })?;
        let line = record.position().map_or(idx + 1, |p| p.line() as usize);
        if record.iter().all(str::is_empty) {
            continue;
        }
        let parsed: std::result::Result<Vec<f64>, _> = record.iter().map(str::parse::<f64>).collect();
        let values = match parsed {
            Ok(v) => v,
            Err(_) if rows.is_empty() && idx == 0 => continue,
            Err(_) => {
                let bad = record.iter().find(|c| c.parse::<f64>().is_err()).unwrap_or("");
                return Err(Error::Parse {
                    line,
                    message: format!("non-numeric cell {bad:?}"),
                });
            }
        };
        match width {
            Some(w) if w != values.len() => {
                return Err(Error::Parse {
                    line,
                    message: format!("expected {w} columns, found {}", values.len()),
                })
            }
            _ => width = Some(values.len()),
        }
        rows.push(values);
    }
    if rows.is_empty() && dim.is_none() {
        return Err(Error::InvalidInput(
            "no points in the input; pass --dim to read an empty set".into(),
        ));
    }
    PointSet::canonicalize(&rows, width)
}

/// [`parse_points`] on a file; `-` reads stdin.
pub fn read_points(path: &Path, dim: Option<usize>) -> Result<PointSet> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        s
    } else {
        std::fs::read_to_string(path)?
    };
    parse_points(&text, dim)
}

/// CSV with one point per row; reals in shortest round-trip form.
pub fn format_points<T: Scalar>(set: &PointSet<T>) -> String {
    let mut out = String::new();
    for p in set.points() {
        let row: Vec<String> = p.iter().map(|c| c.to_f64().to_string()).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

fn parse_generator(json: &str) -> Result<GeneratorSpec> {
    serde_json::from_str(json).map_err(|e| Error::InvalidInput(format!("generator spec: {e}")))
}

/// The point set named by `--input` or `--gen`, in float form.
pub fn load_source(source: &SourceArgs) -> Result<Source> {
    match (&source.input, &source.gen) {
        (Some(path), None) => Ok(Source::Points(read_points(path, source.dim)?)),
        (None, Some(json)) => {
            let spec = parse_generator(json)?;
            Ok(Source::Generated(spec))
        }
        _ => Err(Error::InvalidInput("exactly one of --input or --gen is required".into())),
    }
}

/// Where the points come from. Generated sets are rebuilt in the requested
/// arithmetic so lattice points stay exact in rational mode.
#[derive(Clone, Debug)]
pub enum Source {
    Points(PointSet),
    Generated(GeneratorSpec),
}

impl Source {
    fn float(&self) -> Result<PointSet> {
        match self {
            Source::Points(p) => Ok(p.clone()),
            Source::Generated(spec) => spec.generate(),
        }
    }

    fn exact(&self) -> Result<PointSet<Exact>> {
        match self {
            Source::Points(p) => Ok(p.to_exact()),
            Source::Generated(spec) => spec.generate(),
        }
    }
}

/// Runs one dispersion computation according to `config`.
pub fn compute<T: Scalar>(set: &PointSet<T>, config: &RunConfig) -> Result<Report> {
    config.validate(set.dim())?;
    let start = Instant::now();
    let result = dispatch(set, config)?;
    let elapsed = start.elapsed();

    let (n, d) = (set.len(), set.dim());
    let bound: T = theorem1_bound_in(n, d)?;
    let meets = meets_bound(&result.volume, &bound);
    let witness_empty = match &result.witness {
        Some(w) => w.is_empty_for(set)?,
        None => true,
    };
    if !witness_empty {
        return Err(Error::InvariantViolation("reported witness contains a point".into()));
    }
    Ok(Report {
        n,
        d,
        ranges: config.ranges,
        mode: config.mode,
        volume: result.volume.to_f64(),
        volume_exact: result.volume.exact_repr(),
        witness: result.witness.as_ref().map(witness_json),
        method: result.method.as_str(),
        exact: result.exact,
        bound_theorem1: theorem1_bound(n, d)?,
        bound_split_cube: split_cube_bound(n),
        meets_theorem1: meets,
        witness_empty,
        candidates_examined: result.candidates_examined,
        wall_time_ms: config.timing.then_some(elapsed.as_secs_f64() * 1e3),
    })
}

/// `volume >= bound`, exactly for rationals and up to
/// [`FLOAT_BOUND_TOLERANCE`] in float mode.
pub fn meets_bound<T: Scalar>(volume: &T, bound: &T) -> bool {
    if volume.exact_repr().is_some() {
        bound.le(volume)
    } else {
        volume.to_f64() >= bound.to_f64() - FLOAT_BOUND_TOLERANCE
    }
}

fn witness_json<T: Scalar>(w: &Witness<T>) -> WitnessJson {
    let b = w.to_periodic();
    WitnessJson {
        anchors: b.anchors().iter().map(Scalar::to_f64).collect(),
        lengths: b.lengths().iter().map(Scalar::to_f64).collect(),
    }
}

fn dispatch<T: Scalar>(set: &PointSet<T>, config: &RunConfig) -> Result<DispersionResult<T>> {
    match (config.ranges, config.mode) {
        (Ranges::Periodic, Mode::Exact) => exact_dispersion_periodic(set, &config.search),
        (Ranges::Boxes, Mode::Exact) => exact_dispersion_boxes(set, &config.search),
        (Ranges::Periodic, Mode::Witness) => witness_as_result(set, &config.witness),
        (Ranges::Periodic, Mode::Gap1d) => cyclic_gap_dispersion_1d(set),
        (Ranges::Periodic, Mode::Sample) => {
            // the constructive witness is a free lower bound; keep whichever
            // certified box is larger
            let sampled = sampled_dispersion_lower_bound(set, &config.sample)?;
            let constructed = witness_as_result(set, &config.witness)?;
            Ok(if constructed.volume.lt(&sampled.volume) {
                sampled
            } else {
                DispersionResult {
                    candidates_examined: sampled.candidates_examined,
                    nodes_visited: sampled.nodes_visited,
                    ..constructed
                }
            })
        }
        (Ranges::Boxes, Mode::Sample) => sampled_dispersion_lower_bound_boxes(set, &config.sample),
        (Ranges::Boxes, Mode::Witness | Mode::Gap1d) => unreachable!("rejected by validate"),
    }
}

fn witness_as_result<T: Scalar>(set: &PointSet<T>, opts: &WitnessOptions) -> Result<DispersionResult<T>> {
    let w = witness_theorem1(set, opts)?;
    Ok(DispersionResult {
        volume: w.volume,
        witness: Some(Witness::Periodic(w.witness)),
        method: Method::WitnessConstruction,
        candidates_examined: 1,
        nodes_visited: 1,
        exact: false,
    })
}

fn compute_source(source: &Source, config: &RunConfig) -> Result<Report> {
    if config.rational {
        compute(&source.exact()?, config)
    } else {
        compute(&source.float()?, config)
    }
}

pub fn report_json(report: &Report) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
    s.push('\n');
    s
}

pub fn report_csv(report: &Report) -> String {
    let mut s = String::from(
        "n,d,ranges,mode,volume,method,exact,bound_theorem1,bound_split_cube,meets_theorem1,candidates_examined\n",
    );
    let _ = writeln!(
        s,
        "{},{},{},{},{},{},{},{},{},{},{}",
        report.n,
        report.d,
        enum_name(&report.ranges),
        enum_name(&report.mode),
        report.volume,
        report.method,
        report.exact,
        report.bound_theorem1,
        report.bound_split_cube,
        report.meets_theorem1,
        report.candidates_examined
    );
    s
}

fn enum_name<E: Serialize>(e: &E) -> String {
    serde_json::to_value(e)
        .ok()
        .and_then(|v| v.as_str().map(str::to_owned))
        .unwrap_or_default()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyCase {
    pub index: usize,
    pub n: usize,
    pub d: usize,
    pub volume: f64,
    pub bound_theorem1: f64,
    pub meets_theorem1: bool,
    pub witness_empty: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    pub ranges: Ranges,
    pub mode: Mode,
    pub sets: usize,
    pub passed: usize,
    pub failures: Vec<VerifyCase>,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Recomputes each set and checks the min{1, d/n} bound (periodic ranges)
/// or the 1/(n+1) bound (ordinary boxes), plus witness emptiness.
pub fn verify(sources: &[Source], config: &RunConfig) -> Result<VerifyReport> {
    if !matches!(config.mode, Mode::Exact | Mode::Witness) {
        return Err(Error::InvalidInput("verify supports --mode exact or witness".into()));
    }
    let mut failures = Vec::new();
    for (index, source) in sources.iter().enumerate() {
        let report = compute_source(source, config)?;
        let meets = match config.ranges {
            Ranges::Periodic => report.meets_theorem1,
            Ranges::Boxes => report.volume >= report.bound_split_cube - FLOAT_BOUND_TOLERANCE,
        };
        if !meets || !report.witness_empty {
            failures.push(VerifyCase {
                index,
                n: report.n,
                d: report.d,
                volume: report.volume,
                bound_theorem1: report.bound_theorem1,
                meets_theorem1: report.meets_theorem1,
                witness_empty: report.witness_empty,
            });
        }
    }
    Ok(VerifyReport {
        ranges: config.ranges,
        mode: config.mode,
        sets: sources.len(),
        passed: sources.len() - failures.len(),
        failures,
    })
}

/// The seeded random suite used by `verify --random-suite`.
pub fn random_suite(count: usize, max_n: usize, max_d: usize, seed: u64) -> Result<Vec<GeneratorSpec>> {
    if max_n == 0 || max_d == 0 {
        return Err(Error::InvalidInput("--max-n and --max-d must be positive".into()));
    }
    Ok((0..count)
        .map(|i| GeneratorSpec::Random {
            n: 1 + (i / max_d) % max_n,
            d: 1 + i % max_d,
            seed: seed.wrapping_add(i as u64),
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepRow {
    pub kind: &'static str,
    pub n: usize,
    pub d: usize,
    pub mode: Mode,
    pub volume: f64,
    pub theorem1_bound: f64,
    pub ratio: f64,
}

pub const SWEEP_HEADER: &str = "kind,n,d,mode,volume,theorem1_bound,ratio";

fn sweep_spec(kind: GeneratorKind, size: usize, d: usize, seed: u64) -> Result<GeneratorSpec> {
    Ok(match kind {
        GeneratorKind::Random => GeneratorSpec::Random { n: size, d, seed },
        GeneratorKind::Grid => GeneratorSpec::Grid { m: size, d },
        GeneratorKind::Kronecker => GeneratorSpec::Kronecker { n: size, d, alpha: None },
        GeneratorKind::Fibonacci if d == 2 => GeneratorSpec::Fibonacci { n: size },
        GeneratorKind::Equispaced1d if d == 1 => GeneratorSpec::Equispaced1d { n: size },
        GeneratorKind::Fibonacci | GeneratorKind::Equispaced1d => {
            return Err(Error::InvalidInput(format!(
                "{kind:?} sets have a fixed dimension; d = {d} was requested"
            )))
        }
    })
}

/// One row per `(size, d)` pair, sizes outermost.
pub fn sweep(args: &SweepArgs) -> Result<Vec<SweepRow>> {
    let config = RunConfig {
        ranges: args.ranges,
        mode: args.mode,
        search: SearchOptions {
            budget: args.budget,
            workers: args.workers,
        },
        sample: SampleOptions {
            trials: args.trials,
            seed: args.seed,
        },
        witness: WitnessOptions {
            best_axis: args.best_axis,
        },
        rational: args.rational,
        timing: false,
    };
    let mut rows = Vec::new();
    for &size in &args.n {
        for &d in &args.d {
            let spec = sweep_spec(args.kind, size, d, args.seed)?;
            let report = compute_source(&Source::Generated(spec.clone()), &config)?;
            rows.push(SweepRow {
                kind: spec.kind(),
                n: report.n,
                d: report.d,
                mode: args.mode,
                volume: report.volume,
                theorem1_bound: report.bound_theorem1,
                ratio: report.volume / report.bound_theorem1,
            });
        }
    }
    Ok(rows)
}

pub fn sweep_csv(rows: &[SweepRow]) -> String {
    let mut s = String::from(SWEEP_HEADER);
    s.push('\n');
    for r in rows {
        let _ = writeln!(
            s,
            "{},{},{},{},{},{},{}",
            r.kind,
            r.n,
            r.d,
            enum_name(&r.mode),
            r.volume,
            r.theorem1_bound,
            r.ratio
        );
    }
    s
}

#[derive(Serialize)]
struct ErrorBody<'a> {
    kind: &'a str,
    message: String,
}

#[derive(Serialize)]
struct ErrorJson<'a> {
    error: ErrorBody<'a>,
    exit_code: i32,
}

pub fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        Error::InvariantViolation(_) => EXIT_VERIFY_FAILED,
        Error::DimensionMismatch { .. }
        | Error::InvalidInput(_)
        | Error::OutOfRange { .. }
        | Error::WrongCase(_)
        | Error::Parse { .. }
        | Error::Io(_) => EXIT_INPUT,
    }
}

fn error_kind(err: &Error) -> &'static str {
    match err {
        Error::BudgetExceeded { .. } => "budget-exceeded",
        Error::InvariantViolation(_) => "invariant-violation",
        Error::DimensionMismatch { .. } => "dimension-mismatch",
        Error::InvalidInput(_) => "invalid-input",
        Error::OutOfRange { .. } => "out-of-range",
        Error::WrongCase(_) => "wrong-case",
        Error::Parse { .. } => "parse",
        Error::Io(_) => "io",
    }
}

/// Structured error report; printed on stdout in place of a result.
pub fn error_json(err: &Error) -> String {
    let body = ErrorJson {
        error: ErrorBody {
            kind: error_kind(err),
            message: err.to_string(),
        },
        exit_code: exit_code_for(err),
    };
    let mut s = serde_json::to_string_pretty(&body).expect("errors serialize");
    s.push('\n');
    s
}

/// Executes a parsed command line.
pub fn run(cli: &Cli) -> Outcome {
    let (result, output) = match &cli.command {
        Command::Compute(args) => (run_compute(args, None), args.output.clone()),
        Command::Witness(args) => (run_compute(args, Some(Mode::Witness)), args.output.clone()),
        Command::Generate(args) => (run_generate(args), args.output.clone()),
        Command::Verify(args) => (run_verify(args), args.run.output.clone()),
        Command::Sweep(args) => (sweep(args).map(|rows| (sweep_csv(&rows), EXIT_OK)), args.output.clone()),
        Command::Bounds(args) => (run_bounds(args), None),
    };
    match result {
        Ok((text, exit_code)) => Outcome { text, exit_code, output },
        Err(err) => Outcome {
            text: error_json(&err),
            exit_code: exit_code_for(&err),
            output: None,
        },
    }
}

fn run_compute(args: &RunArgs, forced: Option<Mode>) -> Result<(String, i32)> {
    let mut config = RunConfig::from_args(args);
    if let Some(mode) = forced {
        config.mode = mode;
    }
    let report = compute_source(&load_source(&args.source)?, &config)?;
    let text = match args.format {
        Format::Json => report_json(&report),
        Format::Csv => report_csv(&report),
    };
    Ok((text, EXIT_OK))
}

fn run_generate(args: &GenerateArgs) -> Result<(String, i32)> {
    let set: PointSet = parse_generator(&args.gen)?.generate()?;
    let text = match args.format {
        Format::Csv => format_points(&set),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&serde_json::json!({
                "d": set.dim(),
                "points": set.points(),
            }))
            .expect("points serialize");
            s.push('\n');
            s
        }
    };
    Ok((text, EXIT_OK))
}

fn run_verify(args: &VerifyArgs) -> Result<(String, i32)> {
    let config = RunConfig::from_args(&args.run);
    let sources = match args.random_suite {
        Some(count) => random_suite(count, args.max_n, args.max_d, args.run.seed)?
            .into_iter()
            .map(Source::Generated)
            .collect(),
        None => vec![load_source(&args.run.source)?],
    };
    let report = verify(&sources, &config)?;
    let mut text = serde_json::to_string_pretty(&report).expect("reports serialize");
    text.push('\n');
    Ok((text, if report.ok() { EXIT_OK } else { EXIT_VERIFY_FAILED }))
}

fn run_bounds(args: &BoundsArgs) -> Result<(String, i32)> {
    let report = BoundReport::new(args.n, args.d, args.eps)?;
    let mut text = serde_json::to_string_pretty(&report).expect("reports serialize");
    text.push('\n');
    Ok((text, EXIT_OK))
}

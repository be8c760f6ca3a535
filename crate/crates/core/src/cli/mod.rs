//! Command-line front end: `ground`, `sweep`, `sweep2d`, `boundaries`.
//!
//! Exit codes: 0 success, 1 usage error, 2 numerical failure, 3 I/O or
//! malformed input.

pub mod io;

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::basis::{BipartitionScheme, SectorBasis};
use crate::eigensolver::LanczosConfig;
use crate::error::Error;
use crate::model::{build_dimerized_chain, build_ladder, build_xxz_chain, ModelSpec};
use crate::sweep::{
    boundary_report, evaluate_model, extrema_of_series, find_local_extrema, run_sweep_1d,
    run_sweep_2d, Couplings, ModelFamily, Range, SweepParam, SweepSpec, DEFAULT_RIDGE_THRESHOLD,
};

pub const THREADS_ENV: &str = "SPIN_ENT_THREADS";

pub const EXIT_USAGE: i32 = 1;
pub const EXIT_NUMERICAL: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "spin-ent", version, about = "Ground-state entanglement of spin-1/2 chains and ladders")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Ground state and observables at a single parameter point.
    Ground(GroundArgs),
    /// One-parameter sweep.
    Sweep(SweepArgs),
    /// Ladder sweep over (J'/J, Δ).
    Sweep2d(Sweep2dArgs),
    /// Extrema, ridges and valleys of a sweep CSV.
    Boundaries(BoundaryArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelChoice {
    Xxz,
    Dimer,
    Ladder,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct ModelArgs {
    #[arg(long, value_enum)]
    pub model: ModelChoice,
    /// Number of sites (chains); total sites for a ladder when --rungs is absent.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub rungs: Option<usize>,
    /// Chain / leg coupling J.
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    pub j: f64,
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    pub delta: f64,
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    pub j1: f64,
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    pub j2: f64,
    /// Rung coupling J'.
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    pub jp: f64,
    /// odd_even, checkerboard, leg, block:L or custom:MASK.
    #[arg(long)]
    pub bipartition: Option<BipartitionScheme>,
}

#[derive(Debug, Clone, Args)]
pub struct SolverArgs {
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long, default_value_t = 1e-12)]
    pub tol: f64,
    #[arg(long, default_value_t = 500)]
    pub max_iter: usize,
}

impl SolverArgs {
    fn config(&self) -> LanczosConfig {
        LanczosConfig {
            max_iterations: self.max_iter,
            tolerance: self.tol,
            seed: self.seed,
            reorthogonalize: true,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    /// Output file; stdout when absent (ground only).
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Clone, Args)]
pub struct GroundArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    /// Number of up spins; defaults to N/2.
    #[arg(long)]
    pub sector: Option<usize>,
    #[command(flatten)]
    pub solver: SolverArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long)]
    pub param: SweepParam,
    /// start:stop:step, both ends inclusive.
    #[arg(long, allow_hyphen_values = true)]
    pub range: Range,
    #[arg(long)]
    pub threads: Option<usize>,
    #[command(flatten)]
    pub solver: SolverArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct Sweep2dArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    /// J'/J range.
    #[arg(long, allow_hyphen_values = true)]
    pub xrange: Range,
    /// Δ range.
    #[arg(long, allow_hyphen_values = true)]
    pub yrange: Range,
    #[arg(long)]
    pub threads: Option<usize>,
    #[command(flatten)]
    pub solver: SolverArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct BoundaryArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long, default_value = "entropy_per_site")]
    pub observable: String,
    /// Minimum |second derivative| for ridge and valley points.
    #[arg(long, default_value_t = DEFAULT_RIDGE_THRESHOLD)]
    pub threshold: f64,
    /// Also report ridges and valleys of the first-derivative surfaces.
    #[arg(long)]
    pub on_derivative: bool,
}

/// A failed command: message and exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parameter(_) => EXIT_USAGE,
            Error::NotConverged { .. } | Error::Numerical(_) => EXIT_NUMERICAL,
            Error::Io(_) | Error::Malformed { .. } => EXIT_IO,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Parses `args` (including the program name) and runs the command, writing
/// human-readable output to `stdout`. Returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{e}");
            return if e.use_stderr() { EXIT_USAGE } else { 0 };
        }
    };
    match dispatch(cli.command, stdout) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {}", e.message);
            e.code
        }
    }
}

fn dispatch(command: Command, stdout: &mut dyn Write) -> CliResult<()> {
    match command {
        Command::Ground(args) => cmd_ground(&args, stdout),
        Command::Sweep(args) => cmd_sweep(&args, stdout),
        Command::Sweep2d(args) => cmd_sweep2d(&args, stdout),
        Command::Boundaries(args) => cmd_boundaries(&args, stdout),
    }
}

fn resolve_threads(flag: Option<usize>) -> CliResult<usize> {
    if let Some(t) = flag {
        return Ok(t);
    }
    match std::env::var(THREADS_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::usage(format!("{THREADS_ENV}='{v}' is not a thread count"))),
        Err(_) => Ok(1),
    }
}

fn family_of(m: &ModelArgs) -> CliResult<ModelFamily> {
    let sites = || m.n.ok_or_else(|| CliError::usage("--n is required for this model"));
    Ok(match m.model {
        ModelChoice::Xxz => ModelFamily::Xxz {
            sites: sites()?,
            coupling: m.j,
        },
        ModelChoice::Dimer => ModelFamily::Dimer {
            sites: sites()?,
            j1: m.j1,
        },
        ModelChoice::Ladder => {
            let rungs = match (m.rungs, m.n) {
                (Some(r), _) => r,
                (None, Some(n)) if n % 2 == 0 => n / 2,
                (None, Some(n)) => return Err(CliError::usage(format!("ladder needs an even --n, got {n}"))),
                (None, None) => return Err(CliError::usage("--rungs is required for the ladder")),
            };
            ModelFamily::Ladder {
                rungs,
                leg_coupling: m.j,
            }
        }
    })
}

fn ratio(num: f64, den: f64, what: &str) -> CliResult<f64> {
    if den == 0.0 {
        return Err(CliError::usage(format!("{what}: reference coupling is zero")));
    }
    Ok(num / den)
}

fn build_model(m: &ModelArgs, family: &ModelFamily) -> CliResult<ModelSpec> {
    let model = match *family {
        ModelFamily::Xxz { sites, .. } => build_xxz_chain(sites, m.j, m.delta),
        ModelFamily::Dimer { sites, .. } => build_dimerized_chain(sites, m.j1, m.j2),
        ModelFamily::Ladder { rungs, .. } => build_ladder(rungs, m.j, m.jp, m.delta),
    };
    Ok(model?)
}

fn create_output(path: &Path) -> CliResult<BufWriter<File>> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|e| CliError {
            code: EXIT_IO,
            message: format!("cannot create {}: {e}", path.display()),
        })
}

fn write_rows(
    output: &OutputArgs,
    family: &ModelFamily,
    coord_names: &[&str],
    rows: &[crate::sweep::ObservableRow],
    stdout: &mut dyn Write,
) -> CliResult<()> {
    let emit = |w: &mut dyn Write| -> crate::Result<()> {
        match output.format {
            Format::Csv => io::write_rows_csv(w, family, coord_names, rows),
            Format::Json => io::write_json(w, &io::rows_to_json(family, coord_names, rows)),
        }
    };
    match &output.out {
        Some(path) => {
            let mut file = create_output(path)?;
            emit(&mut file)?;
            file.flush().map_err(Error::from)?;
        }
        None => emit(stdout)?,
    }
    Ok(())
}

pub fn cmd_ground(args: &GroundArgs, stdout: &mut dyn Write) -> CliResult<()> {
    let family = family_of(&args.model)?;
    let model = build_model(&args.model, &family)?;
    let scheme = args
        .model
        .bipartition
        .unwrap_or_else(|| model.kind().default_bipartition());
    let n = model.site_count();
    let basis = Arc::new(SectorBasis::new(n, args.sector.unwrap_or(n / 2))?);
    let row = evaluate_model(&model, &family, scheme, &args.solver.config(), &basis, Vec::new());
    if let Some(msg) = &row.error {
        let code = if msg.starts_with("invalid parameter") {
            EXIT_USAGE
        } else {
            EXIT_NUMERICAL
        };
        return Err(CliError {
            code,
            message: msg.clone(),
        });
    }
    write_rows(&args.output, &family, &[], std::slice::from_ref(&row), stdout)
}

fn require_out(output: &OutputArgs) -> CliResult<&Path> {
    output
        .out
        .as_deref()
        .ok_or_else(|| CliError::usage("--out is required for sweeps"))
}

fn failures(rows: &[crate::sweep::ObservableRow]) -> usize {
    rows.iter().filter(|r| r.error.is_some()).count()
}

fn finish_sweep(failed: usize, total: usize) -> CliResult<()> {
    if failed > 0 {
        return Err(CliError {
            code: EXIT_NUMERICAL,
            message: format!("{failed} of {total} points failed; partial results were written"),
        });
    }
    Ok(())
}

pub fn cmd_sweep(args: &SweepArgs, stdout: &mut dyn Write) -> CliResult<()> {
    let out = require_out(&args.output)?.to_path_buf();
    let family = family_of(&args.model)?;
    let m = &args.model;
    let base = match family {
        ModelFamily::Xxz { .. } => Couplings {
            delta: m.delta,
            ..Couplings::default()
        },
        ModelFamily::Dimer { .. } => Couplings {
            j2_over_j1: ratio(m.j2, m.j1, "j2_over_j1")?,
            ..Couplings::default()
        },
        ModelFamily::Ladder { .. } => Couplings {
            delta: m.delta,
            jp_over_j: ratio(m.jp, m.j, "jp_over_j")?,
            ..Couplings::default()
        },
    };
    let spec = SweepSpec {
        base,
        scheme: m.bipartition.unwrap_or_else(|| family.kind().default_bipartition()),
        lanczos: args.solver.config(),
        threads: resolve_threads(args.threads)?,
        ..SweepSpec::one_d(family, args.param, args.range)
    };
    let rows = run_sweep_1d(&spec)?;
    write_rows(&args.output, &family, &[args.param.name()], &rows, stdout)?;

    let extrema = find_local_extrema(&family, &rows, "entropy_per_site")?;
    let listed: Vec<String> = extrema
        .iter()
        .map(|p| format!("{:?} at {}", p.kind, io::format_number(p.coords[0])).to_lowercase())
        .collect();
    let failed = failures(&rows);
    let _ = writeln!(
        stdout,
        "computed {} points -> {}; {} extrema of entropy_per_site [{}]; {} failed",
        rows.len(),
        out.display(),
        extrema.len(),
        listed.join(", "),
        failed
    );
    finish_sweep(failed, rows.len())
}

pub fn cmd_sweep2d(args: &Sweep2dArgs, stdout: &mut dyn Write) -> CliResult<()> {
    let out = require_out(&args.output)?.to_path_buf();
    if args.model.model != ModelChoice::Ladder {
        return Err(CliError::usage("sweep2d requires --model ladder"));
    }
    let family = family_of(&args.model)?;
    let ModelFamily::Ladder { rungs, .. } = family else {
        unreachable!("ladder family checked above");
    };
    let spec = SweepSpec {
        family,
        scheme: args.model.bipartition.unwrap_or(BipartitionScheme::Checkerboard),
        lanczos: args.solver.config(),
        threads: resolve_threads(args.threads)?,
        ..SweepSpec::ladder_surface(rungs, args.xrange, args.yrange)
    };
    let grid = run_sweep_2d(&spec)?;
    write_rows(&args.output, &family, &["jp_over_j", "delta"], &grid.values, stdout)?;

    let surface = grid.map(|r| r.entropy_per_site);
    let points = crate::sweep::extract_ridges_valleys(&surface, DEFAULT_RIDGE_THRESHOLD);
    let failed = failures(&grid.values);
    let _ = writeln!(
        stdout,
        "computed {}x{} = {} points -> {}; {} ridge/valley points of entropy_per_site; {} failed",
        grid.xs.len(),
        grid.ys.len(),
        grid.values.len(),
        out.display(),
        points.len(),
        failed
    );
    finish_sweep(failed, grid.values.len())
}

pub fn cmd_boundaries(args: &BoundaryArgs, stdout: &mut dyn Write) -> CliResult<()> {
    let input = File::open(&args.input).map_err(|e| CliError {
        code: EXIT_IO,
        message: format!("cannot open {}: {e}", args.input.display()),
    })?;
    let table = io::read_sweep_csv(std::io::BufReader::new(input))?;
    if table.rows.is_empty() {
        return Err(Error::Malformed {
            line: 1,
            message: "no data rows".into(),
        }
        .into());
    }
    let points = if table.is_grid() {
        let grid = table.grid(&args.observable)?;
        boundary_report(&grid, args.threshold, args.on_derivative)?
    } else {
        let (xs, values) = table.series(&args.observable)?;
        extrema_of_series(&xs, &values)
    };
    let mut file = create_output(&args.out)?;
    io::write_json(&mut file, &io::boundaries_to_json(&points))?;
    file.flush().map_err(Error::from)?;
    let _ = writeln!(
        stdout,
        "{} boundary points of {} -> {}",
        points.len(),
        args.observable,
        args.out.display()
    );
    Ok(())
}

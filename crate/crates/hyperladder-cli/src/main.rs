//! Command-line front end: family registry, verification sweeps, dataset
//! emission and the bundled acceptance run.
//!
//! Exit codes: 0 all checks passed, 1 a numeric tolerance was exceeded,
//! 2 the config or a parameter is invalid, 3 an internal invariant broke.

use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use hyperladder::{acceptance, Error, Result};

mod config;
mod emit;
mod verify;

use config::RunConfig;
use emit::What;

#[derive(Parser)]
#[command(
    name = "hyperladder",
    version,
    about = "Exact ladder operators, spectra and coherent states for the classical weight families"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run exact and numeric verification sweeps for one family.
    Verify(CommonArgs),
    /// Write one dataset (deterministic bytes) to stdout or --out.
    Emit {
        #[arg(value_enum)]
        what: What,
        #[command(flatten)]
        args: CommonArgs,
    },
    /// Run the full acceptance matrix and print a summary table.
    Acceptance,
}

#[derive(Args)]
struct CommonArgs {
    /// JSON config file; command-line flags override its fields.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Family name: hypergeometric, jacobi, laguerre or hermite.
    #[arg(long)]
    family: Option<String>,
    /// First parameter as a rational, e.g. 1/2 (families with parameters).
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<String>,
    /// Second parameter as a rational (hypergeometric and jacobi only).
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<String>,
    /// Largest degree l in sweeps; the level l for `emit wavefunction`.
    #[arg(long)]
    lmax: Option<usize>,
    /// Largest order m in sweeps; the sector m for grid/state emission.
    #[arg(long)]
    mmax: Option<usize>,
    /// Numeric tolerance for verify and the coherent-state truncation.
    #[arg(long)]
    tol: Option<f64>,
    /// Number of interior grid points for emission.
    #[arg(long)]
    grid: Option<usize>,
    /// Sign convention of dx/ds (+1 or -1); defaults per family.
    #[arg(long, allow_hyphen_values = true)]
    sign: Option<i32>,
    /// Coherent-state label as re,im (or a bare real part).
    #[arg(long, allow_hyphen_values = true)]
    z: Option<String>,
    /// Number of eigenvalues for `emit spectrum`.
    #[arg(long)]
    levels: Option<usize>,
    /// Sampling window lo,hi in x, overriding the family default.
    #[arg(long, allow_hyphen_values = true)]
    clip: Option<String>,
    /// Output format: json (default) or csv.
    #[arg(long)]
    format: Option<String>,
    /// Output file; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

impl CommonArgs {
    fn into_config(self) -> Result<RunConfig> {
        let flags = RunConfig {
            family: self.family,
            alpha: self.alpha,
            beta: self.beta,
            lmax: self.lmax,
            mmax: self.mmax,
            tol: self.tol,
            grid: self.grid,
            sign: self.sign,
            z: self.z,
            levels: self.levels,
            clip: self.clip,
            format: self.format,
            out: self.out,
        };
        match &self.config {
            Some(path) => Ok(RunConfig::merged(RunConfig::from_file(path)?, flags)),
            None => Ok(flags),
        }
    }
}

/// Opens --out (creating the file) or falls back to stdout.
fn open_writer(out: &Option<PathBuf>) -> Result<Box<dyn Write>> {
    match out {
        Some(path) => {
            let file = std::fs::File::create(path).map_err(|e| {
                Error::domain(format!("cannot create output {}: {e}", path.display()))
            })?;
            Ok(Box::new(BufWriter::new(file)))
        }
        None => Ok(Box::new(BufWriter::new(std::io::stdout()))),
    }
}

/// HYPERLADDER_THREADS caps the worker pool; unset means the rayon default.
fn init_threads() -> Result<()> {
    let Ok(raw) = std::env::var("HYPERLADDER_THREADS") else {
        return Ok(());
    };
    let n: usize = raw
        .parse()
        .ok()
        .filter(|&n| n >= 1)
        .ok_or_else(|| {
            Error::domain(format!(
                "HYPERLADDER_THREADS must be a positive integer, got '{raw}'"
            ))
        })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Error::internal(format!("worker pool setup failed: {e}")))
}

fn run_acceptance() -> Result<i32> {
    let outcomes = acceptance::run_all()?;
    println!("{:<3} {:<34} {:<6} detail", "no", "criterion", "status");
    let mut passed = 0usize;
    for o in &outcomes {
        let status = if o.passed { "PASS" } else { "FAIL" };
        println!("{:<3} {:<34} {:<6} {}", o.number, o.name, status, o.detail);
        if o.passed {
            passed += 1;
        }
    }
    println!("{passed}/{} criteria passed", outcomes.len());
    Ok(if passed == outcomes.len() { 0 } else { 1 })
}

fn dispatch(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Verify(args) => {
            let config = args.into_config()?;
            let mut out = open_writer(&config.out)?;
            let first_failure = verify::run(&config, &mut out)?;
            out.flush()
                .map_err(|e| Error::domain(format!("cannot flush output: {e}")))?;
            match first_failure {
                None => Ok(0),
                Some(msg) => {
                    eprintln!("verify failed: {msg}");
                    Ok(1)
                }
            }
        }
        Command::Emit { what, args } => {
            let config = args.into_config()?;
            let mut out = open_writer(&config.out)?;
            emit::run(what, &config, &mut out)?;
            out.flush()
                .map_err(|e| Error::domain(format!("cannot flush output: {e}")))?;
            Ok(0)
        }
        Command::Acceptance => run_acceptance(),
    }
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Domain(_) => 2,
        Error::Numeric(_) => 1,
        Error::Internal(_) => 3,
    }
}

fn main() {
    let cli = Cli::parse();
    let code = init_threads()
        .and_then(|_| dispatch(cli))
        .unwrap_or_else(|err| {
            eprintln!("{err}");
            exit_code(&err)
        });
    std::process::exit(code);
}

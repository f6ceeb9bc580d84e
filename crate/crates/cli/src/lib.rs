//! The `hurwitz` command line: `eval`, `verify` and `table`.
//!
//! Exit codes: 0 success, 1 domain or usage error, 2 a quadrature or series
//! did not converge, 3 a verification row failed, 4 I/O failure.

pub mod grid;
pub mod record;
pub mod verify;

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hurwitz_core::hurwitz::evaluate;
use hurwitz_core::{Complex64, Method, Tolerances};
use rayon::prelude::*;
use thiserror::Error;

use grid::{parse_complex, parse_real, GridSpec};
use record::{write_csv, write_json, EvalRecord, Format, VerifyRecord};
use verify::{Check, GridFlags};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_CONVERGENCE: i32 = 2;
pub const EXIT_VERIFICATION: i32 = 3;
pub const EXIT_IO: i32 = 4;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Core(#[from] hurwitz_core::Error),

    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Core(_) => EXIT_DOMAIN,
            CliError::Io(_) => EXIT_IO,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "hurwitz",
    version,
    about = "Evaluate and cross-check the Hurwitz zeta function"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate ζ(s, u) at one point.
    Eval(EvalArgs),
    /// Check an identity or representation over a grid.
    Verify(VerifyArgs),
    /// Tabulate ζ(s, u) over an (s, u) grid into a CSV file.
    Table(TableArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MethodArg {
    Hermite,
    Integral3,
    Series,
    Auto,
}

impl MethodArg {
    fn resolve(self, s: Complex64) -> Method {
        match self {
            MethodArg::Hermite => Method::Hermite,
            MethodArg::Integral3 => Method::Integral3,
            MethodArg::Series => Method::Series,
            MethodArg::Auto => Method::auto(s),
        }
    }
}

#[derive(Debug, Args)]
struct TolArgs {
    /// Relative accuracy target.
    #[arg(long, default_value_t = 1e-13)]
    tol: f64,
    /// Maximum number of step-halving refinements per quadrature.
    #[arg(long)]
    max_levels: Option<u32>,
}

impl TolArgs {
    fn tolerances(&self) -> Result<Tolerances, CliError> {
        let mut tol = Tolerances::with_rel_tol(self.tol)?;
        if let Some(levels) = self.max_levels {
            tol.max_levels = levels;
        }
        tol.validate()?;
        Ok(tol)
    }
}

#[derive(Debug, Args)]
struct EvalArgs {
    #[arg(long, value_enum, default_value = "auto")]
    method: MethodArg,
    /// `re` or `re,im`.
    #[arg(long, allow_hyphen_values = true)]
    s: String,
    #[arg(long, allow_hyphen_values = true)]
    u: String,
    #[command(flatten)]
    tol: TolArgs,
    #[arg(long, value_enum, default_value = "plain")]
    format: Format,
    /// Report wall-clock time in `elapsed_ms` (otherwise 0).
    #[arg(long)]
    timings: bool,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// chen, legendre, arctan, limit, fubini, eq3-eq4, recurrence or neg-int.
    #[arg(long)]
    identity: String,
    #[arg(long, allow_hyphen_values = true)]
    s_grid: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    s_im: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    u_grid: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    x_grid: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    t_grid: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    n_grid: Option<String>,
    #[command(flatten)]
    tol: TolArgs,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

#[derive(Debug, Args)]
struct TableArgs {
    /// Real parts of s as start:stop:step.
    #[arg(long, allow_hyphen_values = true)]
    s_grid: String,
    /// Fixed imaginary part of s.
    #[arg(long, allow_hyphen_values = true, default_value = "0")]
    s_im: String,
    #[arg(long, allow_hyphen_values = true)]
    u_grid: String,
    #[arg(long, value_enum, default_value = "auto")]
    method: MethodArg,
    #[arg(long)]
    out: PathBuf,
    #[command(flatten)]
    tol: TolArgs,
    /// Report wall-clock time per row in `elapsed_ms` (otherwise 0).
    #[arg(long)]
    timings: bool,
}

/// Parse `args` (including the program name) and run; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_DOMAIN
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    let result = match cli.command {
        Command::Eval(args) => cmd_eval(&args, out, err),
        Command::Verify(args) => cmd_verify(&args, out, err),
        Command::Table(args) => cmd_table(&args, err),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn elapsed_ms(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

fn cmd_eval(args: &EvalArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let s = parse_complex(&args.s)?;
    let u = parse_real(&args.u)?;
    let tol = args.tol.tolerances()?;
    let start = Instant::now();
    let result = evaluate(args.method.resolve(s), s, u, &tol)?;
    let elapsed = if args.timings { elapsed_ms(start) } else { 0.0 };
    let record = EvalRecord::new(s, u, &result, elapsed);
    match args.format {
        Format::Csv => write_csv(&mut *out, &[&record])?,
        Format::Json => write_json(&mut *out, &[&record])?,
        Format::Plain => out.write_all(record.plain().as_bytes())?,
    }
    if result.converged {
        Ok(EXIT_OK)
    } else {
        writeln!(err, "error: {} did not reach the requested tolerance", result.method)?;
        Ok(EXIT_CONVERGENCE)
    }
}

fn parse_grid(flag: &Option<String>) -> Result<Option<GridSpec>, CliError> {
    flag.as_deref().map(str::parse).transpose()
}

fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let check: Check = args.identity.parse()?;
    let flags = GridFlags {
        s_grid: parse_grid(&args.s_grid)?,
        s_im: args.s_im.as_deref().map(parse_real).transpose()?,
        u_grid: parse_grid(&args.u_grid)?,
        x_grid: parse_grid(&args.x_grid)?,
        t_grid: parse_grid(&args.t_grid)?,
        n_grid: parse_grid(&args.n_grid)?,
    };
    let tol = args.tol.tolerances()?;
    let points = verify::points(check, &flags)?;
    let reports = verify::run_all(check, &points, &tol)?;
    let records: Vec<VerifyRecord> = reports.iter().map(VerifyRecord::from).collect();
    match args.format {
        Format::Csv => write_csv(&mut *out, &records)?,
        Format::Json => write_json(&mut *out, &records)?,
        Format::Plain => {
            for r in &records {
                writeln!(
                    out,
                    "{} s={} u={} x={} t={}: |lhs-rhs| = {:e} (threshold {:e}) {}",
                    r.identity,
                    Complex64::new(r.s_re, r.s_im),
                    r.u,
                    r.x,
                    r.t,
                    r.abs_residual,
                    r.threshold,
                    if r.passed { "passed" } else { "FAILED" },
                )?;
            }
        }
    }
    let failed = records.iter().filter(|r| !r.passed).count();
    if failed == 0 {
        Ok(EXIT_OK)
    } else {
        writeln!(err, "{failed} of {} rows failed", records.len())?;
        Ok(EXIT_VERIFICATION)
    }
}

fn cmd_table(args: &TableArgs, err: &mut dyn Write) -> Result<i32, CliError> {
    let s_grid: GridSpec = args.s_grid.parse()?;
    let s_im = parse_real(&args.s_im)?;
    let u_grid: GridSpec = args.u_grid.parse()?;
    let tol = args.tol.tolerances()?;

    let points: Vec<(Complex64, f64)> = s_grid
        .points()
        .into_iter()
        .flat_map(|re| u_grid.points().into_iter().map(move |u| (Complex64::new(re, s_im), u)))
        .collect();
    // rows are computed concurrently, collected in row-major order
    let rows = points
        .par_iter()
        .map(|&(s, u)| {
            let start = Instant::now();
            let result = evaluate(args.method.resolve(s), s, u, &tol)?;
            let elapsed = if args.timings { elapsed_ms(start) } else { 0.0 };
            Ok((EvalRecord::new(s, u, &result, elapsed), result.converged))
        })
        .collect::<Result<Vec<_>, CliError>>()?;

    let file = File::create(&args.out)
        .map_err(|e| io::Error::new(e.kind(), format!("cannot create {}: {e}", args.out.display())))?;
    let mut writer = BufWriter::new(file);
    let records: Vec<&EvalRecord> = rows.iter().map(|(r, _)| r).collect();
    write_csv(&mut writer, &records)?;
    writer.flush()?;

    let unconverged = rows.iter().filter(|(_, ok)| !ok).count();
    if unconverged == 0 {
        Ok(EXIT_OK)
    } else {
        writeln!(err, "error: {unconverged} of {} rows did not converge", rows.len())?;
        Ok(EXIT_CONVERGENCE)
    }
}

//! `specfun`: evaluate special functions, run verification suites, print
//! reference tables and write reports.
//!
//! Exit codes: 0 success, 1 verification violation, 2 domain error,
//! 64 usage error, 74 I/O error.

mod error;
mod eval;
mod num;
mod params;
mod render;
mod select;
mod state;
mod tables;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use specfun_core::series::set_term_cap_override;
use specfun_verify::GridSpec;

use crate::error::{exit, CliError, Result};
use crate::params::Params;
use crate::render::{Format, ReportDoc, RunDoc};

const TERM_CAP_VAR: &str = "SPECFUN_TERM_CAP";

#[derive(Parser)]
#[command(name = "specfun", version, about = "Special functions and their identities, checked numerically")]
struct Cli {
    /// Output format (default: human; `report` infers it from the file extension)
    #[arg(long, short = 'f', value_enum, global = true)]
    format: Option<Format>,

    /// Write output to this file instead of stdout
    #[arg(long, short = 'o', global = true)]
    output: Option<PathBuf>,

    /// Where the last verify run is recorded
    #[arg(long, global = true, default_value = state::DEFAULT_PATH)]
    state: PathBuf,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a kernel function: `specfun eval gamma x=0.5`; `eval list` shows targets
    Eval {
        target: String,
        /// Parameters as key=value
        #[arg(value_name = "KEY=VALUE")]
        args: Vec<String>,
        #[arg(long = "param", short = 'p', value_name = "KEY=VALUE", allow_hyphen_values = true)]
        params: Vec<String>,
    },
    /// Run verification suites by id, or `all`; `verify list` shows suites
    Verify {
        #[arg(required = true)]
        suites: Vec<String>,
        /// Grid override: lo,hi,n,spacing with spacing linear|log|logit
        #[arg(long, allow_hyphen_values = true)]
        grid: Option<GridSpec>,
        /// Tolerance override
        #[arg(long)]
        tolerance: Option<f64>,
        /// Suite parameters; `arth-exponent` takes p=<exponent>
        #[arg(long = "param", short = 'p', value_name = "KEY=VALUE", allow_hyphen_values = true)]
        params: Vec<String>,
    },
    /// Print a table: theta, detemple, alzer-ball, karatsuba-gamma
    Table {
        name: String,
        /// Row ranges such as n=1..10
        #[arg(value_name = "KEY=VALUE")]
        args: Vec<String>,
        #[arg(long = "param", short = 'p', value_name = "KEY=VALUE")]
        params: Vec<String>,
    },
    /// Write the most recent verify run to a file (JSON or CSV)
    Report { path: PathBuf },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { exit::USAGE } else { exit::OK });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("specfun: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn install_term_cap() -> Result<()> {
    let Ok(raw) = std::env::var(TERM_CAP_VAR) else {
        return Ok(());
    };
    match raw.trim().parse::<usize>() {
        Ok(cap) if cap > 0 => {
            let _ = set_term_cap_override(cap);
            Ok(())
        }
        _ => Err(CliError::usage(format!("{TERM_CAP_VAR}={raw} is not a positive integer"))),
    }
}

fn params_of(positional: &[String], flagged: &[String]) -> Result<Params> {
    Params::parse(positional.iter().chain(flagged))
}

fn run(cli: Cli) -> Result<u8> {
    install_term_cap()?;
    let format = cli.format.unwrap_or(Format::Human);
    let (text, code) = match &cli.command {
        Command::Eval { target, args, params } => cmd_eval(target, &params_of(args, params)?, format)?,
        Command::Verify {
            suites,
            grid,
            tolerance,
            params,
        } => cmd_verify(suites, grid.as_ref(), *tolerance, &params_of(&[], params)?, format, &cli.state)?,
        Command::Table { name, args, params } => {
            let table = tables::build(name, &params_of(args, params)?)?;
            (render::table(&table, format)?, exit::OK)
        }
        Command::Report { path } => {
            let format = cli.format.unwrap_or_else(|| infer_format(path));
            let doc = state::load(&cli.state)?.without_timing();
            write_file(path, &render::run(&doc, format)?)?;
            return Ok(exit::OK);
        }
    };
    match &cli.output {
        Some(path) => write_file(path, &text)?,
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| CliError::io("<stdout>", e))?;
        }
    }
    Ok(code)
}

fn infer_format(path: &Path) -> Format {
    match path.extension().and_then(|e| e.to_str()) {
        Some(ext) if ext.eq_ignore_ascii_case("csv") => Format::Csv,
        _ => Format::Json,
    }
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| CliError::io(path, e))
}

fn cmd_eval(target: &str, params: &Params, format: Format) -> Result<(String, u8)> {
    if target == "list" {
        params.restrict("eval list", &[])?;
        let width = eval::targets().iter().map(|t| t.name.len()).max().unwrap_or(0);
        let mut s = String::new();
        for t in eval::targets() {
            s.push_str(&format!("{:<width$}  {:<22}  {}\n", t.name, t.signature(), t.summary));
        }
        return Ok((s, exit::OK));
    }
    let t = eval::find(target)?;
    let (resolved, out) = t.evaluate(params)?;
    Ok((render::eval(t.name, &resolved, &out, format)?, exit::OK))
}

fn cmd_verify(
    ids: &[String],
    grid: Option<&GridSpec>,
    tolerance: Option<f64>,
    params: &Params,
    format: Format,
    state_path: &Path,
) -> Result<(String, u8)> {
    if ids.len() == 1 && ids[0] == "list" {
        let width = specfun_verify::registry().iter().map(|s| s.id.chars().count()).max().unwrap_or(0);
        let mut s = String::new();
        for suite in specfun_verify::registry() {
            let pad = width - suite.id.chars().count();
            s.push_str(&format!("{}{}  {}  [{}]\n", suite.id, " ".repeat(pad), suite.description, suite.grid));
        }
        return Ok((s, exit::OK));
    }
    let reports = select::run(ids, grid, tolerance, params)?;
    let run = RunDoc::new(reports.iter().map(ReportDoc::from).collect());
    if let Err(e) = state::save(state_path, &run) {
        eprintln!("specfun: warning: could not record run: {e}");
    }
    Ok((render::run(&run, format)?, run.exit_code()))
}

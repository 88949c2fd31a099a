//! The `tod` command line.
//!
//! Exit codes: 0 success, 1 validation errors, 2 unreadable or invalid
//! input (including unknown ids), 3 invalid thresholds, 4 output or
//! server failure.

use std::ffi::OsString;
use std::io::Write;
use std::net::{IpAddr, SocketAddr};
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use tod_core::{portfolio_report, Portfolio, Thresholds};

use crate::bundle::{load_bundle_file, save_bundle, validate_bundle};
use crate::catalog::catalog_json;
use crate::export::{export_radar, export_report, RadarFormat, ReportFormat};
use crate::service::{serve, AppState};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VALIDATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_THRESHOLDS: i32 = 3;
pub const EXIT_OUTPUT: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "tod",
    version,
    about = "Technology opportunity discovery workbench"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, clap::Args)]
struct ThresholdArgs {
    /// Minimum market score, 0..=7 (inclusive).
    #[arg(long, default_value_t = 5, allow_negative_numbers = true)]
    market_min: i64,
    /// Minimum technology readiness level, 1..=9 (inclusive).
    #[arg(long, default_value_t = 5, allow_negative_numbers = true)]
    trl_min: i64,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the portfolio report: vision gap and value breadth per technology.
    Analyze {
        bundle: PathBuf,
        #[command(flatten)]
        thresholds: ThresholdArgs,
        /// markdown, csv or json
        #[arg(long, default_value = "markdown")]
        format: String,
    },
    /// Render one technology's radar chart.
    Radar {
        bundle: PathBuf,
        technology: String,
        #[command(flatten)]
        thresholds: ThresholdArgs,
        /// svg or json
        #[arg(long, default_value = "svg")]
        format: String,
        /// Output file; standard output when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// List procedural findings. Exits 1 if any is an error.
    Validate { bundle: PathBuf },
    /// Rewrite a bundle in canonical form.
    Canonicalize {
        bundle: PathBuf,
        /// Output file; standard output when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print the value catalog and readiness scale as JSON.
    Catalog,
    /// Run the HTTP service.
    Serve {
        /// Bundle to load and to save after every mutation. Created on the
        /// first mutation if it does not exist.
        #[arg(long)]
        bundle: Option<PathBuf>,
        #[arg(long, default_value = "127.0.0.1")]
        bind: IpAddr,
        #[arg(long, default_value_t = 8080)]
        port: u16,
    },
}

/// Runs the CLI with `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match execute(cli.command, stdout, stderr) {
        Ok(code) => code,
        Err(Failure(code, message)) => {
            let _ = writeln!(stderr, "error: {message}");
            code
        }
    }
}

struct Failure(i32, String);

fn input(e: impl std::fmt::Display) -> Failure {
    Failure(EXIT_INPUT, e.to_string())
}

fn output(e: impl std::fmt::Display) -> Failure {
    Failure(EXIT_OUTPUT, e.to_string())
}

fn thresholds(args: &ThresholdArgs) -> Result<Thresholds, Failure> {
    Thresholds::new(args.market_min, args.trl_min)
        .map_err(|e| Failure(EXIT_THRESHOLDS, e.to_string()))
}

fn load(path: &std::path::Path) -> Result<Portfolio, Failure> {
    load_bundle_file(path).map_err(input)
}

fn emit(text: &str, path: Option<&PathBuf>, stdout: &mut dyn Write) -> Result<(), Failure> {
    match path {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| output(format!("cannot write {}: {e}", path.display()))),
        None => stdout.write_all(text.as_bytes()).map_err(output),
    }
}

fn execute(
    command: Command,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32, Failure> {
    match command {
        Command::Analyze {
            bundle,
            thresholds: args,
            format,
        } => {
            let thresholds = thresholds(&args)?;
            let format: ReportFormat = format.parse().map_err(input)?;
            let portfolio = load(&bundle)?;
            let errors = report_errors(&portfolio, stderr);
            if errors > 0 {
                return Err(Failure(
                    EXIT_VALIDATION,
                    format!("{errors} validation error(s); run `tod validate` for details"),
                ));
            }
            let report = portfolio_report(&portfolio, thresholds).map_err(input)?;
            emit(&export_report(&report, format), None, stdout)?;
            Ok(EXIT_OK)
        }
        Command::Radar {
            bundle,
            technology,
            thresholds: args,
            format,
            output: path,
        } => {
            let thresholds = thresholds(&args)?;
            let format: RadarFormat = format.parse().map_err(input)?;
            let portfolio = load(&bundle)?;
            let doc = export_radar(&portfolio, &technology, thresholds, format).map_err(input)?;
            emit(&doc, path.as_ref(), stdout)?;
            Ok(EXIT_OK)
        }
        Command::Validate { bundle } => {
            let portfolio = load(&bundle)?;
            let findings = validate_bundle(&portfolio);
            for f in &findings {
                let _ = writeln!(stdout, "{f}");
            }
            let errors = findings.iter().filter(|f| f.is_error()).count();
            let _ = writeln!(
                stdout,
                "{errors} error(s), {} warning(s)",
                findings.len() - errors
            );
            Ok(if errors == 0 {
                EXIT_OK
            } else {
                EXIT_VALIDATION
            })
        }
        Command::Canonicalize {
            bundle,
            output: path,
        } => {
            let portfolio = load(&bundle)?;
            emit(&save_bundle(&portfolio), path.as_ref(), stdout)?;
            Ok(EXIT_OK)
        }
        Command::Catalog => {
            emit(&catalog_json(), None, stdout)?;
            Ok(EXIT_OK)
        }
        Command::Serve { bundle, bind, port } => {
            let portfolio = match &bundle {
                Some(path) if path.exists() => load(path)?,
                _ => Portfolio::default(),
            };
            let addr = SocketAddr::new(bind, port);
            let runtime = tokio::runtime::Runtime::new().map_err(output)?;
            let _ = writeln!(stderr, "listening on http://{addr}");
            runtime
                .block_on(serve(AppState::new(portfolio, bundle), addr))
                .map_err(|e| output(format!("cannot serve on {addr}: {e}")))?;
            Ok(EXIT_OK)
        }
    }
}

fn report_errors(portfolio: &Portfolio, stderr: &mut dyn Write) -> usize {
    let mut errors = 0;
    for f in validate_bundle(portfolio).iter().filter(|f| f.is_error()) {
        let _ = writeln!(stderr, "{f}");
        errors += 1;
    }
    errors
}

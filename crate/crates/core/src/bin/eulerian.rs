use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use eulerian::arith::{fmt_rational, parse_rational, parse_tolerance};
use eulerian::check::{run_suite, CheckConfig, Suite};
use eulerian::export::{encode, Format};
use eulerian::moments::{positive_definite_check, Positivity};
use eulerian::perm::budget_from_env;
use eulerian::{Error, Family, Rational, Route, Triangle};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_RESOURCE: u8 = 3;

#[derive(Parser)]
#[command(name = "eulerian", version, about = "Eulerian triangles of types A, B and D, checked exactly")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print rows 0..=n of a triangle.
    Gen {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "recurrence")]
        route: Route,
        #[arg(long, default_value = "csv")]
        format: Format,
        /// First index written in b-file output.
        #[arg(long, default_value_t = 0)]
        offset: u64,
        /// Maximum group size enumerated per row by the brute route
        /// (defaults to $EULERIAN_ENUM_BUDGET, then 10^8).
        #[arg(long)]
        budget: Option<u128>,
    },
    /// Run verification suites; exits 1 if any check fails.
    Check {
        #[arg(long, default_value = "all")]
        suite: Suite,
        /// Upper bound on n for every suite except the brute-force oracle.
        #[arg(long)]
        n_max: Option<usize>,
        /// Comma-separated p/q values replacing the default t grids.
        #[arg(long, value_delimiter = ',', value_parser = parse_rational)]
        t: Option<Vec<Rational>>,
        /// Moment tolerance, as p/q or 1e-9.
        #[arg(long, value_parser = parse_tolerance)]
        tol: Option<Rational>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
        #[arg(long)]
        budget: Option<u128>,
    },
    /// Leading principal minors of the Hankel matrix of P_n(t).
    Hankel {
        #[arg(long)]
        family: Family,
        #[arg(long, value_parser = parse_rational)]
        t: Rational,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        m: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

fn exit_for(err: &Error) -> u8 {
    match err {
        _ if err.is_resource() => EXIT_RESOURCE,
        Error::Internal(_) | Error::SearchExhausted(_) => EXIT_FAIL,
        _ => EXIT_USAGE,
    }
}

fn run(command: Command) -> Result<u8, Error> {
    let mut out = std::io::stdout().lock();
    match command {
        Command::Gen { family, n, route, format, offset, budget } => {
            let triangle = Triangle::build(family, route, n, budget.unwrap_or_else(budget_from_env))?;
            write!(out, "{}", encode(&triangle, format, offset)).map_err(io_error)?;
            Ok(0)
        }
        Command::Check { suite, n_max, t, tol, format, budget } => {
            let mut config = CheckConfig::default();
            if let Some(n) = n_max {
                config = config.with_n_max(n);
            }
            if let Some(ts) = t {
                config = config.with_t(ts);
            }
            if let Some(tol) = tol {
                config.tol = tol;
            }
            config.budget = budget.unwrap_or_else(budget_from_env);
            let report = run_suite(suite, &config)?;
            let text = match format {
                ReportFormat::Text => report.render_text(),
                ReportFormat::Json => report.render_json(),
            };
            write!(out, "{text}").map_err(io_error)?;
            Ok(if report.passed() { 0 } else { EXIT_FAIL })
        }
        Command::Hankel { family, t, m } => {
            let report = positive_definite_check(family, &t, m as usize)?;
            writeln!(out, "family={family} t={} m={m}", fmt_rational(&t)).map_err(io_error)?;
            for (i, minor) in report.minors.iter().enumerate() {
                writeln!(out, "minor {} = {}", i + 1, fmt_rational(minor)).map_err(io_error)?;
            }
            let (verdict, code) = match report.positivity {
                Positivity::Positive => ("PASS (all minors positive)".to_string(), 0),
                Positivity::NonNegative => ("PASS (nonnegative)".to_string(), 0),
                Positivity::Negative(order) if family == Family::Dtilde => {
                    (format!("FAIL (negative minor at order {order}, expected-negative for Dtilde)"), 0)
                }
                Positivity::Negative(order) => (format!("FAIL (negative minor at order {order})"), EXIT_FAIL),
            };
            writeln!(out, "{verdict}").map_err(io_error)?;
            Ok(code)
        }
    }
}

fn io_error(e: std::io::Error) -> Error {
    Error::Internal(format!("write failed: {e}"))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_for(&e))
        }
    }
}

use std::io::Write;
use std::process::ExitCode;

use anyhow::anyhow;
use clap::{Args, Parser, Subcommand};
use fibpart::{
    render_rows, render_scalar, render_triangle, run_verify, OutputFormat, VerifyOptions, MAX_ROWS,
};
use fibpart_core::delannoy::{count_delannoy, count_restricted_delannoy};
use fibpart_core::fibfacts::fib;
use fibpart_core::identities::se_difference_table;
use fibpart_core::polyfit::{diagonal_polynomial, Family};
use fibpart_core::triangles::{odd_table, table};
use fibpart_core::{Error, TriangleKind};

/// Largest Delannoy `n`.
const MAX_DELANNOY_N: u64 = 2000;
/// Largest Fibonacci index.
const MAX_FIB_N: u64 = 5_000_000;

#[derive(Parser)]
#[command(
    name = "fibpart",
    version,
    about = "Fibonacci partition triangles: rows, relations, diagonals and paths"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print rows 0..=T of a triangle.
    Triangle {
        /// even or odd.
        #[arg(long, short)]
        kind: TriangleKind,
        /// Last row.
        #[arg(long, short = 't')]
        rows: u32,
        #[arg(long, short, value_enum, default_value = "pretty")]
        format: OutputFormat,
    },
    /// Run every verification suite and print a report.
    Verify {
        /// Last row swept by the identity checks.
        #[arg(long, short = 't', default_value_t = 100)]
        rows: u32,
        /// Last n of the Delannoy comparison.
        #[arg(long = "n", default_value_t = 12)]
        n: u32,
        /// pretty or json.
        #[arg(long, short, value_enum, default_value = "pretty")]
        format: OutputFormat,
    },
    /// Fit a diagonal as a polynomial in the binomial basis.
    Polyfit {
        /// d, d' or d''.
        #[arg(long)]
        family: Family,
        /// Diagonal index.
        #[arg(long, short)]
        index: i64,
        /// Must agree with the family when given.
        #[arg(long, short)]
        kind: Option<TriangleKind>,
        /// Last row of the fitting window.
        #[arg(long, short = 't', default_value_t = 60)]
        rows: u32,
        #[arg(long, short, value_enum, default_value = "pretty")]
        format: OutputFormat,
    },
    /// Count Delannoy paths to (n,n) that never cross the diagonal horizontally.
    Delannoy {
        #[command(flatten)]
        n: NArg,
        /// Count every Delannoy path instead.
        #[arg(long)]
        unrestricted: bool,
        #[arg(long, short, value_enum, default_value = "pretty")]
        format: OutputFormat,
    },
    /// Print the Fibonacci number f_n.
    Fib {
        #[command(flatten)]
        n: NArg,
        #[arg(long, short, value_enum, default_value = "pretty")]
        format: OutputFormat,
    },
    /// Print the south-east differences of the odd triangle, rows 0..=T.
    Difftable {
        /// Last row.
        #[arg(long, short = 't')]
        rows: u32,
        #[arg(long, short, value_enum, default_value = "pretty")]
        format: OutputFormat,
    },
}

#[derive(Args)]
struct NArg {
    /// Argument n.
    #[arg(value_name = "N", required_unless_present = "n_flag")]
    n: Option<u64>,
    #[arg(long = "n", value_name = "N", conflicts_with = "n")]
    n_flag: Option<u64>,
}

impl NArg {
    fn get(&self) -> u64 {
        self.n
            .or(self.n_flag)
            .expect("clap enforces one of the two")
    }
}

enum Failure {
    Usage(anyhow::Error),
    Resource(String),
    Verification,
    Internal(anyhow::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::RowOutOfRange { .. }
            | Error::OutOfRange(_)
            | Error::WrongKind
            | Error::NotEnoughSamples { .. }
            | Error::ZeroFibonacciIndex
            | Error::TooLargeForEnumeration { .. } => Failure::Usage(e.into()),
            _ => Failure::Internal(e.into()),
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Internal(e)
    }
}

fn limit(what: &str, value: u64, max: u64) -> Result<(), Failure> {
    if value > max {
        Err(Failure::Resource(format!(
            "{what} = {value} exceeds the limit of {max}"
        )))
    } else {
        Ok(())
    }
}

fn run(command: Command) -> Result<String, Failure> {
    match command {
        Command::Triangle { kind, rows, format } => {
            limit("rows", rows.into(), MAX_ROWS.into())?;
            Ok(render_triangle(&table(kind, rows), format)?)
        }
        Command::Verify { rows, n, format } => {
            let opts = VerifyOptions {
                t_max: rows,
                n_max: n,
            };
            limit("rows", opts.table_rows().into(), MAX_ROWS.into())?;
            let report = run_verify(opts);
            let text = match format {
                OutputFormat::Pretty => report.to_string(),
                OutputFormat::Json => {
                    serde_json::to_string_pretty(&report).map_err(anyhow::Error::from)? + "\n"
                }
                other => {
                    return Err(Failure::Usage(anyhow!(
                        "verify prints pretty or json, not {other:?}"
                    )))
                }
            };
            if report.passed() {
                Ok(text)
            } else {
                print!("{text}");
                Err(Failure::Verification)
            }
        }
        Command::Polyfit {
            family,
            index,
            kind,
            rows,
            format,
        } => {
            limit("rows", rows.into(), MAX_ROWS.into())?;
            if kind.is_some_and(|k| k != family.kind()) {
                return Err(Failure::Usage(anyhow!(
                    "family {family} lives in the {} triangle",
                    family.kind()
                )));
            }
            let p = diagonal_polynomial(&table(family.kind(), rows), family, index, rows.into())?;
            Ok(match format {
                OutputFormat::Pretty => format!("{}, valid t≥{}\n", p.render_binomial(), p.t_min),
                OutputFormat::Json => {
                    let doc = serde_json::json!({
                        "family": family.symbol(),
                        "index": index,
                        "binomial": p.render_binomial(),
                        "expanded": p.render_expanded(),
                        "coefficients": p.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>(),
                        "t_min": p.t_min,
                    });
                    serde_json::to_string_pretty(&doc).map_err(anyhow::Error::from)? + "\n"
                }
                OutputFormat::Csv => p
                    .coeffs()
                    .iter()
                    .enumerate()
                    .map(|(k, c)| format!("{k},{c}\n"))
                    .collect(),
                OutputFormat::Bfile => p
                    .coeffs()
                    .iter()
                    .enumerate()
                    .map(|(k, c)| format!("{k} {c}\n"))
                    .collect(),
            })
        }
        Command::Delannoy {
            n,
            unrestricted,
            format,
        } => {
            let n = n.get();
            limit("n", n, MAX_DELANNOY_N)?;
            let value = if unrestricted {
                count_delannoy(n as usize)
            } else {
                count_restricted_delannoy(n as usize)
            };
            Ok(render_scalar("delannoy", n, &value, format)?)
        }
        Command::Fib { n, format } => {
            let n = n.get();
            limit("n", n, MAX_FIB_N)?;
            Ok(render_scalar("fib", n, &fib(n)?, format)?)
        }
        Command::Difftable { rows, format } => {
            limit("rows", rows.into(), MAX_ROWS.into())?;
            let diffs = se_difference_table(&odd_table(rows), rows.into())?;
            Ok(render_rows("odd-se-difference", &diffs, format)?)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    match run(cli.command) {
        Ok(text) => {
            let mut out = std::io::stdout().lock();
            if out
                .write_all(text.as_bytes())
                .and_then(|()| out.flush())
                .is_err()
            {
                return ExitCode::FAILURE;
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Resource(msg)) => {
            eprintln!("error: resource limit: {msg}");
            ExitCode::from(3)
        }
        Err(Failure::Internal(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

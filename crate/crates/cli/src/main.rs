//! `qpfaff`: compute quantum determinants, Pfaffians and Hafnians, and check
//! the identities between them.
//!
//! Exit codes: 0 when everything checked holds, 1 when something failed,
//! 2 on usage or engine errors.

use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use qpfaff::Regime;

mod bench;
mod compute;
mod suite;

#[derive(Parser, Debug)]
#[command(
    name = "qpfaff",
    version,
    about = "Exact identities over the two-parameter quantum matrix semigroup"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the canonical form of an invariant of the generator matrix.
    Compute(compute::ComputeArgs),
    /// Check one identity and print its report.
    Verify(VerifyArgs),
    /// Run the full acceptance matrix.
    Suite(suite::SuiteArgs),
    /// Time normalization workloads.
    Bench(bench::BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RegimeName {
    Generic,
    /// r = s^-1 = q
    QInverse,
    /// r = -s^-1 = q
    QNegative,
    /// explicit rationals via --r and --s
    Numeric,
}

#[derive(Args, Debug, Clone)]
pub struct RegimeArgs {
    #[arg(long, value_enum, default_value = "generic")]
    regime: RegimeName,
    /// Value of r for the numeric regime, e.g. 1 or 3/2.
    #[arg(long, allow_hyphen_values = true)]
    r: Option<String>,
    /// Value of s for the numeric regime.
    #[arg(long, allow_hyphen_values = true)]
    s: Option<String>,
}

impl RegimeArgs {
    pub fn resolve(&self) -> Result<Regime, String> {
        let parse = |name: &str, v: &Option<String>| -> Result<BigRational, String> {
            let v = v
                .as_deref()
                .ok_or_else(|| format!("--regime numeric needs --{}", name))?;
            BigRational::from_str(v)
                .map_err(|_| format!("--{} {:?} is not a rational number", name, v))
        };
        match self.regime {
            RegimeName::Numeric => Ok(Regime::Numeric {
                r: parse("r", &self.r)?,
                s: parse("s", &self.s)?,
            }),
            _ if self.r.is_some() || self.s.is_some() => {
                Err("--r/--s only apply to --regime numeric".into())
            }
            RegimeName::Generic => Ok(Regime::Generic),
            RegimeName::QInverse => Ok(Regime::QInverse),
            RegimeName::QNegative => Ok(Regime::QNegative),
        }
    }
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long)]
    identity: String,
    /// n for determinant identities, 2n for Pfaffian ones.
    #[arg(long, visible_alias = "n")]
    size: usize,
    #[command(flatten)]
    regime: RegimeArgs,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Lift the desk-scale size caps.
    #[arg(long)]
    no_size_cap: bool,
    /// Report elapsed_ms as 0 so that output is byte-reproducible.
    #[arg(long)]
    no_timing: bool,
    #[arg(long, hide = true)]
    corrupt_engine: bool,
}

pub fn render_report(r: &qpfaff::Report, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string(r).expect("report serializes"),
        Format::Text => format!(
            "{} size={} regime={} holds={} residual_terms={} elapsed_ms={}",
            r.identity, r.size, r.regime, r.holds, r.residual_terms, r.elapsed_ms
        ),
    }
}

fn verify(args: VerifyArgs) -> Result<ExitCode, String> {
    let regime = args.regime.resolve()?;
    let id = args.identity.parse::<qpfaff::Identity>().map_err(|e| {
        let names: Vec<&str> = qpfaff::Identity::ALL.iter().map(|i| i.name()).collect();
        format!("{}; known identities: {}", e, names.join(", "))
    })?;
    let opts = qpfaff::qlinalg::VerifyOptions {
        no_size_cap: args.no_size_cap,
        corrupted: args.corrupt_engine,
    };
    let mut report = qpfaff::qlinalg::verify_identity_with(id, args.size, &regime, &opts)
        .map_err(|e| e.to_string())?;
    if args.no_timing {
        report.elapsed_ms = 0;
    }
    println!("{}", render_report(&report, args.format));
    Ok(if report.holds {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Compute(a) => compute::run(a),
        Command::Verify(a) => verify(a),
        Command::Suite(a) => suite::run(a),
        Command::Bench(a) => bench::run(a),
    };
    match outcome {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {}\n\n{}", msg, Cli::command().render_usage());
            ExitCode::from(2)
        }
    }
}

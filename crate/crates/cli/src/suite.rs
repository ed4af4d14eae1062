use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Args, ValueEnum};
use qpfaff::checks;
use qpfaff::qlinalg::{verify_identity_with, VerifyOptions};
use qpfaff::{Identity, Regime, Report};
use serde::Serialize;

use crate::Format;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SkipTag {
    /// rows at 2n = 6
    #[value(name = "2n6")]
    TwoN6,
}

#[derive(Args, Debug)]
pub struct SuiteArgs {
    /// Wall-clock budget in seconds; rows not started in time are skipped.
    #[arg(long, default_value_t = 600)]
    budget: u64,
    #[arg(long, value_enum)]
    skip: Vec<SkipTag>,
    /// Seed for the randomized rows.
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long)]
    no_timing: bool,
    #[arg(long, hide = true)]
    corrupt_engine: bool,
}

#[derive(Debug, Clone)]
enum Job {
    Identity(Identity, usize, Regime),
    Confluence {
        n: usize,
        count: usize,
        degree: usize,
    },
    OracleDet(usize),
    OraclePf(usize),
    OracleHf(usize),
    Classical {
        size: usize,
        count: usize,
    },
    ClassicalHfPer {
        size: usize,
        count: usize,
    },
}

/// One entry of the expected-results matrix.
#[derive(Debug, Clone)]
pub struct Row {
    criterion: &'static str,
    job: Job,
    expect_holds: bool,
    tag: Option<SkipTag>,
}

fn id(criterion: &'static str, ident: Identity, size: usize, regime: Regime) -> Row {
    Row {
        criterion,
        job: Job::Identity(ident, size, regime),
        expect_holds: true,
        tag: None,
    }
}

impl Row {
    fn expect_fail(mut self) -> Row {
        self.expect_holds = false;
        self
    }

    fn tagged(mut self, tag: SkipTag) -> Row {
        self.tag = Some(tag);
        self
    }

    fn size(&self) -> usize {
        match self.job {
            Job::Identity(_, s, _) => s,
            Job::Confluence { n, .. } => n,
            Job::OracleDet(s) | Job::OraclePf(s) | Job::OracleHf(s) => s,
            Job::Classical { size, .. } | Job::ClassicalHfPer { size, .. } => size,
        }
    }
}

/// The acceptance matrix: identity x size x regime with the expected outcome.
pub fn matrix() -> Vec<Row> {
    use Identity::*;
    use Regime::{Generic, QInverse, QNegative};
    let big = |r: Row| r.tagged(SkipTag::TwoN6);
    let mut rows = Vec::new();
    for n in 2..=4 {
        rows.push(id("1", DetRcEq, n, Generic));
    }
    for n in 2..=3 {
        rows.push(id("2", DetCommutation, n, Generic));
    }
    rows.push(id("3", Laplace, 3, Generic));
    for n in 2..=3 {
        rows.push(id("4", Cramer, n, Generic));
    }
    rows.push(id("5", MinorRc, 3, Generic));
    rows.push(id("6", PfRdet, 4, Generic));
    rows.push(big(id("6", PfRdet, 6, Generic)));
    rows.push(id("7", PfCdet, 4, Generic));
    rows.push(id("7", PfPf, 4, Generic));
    rows.push(id("8", Maya, 4, QInverse));
    rows.push(id("8", MayaNeg, 4, QNegative));
    rows.push(id("8", Maya, 4, Generic).expect_fail());
    rows.push(id("8", MayaNeg, 4, Generic).expect_fail());
    for ident in [PfSimplified, PfRecursion] {
        rows.push(id("9", ident, 4, QInverse));
        rows.push(big(id("9", ident, 6, QInverse)));
    }
    rows.push(id("9", HfSimplified, 4, QNegative));
    rows.push(id("9", HfRecursion, 4, QNegative));
    rows.push(id("10", HfPer, 4, QNegative));
    for n in 2..=3 {
        rows.push(id("11", Grouplike, n, Generic));
    }
    for ident in [Phi, Manin] {
        for n in 1..=3 {
            rows.push(id("12", ident, n, Generic));
        }
    }
    let row = |criterion, job| Row {
        criterion,
        job,
        expect_holds: true,
        tag: None,
    };
    for n in 1..=4 {
        rows.push(row("13", Job::OracleDet(n)));
    }
    for size in [2, 4, 6] {
        let pf = row("13", Job::OraclePf(size));
        let hf = row("13", Job::OracleHf(size));
        rows.push(if size == 6 { big(pf) } else { pf });
        rows.push(if size == 6 { big(hf) } else { hf });
    }
    rows.push(row(
        "14",
        Job::Confluence {
            n: 3,
            count: 200,
            degree: 5,
        },
    ));
    for size in [2, 4, 6] {
        rows.push(row("15", Job::Classical { size, count: 100 }));
    }
    for size in [2, 4, 6] {
        rows.push(row("15", Job::ClassicalHfPer { size, count: 100 }));
    }
    rows
}

fn execute(row: &Row, seed: u64, opts: &VerifyOptions) -> qpfaff::Result<Report> {
    match &row.job {
        Job::Identity(ident, size, regime) => verify_identity_with(*ident, *size, regime, opts),
        Job::Confluence { n, count, degree } => checks::confluence_check(*n, *count, *degree, seed),
        Job::OracleDet(n) => checks::det_oracle_check(*n, &Regime::Generic),
        Job::OraclePf(size) => checks::pf_oracle_check(*size, &Regime::Generic),
        Job::OracleHf(size) => checks::hf_oracle_check(*size),
        Job::Classical { size, count } => checks::classical_check(*size, *count, seed),
        Job::ClassicalHfPer { size, count } => checks::classical_hf_per_check(*size, *count, seed),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
enum Status {
    Pass,
    Fail,
    Skipped,
    Error,
}

#[derive(Serialize)]
struct Outcome {
    criterion: &'static str,
    expected_holds: bool,
    status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    report: Option<Report>,
    #[serde(skip_serializing_if = "Option::is_none")]
    detail: Option<String>,
}

fn job_label(row: &Row) -> String {
    match &row.job {
        Job::Identity(ident, _, regime) => format!("{} [{}]", ident.name(), regime.label()),
        Job::Confluence { count, degree, .. } => format!("confluence x{} deg<={}", count, degree),
        Job::OracleDet(_) => "oracle_det".into(),
        Job::OraclePf(_) => "oracle_pf".into(),
        Job::OracleHf(_) => "oracle_hf".into(),
        Job::Classical { count, .. } => format!("classical x{}", count),
        Job::ClassicalHfPer { count, .. } => format!("classical_hf_per x{}", count),
    }
}

pub fn run(args: SuiteArgs) -> Result<ExitCode, String> {
    let opts = VerifyOptions {
        no_size_cap: false,
        corrupted: args.corrupt_engine,
    };
    let budget = Duration::from_secs(args.budget);
    let start = Instant::now();
    let mut outcomes = Vec::new();
    for row in matrix() {
        let skipped = row.tag.is_some_and(|t| args.skip.contains(&t)) || start.elapsed() >= budget;
        let outcome = if skipped {
            Outcome {
                criterion: row.criterion,
                expected_holds: row.expect_holds,
                status: Status::Skipped,
                report: None,
                detail: None,
            }
        } else {
            match execute(&row, args.seed, &opts) {
                Ok(mut report) => {
                    if args.no_timing {
                        report.elapsed_ms = 0;
                    }
                    let status = if report.holds == row.expect_holds {
                        Status::Pass
                    } else {
                        Status::Fail
                    };
                    Outcome {
                        criterion: row.criterion,
                        expected_holds: row.expect_holds,
                        status,
                        report: Some(report),
                        detail: None,
                    }
                }
                Err(e) => Outcome {
                    criterion: row.criterion,
                    expected_holds: row.expect_holds,
                    status: Status::Error,
                    report: None,
                    detail: Some(e.to_string()),
                },
            }
        };
        if args.format == Format::Text {
            println!("{}", text_line(&row, &outcome));
        }
        outcomes.push(outcome);
    }
    let count = |s: Status| outcomes.iter().filter(|o| o.status == s).count();
    let (pass, fail, skipped, error) = (
        count(Status::Pass),
        count(Status::Fail),
        count(Status::Skipped),
        count(Status::Error),
    );
    match args.format {
        Format::Text => println!(
            "summary: {} pass, {} fail, {} skipped, {} error",
            pass, fail, skipped, error
        ),
        Format::Json => println!(
            "{}",
            serde_json::to_string(&outcomes).expect("serializable")
        ),
    }
    Ok(if pass == outcomes.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn text_line(row: &Row, o: &Outcome) -> String {
    let status = match o.status {
        Status::Pass => "pass",
        Status::Fail => "FAIL",
        Status::Skipped => "skipped",
        Status::Error => "ERROR",
    };
    let expect = if row.expect_holds { "holds" } else { "fails" };
    let tail = match (&o.report, &o.detail) {
        (Some(r), _) => format!("residual={} elapsed_ms={}", r.residual_terms, r.elapsed_ms),
        (None, Some(d)) => d.clone(),
        (None, None) => String::new(),
    };
    format!(
        "{:>2}  {:<42} size={:<2} expect={:<5}  {:<7} {}",
        row.criterion,
        job_label(row),
        row.size(),
        expect,
        status,
        tail
    )
    .trim_end()
    .to_string()
}

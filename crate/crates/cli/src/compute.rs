use std::process::ExitCode;

use clap::{Args, ValueEnum};
use qpfaff::qlinalg::{
    adjugate, build_B, build_Bprime, cdet, hf_full, per, per_q, pf_full, rdet, GenMatrix,
};
use qpfaff::{Algebra, NCPoly, Regime};
use serde::Serialize;

use crate::{Format, RegimeArgs};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum What {
    /// row determinant rdet_r(A)
    Rdet,
    /// column determinant cdet_{s^-1}(A)
    Cdet,
    /// column permanent per_q(A), or the unit-weight sum outside the q regimes
    Per,
    /// Pf_r(A^T J_{s^-1} A)
    Pf,
    /// Pf_{s^-1}(A J_r A^T)
    PfPrime,
    /// Hf_q(A J_q A^T), q regimes only
    Hf,
    /// the matrix A^T J_{s^-1} A
    B,
    /// the matrix A J_r A^T
    BPrime,
    /// adj(A)
    Adjugate,
}

#[derive(Args, Debug)]
pub struct ComputeArgs {
    #[arg(long, value_enum)]
    what: What,
    /// Matrix size (even for the Pfaffian family).
    #[arg(long, visible_alias = "size")]
    n: usize,
    #[command(flatten)]
    regime: RegimeArgs,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Serialize)]
struct ScalarOut<'a> {
    what: &'a str,
    n: usize,
    regime: String,
    text: String,
    terms: qpfaff::ncalg::SerializedPoly,
}

#[derive(Serialize)]
struct MatrixOut<'a> {
    what: &'a str,
    n: usize,
    regime: String,
    entries: Vec<Vec<String>>,
}

enum Value {
    Scalar(NCPoly),
    Matrix(GenMatrix),
}

fn evaluate(what: What, n: usize, regime: &Regime) -> qpfaff::Result<Value> {
    let alg = Algebra::single(n, regime)?;
    let a = GenMatrix::generic(&alg);
    let q = regime.q();
    Ok(match what {
        What::Rdet => Value::Scalar(rdet(&a)?),
        What::Cdet => Value::Scalar(cdet(&a)?),
        What::Per => Value::Scalar(if q.is_some() { per_q(&a)? } else { per(&a)? }),
        What::Pf => Value::Scalar(pf_full(&build_B(&alg)?, alg.r())?),
        What::PfPrime => Value::Scalar(pf_full(&build_Bprime(&alg)?, &alg.s().rf_inv()?)?),
        What::Hf => {
            let q = q.ok_or_else(|| qpfaff::Error::UnsupportedRegime {
                identity: "hf".into(),
                regime: regime.label(),
            })?;
            Value::Scalar(hf_full(&build_Bprime(&alg)?, &q)?)
        }
        What::B => Value::Matrix(build_B(&alg)?),
        What::BPrime => Value::Matrix(build_Bprime(&alg)?),
        What::Adjugate => Value::Matrix(adjugate(&a)?),
    })
}

pub fn run(args: ComputeArgs) -> Result<ExitCode, String> {
    let regime = args.regime.resolve()?;
    let name = args
        .what
        .to_possible_value()
        .expect("named variant")
        .get_name()
        .to_string();
    let value = evaluate(args.what, args.n, &regime).map_err(|e| e.to_string())?;
    let out = match (value, args.format) {
        (Value::Scalar(p), Format::Text) => p.to_string(),
        (Value::Scalar(p), Format::Json) => serde_json::to_string(&ScalarOut {
            what: &name,
            n: args.n,
            regime: regime.label(),
            text: p.to_string(),
            terms: p.to_serialized(),
        })
        .expect("serializable"),
        (Value::Matrix(m), Format::Text) => {
            let mut lines = Vec::new();
            for i in 1..=m.rows() {
                for j in 1..=m.cols() {
                    lines.push(format!("[{},{}] {}", i, j, m.get(i, j)));
                }
            }
            lines.join("\n")
        }
        (Value::Matrix(m), Format::Json) => serde_json::to_string(&MatrixOut {
            what: &name,
            n: args.n,
            regime: regime.label(),
            entries: (1..=m.rows())
                .map(|i| (1..=m.cols()).map(|j| m.get(i, j).to_string()).collect())
                .collect(),
        })
        .expect("serializable"),
    };
    println!("{}", out);
    Ok(ExitCode::SUCCESS)
}

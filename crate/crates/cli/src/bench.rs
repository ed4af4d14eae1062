use std::process::ExitCode;
use std::time::Instant;

use clap::Args;
use qpfaff::checks::random_poly;
use qpfaff::qlinalg::{build_B, pf_full, rdet, GenMatrix};
use qpfaff::{Algebra, Regime, Strategy};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::Format;

#[derive(Args, Debug)]
pub struct BenchArgs {
    /// Largest n for the determinant workload.
    #[arg(long, default_value_t = 4)]
    n: usize,
    /// Random polynomials per strategy in the normalization workload.
    #[arg(long, default_value_t = 100)]
    count: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Serialize)]
struct Timing {
    workload: String,
    elapsed_ms: f64,
    output_terms: usize,
}

fn timed<F: FnOnce() -> qpfaff::Result<usize>>(workload: String, f: F) -> Result<Timing, String> {
    let start = Instant::now();
    let output_terms = f().map_err(|e| e.to_string())?;
    Ok(Timing {
        workload,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
        output_terms,
    })
}

pub fn run(args: BenchArgs) -> Result<ExitCode, String> {
    let mut out = Vec::new();
    for n in 2..=args.n {
        out.push(timed(format!("rdet n={}", n), || {
            let alg = Algebra::single(n, &Regime::Generic)?;
            Ok(rdet(&GenMatrix::generic(&alg))?.nterms())
        })?);
    }
    out.push(timed("pf(B) 2n=4".into(), || {
        let alg = Algebra::single(4, &Regime::Generic)?;
        Ok(pf_full(&build_B(&alg)?, alg.r())?.nterms())
    })?);
    let strategies = [
        ("memoized", Strategy::Memoized),
        ("leftmost", Strategy::Leftmost),
        ("rightmost", Strategy::Rightmost),
        ("seeded", Strategy::Seeded(args.seed)),
    ];
    for (name, strategy) in strategies {
        out.push(timed(
            format!("normalize x{} n=3 deg<=5 {}", args.count, name),
            || {
                let alg = Algebra::single(3, &Regime::Generic)?;
                let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
                let mut terms = 0;
                for _ in 0..args.count {
                    terms += random_poly(&alg, &mut rng, 4, 5)
                        .normalize_with(strategy)
                        .nterms();
                }
                Ok(terms)
            },
        )?);
    }
    match args.format {
        Format::Text => {
            for t in &out {
                println!(
                    "{:<40} {:>10.2} ms  {} terms",
                    t.workload, t.elapsed_ms, t.output_terms
                );
            }
        }
        Format::Json => println!("{}", serde_json::to_string(&out).expect("serializable")),
    }
    Ok(ExitCode::SUCCESS)
}

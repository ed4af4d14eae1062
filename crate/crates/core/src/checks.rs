//! Harness checks that are not identities of the algebra itself: oracle
//! agreement, reduction-strategy agreement, and the classical specialization.

use std::sync::Arc;
use std::time::Instant;

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::classical::{self, IntMatrix};
use crate::error::Result;
use crate::ncalg::{Algebra, Letter, NCPoly, Regime, Strategy, Word};
use crate::qexterior::{det_oracle, hf_oracle, pf_oracle, DetMode, FormFlavor};
use crate::qlinalg::{
    build_B, build_Bprime, cdet, evaluate_numeric, hf_full, per, pf_full, rdet, GenMatrix,
};
use crate::ratfunc::RatFunc;
use crate::report::Report;

/// Random element with up to `max_terms` words of length `1..=max_degree`
/// and small coefficients built from the algebra's parameters.
pub fn random_poly<R: Rng>(
    alg: &Arc<Algebra>,
    rng: &mut R,
    max_terms: usize,
    max_degree: usize,
) -> NCPoly {
    let n = alg.n();
    let params = [alg.r().clone(), alg.s().clone()];
    let nterms = rng.gen_range(1..=max_terms);
    let terms: Vec<(Word, RatFunc)> = (0..nterms)
        .map(|_| {
            let len = rng.gen_range(1..=max_degree);
            let w: Word = (0..len)
                .map(|_| Letter::new(rng.gen_range(1..=n), rng.gen_range(1..=n)))
                .collect();
            let mut c =
                RatFunc::from_int(rng.gen_range(1..=5) * if rng.gen_bool(0.5) { 1 } else { -1 });
            for p in &params {
                let e = rng.gen_range(-1..=1);
                c = &c * &p.pow(e).expect("parameters are nonzero");
            }
            (w, c)
        })
        .collect();
    alg.unnormalized(terms)
}

/// Normal forms of `count` random elements under memoized insertion and the
/// leftmost, rightmost and seeded worklist orders. The residual is the
/// number of elements on which any two strategies disagree.
pub fn confluence_check(n: usize, count: usize, max_degree: usize, seed: u64) -> Result<Report> {
    let start = Instant::now();
    let alg = Algebra::single(n, &Regime::Generic)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut disagreements = 0;
    for k in 0..count {
        let p = random_poly(&alg, &mut rng, 4, max_degree);
        let forms: Vec<NCPoly> = [
            Strategy::Memoized,
            Strategy::Leftmost,
            Strategy::Rightmost,
            Strategy::Seeded(seed ^ k as u64),
        ]
        .into_iter()
        .map(|st| p.normalize_with(st))
        .collect();
        if forms.windows(2).any(|w| w[0].terms().ne(w[1].terms())) {
            disagreements += 1;
        }
    }
    Ok(Report::new(
        "confluence",
        n,
        &Regime::Generic.label(),
        disagreements,
        start.elapsed(),
    ))
}

/// Wedge-form determinant oracles against the permutation sums.
pub fn det_oracle_check(n: usize, regime: &Regime) -> Result<Report> {
    let start = Instant::now();
    let alg = Algebra::single(n, regime)?;
    let a = GenMatrix::generic(&alg);
    let residual = (&det_oracle(&alg, DetMode::Row)? - &rdet(&a)?).nterms()
        + (&det_oracle(&alg, DetMode::Column)? - &cdet(&a)?).nterms();
    Ok(Report::new(
        "oracle_det",
        n,
        &regime.label(),
        residual,
        start.elapsed(),
    ))
}

/// Wedge-form `Pf_r(B)` and `Pf_{s^-1}(B')` against the `Pi'` sums.
pub fn pf_oracle_check(size: usize, regime: &Regime) -> Result<Report> {
    let start = Instant::now();
    let alg = Algebra::single(size, regime)?;
    let (b, bp) = (build_B(&alg)?, build_Bprime(&alg)?);
    let s_inv = alg.s().rf_inv()?;
    let residual = (&pf_oracle(&b, alg.r(), FormFlavor::X)? - &pf_full(&b, alg.r())?).nterms()
        + (&pf_oracle(&bp, alg.s(), FormFlavor::Y)? - &pf_full(&bp, &s_inv)?).nterms();
    Ok(Report::new(
        "oracle_pf",
        size,
        &regime.label(),
        residual,
        start.elapsed(),
    ))
}

/// Wedge-form `Hf_q(B')` against the `Pi'` sum, over `r = -s^-1 = q`.
pub fn hf_oracle_check(size: usize) -> Result<Report> {
    let start = Instant::now();
    let regime = Regime::QNegative;
    let alg = Algebra::single(size, &regime)?;
    let bp = build_Bprime(&alg)?;
    let q = RatFunc::q();
    let residual = (&hf_oracle(&bp, &q)? - &hf_full(&bp, &q)?).nterms();
    Ok(Report::new(
        "oracle_hf",
        size,
        &regime.label(),
        residual,
        start.elapsed(),
    ))
}

/// Seeded integer matrices with entries in `-9..=9`.
pub fn random_int_matrices(size: usize, count: usize, seed: u64) -> Vec<IntMatrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| IntMatrix::from_fn(size, |_, _| rng.gen_range(-9..=9)))
        .collect()
}

/// Symbolic invariants at `r = s = 1`, evaluated on integer matrices.
pub struct ClassicalForms {
    pub det: NCPoly,
    pub per: NCPoly,
    /// `Pf_1(A^T J_1 A)`
    pub pf_b: NCPoly,
    /// `Hf_1(A J_1 A^T)`
    pub hf_bprime: NCPoly,
}

impl ClassicalForms {
    pub fn new(size: usize) -> Result<ClassicalForms> {
        let alg = Algebra::single(size, &Regime::classical())?;
        let a = GenMatrix::generic(&alg);
        let one = RatFunc::from_int(1);
        Ok(ClassicalForms {
            det: rdet(&a)?,
            per: per(&a)?,
            pf_b: pf_full(&build_B(&alg)?, &one)?,
            hf_bprime: hf_full(&build_Bprime(&alg)?, &one)?,
        })
    }

    pub fn eval(p: &NCPoly, m: &IntMatrix) -> Result<BigRational> {
        evaluate_numeric(p, |i, j| BigRational::from_integer(m.at(i, j).into()))
    }
}

fn int(v: i128) -> BigRational {
    BigRational::from_integer(v.into())
}

/// At `r = s = 1`: the engine's det, per, Pf and Hf agree with the integer
/// brute force, and `Pf(A^T J A) = det(A)`. The residual counts failing
/// (matrix, sub-check) pairs.
pub fn classical_check(size: usize, count: usize, seed: u64) -> Result<Report> {
    let start = Instant::now();
    let forms = ClassicalForms::new(size)?;
    let j = IntMatrix::jay(size, 1);
    let mut failures = 0;
    for a in random_int_matrices(size, count, seed) {
        let b = a.transpose().mul(&j).mul(&a);
        let bp = a.mul(&j).mul(&a.transpose());
        let pairs = [
            (
                ClassicalForms::eval(&forms.det, &a)?,
                int(classical::det(&a)),
            ),
            (
                ClassicalForms::eval(&forms.per, &a)?,
                int(classical::per(&a)),
            ),
            (
                ClassicalForms::eval(&forms.pf_b, &a)?,
                int(classical::pf(&b)),
            ),
            (
                ClassicalForms::eval(&forms.hf_bprime, &a)?,
                int(classical::hf(&bp)),
            ),
            (int(classical::pf(&b)), int(classical::det(&a))),
        ];
        failures += pairs.iter().filter(|(x, y)| x != y).count();
    }
    Ok(Report::new(
        "classical",
        size,
        &Regime::classical().label(),
        failures,
        start.elapsed(),
    ))
}

/// At `r = s = 1`: `Hf(A J A^T) = per(A)` on seeded integer matrices. The
/// residual counts matrices where the two sides differ.
pub fn classical_hf_per_check(size: usize, count: usize, seed: u64) -> Result<Report> {
    let start = Instant::now();
    let forms = ClassicalForms::new(size)?;
    let mut failures = 0;
    for a in random_int_matrices(size, count, seed) {
        if ClassicalForms::eval(&forms.hf_bprime, &a)? != ClassicalForms::eval(&forms.per, &a)? {
            failures += 1;
        }
    }
    Ok(Report::new(
        "classical_hf_per",
        size,
        &Regime::classical().label(),
        failures,
        start.elapsed(),
    ))
}

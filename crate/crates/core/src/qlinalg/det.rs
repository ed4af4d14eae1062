//! Determinants, permanents, minors and the expansions built from them.

use std::collections::HashMap;

use super::matrix::GenMatrix;
use super::perm::{all_permutations, complement, subsets};
use crate::error::{Error, Result};
use crate::ncalg::NCPoly;
use crate::ratfunc::RatFunc;

/// Which index of the matrix the permutation acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Along {
    /// `sum_sigma w^l(sigma) m_{1,sigma(1)} ... m_{k,sigma(k)}`
    Rows,
    /// `sum_sigma w^l(sigma) m_{sigma(1),1} ... m_{sigma(k),k}`
    Cols,
}

pub(crate) fn powers(w: &RatFunc, max: usize) -> Vec<RatFunc> {
    let mut out = Vec::with_capacity(max + 1);
    out.push(RatFunc::one(w.vars()));
    for k in 1..=max {
        let next = &out[k - 1] * w;
        out.push(next);
    }
    out
}

fn entry(m: &GenMatrix, along: Along, step: usize, pick: usize) -> &NCPoly {
    match along {
        Along::Rows => m.get(step, pick),
        Along::Cols => m.get(pick, step),
    }
}

/// `sum_sigma w^l(sigma) * (ordered product)`, by dynamic programming over the
/// set of already used indices. Appending index `c` after the set `S` adds
/// `#{x in S : x > c}` inversions, so every partial sum is shared.
pub fn weighted_perm_sum(m: &GenMatrix, w: &RatFunc, along: Along) -> Result<NCPoly> {
    let k = m.require_square()?;
    let alg = m.algebra();
    if k == 0 {
        return Ok(alg.one());
    }
    let pw = powers(w, k);
    let mut layer: HashMap<u32, NCPoly> = HashMap::from([(0u32, alg.one())]);
    for step in 1..=k {
        let mut next: HashMap<u32, NCPoly> = HashMap::new();
        let mut keys: Vec<u32> = layer.keys().copied().collect();
        keys.sort_unstable();
        for set in keys {
            let val = &layer[&set];
            for c in 1..=k {
                let bit = 1u32 << (c - 1);
                if set & bit != 0 {
                    continue;
                }
                let e = entry(m, along, step, c);
                if e.is_zero() {
                    continue;
                }
                let inv = (set >> c).count_ones() as usize;
                let term = (val * e).scale(&pw[inv]);
                let slot = next.entry(set | bit).or_insert_with(|| alg.zero());
                *slot = &*slot + &term;
            }
        }
        layer = next;
    }
    Ok(layer
        .remove(&((1u32 << k) - 1))
        .unwrap_or_else(|| alg.zero()))
}

/// Same sum, enumerating `S_k` term by term.
pub fn weighted_perm_sum_naive(m: &GenMatrix, w: &RatFunc, along: Along) -> Result<NCPoly> {
    let k = m.require_square()?;
    let alg = m.algebra();
    let mut acc = alg.zero();
    for p in all_permutations(k) {
        let mut t = alg.scalar(w.pow(p.inversions() as i64)?);
        for step in 1..=k {
            t = &t * entry(m, along, step, p.apply(step));
        }
        acc = &acc + &t;
    }
    Ok(acc)
}

/// `rdet_r(M) = sum (-r)^l(sigma) m_{1,sigma(1)} ... m_{k,sigma(k)}`.
pub fn rdet(m: &GenMatrix) -> Result<NCPoly> {
    weighted_perm_sum(m, &-m.algebra().r(), Along::Rows)
}

/// `cdet_{s^-1}(M) = sum (-s)^-l(sigma) m_{sigma(1),1} ... m_{sigma(k),k}`.
pub fn cdet(m: &GenMatrix) -> Result<NCPoly> {
    weighted_perm_sum(m, &-m.algebra().s().rf_inv()?, Along::Cols)
}

/// Column permanent `per_q(M) = sum q^l(sigma) m_{sigma(1),1} ... m_{sigma(k),k}`.
///
/// Needs a single-parameter algebra; `q` is read off as `r`.
pub fn per_q(m: &GenMatrix) -> Result<NCPoly> {
    if m.algebra().vars() != crate::ratfunc::VarSet::Q {
        return Err(Error::UnsupportedRegime {
            identity: "per_q".into(),
            regime: "two-parameter".into(),
        });
    }
    weighted_perm_sum(m, m.algebra().r(), Along::Cols)
}

/// Classical-style permanent `sum m_{sigma(1),1} ... m_{sigma(k),k}` with unit weights.
pub fn per(m: &GenMatrix) -> Result<NCPoly> {
    weighted_perm_sum(m, &RatFunc::one(m.algebra().vars()), Along::Cols)
}

fn check_split(n: usize, first: &[usize], second: &[usize]) -> Result<()> {
    let increasing = |v: &[usize]| v.windows(2).all(|w| w[0] < w[1]);
    let mut all: Vec<usize> = first.iter().chain(second).copied().collect();
    all.sort_unstable();
    if !increasing(first) || !increasing(second) || all != (1..=n).collect::<Vec<_>>() {
        return Err(Error::MalformedPartition(format!(
            "{:?} | {:?} of 1..={}",
            first, second, n
        )));
    }
    Ok(())
}

fn pow_signed(base: &RatFunc, e: i64) -> Result<RatFunc> {
    base.pow(e)
}

/// Block row expansion along the rows `first | second`:
/// `sum_J (-r)^(sum J - sum I) rdet(A^I_J) rdet(A^I'_J')`.
pub fn laplace_row(a: &GenMatrix, first: &[usize], second: &[usize]) -> Result<NCPoly> {
    let n = a.require_square()?;
    check_split(n, first, second)?;
    let minus_r = -a.algebra().r();
    let si: i64 = first.iter().sum::<usize>() as i64;
    let mut acc = a.algebra().zero();
    for j in subsets(n, first.len()) {
        let jc = complement(n, &j);
        let sj: i64 = j.iter().sum::<usize>() as i64;
        let t = &rdet(&a.minor(first, &j)?)? * &rdet(&a.minor(second, &jc)?)?;
        acc = &acc + &t.scale(&pow_signed(&minus_r, sj - si)?);
    }
    Ok(acc)
}

/// Block column expansion along the columns `first | second`:
/// `sum_J (-s)^(sum I - sum J) cdet(A^J_I) cdet(A^J'_I')`.
pub fn laplace_col(a: &GenMatrix, first: &[usize], second: &[usize]) -> Result<NCPoly> {
    let n = a.require_square()?;
    check_split(n, first, second)?;
    let minus_s = -a.algebra().s();
    let si: i64 = first.iter().sum::<usize>() as i64;
    let mut acc = a.algebra().zero();
    for j in subsets(n, first.len()) {
        let jc = complement(n, &j);
        let sj: i64 = j.iter().sum::<usize>() as i64;
        let t = &cdet(&a.minor(&j, first)?)? * &cdet(&a.minor(&jc, second)?)?;
        acc = &acc + &t.scale(&pow_signed(&minus_s, si - sj)?);
    }
    Ok(acc)
}

fn hat(n: usize, k: usize) -> Vec<usize> {
    (1..=n).filter(|&x| x != k).collect()
}

/// Which side of the entry the complementary minor multiplies from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinorSide {
    /// `a * det(minor)`
    Right,
    /// `det(minor) * a`
    Left,
}

/// Row cofactor sum: `sum_j (-r)^(j-i) a_ij rdet(A^k^_j^)` (minor on the right),
/// or `sum_j (-r)^(i-j) rdet(A^k^_j^) a_ij` (minor on the left).
/// Equals `rdet(A)` when `i = k` and vanishes otherwise.
pub fn cofactor_row(a: &GenMatrix, i: usize, k: usize, side: MinorSide) -> Result<NCPoly> {
    let n = a.require_square()?;
    for idx in [i, k] {
        if idx == 0 || idx > n {
            return Err(Error::IndexOutOfRange { index: idx, max: n });
        }
    }
    let minus_r = -a.algebra().r();
    let mut acc = a.algebra().zero();
    for j in 1..=n {
        let m = if n == 1 {
            a.algebra().one()
        } else {
            rdet(&a.minor(&hat(n, k), &hat(n, j))?)?
        };
        let (t, e) = match side {
            MinorSide::Right => (a.get(i, j) * &m, j as i64 - i as i64),
            MinorSide::Left => (&m * a.get(i, j), i as i64 - j as i64),
        };
        acc = &acc + &t.scale(&minus_r.pow(e)?);
    }
    Ok(acc)
}

/// Column cofactor sum: `sum_j (-s)^(i-j) a_ji cdet(A^j^_k^)` (minor on the right),
/// or `sum_j (-s)^(j-i) cdet(A^j^_k^) a_ji` (minor on the left).
pub fn cofactor_col(a: &GenMatrix, i: usize, k: usize, side: MinorSide) -> Result<NCPoly> {
    let n = a.require_square()?;
    for idx in [i, k] {
        if idx == 0 || idx > n {
            return Err(Error::IndexOutOfRange { index: idx, max: n });
        }
    }
    let minus_s = -a.algebra().s();
    let mut acc = a.algebra().zero();
    for j in 1..=n {
        let m = if n == 1 {
            a.algebra().one()
        } else {
            cdet(&a.minor(&hat(n, j), &hat(n, k))?)?
        };
        let (t, e) = match side {
            MinorSide::Right => (a.get(j, i) * &m, i as i64 - j as i64),
            MinorSide::Left => (&m * a.get(j, i), j as i64 - i as i64),
        };
        acc = &acc + &t.scale(&minus_s.pow(e)?);
    }
    Ok(acc)
}

/// `adj(A)_ij = (-1)^(i-j) rdet(A with row j and column i deleted)`.
pub fn adjugate(a: &GenMatrix) -> Result<GenMatrix> {
    let n = a.require_square()?;
    let alg = a.algebra().clone();
    let mut entries = Vec::with_capacity(n * n);
    for i in 1..=n {
        for j in 1..=n {
            let m = if n == 1 {
                alg.one()
            } else {
                rdet(&a.minor(&hat(n, j), &hat(n, i))?)?
            };
            entries.push(if (i + j) % 2 == 0 { m } else { -&m });
        }
    }
    GenMatrix::new(&alg, n, n, entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::{Algebra, Regime};

    fn generic(n: usize) -> GenMatrix {
        GenMatrix::generic(&Algebra::single(n, &Regime::Generic).unwrap())
    }

    #[test]
    fn two_by_two_forms() {
        let a = generic(2);
        assert_eq!(rdet(&a).unwrap().to_string(), "a11*a22 - r*a12*a21");
        assert_eq!(cdet(&a).unwrap(), rdet(&a).unwrap());
        let q = GenMatrix::generic(&Algebra::single(2, &Regime::QNegative).unwrap());
        // a11 a22 + q a21 a12, with a21 a12 = rs a12 a21 = -a12 a21
        assert_eq!(per_q(&q).unwrap().to_string(), "a11*a22 - q*a12*a21");
        assert!(per_q(&a).is_err());
    }

    #[test]
    fn dp_matches_naive() {
        let a = generic(3);
        let w = RatFunc::from_int(-3);
        for along in [Along::Rows, Along::Cols] {
            assert_eq!(
                weighted_perm_sum(&a, &w, along).unwrap(),
                weighted_perm_sum_naive(&a, &w, along).unwrap()
            );
        }
    }

    #[test]
    fn adjugate_two_by_two() {
        let a = generic(2);
        let adj = adjugate(&a).unwrap();
        let got: Vec<String> = adj.entries().iter().map(|e| e.to_string()).collect();
        assert_eq!(got, ["a22", "-a12", "-a21", "a11"]);
    }

    #[test]
    fn laplace_and_cofactors_two_by_two() {
        let a = generic(2);
        let d = rdet(&a).unwrap();
        assert_eq!(laplace_row(&a, &[1], &[2]).unwrap(), d);
        assert!(cofactor_row(&a, 1, 2, MinorSide::Right).unwrap().is_zero());
        assert!(laplace_row(&a, &[1], &[1]).is_err());
    }

    #[test]
    fn tau_round_trip() {
        let a = generic(2);
        let r = RatFunc::r();
        let t = a.tau(&r).unwrap();
        assert_eq!(t.get(1, 2).to_string(), "r*a12");
        assert_eq!(t.get(2, 1).to_string(), "1/r*a21");
        assert_eq!(t.tau(&r.rf_inv().unwrap()).unwrap(), a);
    }
}

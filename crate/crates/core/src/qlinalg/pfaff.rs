//! Quantum Pfaffians and Hafnians of the strict upper triangle of an even matrix.

use std::collections::HashMap;

use super::det::powers;
use super::matrix::GenMatrix;
use super::perm::enumerate_pi_prime;
use crate::error::{Error, Result};
use crate::ncalg::NCPoly;
use crate::ratfunc::{q_factorial, RatFunc};

fn even_size(b: &GenMatrix) -> Result<usize> {
    let m = b.require_square()?;
    if m % 2 != 0 {
        return Err(Error::OddSize(m));
    }
    Ok(m)
}

/// `sum w^l(sigma) b_{sigma(1)sigma(2)} ... b_{sigma(2n-1)sigma(2n)}` over `Pi'`
/// (`matchings_only = false`) or over `Pi` (`true`).
///
/// Dynamic programming over the used index set: appending the pair `(i, j)`
/// with `i < j` after `S` adds `#{x in S : x > i} + #{x in S : x > j}`
/// inversions. Restricting `i` to the least unused index enumerates `Pi`.
pub fn pair_sum(b: &GenMatrix, w: &RatFunc, matchings_only: bool) -> Result<NCPoly> {
    let m = even_size(b)?;
    let alg = b.algebra();
    if m == 0 {
        return Ok(alg.one());
    }
    let pw = powers(w, m * (m - 1) / 2);
    let full = (1u32 << m) - 1;
    let mut layer: HashMap<u32, NCPoly> = HashMap::from([(0u32, alg.one())]);
    for _ in 0..m / 2 {
        let mut next: HashMap<u32, NCPoly> = HashMap::new();
        let mut keys: Vec<u32> = layer.keys().copied().collect();
        keys.sort_unstable();
        for set in keys {
            let val = &layer[&set];
            let free = full & !set;
            let firsts: Vec<usize> = if matchings_only {
                vec![free.trailing_zeros() as usize + 1]
            } else {
                (1..=m).filter(|&i| free & (1 << (i - 1)) != 0).collect()
            };
            for i in firsts {
                for j in (i + 1)..=m {
                    if free & (1 << (j - 1)) == 0 {
                        continue;
                    }
                    let e = b.get(i, j);
                    if e.is_zero() {
                        continue;
                    }
                    let inv = ((set >> i).count_ones() + (set >> j).count_ones()) as usize;
                    let term = (val * e).scale(&pw[inv]);
                    let key = set | (1 << (i - 1)) | (1 << (j - 1));
                    let slot = next.entry(key).or_insert_with(|| alg.zero());
                    *slot = &*slot + &term;
                }
            }
        }
        layer = next;
    }
    Ok(layer.remove(&full).unwrap_or_else(|| alg.zero()))
}

/// Term-by-term enumeration of `Pi'`, for cross-checks.
pub fn pair_sum_naive(b: &GenMatrix, w: &RatFunc) -> Result<NCPoly> {
    let m = even_size(b)?;
    let alg = b.algebra();
    let mut acc = alg.zero();
    for p in enumerate_pi_prime(m) {
        let mut t = alg.scalar(w.pow(p.inversions() as i64)?);
        for k in 0..m / 2 {
            t = &t * b.get(p.apply(2 * k + 1), p.apply(2 * k + 2));
        }
        acc = &acc + &t;
    }
    Ok(acc)
}

fn divide_by_factorial(p: NCPoly, n: usize, v: &RatFunc) -> Result<NCPoly> {
    if n == 0 {
        return Ok(p);
    }
    let f = q_factorial(n, &v.pow(4)?)?;
    Ok(p.scale(&f.rf_inv()?))
}

/// `Pf_v(B) = 1/[n]_{v^4}! sum_{Pi'} (-v)^l(sigma) b.. b..`.
pub fn pf_full(b: &GenMatrix, v: &RatFunc) -> Result<NCPoly> {
    let m = even_size(b)?;
    divide_by_factorial(pair_sum(b, &-v, false)?, m / 2, v)
}

/// `Hf_q(B) = 1/[n]_{q^4}! sum_{Pi'} q^l(sigma) b.. b..`, i.e. `Pf_{-q}`.
pub fn hf_full(b: &GenMatrix, q: &RatFunc) -> Result<NCPoly> {
    pf_full(b, &-q)
}

/// `sum_{Pi} (-q)^l(sigma) b.. b..`. Equals `Pf_q` only on q-Maya entries.
pub fn pf_matching(b: &GenMatrix, q: &RatFunc) -> Result<NCPoly> {
    pair_sum(b, &-q, true)
}

/// `sum_{Pi} q^l(sigma) b.. b..`. Equals `Hf_q` only on (-q)-Maya entries.
pub fn hf_matching(b: &GenMatrix, q: &RatFunc) -> Result<NCPoly> {
    pair_sum(b, q, true)
}

fn recursive(b: &GenMatrix, idx: &[usize], w: &RatFunc) -> Result<NCPoly> {
    let alg = b.algebra();
    if idx.is_empty() {
        return Ok(alg.one());
    }
    let mut acc = alg.zero();
    let mut c = RatFunc::one(w.vars());
    for pos in 1..idx.len() {
        let rest: Vec<usize> = idx[1..]
            .iter()
            .copied()
            .filter(|&x| x != idx[pos])
            .collect();
        let e = b.get(idx[0], idx[pos]);
        if !e.is_zero() {
            let t = e * &recursive(b, &rest, w)?;
            acc = &acc + &t.scale(&c);
        }
        c = &c * w;
    }
    Ok(acc)
}

/// `Pf_q(B) = sum_{j=2}^{2n} (-q)^(j-2) b_1j Pf_q(B with rows/cols 1, j removed)`.
pub fn pf_recursive(b: &GenMatrix, q: &RatFunc) -> Result<NCPoly> {
    let m = even_size(b)?;
    recursive(b, &(1..=m).collect::<Vec<_>>(), &-q)
}

/// `Hf_q(B) = sum_{j=2}^{2n} q^(j-2) b_1j Hf_q(B with rows/cols 1, j removed)`.
pub fn hf_recursive(b: &GenMatrix, q: &RatFunc) -> Result<NCPoly> {
    let m = even_size(b)?;
    recursive(b, &(1..=m).collect::<Vec<_>>(), q)
}

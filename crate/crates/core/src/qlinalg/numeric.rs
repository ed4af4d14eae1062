use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ncalg::{Flavor, NCPoly};

/// Value of `p` with `a_ij` replaced by `value(i, j)`.
///
/// Only defined over the single-copy algebra at `r = s = 1`, where the
/// relations make all generators commute.
pub fn evaluate_numeric<F>(p: &NCPoly, value: F) -> Result<BigRational>
where
    F: Fn(usize, usize) -> BigRational,
{
    let alg = p.algebra();
    let is_one = |c: &crate::ratfunc::RatFunc| c.to_rational().is_some_and(|v| v.is_one());
    if alg.flavor() != Flavor::Single || !is_one(alg.r()) || !is_one(alg.s()) {
        return Err(Error::NotCommutative);
    }
    let mut acc = BigRational::zero();
    for (w, c) in p.terms() {
        let mut t = c.to_rational().ok_or(Error::NotCommutative)?;
        for l in w.letters() {
            t *= value(l.row(), l.col());
        }
        acc += t;
    }
    Ok(acc)
}

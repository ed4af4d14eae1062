//! Wedge-form constructions: the linear forms `delta_i`, `partial_i`, the
//! 2-forms behind Pfaffians, and the checks built on them.

use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::Instant;

use super::mixed::MixedPoly;
use super::mono::ExtMono;
use crate::error::{Error, Result};
use crate::ncalg::{Algebra, NCPoly};
use crate::qlinalg::GenMatrix;
use crate::ratfunc::{q_factorial, RatFunc};
use crate::report::Report;

fn check_index(alg: &Algebra, i: usize) -> Result<()> {
    if i == 0 || i > alg.n() {
        return Err(Error::IndexOutOfRange {
            index: i,
            max: alg.n(),
        });
    }
    Ok(())
}

fn linear_form(zero: &MixedPoly, i: usize, transposed: bool, on_y: bool) -> MixedPoly {
    let alg = zero.algebra().clone();
    let mut out = zero.like();
    for j in 1..=alg.n() {
        let a = if transposed {
            alg.generator(j, i)
        } else {
            alg.generator(i, j)
        };
        let (x, y) = if on_y {
            (ExtMono::unit(), ExtMono::single(j))
        } else {
            (ExtMono::single(j), ExtMono::unit())
        };
        out.add_term(x, y, a);
    }
    out
}

/// `delta_i = sum_j a_ij x_j`.
pub fn delta(alg: &Arc<Algebra>, i: usize) -> Result<MixedPoly> {
    check_index(alg, i)?;
    Ok(linear_form(&MixedPoly::zero(alg), i, false, false))
}

/// `partial_i = sum_j a_ji y_j`.
pub fn partial(alg: &Arc<Algebra>, i: usize) -> Result<MixedPoly> {
    check_index(alg, i)?;
    Ok(linear_form(&MixedPoly::zero(alg), i, true, true))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DetMode {
    /// `delta_1 ^ ... ^ delta_n = rdet_r(A) x_1 ^ ... ^ x_n`
    Row,
    /// `partial_1 ^ ... ^ partial_n = cdet_{s^-1}(A) y_1 ^ ... ^ y_n`
    Column,
}

pub fn det_oracle(alg: &Arc<Algebra>, mode: DetMode) -> Result<NCPoly> {
    let n = alg.n();
    let mut acc = MixedPoly::zero(alg).monomial(alg.one(), ExtMono::unit(), ExtMono::unit());
    for i in 1..=n {
        let f = match mode {
            DetMode::Row => delta(alg, i)?,
            DetMode::Column => partial(alg, i)?,
        };
        acc = acc.try_mul(&f)?;
    }
    let top = ExtMono::top(n);
    Ok(match mode {
        DetMode::Row => acc.coeff(top, ExtMono::unit()),
        DetMode::Column => acc.coeff(ExtMono::unit(), top),
    })
}

/// Coefficients of `delta_{i1} ^ ... ^ delta_{it}` on the basis `x_J`, keyed
/// by the increasing column list `J`. Repeated rows give the empty map.
pub fn minor_expansion(alg: &Arc<Algebra>, rows: &[usize]) -> Result<BTreeMap<Vec<usize>, NCPoly>> {
    let mut acc = MixedPoly::zero(alg).monomial(alg.one(), ExtMono::unit(), ExtMono::unit());
    for &i in rows {
        acc = acc.try_mul(&delta(alg, i)?)?;
    }
    Ok(acc
        .components()
        .map(|(&(x, _), a)| (x.indices(), a.clone()))
        .collect())
}

/// `Phi = sum_ij a_ji x_i y_j`.
pub fn phi(alg: &Arc<Algebra>) -> MixedPoly {
    let mut out = MixedPoly::zero(alg);
    for i in 1..=alg.n() {
        for j in 1..=alg.n() {
            out.add_term(ExtMono::single(i), ExtMono::single(j), alg.generator(j, i));
        }
    }
    out
}

/// `omega_i = x_i partial_i`.
pub fn omega(alg: &Arc<Algebra>, i: usize) -> Result<MixedPoly> {
    let x = MixedPoly::zero(alg).monomial(alg.one(), ExtMono::single(i), ExtMono::unit());
    x.try_mul(&partial(alg, i)?)
}

/// Residuals of `omega_i ^ omega_i = 0` and `omega_j ^ omega_i = (r/s) omega_i ^ omega_j`.
pub fn omega_residuals(alg: &Arc<Algebra>) -> Result<Vec<MixedPoly>> {
    let ratio = alg.r().rf_div(alg.s())?;
    let w: Vec<MixedPoly> = (1..=alg.n())
        .map(|i| omega(alg, i))
        .collect::<Result<_>>()?;
    let mut out = Vec::new();
    for i in 0..w.len() {
        out.push(w[i].try_mul(&w[i])?);
        for j in (i + 1)..w.len() {
            let lhs = w[j].try_mul(&w[i])?;
            let rhs = w[i].try_mul(&w[j])?.scale(&-&ratio);
            out.push(lhs.try_add(&rhs)?);
        }
    }
    Ok(out)
}

/// `wedge^n Phi / [n]_{r/s}!`, read at `x_top y_top`, against both determinant oracles.
pub fn phi_check(alg: &Arc<Algebra>) -> Result<Report> {
    let start = Instant::now();
    let n = alg.n();
    let power = phi(alg).wedge_power(n);
    let top = ExtMono::top(n);
    let f = q_factorial(n, &alg.r().rf_div(alg.s())?)?;
    let c = power.coeff(top, top).scale(&f.rf_inv()?);
    let row = det_oracle(alg, DetMode::Row)?;
    let col = det_oracle(alg, DetMode::Column)?;
    let residual = (&c - &row).nterms() + (&c - &col).nterms();
    Ok(Report::new(
        "phi",
        n,
        &regime_label(alg),
        residual,
        start.elapsed(),
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormFlavor {
    /// `Omega = sum b_ij x_i ^ x_j` with exterior parameter `v`.
    X,
    /// `Omega' = sum b_ij y_i ^ y_j` with exterior parameter `v^-1`.
    Y,
}

/// Top coefficient of `wedge^n Omega`, divided by `[n]_{v^4}!` (x flavor) or
/// `[n]_{v^-4}!` (y flavor). Reads the strict upper triangle of `b`.
pub fn pf_oracle(b: &GenMatrix, v: &RatFunc, flavor: FormFlavor) -> Result<NCPoly> {
    let m = b.require_square()?;
    if m % 2 != 0 {
        return Err(Error::OddSize(m));
    }
    let alg = b.algebra();
    let p = match flavor {
        FormFlavor::X => v.clone(),
        FormFlavor::Y => v.rf_inv()?,
    };
    let zero = match flavor {
        FormFlavor::X => MixedPoly::zero_with(alg, p.clone(), RatFunc::one(p.vars())),
        FormFlavor::Y => MixedPoly::zero_with(alg, RatFunc::one(p.vars()), p.clone()),
    };
    let mut omega = zero.like();
    for i in 1..=m {
        for j in (i + 1)..=m {
            let pair = ExtMono::from_indices(&[i, j])?;
            let (x, y) = match flavor {
                FormFlavor::X => (pair, ExtMono::unit()),
                FormFlavor::Y => (ExtMono::unit(), pair),
            };
            omega.add_term(x, y, b.get(i, j).clone());
        }
    }
    let n = m / 2;
    let power = omega.wedge_power(n);
    let top = ExtMono::top(m);
    let c = match flavor {
        FormFlavor::X => power.coeff(top, ExtMono::unit()),
        FormFlavor::Y => power.coeff(ExtMono::unit(), top),
    };
    if n == 0 {
        return Ok(c);
    }
    let f = q_factorial(n, &p.pow(4)?)?;
    Ok(c.scale(&f.rf_inv()?))
}

/// `Hf_q` through the x-form with parameter `-q`.
pub fn hf_oracle(b: &GenMatrix, q: &RatFunc) -> Result<NCPoly> {
    pf_oracle(b, &-q, FormFlavor::X)
}

/// Residual term counts of the exterior relations for the `delta`'s
/// (parameter `r`) and the `partial`'s (parameter `s^-1`) over `alg`.
pub fn manin_residual(alg: &Arc<Algebra>, r: &RatFunc, s: &RatFunc) -> Result<usize> {
    let zero = MixedPoly::zero_with(alg, r.clone(), s.rf_inv()?);
    let n = alg.n();
    let mut total = 0;
    for (on_y, p) in [(false, r.clone()), (true, s.rf_inv()?)] {
        let f: Vec<MixedPoly> = (1..=n).map(|i| linear_form(&zero, i, on_y, on_y)).collect();
        for i in 0..n {
            total += f[i].try_mul(&f[i])?.term_count();
            for j in (i + 1)..n {
                let lhs = f[j].try_mul(&f[i])?;
                let rhs = f[i].try_mul(&f[j])?.scale(&p);
                total += lhs.try_add(&rhs)?.term_count();
            }
        }
    }
    Ok(total)
}

/// Forward direction of the Manin-type characterization, with the free
/// algebra as a negative control: the check holds when every residual over
/// `alg` vanishes and the free algebra leaves a nonzero residual. At `n = 1`
/// there is nothing to control: `delta_1 ^ delta_1 = 0` in any algebra.
pub fn manin_check(alg: &Arc<Algebra>) -> Result<Report> {
    let start = Instant::now();
    let residual = manin_residual(alg, alg.r(), alg.s())?;
    let penalty = if alg.n() >= 2 {
        let free = Algebra::free(alg.n(), 'a')?;
        usize::from(manin_residual(&free, alg.r(), alg.s())? == 0)
    } else {
        0
    };
    Ok(Report::new(
        "manin",
        alg.n(),
        &regime_label(alg),
        residual + penalty,
        start.elapsed(),
    ))
}

pub(crate) fn regime_label(alg: &Algebra) -> String {
    alg.regime_label()
}

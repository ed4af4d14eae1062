//! Comultiplication and counit.

use std::sync::Arc;

use super::algebra::{Algebra, Flavor};
use super::poly::NCPoly;
use super::word::{Letter, Side, Word};
use crate::error::{Error, Result};
use crate::ratfunc::RatFunc;

fn require(p: &NCPoly, flavor: Flavor) -> Result<()> {
    if p.algebra().flavor() == flavor {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!(
            "expected a {:?} algebra element",
            flavor
        )))
    }
}

/// `Δ(a_ij) = Σ_k L_ik R_kj`, extended multiplicatively and normalized in
/// the tensor square.
pub fn coproduct(p: &NCPoly) -> Result<NCPoly> {
    require(p, Flavor::Single)?;
    let tensor = p.algebra().tensor_square();
    let n = p.algebra().n();
    let images: Vec<NCPoly> = (1..=n)
        .flat_map(|i| (1..=n).map(move |j| (i, j)))
        .map(|(i, j)| {
            let terms = (1..=n).map(|k| {
                (
                    Word::from_letters([Letter::left(i, k), Letter::right(k, j)]),
                    RatFunc::one(tensor.vars()),
                )
            });
            tensor.from_terms(terms)
        })
        .collect();
    Ok(p.map_letters(&tensor, |l| images[(l.row() - 1) * n + l.col() - 1].clone()))
}

/// `ε(a_ij) = δ_ij`.
pub fn counit(p: &NCPoly) -> Result<RatFunc> {
    require(p, Flavor::Single)?;
    let mut acc = RatFunc::zero(p.algebra().vars());
    for (w, c) in p.terms() {
        if w.letters().iter().all(|l| l.row == l.col) {
            acc = &acc + c;
        }
    }
    Ok(acc)
}

/// Apply `ε` to one tensor factor: `(ε⊗id)` for `Side::Left`, `(id⊗ε)` for
/// `Side::Right`. The result lives in `single`.
pub fn counit_on(p: &NCPoly, side: Side, single: &Arc<Algebra>) -> Result<NCPoly> {
    require(p, Flavor::TensorSquare)?;
    let terms = p.terms().filter_map(|(w, c)| {
        let (hit, keep): (Vec<Letter>, Vec<Letter>) =
            w.letters().iter().partition(|l| l.side == side);
        if hit.iter().all(|l| l.row == l.col) {
            Some((
                keep.into_iter().map(|l| l.on(Side::Left)).collect::<Word>(),
                c.clone(),
            ))
        } else {
            None
        }
    });
    Ok(single.from_terms(terms))
}

/// The image of a single-copy element in one tensor factor.
pub fn embed(p: &NCPoly, side: Side) -> Result<NCPoly> {
    require(p, Flavor::Single)?;
    let tensor = p.algebra().tensor_square();
    let terms = p.terms().map(|(w, c)| {
        (
            w.letters().iter().map(|l| l.on(side)).collect::<Word>(),
            c.clone(),
        )
    });
    Ok(tensor.from_terms(terms))
}

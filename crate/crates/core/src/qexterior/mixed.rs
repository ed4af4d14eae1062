use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::mono::{ExtMono, XMono, YMono};
use crate::error::{Error, Result};
use crate::ncalg::{Algebra, NCPoly, Word};
use crate::ratfunc::RatFunc;

/// Element of `A (x) Lambda (x) Lambda'`, grouped by exterior monomials.
///
/// The `a`'s, `x`'s and `y`'s commute with each other; `x`'s obey
/// `x_j ^ x_i = -px x_i ^ x_j` and `y`'s `y_j ^ y_i = -py y_i ^ y_j`.
#[derive(Clone)]
pub struct MixedPoly {
    alg: Arc<Algebra>,
    px: RatFunc,
    py: RatFunc,
    terms: BTreeMap<(XMono, YMono), NCPoly>,
}

impl MixedPoly {
    /// Zero with the standard parameters: `px = r`, `py = s^-1`.
    pub fn zero(alg: &Arc<Algebra>) -> MixedPoly {
        let py = alg.s().rf_inv().expect("s is nonzero");
        MixedPoly::zero_with(alg, alg.r().clone(), py)
    }

    pub fn zero_with(alg: &Arc<Algebra>, px: RatFunc, py: RatFunc) -> MixedPoly {
        MixedPoly {
            alg: alg.clone(),
            px,
            py,
            terms: BTreeMap::new(),
        }
    }

    /// A zero sharing this element's algebra and parameters.
    pub fn like(&self) -> MixedPoly {
        MixedPoly::zero_with(&self.alg, self.px.clone(), self.py.clone())
    }

    pub fn monomial(&self, a: NCPoly, x: XMono, y: YMono) -> MixedPoly {
        let mut out = self.like();
        out.add_term(x, y, a);
        out
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }

    pub fn add_term(&mut self, x: XMono, y: YMono, a: NCPoly) {
        if a.is_zero() {
            return;
        }
        let merged = match self.terms.remove(&(x, y)) {
            Some(old) => &old + &a,
            None => a,
        };
        if !merged.is_zero() {
            self.terms.insert((x, y), merged);
        }
    }

    pub fn coeff(&self, x: XMono, y: YMono) -> NCPoly {
        self.terms
            .get(&(x, y))
            .cloned()
            .unwrap_or_else(|| self.alg.zero())
    }

    /// `(x, y) -> a-part` view.
    pub fn components(&self) -> impl Iterator<Item = (&(XMono, YMono), &NCPoly)> {
        self.terms.iter()
    }

    /// Fully expanded `(a-word, x, y, coefficient)` view.
    pub fn triples(&self) -> Vec<(Word, XMono, YMono, RatFunc)> {
        let mut out = Vec::new();
        for (&(x, y), a) in &self.terms {
            for (w, c) in a.terms() {
                out.push((w.clone(), x, y, c.clone()));
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.values().map(NCPoly::nterms).sum()
    }

    fn check(&self, other: &MixedPoly) -> Result<()> {
        if !self.alg.zero().same_algebra(&other.alg.zero())
            || self.px != other.px
            || self.py != other.py
        {
            return Err(Error::MixedAlgebras);
        }
        Ok(())
    }

    pub fn try_add(&self, other: &MixedPoly) -> Result<MixedPoly> {
        self.check(other)?;
        let mut out = self.clone();
        for (&(x, y), a) in &other.terms {
            out.add_term(x, y, a.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &RatFunc) -> MixedPoly {
        let mut out = self.like();
        for (&(x, y), a) in &self.terms {
            out.add_term(x, y, a.scale(c));
        }
        out
    }

    /// Product in the mixed algebra: `(a x y)(a' x' y') = (a a')(x ^ x')(y ^ y')`.
    pub fn try_mul(&self, other: &MixedPoly) -> Result<MixedPoly> {
        self.check(other)?;
        let mut out = self.like();
        let mut px_pow = PowCache::new(-&self.px);
        let mut py_pow = PowCache::new(-&self.py);
        for (&(x1, y1), a1) in &self.terms {
            for (&(x2, y2), a2) in &other.terms {
                let (ix, x) = match x1.merge(x2) {
                    Some(v) => v,
                    None => continue,
                };
                let (iy, y) = match y1.merge(y2) {
                    Some(v) => v,
                    None => continue,
                };
                let c = px_pow.get(ix) * py_pow.get(iy);
                out.add_term(x, y, (a1 * a2).scale(&c));
            }
        }
        Ok(out)
    }

    /// `self ^ self ^ ... ^ self` (`k` factors); `k = 0` gives the unit.
    pub fn wedge_power(&self, k: usize) -> MixedPoly {
        let mut acc = self.monomial(self.alg.one(), ExtMono::unit(), ExtMono::unit());
        for _ in 0..k {
            acc = acc.try_mul(self).expect("same parameters");
        }
        acc
    }
}

struct PowCache {
    base: RatFunc,
    pows: Vec<RatFunc>,
}

impl PowCache {
    fn new(base: RatFunc) -> PowCache {
        PowCache {
            pows: vec![RatFunc::one(base.vars())],
            base,
        }
    }

    fn get(&mut self, k: usize) -> &RatFunc {
        while self.pows.len() <= k {
            let next = &self.pows[self.pows.len() - 1] * &self.base;
            self.pows.push(next);
        }
        &self.pows[k]
    }
}

impl PartialEq for MixedPoly {
    fn eq(&self, other: &Self) -> bool {
        self.check(other).is_ok() && self.terms == other.terms
    }
}

impl fmt::Debug for MixedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for MixedPoly {
    /// `(a11*a12)*x[1,2]*y[] + ...`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (&(x, y), a)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({})", a)?;
            if !x.is_unit() {
                write!(f, "*x{:?}", x.indices())?;
            }
            if !y.is_unit() {
                write!(f, "*y{:?}", y.indices())?;
            }
        }
        Ok(())
    }
}

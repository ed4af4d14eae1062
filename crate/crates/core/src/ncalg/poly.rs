use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::algebra::{Algebra, Flavor, Strategy};
use super::word::{render_letter, Letter, Word};
use crate::error::{Error, Result};
use crate::ratfunc::RatFunc;

/// Element of an [`Algebra`]: a finite map from words to coefficients.
///
/// Values produced by arithmetic are always canonical (every word normal).
#[derive(Clone)]
pub struct NCPoly {
    alg: Arc<Algebra>,
    terms: BTreeMap<Word, RatFunc>,
}

impl NCPoly {
    pub(crate) fn from_canonical(alg: Arc<Algebra>, terms: BTreeMap<Word, RatFunc>) -> NCPoly {
        debug_assert!(terms.keys().all(|w| alg.is_normal(w)));
        NCPoly { alg, terms }
    }

    pub(crate) fn from_raw(alg: Arc<Algebra>, terms: BTreeMap<Word, RatFunc>) -> NCPoly {
        NCPoly { alg, terms }
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }

    /// Terms in canonical order (word length, then lexicographic).
    pub fn terms(&self) -> impl Iterator<Item = (&Word, &RatFunc)> {
        self.terms.iter()
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, w: &Word) -> Option<&RatFunc> {
        self.terms.get(w)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_canonical(&self) -> bool {
        self.terms.keys().all(|w| self.alg.is_normal(w))
    }

    /// Same algebra (by specification) as `other`.
    pub fn same_algebra(&self, other: &NCPoly) -> bool {
        Arc::ptr_eq(&self.alg, &other.alg) || self.alg.spec() == other.alg.spec()
    }

    fn check(&self, other: &NCPoly) -> Result<()> {
        if self.same_algebra(other) {
            Ok(())
        } else {
            Err(Error::MixedAlgebras)
        }
    }

    pub fn normalize(&self) -> NCPoly {
        self.normalize_with(Strategy::Memoized)
    }

    pub fn normalize_with(&self, strategy: Strategy) -> NCPoly {
        if strategy == Strategy::Memoized && self.is_canonical() {
            return self.clone();
        }
        self.alg.from_terms_with(
            self.terms.iter().map(|(w, c)| (w.clone(), c.clone())),
            strategy,
        )
    }

    fn canonical_terms(&self) -> std::borrow::Cow<'_, BTreeMap<Word, RatFunc>> {
        if self.is_canonical() {
            std::borrow::Cow::Borrowed(&self.terms)
        } else {
            std::borrow::Cow::Owned(self.normalize().terms)
        }
    }

    pub fn try_add(&self, other: &NCPoly) -> Result<NCPoly> {
        self.check(other)?;
        let mut terms = self.canonical_terms().into_owned();
        for (w, c) in other.canonical_terms().iter() {
            let sum = match terms.get(w) {
                Some(a) => a + c,
                None => c.clone(),
            };
            if sum.is_zero() {
                terms.remove(w);
            } else {
                terms.insert(w.clone(), sum);
            }
        }
        Ok(NCPoly::from_canonical(self.alg.clone(), terms))
    }

    pub fn try_sub(&self, other: &NCPoly) -> Result<NCPoly> {
        self.try_add(&other.neg_ref())
    }

    pub fn try_mul(&self, other: &NCPoly) -> Result<NCPoly> {
        self.check(other)?;
        let terms = self
            .alg
            .mul_terms(&self.canonical_terms(), &other.canonical_terms());
        Ok(NCPoly::from_canonical(self.alg.clone(), terms))
    }

    fn neg_ref(&self) -> NCPoly {
        NCPoly {
            alg: self.alg.clone(),
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &RatFunc) -> NCPoly {
        if c.is_zero() {
            return self.alg.zero();
        }
        NCPoly {
            alg: self.alg.clone(),
            terms: self.terms.iter().map(|(w, a)| (w.clone(), a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> NCPoly {
        let mut acc = self.alg.one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `equals(p, q)` iff `p - q` normalizes to zero.
    pub fn equals(&self, other: &NCPoly) -> Result<bool> {
        Ok(self.try_sub(other)?.is_zero())
    }

    /// Coefficient of the empty word.
    pub fn constant_term(&self) -> RatFunc {
        self.terms
            .get(&Word::empty())
            .cloned()
            .unwrap_or_else(|| RatFunc::zero(self.alg.vars()))
    }

    /// Lengths of the words present.
    pub fn degrees(&self) -> std::collections::BTreeSet<usize> {
        self.terms.keys().map(Word::len).collect()
    }

    /// Apply a letter-wise substitution (an algebra homomorphism from this
    /// algebra into `target`).
    pub fn map_letters<F>(&self, target: &Arc<Algebra>, image: F) -> NCPoly
    where
        F: Fn(Letter) -> NCPoly,
    {
        let mut acc = target.zero();
        for (w, c) in &self.terms {
            let mut t = target.scalar(c.clone());
            for &l in w.letters() {
                t = &t * &image(l);
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Deterministic serialization: terms in canonical order, words as
    /// `[copy, row, col]` triples.
    pub fn to_serialized(&self) -> SerializedPoly {
        SerializedPoly {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| SerializedTerm {
                    word: w.triples(),
                    coeff: c.to_string(),
                })
                .collect(),
        }
    }

    fn render_word(&self, w: &Word, out: &mut String) -> fmt::Result {
        use fmt::Write;
        let spec = self.alg.spec();
        let tensor = spec.flavor == Flavor::TensorSquare;
        let wide = spec.n >= 10;
        for (i, l) in w.letters().iter().enumerate() {
            if i > 0 {
                out.write_char('*')?;
            }
            render_letter(out, l, spec.symbol, tensor, wide)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SerializedTerm {
    pub word: Vec<[u8; 3]>,
    pub coeff: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SerializedPoly {
    pub terms: Vec<SerializedTerm>,
}

impl PartialEq for NCPoly {
    fn eq(&self, other: &Self) -> bool {
        self.same_algebra(other) && self.canonical_terms() == other.canonical_terms()
    }
}

impl fmt::Display for NCPoly {
    /// `a11*a22 - r*a12*a21`, terms in canonical order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (w, c)) in self.terms.iter().enumerate() {
            let mut word = String::new();
            self.render_word(w, &mut word)?;
            let (factor, negated) = c.render_factor();
            let unit = factor == "1";
            let body = match (w.is_empty(), unit) {
                (true, _) => factor,
                (false, true) => word,
                (false, false) => format!("{}*{}", factor, word),
            };
            match (idx, negated) {
                (0, false) => write!(f, "{}", body)?,
                (0, true) => write!(f, "-{}", body)?,
                (_, false) => write!(f, " + {}", body)?,
                (_, true) => write!(f, " - {}", body)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NCPoly[{}]", self)
    }
}

impl<'a> Add<&'a NCPoly> for &'a NCPoly {
    type Output = NCPoly;
    fn add(self, rhs: &NCPoly) -> NCPoly {
        self.try_add(rhs).expect("operands from the same algebra")
    }
}

impl<'a> Sub<&'a NCPoly> for &'a NCPoly {
    type Output = NCPoly;
    fn sub(self, rhs: &NCPoly) -> NCPoly {
        self.try_sub(rhs).expect("operands from the same algebra")
    }
}

impl<'a> Mul<&'a NCPoly> for &'a NCPoly {
    type Output = NCPoly;
    fn mul(self, rhs: &NCPoly) -> NCPoly {
        self.try_mul(rhs).expect("operands from the same algebra")
    }
}

impl Neg for &NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        self.neg_ref()
    }
}

impl std::iter::Sum for NCPoly {
    /// # Panics
    /// On an empty iterator, which has no algebra to live in.
    fn sum<I: Iterator<Item = NCPoly>>(mut iter: I) -> NCPoly {
        let first = iter.next().expect("sum of at least one polynomial");
        iter.fold(first, |acc, p| &acc + &p)
    }
}

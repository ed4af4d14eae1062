//! Exact rational functions over the rationals in `{r,s}`, `{q}` or no
//! variables at all.
//!
//! A [`RatFunc`] is always stored in canonical form: numerator and
//! denominator coprime (integer content included), the denominator's
//! graded-lex leading coefficient positive, zero as `0/1`. Two values are
//! equal iff their canonical forms are identical, so `==` is exact.
//! Laurent monomials such as `r^-1` are fractions with monomial denominators.

mod gcd;
mod poly;

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

pub use gcd::poly_gcd;
pub use poly::{IntPoly, Mono, VarSet};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: IntPoly,
    den: IntPoly,
}

impl RatFunc {
    /// Canonical form of `num / den`.
    pub fn reduce(num: IntPoly, den: IntPoly) -> Result<RatFunc> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let vars = num.vars().join(den.vars());
        if num.is_zero() {
            return Ok(RatFunc::zero(vars));
        }
        if den.is_one() {
            return Ok(RatFunc {
                num: num.with_vars(vars),
                den: den.with_vars(vars),
            });
        }
        let g = poly_gcd(&num, &den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.exact_div(&g).expect("gcd divides numerator"),
                den.exact_div(&g).expect("gcd divides denominator"),
            )
        };
        if den.lead_is_negative() {
            num = -num;
            den = -den;
        }
        Ok(RatFunc {
            num: num.with_vars(vars),
            den: den.with_vars(vars),
        })
    }

    pub fn zero(vars: VarSet) -> RatFunc {
        RatFunc {
            num: IntPoly::zero(vars),
            den: IntPoly::one(vars),
        }
    }

    pub fn one(vars: VarSet) -> RatFunc {
        RatFunc::from_poly(IntPoly::one(vars))
    }

    pub fn from_poly(p: IntPoly) -> RatFunc {
        let vars = p.vars();
        RatFunc {
            num: p,
            den: IntPoly::one(vars),
        }
    }

    pub fn from_int(c: i64) -> RatFunc {
        RatFunc::from_poly(IntPoly::constant(VarSet::Const, BigInt::from(c)))
    }

    pub fn from_bigint(c: BigInt) -> RatFunc {
        RatFunc::from_poly(IntPoly::constant(VarSet::Const, c))
    }

    pub fn from_rational(c: &BigRational) -> RatFunc {
        RatFunc::reduce(
            IntPoly::constant(VarSet::Const, c.numer().clone()),
            IntPoly::constant(VarSet::Const, c.denom().clone()),
        )
        .expect("rational has nonzero denominator")
    }

    /// The `i`-th variable of `vars` as a rational function.
    pub fn var(vars: VarSet, i: usize) -> RatFunc {
        RatFunc::from_poly(IntPoly::var(vars, i))
    }

    pub fn r() -> RatFunc {
        RatFunc::var(VarSet::RS, 0)
    }

    pub fn s() -> RatFunc {
        RatFunc::var(VarSet::RS, 1)
    }

    pub fn q() -> RatFunc {
        RatFunc::var(VarSet::Q, 0)
    }

    pub fn num(&self) -> &IntPoly {
        &self.num
    }

    pub fn den(&self) -> &IntPoly {
        &self.den
    }

    pub fn vars(&self) -> VarSet {
        self.num.vars().join(self.den.vars())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// The value as a rational number, when no variable occurs.
    pub fn to_rational(&self) -> Option<BigRational> {
        if !self.is_constant() {
            return None;
        }
        Some(BigRational::new(
            self.num.constant_term(),
            self.den.constant_term(),
        ))
    }

    /// A single term with coefficient of absolute value 1 over a monomial,
    /// e.g. `-r`, `s^2`, `1/r`. Such values render without parentheses.
    fn is_unit_monomial(&self) -> bool {
        self.num.is_monomial()
            && self.den.is_monomial()
            && self.num.lead().is_some_and(|(_, c)| c.abs().is_one())
            && self.den.lead().is_some_and(|(_, c)| c.is_one())
    }

    pub fn rf_add(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return other.clone().lift(self.vars());
        }
        if other.is_zero() {
            return self.clone().lift(other.vars());
        }
        if self.den == other.den {
            let num = &self.num + &other.num;
            return RatFunc::reduce(num, self.den.clone()).expect("nonzero denominator");
        }
        if self.den.is_monomial() && other.den.is_monomial() {
            let (m1, c1) = self.den.lead().unwrap();
            let (m2, c2) = other.den.lead().unwrap();
            let lm = m1.lcm(m2);
            let lc = num_integer::Integer::lcm(c1, c2);
            let f1 = (lm.div(m1).unwrap(), &lc / c1);
            let f2 = (lm.div(m2).unwrap(), &lc / c2);
            let num = &self.num.mul_term(&f1.0, &f1.1) + &other.num.mul_term(&f2.0, &f2.1);
            let den = IntPoly::monomial(self.vars().join(other.vars()), lm, lc);
            return RatFunc::reduce(num, den).expect("nonzero denominator");
        }
        let num = &(&self.num * &other.den) + &(&self.den * &other.num);
        let den = &self.den * &other.den;
        RatFunc::reduce(num, den).expect("nonzero denominator")
    }

    pub fn rf_sub(&self, other: &RatFunc) -> RatFunc {
        self.rf_add(&other.rf_neg())
    }

    pub fn rf_neg(&self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn rf_mul(&self, other: &RatFunc) -> RatFunc {
        let vars = self.vars().join(other.vars());
        if self.is_zero() || other.is_zero() {
            return RatFunc::zero(vars);
        }
        if self.den.is_one() && other.den.is_one() {
            return RatFunc::from_poly((&self.num * &other.num).with_vars(vars));
        }
        // cross-cancel; the result is canonical without a further gcd
        let g1 = poly_gcd(&self.num, &other.den);
        let g2 = poly_gcd(&other.num, &self.den);
        let n1 = self.num.exact_div(&g1).expect("gcd divides");
        let d2 = other.den.exact_div(&g1).expect("gcd divides");
        let n2 = other.num.exact_div(&g2).expect("gcd divides");
        let d1 = self.den.exact_div(&g2).expect("gcd divides");
        RatFunc {
            num: (&n1 * &n2).with_vars(vars),
            den: (&d1 * &d2).with_vars(vars),
        }
    }

    pub fn rf_inv(&self) -> Result<RatFunc> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (mut num, mut den) = (self.den.clone(), self.num.clone());
        if den.lead_is_negative() {
            num = -num;
            den = -den;
        }
        Ok(RatFunc { num, den })
    }

    pub fn rf_div(&self, other: &RatFunc) -> Result<RatFunc> {
        Ok(self.rf_mul(&other.rf_inv()?))
    }

    pub fn rf_eq(&self, other: &RatFunc) -> bool {
        self == other
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, e: i64) -> Result<RatFunc> {
        let base = if e < 0 { self.rf_inv()? } else { self.clone() };
        let mut acc = RatFunc::one(self.vars());
        for _ in 0..e.unsigned_abs() {
            acc = acc.rf_mul(&base);
        }
        Ok(acc)
    }

    pub fn scale_int(&self, c: i64) -> RatFunc {
        self.rf_mul(&RatFunc::from_int(c))
    }

    fn lift(mut self, vars: VarSet) -> RatFunc {
        self.num = self.num.with_vars(vars);
        self.den = self.den.with_vars(vars);
        self
    }

    /// Replace each variable by a rational function over the target field.
    ///
    /// Fails with [`Error::SpecializationPole`] when the denominator maps to zero.
    pub fn substitute(&self, assignment: &[(&str, RatFunc)]) -> Result<RatFunc> {
        let names = self.vars().names();
        let mut values = Vec::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            let used = self.num.degree_in(i) > 0 || self.den.degree_in(i) > 0;
            match assignment.iter().find(|(n, _)| n == name) {
                Some((_, v)) => values.push(Some(v.clone())),
                None if used => return Err(Error::UnassignedVariable(name)),
                None => values.push(None),
            }
        }
        let target = values
            .iter()
            .flatten()
            .fold(VarSet::Const, |acc, v| acc.join(v.vars()));
        let num = eval_poly(&self.num, &values, target);
        let den = eval_poly(&self.den, &values, target);
        if den.is_zero() {
            return Err(Error::SpecializationPole);
        }
        num.rf_div(&den)
    }
}

fn eval_poly(p: &IntPoly, values: &[Option<RatFunc>], target: VarSet) -> RatFunc {
    let mut acc = RatFunc::zero(target);
    for (m, c) in p.terms() {
        let mut t = RatFunc::from_bigint(c.clone());
        for (i, v) in values.iter().enumerate() {
            if m.0[i] > 0 {
                let v = v.as_ref().expect("used variable is assigned");
                t = t.rf_mul(&v.pow(m.0[i] as i64).expect("non-negative power"));
            }
        }
        acc = acc.rf_add(&t);
    }
    acc
}

/// `[n]_v = 1 + v + ... + v^(n-1)`, defined for `n >= 1`.
pub fn q_integer(n: usize, v: &RatFunc) -> Result<RatFunc> {
    if n == 0 {
        return Err(Error::InvalidArgument("q-integer [0] is undefined".into()));
    }
    let mut acc = RatFunc::zero(v.vars());
    let mut pw = RatFunc::one(v.vars());
    for _ in 0..n {
        acc = acc.rf_add(&pw);
        pw = pw.rf_mul(v);
    }
    Ok(acc)
}

/// `[n]_v! = [n]_v [n-1]_v ... [1]_v`, defined for `n >= 1`.
pub fn q_factorial(n: usize, v: &RatFunc) -> Result<RatFunc> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "q-factorial [0]! is undefined".into(),
        ));
    }
    let mut acc = RatFunc::one(v.vars());
    for k in 1..=n {
        acc = acc.rf_mul(&q_integer(k, v)?);
    }
    Ok(acc)
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &IntPoly| {
            let s = p.to_string();
            if p.nterms() > 1 || (p.is_monomial() && !p.is_constant() && s.contains('*')) {
                format!("({})", s)
            } else {
                s
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc[{}]", self)
    }
}

impl RatFunc {
    /// Rendering used as a multiplicative prefix: `r`, `-r`, `(r - s)`, `1/r`.
    /// The returned flag is true when the value was negated to pull out a
    /// leading minus sign.
    pub fn render_factor(&self) -> (String, bool) {
        let single_negative = self.num.is_monomial() && self.num.lead_is_negative();
        let v = if single_negative {
            self.rf_neg()
        } else {
            self.clone()
        };
        let s = v.to_string();
        let bare = v.is_unit_monomial() || (v.den.is_one() && v.num.is_monomial());
        (if bare { s } else { format!("({})", s) }, single_negative)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $call:ident) => {
        impl<'a> $tr<&'a RatFunc> for &'a RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: &RatFunc) -> RatFunc {
                self.$call(rhs)
            }
        }
        impl $tr<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                self.$call(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, rf_add);
forward_binop!(Sub, sub, rf_sub);
forward_binop!(Mul, mul, rf_mul);

impl<'a> Div<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    /// # Panics
    /// On division by zero; use [`RatFunc::rf_div`] for a fallible version.
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self.rf_div(rhs).expect("division by zero")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        self.rf_neg()
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        self.rf_neg()
    }
}

impl From<i64> for RatFunc {
    fn from(c: i64) -> Self {
        RatFunc::from_int(c)
    }
}

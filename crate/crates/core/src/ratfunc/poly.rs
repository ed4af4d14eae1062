//! Sparse integer polynomials in at most two variables.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// The variable list a polynomial lives over.
///
/// `Const` polynomials carry no variables and embed into either of the
/// other two sets, so numeric constants can be mixed freely with `{r,s}`
/// or `{q}` values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VarSet {
    Const,
    Q,
    RS,
}

impl VarSet {
    pub fn names(self) -> &'static [&'static str] {
        match self {
            VarSet::Const => &[],
            VarSet::Q => &["q"],
            VarSet::RS => &["r", "s"],
        }
    }

    pub fn len(self) -> usize {
        self.names().len()
    }

    pub fn is_empty(self) -> bool {
        self == VarSet::Const
    }

    /// Common variable set of two operands.
    ///
    /// # Panics
    /// If the operands live over `{q}` and `{r,s}` respectively.
    pub fn join(self, other: VarSet) -> VarSet {
        match (self, other) {
            (a, b) if a == b => a,
            (VarSet::Const, b) => b,
            (a, VarSet::Const) => a,
            (a, b) => panic!("mixed coefficient fields {:?} and {:?}", a, b),
        }
    }
}

/// Exponent vector. Unused slots stay zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Mono(pub [u32; 2]);

impl Mono {
    pub const ONE: Mono = Mono([0, 0]);

    pub fn var(i: usize, e: u32) -> Mono {
        let mut m = [0; 2];
        m[i] = e;
        Mono(m)
    }

    pub fn degree(&self) -> u32 {
        self.0[0] + self.0[1]
    }

    pub fn is_one(&self) -> bool {
        self.0 == [0, 0]
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        Mono([self.0[0] + other.0[0], self.0[1] + other.0[1]])
    }

    pub fn div(&self, other: &Mono) -> Option<Mono> {
        Some(Mono([
            self.0[0].checked_sub(other.0[0])?,
            self.0[1].checked_sub(other.0[1])?,
        ]))
    }

    pub fn gcd(&self, other: &Mono) -> Mono {
        Mono([self.0[0].min(other.0[0]), self.0[1].min(other.0[1])])
    }

    pub fn lcm(&self, other: &Mono) -> Mono {
        Mono([self.0[0].max(other.0[0]), self.0[1].max(other.0[1])])
    }
}

// graded, then lexicographic with the first variable most significant
impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.0[0].cmp(&other.0[0]))
            .then(self.0[1].cmp(&other.0[1]))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial with arbitrary-precision integer coefficients.
///
/// Terms are keyed by exponent vector in graded-lex order; zero coefficients
/// are never stored.
#[derive(Clone)]
pub struct IntPoly {
    vars: VarSet,
    terms: BTreeMap<Mono, BigInt>,
}

impl IntPoly {
    pub fn zero(vars: VarSet) -> Self {
        IntPoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: VarSet) -> Self {
        Self::constant(vars, BigInt::one())
    }

    pub fn constant(vars: VarSet, c: BigInt) -> Self {
        Self::monomial(vars, Mono::ONE, c)
    }

    pub fn monomial(vars: VarSet, m: Mono, c: BigInt) -> Self {
        debug_assert!(vars.len() == 2 || m.0[1] == 0);
        debug_assert!(!vars.is_empty() || m.0[0] == 0);
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        IntPoly { vars, terms }
    }

    /// The `i`-th variable of `vars`.
    pub fn var(vars: VarSet, i: usize) -> Self {
        assert!(i < vars.len(), "variable index {} out of range", i);
        Self::monomial(vars, Mono::var(i, 1), BigInt::one())
    }

    /// Build from `(exponents, coefficient)` pairs; repeated exponents are summed.
    pub fn from_terms<I>(vars: VarSet, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, BigInt)>,
    {
        let mut p = IntPoly::zero(vars);
        for (exps, c) in terms {
            assert_eq!(exps.len(), vars.len(), "exponent vector length");
            let mut m = [0; 2];
            m[..exps.len()].copy_from_slice(&exps);
            p.add_term(Mono(m), c);
        }
        p
    }

    pub fn vars(&self) -> VarSet {
        self.vars
    }

    pub(crate) fn with_vars(mut self, vars: VarSet) -> Self {
        self.vars = self.vars.join(vars);
        self
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Mono::is_one)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Mono, &BigInt)> {
        self.terms.iter()
    }

    /// Exponent vectors trimmed to the variable count, descending order.
    pub fn exponent_terms(&self) -> Vec<(Vec<u32>, BigInt)> {
        let k = self.vars.len();
        self.terms
            .iter()
            .rev()
            .map(|(m, c)| (m.0[..k].to_vec(), c.clone()))
            .collect()
    }

    pub fn lead(&self) -> Option<(&Mono, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn constant_term(&self) -> BigInt {
        self.terms.get(&Mono::ONE).cloned().unwrap_or_default()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Mono::degree).max().unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.0[var]).max().unwrap_or(0)
    }

    /// Smallest exponent of each variable over all terms.
    pub fn min_mono(&self) -> Mono {
        let mut it = self.terms.keys();
        let first = match it.next() {
            Some(m) => *m,
            None => return Mono::ONE,
        };
        it.fold(first, |acc, m| acc.gcd(m))
    }

    fn add_term(&mut self, m: Mono, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero(self.vars);
        }
        IntPoly {
            vars: self.vars,
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    pub fn mul_term(&self, mono: &Mono, c: &BigInt) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero(self.vars);
        }
        IntPoly {
            vars: self.vars,
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.mul(mono), a * c))
                .collect(),
        }
    }

    /// Divide every term by a monomial and an integer, both of which must divide exactly.
    pub fn div_term(&self, mono: &Mono, c: &BigInt) -> IntPoly {
        IntPoly {
            vars: self.vars,
            terms: self
                .terms
                .iter()
                .map(|(m, a)| {
                    let q = m.div(mono).expect("monomial divides");
                    debug_assert!(a.is_multiple_of(c));
                    (q, a / c)
                })
                .collect(),
        }
    }

    /// Positive gcd of all coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn pow(&self, e: u32) -> IntPoly {
        let mut acc = IntPoly::one(self.vars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn exact_div(&self, d: &IntPoly) -> Option<IntPoly> {
        let vars = self.vars.join(d.vars);
        let (dm, dc) = d.lead().expect("division by the zero polynomial");
        if d.is_monomial() {
            let (dm, dc) = (*dm, dc.clone());
            let mut q = IntPoly::zero(vars);
            for (m, c) in &self.terms {
                let (qc, rem) = c.div_rem(&dc);
                if !rem.is_zero() {
                    return None;
                }
                q.terms.insert(m.div(&dm)?, qc);
            }
            return Some(q);
        }
        let mut rem = self.clone().with_vars(vars);
        let mut quot = IntPoly::zero(vars);
        while let Some((rm, rc)) = rem.lead() {
            let qm = rm.div(dm)?;
            let (qc, r) = rc.div_rem(dc);
            if !r.is_zero() {
                return None;
            }
            rem = &rem - &d.mul_term(&qm, &qc);
            quot.terms.insert(qm, qc);
        }
        Some(quot)
    }

    /// Coefficient of `x_var^k`, as a polynomial with `x_var` absent.
    pub fn coeff_in(&self, var: usize, k: u32) -> IntPoly {
        IntPoly {
            vars: self.vars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.0[var] == k)
                .map(|(m, c)| {
                    let mut e = m.0;
                    e[var] = 0;
                    (Mono(e), c.clone())
                })
                .collect(),
        }
    }

    /// Leading coefficient with respect to `x_var`.
    pub fn lc_in(&self, var: usize) -> IntPoly {
        self.coeff_in(var, self.degree_in(var))
    }

    /// Evaluate at integer points (one per variable).
    pub fn eval_int(&self, point: &[BigInt]) -> BigInt {
        let mut acc = BigInt::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, x) in point.iter().enumerate().take(self.vars.len()) {
                t *= num_traits::pow(x.clone(), m.0[i] as usize);
            }
            acc += t;
        }
        acc
    }

    /// Whether the leading coefficient (graded-lex) is negative.
    pub fn lead_is_negative(&self) -> bool {
        self.lead().is_some_and(|(_, c)| c.is_negative())
    }

    pub(crate) fn fmt_with(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let names = self.vars.names();
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let mut factors = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(abs.to_string());
            }
            for (i, name) in names.iter().enumerate() {
                match m.0[i] {
                    0 => {}
                    1 => factors.push((*name).to_string()),
                    e => factors.push(format!("{}^{}", name, e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

// Constants compare equal across variable sets.
impl PartialEq for IntPoly {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && (self.vars == other.vars || self.is_constant())
    }
}

impl Eq for IntPoly {}

impl std::hash::Hash for IntPoly {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(f)
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly[{}]", self)
    }
}

impl<'a> Add<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let (big, small) = if self.terms.len() >= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = big.clone().with_vars(small.vars);
        for (m, c) in &small.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let mut out = self.clone().with_vars(rhs.vars);
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl<'a> Mul<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        let mut out = IntPoly::zero(self.vars.join(rhs.vars));
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            vars: self.vars,
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(mut self) -> IntPoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

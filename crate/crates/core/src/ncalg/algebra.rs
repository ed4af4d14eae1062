use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use num_rational::BigRational;
use smallvec::{smallvec, SmallVec};

use super::poly::NCPoly;
use super::word::{Letter, Side, Word};
use crate::error::{Error, Result};
use crate::ratfunc::{RatFunc, VarSet};

/// Which coefficient field the parameters `r, s` live in.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Regime {
    /// Independent indeterminates, coefficients in Q(r,s).
    Generic,
    /// `r = q`, `s = q^-1`, coefficients in Q(q).
    QInverse,
    /// `r = q`, `s = -q^-1`, coefficients in Q(q).
    QNegative,
    /// Explicit rational values.
    Numeric { r: BigRational, s: BigRational },
}

impl Regime {
    pub fn classical() -> Regime {
        Regime::Numeric {
            r: BigRational::from_integer(1.into()),
            s: BigRational::from_integer(1.into()),
        }
    }

    /// Values of `r` and `s` in the target field.
    pub fn params(&self) -> (RatFunc, RatFunc) {
        match self {
            Regime::Generic => (RatFunc::r(), RatFunc::s()),
            Regime::QInverse => (RatFunc::q(), RatFunc::q().rf_inv().expect("q is nonzero")),
            Regime::QNegative => (RatFunc::q(), -RatFunc::q().rf_inv().expect("q is nonzero")),
            Regime::Numeric { r, s } => (RatFunc::from_rational(r), RatFunc::from_rational(s)),
        }
    }

    pub fn vars(&self) -> VarSet {
        match self {
            Regime::Generic => VarSet::RS,
            Regime::QInverse | Regime::QNegative => VarSet::Q,
            Regime::Numeric { .. } => VarSet::Const,
        }
    }

    /// The single parameter `q` of the specialized regimes.
    pub fn q(&self) -> Option<RatFunc> {
        match self {
            Regime::QInverse | Regime::QNegative => Some(RatFunc::q()),
            _ => None,
        }
    }

    /// The regime whose parameters are exactly `(r, s)`, if any.
    pub fn detect(r: &RatFunc, s: &RatFunc) -> Option<Regime> {
        [Regime::Generic, Regime::QInverse, Regime::QNegative]
            .into_iter()
            .find(|g| g.params() == (r.clone(), s.clone()))
            .or_else(|| match (r.to_rational(), s.to_rational()) {
                (Some(r), Some(s)) => Some(Regime::Numeric { r, s }),
                _ => None,
            })
    }

    pub fn label(&self) -> String {
        match self {
            Regime::Generic => "generic".into(),
            Regime::QInverse => "r=s^-1=q".into(),
            Regime::QNegative => "r=-s^-1=q".into(),
            Regime::Numeric { r, s } => format!("numeric(r={},s={})", r, s),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Flavor {
    /// `A_{r,s}(n)`.
    Single,
    /// `A_{r,s}(n) ⊗ A_{r,s}(n)`: each copy satisfies the relations, the copies commute.
    TensorSquare,
    /// Free associative algebra on `n^2` symbols; every word is normal.
    Free,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlgebraSpec {
    pub n: usize,
    pub r: RatFunc,
    pub s: RatFunc,
    pub flavor: Flavor,
    /// Rendering symbol for single-copy and free letters.
    pub symbol: char,
    corrupted: bool,
}

impl AlgebraSpec {
    pub fn new(n: usize, r: RatFunc, s: RatFunc, flavor: Flavor) -> Result<AlgebraSpec> {
        if n == 0 || n > 255 {
            return Err(Error::InvalidArgument(format!(
                "matrix size {} out of range 1..=255",
                n
            )));
        }
        if r.is_zero() || s.is_zero() {
            return Err(Error::InvalidArgument(
                "parameters r and s must be nonzero".into(),
            ));
        }
        r.vars().join(s.vars());
        Ok(AlgebraSpec {
            n,
            r,
            s,
            flavor,
            symbol: 'a',
            corrupted: false,
        })
    }

    pub fn single(n: usize, regime: &Regime) -> Result<AlgebraSpec> {
        let (r, s) = regime.params();
        AlgebraSpec::new(n, r, s, Flavor::Single)
    }

    /// Free algebra on symbols `{symbol}ij`, coefficients in any field.
    pub fn free(n: usize, symbol: char) -> Result<AlgebraSpec> {
        let mut spec =
            AlgebraSpec::new(n, RatFunc::from_int(1), RatFunc::from_int(1), Flavor::Free)?;
        spec.symbol = symbol;
        Ok(spec)
    }

    /// Test hook: perturbs the coefficient of the `a_{jk} a_{il} -> rs a_{il} a_{jk}`
    /// rule so that harness negative controls can be exercised.
    #[doc(hidden)]
    pub fn corrupted(mut self) -> AlgebraSpec {
        self.corrupted = true;
        self
    }

    pub fn vars(&self) -> VarSet {
        self.r.vars().join(self.s.vars())
    }
}

/// Normal-form reduction order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Insert letters one at a time into already-normal suffixes, caching
    /// every `(letter, normal word)` result.
    Memoized,
    /// Worklist, always rewriting the leftmost reducible pair.
    Leftmost,
    /// Worklist, always rewriting the rightmost reducible pair.
    Rightmost,
    /// Worklist, pseudo-random reducible pair derived from the seed.
    Seeded(u64),
}

type Terms = Vec<(Word, RatFunc)>;

/// A rewrite of one adjacent pair: at most two replacement pairs.
pub(crate) type PairRewrite<'a> = SmallVec<[(Letter, Letter, &'a RatFunc); 2]>;

pub struct Algebra {
    spec: AlgebraSpec,
    one: RatFunc,
    r_inv: RatFunc,
    s: RatFunc,
    rs: RatFunc,
    correction: RatFunc,
    memo_len: usize,
    cache: RwLock<HashMap<(Letter, Word), Arc<Terms>>>,
    tensor: OnceLock<Arc<Algebra>>,
}

impl std::fmt::Debug for Algebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Algebra").field("spec", &self.spec).finish()
    }
}

impl Algebra {
    pub fn new(spec: AlgebraSpec) -> Arc<Algebra> {
        Algebra::with_memo_bound(spec, usize::MAX)
    }

    /// Like [`Algebra::new`] but only caches insertions into normal words of
    /// length below `memo_len`.
    pub fn with_memo_bound(spec: AlgebraSpec, memo_len: usize) -> Arc<Algebra> {
        let vars = spec.vars();
        let r_inv = spec.r.rf_inv().expect("r is nonzero");
        let mut rs = &spec.r * &spec.s;
        if spec.corrupted {
            rs = rs.scale_int(2);
        }
        let correction = -(&spec.r - &spec.s);
        Arc::new(Algebra {
            one: RatFunc::one(vars),
            r_inv,
            s: spec.s.clone(),
            rs,
            correction,
            memo_len,
            cache: RwLock::new(HashMap::new()),
            tensor: OnceLock::new(),
            spec,
        })
    }

    pub fn single(n: usize, regime: &Regime) -> Result<Arc<Algebra>> {
        Ok(Algebra::new(AlgebraSpec::single(n, regime)?))
    }

    pub fn free(n: usize, symbol: char) -> Result<Arc<Algebra>> {
        Ok(Algebra::new(AlgebraSpec::free(n, symbol)?))
    }

    pub fn spec(&self) -> &AlgebraSpec {
        &self.spec
    }

    pub fn n(&self) -> usize {
        self.spec.n
    }

    pub fn flavor(&self) -> Flavor {
        self.spec.flavor
    }

    pub fn vars(&self) -> VarSet {
        self.spec.vars()
    }

    /// Label of the parameter regime, `custom(r=..,s=..)` when none matches.
    pub fn regime_label(&self) -> String {
        match Regime::detect(&self.spec.r, &self.spec.s) {
            Some(g) => g.label(),
            None => format!("custom(r={},s={})", self.spec.r, self.spec.s),
        }
    }

    pub fn r(&self) -> &RatFunc {
        &self.spec.r
    }

    pub fn s(&self) -> &RatFunc {
        &self.spec.s
    }

    /// The tensor square with the same `n` and parameters.
    pub fn tensor_square(self: &Arc<Self>) -> Arc<Algebra> {
        if self.spec.flavor == Flavor::TensorSquare {
            return self.clone();
        }
        self.tensor
            .get_or_init(|| {
                let mut spec = self.spec.clone();
                spec.flavor = Flavor::TensorSquare;
                Algebra::new(spec)
            })
            .clone()
    }

    pub fn cache_len(&self) -> usize {
        self.cache.read().expect("cache lock").len()
    }

    pub fn clear_cache(&self) {
        self.cache.write().expect("cache lock").clear();
    }

    pub(crate) fn check_letter(&self, l: Letter) -> Result<Letter> {
        let n = self.spec.n;
        for idx in [l.row(), l.col()] {
            if idx == 0 || idx > n {
                return Err(Error::IndexOutOfRange { index: idx, max: n });
            }
        }
        if l.side == Side::Right && self.spec.flavor != Flavor::TensorSquare {
            return Err(Error::InvalidArgument(
                "right-copy letter outside the tensor square".into(),
            ));
        }
        Ok(l)
    }

    pub fn is_normal_pair(&self, x: Letter, y: Letter) -> bool {
        self.spec.flavor == Flavor::Free || x <= y
    }

    pub fn is_normal(&self, w: &Word) -> bool {
        self.spec.flavor == Flavor::Free || w.is_sorted()
    }

    /// Rewrite of the non-normal pair `x·y` as a combination of normal pairs.
    pub(crate) fn pair_rule(&self, x: Letter, y: Letter) -> Option<PairRewrite<'_>> {
        if self.is_normal_pair(x, y) {
            return None;
        }
        if x.side != y.side {
            return Some(smallvec![(y, x, &self.one)]);
        }
        // x > y on the same side, so x.row >= y.row
        let rule: PairRewrite<'_> = if x.row == y.row {
            // a_il a_ik = r^-1 a_ik a_il
            smallvec![(y, x, &self.r_inv)]
        } else if x.col == y.col {
            // a_jk a_ik = s a_ik a_jk
            smallvec![(y, x, &self.s)]
        } else if x.col < y.col {
            // a_jk a_il = rs a_il a_jk
            smallvec![(y, x, &self.rs)]
        } else {
            // a_jl a_ik = a_ik a_jl - (r - s) a_il a_jk
            let il = Letter {
                side: x.side,
                row: y.row,
                col: x.col,
            };
            let jk = Letter {
                side: x.side,
                row: x.row,
                col: y.col,
            };
            smallvec![(y, x, &self.one), (il, jk, &self.correction)]
        };
        Some(rule)
    }

    /// Single rewriting step on the two-letter word `x·y`.
    pub fn rewrite_pair(self: &Arc<Self>, x: Letter, y: Letter) -> Result<NCPoly> {
        self.check_letter(x)?;
        self.check_letter(y)?;
        let rule = self
            .pair_rule(x, y)
            .ok_or_else(|| Error::AlreadyNormal(format!("{:?}·{:?}", x, y)))?;
        let terms = rule
            .into_iter()
            .map(|(a, b, c)| (Word::from_letters([a, b]), c.clone()));
        Ok(NCPoly::from_canonical(self.clone(), collect_terms(terms)))
    }

    /// Normal form of `x·u` for a normal word `u`.
    fn insert(&self, x: Letter, u: &[Letter]) -> Arc<Terms> {
        let head = match u.first() {
            Some(h) => *h,
            None => return Arc::new(vec![(Word::prepend(x, u), self.one.clone())]),
        };
        if self.is_normal_pair(x, head) {
            return Arc::new(vec![(Word::prepend(x, u), self.one.clone())]);
        }
        let cacheable = u.len() < self.memo_len;
        let key = (x, Word::from_letters(u.iter().copied()));
        if cacheable {
            if let Some(hit) = self.cache.read().expect("cache lock").get(&key) {
                return hit.clone();
            }
        }
        let rule = self.pair_rule(x, head).expect("pair is not normal");
        let mut acc: HashMap<Word, RatFunc> = HashMap::new();
        for (y, z, c) in rule {
            // z·u[1..] first, then y in front of each resulting normal word
            for (v, cv) in self.insert(z, &u[1..]).iter() {
                let cz = c * cv;
                for (w, cw) in self.insert(y, v.letters()).iter() {
                    add_into(&mut acc, w.clone(), &cz * cw);
                }
            }
        }
        let result: Arc<Terms> = Arc::new(acc.into_iter().filter(|(_, c)| !c.is_zero()).collect());
        if cacheable {
            self.cache
                .write()
                .expect("cache lock")
                .insert(key, result.clone());
        }
        result
    }

    /// Normal form of `u·v` for a normal word `v`.
    fn mul_normal_words(
        &self,
        u: &Word,
        v: &Word,
        coeff: &RatFunc,
        acc: &mut HashMap<Word, RatFunc>,
    ) {
        if self.spec.flavor == Flavor::Free {
            add_into(acc, u.concat(v), coeff.clone());
            return;
        }
        let mut cur: Vec<(Word, RatFunc)> = vec![(v.clone(), coeff.clone())];
        for &x in u.letters().iter().rev() {
            let mut next: HashMap<Word, RatFunc> = HashMap::new();
            for (w, c) in &cur {
                for (w2, c2) in self.insert(x, w.letters()).iter() {
                    add_into(&mut next, w2.clone(), c * c2);
                }
            }
            cur = next.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        }
        for (w, c) in cur {
            add_into(acc, w, c);
        }
    }

    fn normal_form_word(&self, w: &Word, coeff: &RatFunc, acc: &mut HashMap<Word, RatFunc>) {
        if self.is_normal(w) {
            add_into(acc, w.clone(), coeff.clone());
            return;
        }
        // inserting letters right to left only ever meets normal suffixes,
        // so the prefix itself need not be normal
        let (last, init) = w
            .letters()
            .split_last()
            .expect("non-normal word is nonempty");
        let u = Word::from_letters(init.iter().copied());
        self.mul_normal_words(&u, &Word::from_letters([*last]), coeff, acc);
    }

    fn normalize_worklist<I>(&self, terms: I, strategy: Strategy) -> BTreeMap<Word, RatFunc>
    where
        I: IntoIterator<Item = (Word, RatFunc)>,
    {
        let mut pending: BTreeMap<Word, RatFunc> = BTreeMap::new();
        for (w, c) in terms {
            add_into_btree(&mut pending, w, c);
        }
        let mut out = BTreeMap::new();
        let mut step: u64 = 0;
        // rewriting only produces smaller words of the same length, so
        // popping the largest word handles each word once
        while let Some((w, c)) = pending.pop_last() {
            if c.is_zero() {
                continue;
            }
            let letters = w.letters();
            let reducible: SmallVec<[usize; 8]> = (0..letters.len().saturating_sub(1))
                .filter(|&i| !self.is_normal_pair(letters[i], letters[i + 1]))
                .collect();
            if reducible.is_empty() {
                add_into_btree(&mut out, w, c);
                continue;
            }
            let pos = match strategy {
                Strategy::Leftmost | Strategy::Memoized => reducible[0],
                Strategy::Rightmost => reducible[reducible.len() - 1],
                Strategy::Seeded(seed) => {
                    step += 1;
                    reducible[(splitmix64(seed ^ step.wrapping_mul(0x9e37_79b9))
                        % reducible.len() as u64) as usize]
                }
            };
            let rule = self
                .pair_rule(letters[pos], letters[pos + 1])
                .expect("reducible pair");
            for (y, z, k) in rule {
                let mut nw = w.clone();
                nw.0[pos] = y;
                nw.0[pos + 1] = z;
                add_into_btree(&mut pending, nw, &c * k);
            }
        }
        out
    }

    /// Canonical form of an arbitrary combination of words.
    pub fn normalize_terms<I>(&self, terms: I, strategy: Strategy) -> BTreeMap<Word, RatFunc>
    where
        I: IntoIterator<Item = (Word, RatFunc)>,
    {
        match strategy {
            Strategy::Memoized => {
                let mut acc = HashMap::new();
                for (w, c) in terms {
                    if !c.is_zero() {
                        self.normal_form_word(&w, &c, &mut acc);
                    }
                }
                collect_terms(acc)
            }
            s => self.normalize_worklist(terms, s),
        }
    }

    /// Normalized product of two canonical term maps.
    pub(crate) fn mul_terms(
        &self,
        p: &BTreeMap<Word, RatFunc>,
        q: &BTreeMap<Word, RatFunc>,
    ) -> BTreeMap<Word, RatFunc> {
        let mut acc = HashMap::new();
        for (u, cu) in p {
            for (v, cv) in q {
                self.mul_normal_words(u, v, &(cu * cv), &mut acc);
            }
        }
        collect_terms(acc)
    }

    pub fn zero(self: &Arc<Self>) -> NCPoly {
        NCPoly::from_canonical(self.clone(), BTreeMap::new())
    }

    pub fn one(self: &Arc<Self>) -> NCPoly {
        self.scalar(RatFunc::one(self.vars()))
    }

    pub fn scalar(self: &Arc<Self>, c: RatFunc) -> NCPoly {
        NCPoly::from_canonical(self.clone(), collect_terms([(Word::empty(), c)]))
    }

    /// The generator `a_{ij}` (left copy in the tensor square).
    pub fn generator(self: &Arc<Self>, i: usize, j: usize) -> NCPoly {
        self.letter(Letter::new(i, j))
    }

    pub fn letter(self: &Arc<Self>, l: Letter) -> NCPoly {
        self.check_letter(l).expect("letter within range");
        NCPoly::from_canonical(
            self.clone(),
            collect_terms([(Word::from_letters([l]), RatFunc::one(self.vars()))]),
        )
    }

    /// Normalized polynomial from arbitrary `(word, coefficient)` pairs.
    pub fn from_terms<I>(self: &Arc<Self>, terms: I) -> NCPoly
    where
        I: IntoIterator<Item = (Word, RatFunc)>,
    {
        self.from_terms_with(terms, Strategy::Memoized)
    }

    pub fn from_terms_with<I>(self: &Arc<Self>, terms: I, strategy: Strategy) -> NCPoly
    where
        I: IntoIterator<Item = (Word, RatFunc)>,
    {
        NCPoly::from_canonical(self.clone(), self.normalize_terms(terms, strategy))
    }

    /// Normal form of a single word.
    pub fn word(self: &Arc<Self>, letters: &[Letter]) -> NCPoly {
        self.from_terms([(
            Word::from_letters(letters.iter().copied()),
            RatFunc::one(self.vars()),
        )])
    }

    /// Term map kept as given, without normalization. Arithmetic on the result
    /// normalizes first.
    pub fn unnormalized<I>(self: &Arc<Self>, terms: I) -> NCPoly
    where
        I: IntoIterator<Item = (Word, RatFunc)>,
    {
        NCPoly::from_raw(self.clone(), collect_terms(terms))
    }
}

pub(crate) fn add_into(acc: &mut HashMap<Word, RatFunc>, w: Word, c: RatFunc) {
    use std::collections::hash_map::Entry;
    match acc.entry(w) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            let sum = e.get().rf_add(&c);
            *e.get_mut() = sum;
        }
    }
}

fn add_into_btree(acc: &mut BTreeMap<Word, RatFunc>, w: Word, c: RatFunc) {
    use std::collections::btree_map::Entry;
    match acc.entry(w) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            let sum = e.get().rf_add(&c);
            if sum.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = sum;
            }
        }
    }
}

pub(crate) fn collect_terms<I: IntoIterator<Item = (Word, RatFunc)>>(
    terms: I,
) -> BTreeMap<Word, RatFunc> {
    let mut out = BTreeMap::new();
    for (w, c) in terms {
        add_into_btree(&mut out, w, c);
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

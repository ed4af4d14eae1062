use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use qpfaff::ratfunc::{q_factorial, q_integer, IntPoly, RatFunc, VarSet};

fn rs_poly(terms: &[(u32, u32, i64)]) -> IntPoly {
    IntPoly::from_terms(
        VarSet::RS,
        terms.iter().map(|&(a, b, c)| (vec![a, b], BigInt::from(c))),
    )
}

fn r() -> RatFunc {
    RatFunc::r()
}
fn s() -> RatFunc {
    RatFunc::s()
}

#[test]
fn reduce_cancels_common_factors() {
    let f = RatFunc::reduce(rs_poly(&[(2, 1, 1), (1, 2, -1)]), rs_poly(&[(1, 1, 1)])).unwrap();
    assert_eq!(f, &r() - &s());
    assert!(f.den().is_one());
    let g = RatFunc::reduce(
        rs_poly(&[(4, 0, 1), (0, 0, -1)]),
        rs_poly(&[(1, 0, 1), (0, 0, -1)]),
    )
    .unwrap();
    assert_eq!(
        g.num(),
        &rs_poly(&[(3, 0, 1), (2, 0, 1), (1, 0, 1), (0, 0, 1)])
    );
    let z = RatFunc::reduce(IntPoly::zero(VarSet::RS), rs_poly(&[(1, 0, 1), (0, 1, 1)])).unwrap();
    assert!(z.is_zero() && z.den().is_one());
    assert!(RatFunc::reduce(rs_poly(&[(0, 0, 1)]), IntPoly::zero(VarSet::RS)).is_err());
}

#[test]
fn field_examples() {
    assert!((&r().rf_inv().unwrap() * &r()).is_one());
    assert!((&(&r() - &s()) + &(&s() - &r())).is_zero());
    let lhs = &(&(&r() * &r()) - &(&s() * &s())) / &(&r() + &s());
    assert!(lhs.rf_eq(&(&r() - &s())));
    assert!(RatFunc::zero(VarSet::RS).rf_inv().is_err());
}

#[test]
fn q_integers_and_factorials() {
    let v = r();
    assert!(q_integer(1, &v).unwrap().is_one());
    assert_eq!(q_integer(2, &v).unwrap(), &RatFunc::one(VarSet::RS) + &v);
    let q4 = RatFunc::q().pow(4).unwrap();
    let one = RatFunc::one(VarSet::Q);
    assert_eq!(
        q_integer(3, &q4).unwrap(),
        &(&one + &q4) + &q4.pow(2).unwrap()
    );
    assert_eq!(
        q_factorial(2, &r().pow(4).unwrap()).unwrap(),
        &RatFunc::one(VarSet::RS) + &r().pow(4).unwrap()
    );
    let three = &(&RatFunc::one(VarSet::RS) + &v) + &v.pow(2).unwrap();
    assert_eq!(
        q_factorial(3, &v).unwrap(),
        &three * &(&RatFunc::one(VarSet::RS) + &v)
    );
    assert!(q_integer(0, &v).is_err());
}

#[test]
fn specialization() {
    let q = RatFunc::q();
    let neg_inv = -&q.rf_inv().unwrap();
    let at = |f: &RatFunc| f.substitute(&[("r", q.clone()), ("s", neg_inv.clone())]);
    let expected = &(&q.pow(2).unwrap() + &RatFunc::one(VarSet::Q)) / &q;
    assert_eq!(at(&(&r() - &s())).unwrap(), expected);
    assert_eq!(at(&(&r() * &s())).unwrap(), RatFunc::from_int(-1));
    let pole = (&(&r() * &s()) + &RatFunc::one(VarSet::RS))
        .rf_inv()
        .unwrap();
    assert!(at(&pole).is_err());
}

fn arb_poly() -> impl Strategy<Value = IntPoly> {
    prop::collection::vec((0u32..3, 0u32..3, -4i64..=4), 1..4).prop_map(|t| rs_poly(&t))
}

fn arb_ratfunc() -> impl Strategy<Value = RatFunc> {
    (
        arb_poly(),
        arb_poly().prop_filter("nonzero denominator", |d| !d.is_zero()),
    )
        .prop_map(|(n, d)| RatFunc::reduce(n, d).unwrap())
}

fn eval(f: &RatFunc, rv: i64, sv: i64) -> Option<BigRational> {
    f.substitute(&[("r", RatFunc::from_int(rv)), ("s", RatFunc::from_int(sv))])
        .ok()
        .and_then(|v| v.to_rational())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in arb_ratfunc(), b in arb_ratfunc(), c in arb_ratfunc()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&(&a + &b) - &b).rf_eq(&a));
    }

    #[test]
    fn division_inverts_multiplication(a in arb_ratfunc(), b in arb_ratfunc()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!(&(&a * &b) / &b, a.clone());
        prop_assert!((&b * &b.rf_inv().unwrap()).is_one());
    }

    #[test]
    fn canonical_form_is_unique(a in arb_ratfunc(), k in arb_poly()) {
        prop_assume!(!k.is_zero());
        let scaled = RatFunc::reduce(&a.num().clone() * &k, &a.den().clone() * &k).unwrap();
        prop_assert_eq!(scaled.num(), a.num());
        prop_assert_eq!(scaled.den(), a.den());
    }

    /// Evaluation at integer points is a ring map wherever no pole is hit.
    #[test]
    fn evaluation_agrees(a in arb_ratfunc(), b in arb_ratfunc(), rv in -3i64..=3, sv in -3i64..=3) {
        if let (Some(x), Some(y)) = (eval(&a, rv, sv), eval(&b, rv, sv)) {
            if let Some(p) = eval(&(&a * &b), rv, sv) {
                prop_assert_eq!(p, &x * &y);
            }
            if let Some(p) = eval(&(&a + &b), rv, sv) {
                prop_assert_eq!(p, &x + &y);
            }
        }
    }
}

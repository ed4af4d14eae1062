use super::*;
use crate::ncalg::{Algebra, Letter, Regime};
use crate::qlinalg::{build_B, build_Bprime, cdet, hf_full, pf_full, rdet, GenMatrix};
use crate::ratfunc::RatFunc;

fn generic(n: usize) -> std::sync::Arc<Algebra> {
    Algebra::single(n, &Regime::Generic).unwrap()
}

fn x(idx: &[usize]) -> ExtMono {
    ExtMono::from_indices(idx).unwrap()
}

#[test]
fn mixed_products() {
    let alg = generic(2);
    let z = MixedPoly::zero(&alg);
    let u = ExtMono::unit();
    let p = z.monomial(alg.generator(1, 1), x(&[1]), u);
    let q = z.monomial(alg.generator(1, 2), x(&[2]), u);
    assert_eq!(
        p.try_mul(&q).unwrap(),
        z.monomial(
            alg.word(&[Letter::new(1, 1), Letter::new(1, 2)]),
            x(&[1, 2]),
            u
        )
    );
    // r^-1 from the a's and -r from the x's
    assert_eq!(
        q.try_mul(&p).unwrap(),
        z.monomial(
            -&alg.word(&[Letter::new(1, 1), Letter::new(1, 2)]),
            x(&[1, 2]),
            u
        )
    );
    let xs = z.monomial(alg.one(), x(&[1]), u);
    let ys = z.monomial(alg.one(), u, x(&[1]));
    assert_eq!(xs.try_mul(&ys).unwrap(), ys.try_mul(&xs).unwrap());
}

#[test]
fn linear_forms() {
    let alg = generic(2);
    assert_eq!(
        delta(&alg, 1).unwrap().to_string(),
        "(a11)*x[1] + (a12)*x[2]"
    );
    assert_eq!(
        partial(&alg, 2).unwrap().to_string(),
        "(a12)*y[1] + (a22)*y[2]"
    );
    let d = delta(&alg, 1).unwrap();
    assert!(d.try_mul(&d).unwrap().is_zero());
    assert!(delta(&alg, 3).is_err());
}

#[test]
fn determinant_oracles() {
    assert_eq!(
        det_oracle(&generic(1), DetMode::Row).unwrap().to_string(),
        "a11"
    );
    let alg = generic(2);
    assert_eq!(
        det_oracle(&alg, DetMode::Row).unwrap().to_string(),
        "a11*a22 - r*a12*a21"
    );
    assert_eq!(
        det_oracle(&alg, DetMode::Column).unwrap(),
        det_oracle(&alg, DetMode::Row).unwrap()
    );
    for n in 1..=3 {
        let alg = generic(n);
        let a = GenMatrix::generic(&alg);
        assert_eq!(det_oracle(&alg, DetMode::Row).unwrap(), rdet(&a).unwrap());
        assert_eq!(
            det_oracle(&alg, DetMode::Column).unwrap(),
            cdet(&a).unwrap()
        );
    }
}

#[test]
fn minor_expansions() {
    let alg = generic(2);
    let m = minor_expansion(&alg, &[1]).unwrap();
    assert_eq!(m[&vec![1]].to_string(), "a11");
    assert_eq!(m[&vec![2]].to_string(), "a12");
    let m = minor_expansion(&alg, &[1, 2]).unwrap();
    assert_eq!(m.len(), 1);
    assert_eq!(m[&vec![1, 2]], rdet(&GenMatrix::generic(&alg)).unwrap());
    assert!(minor_expansion(&alg, &[1, 1]).unwrap().is_empty());
}

#[test]
fn phi_and_omega() {
    for n in 1..=3 {
        let alg = generic(n);
        assert!(phi_check(&alg).unwrap().holds, "phi at n={}", n);
        assert!(
            omega_residuals(&alg)
                .unwrap()
                .iter()
                .all(MixedPoly::is_zero),
            "omega at n={}",
            n
        );
    }
}

#[test]
fn manin_forward_and_free_control() {
    for n in 2..=3 {
        let alg = generic(n);
        assert_eq!(manin_residual(&alg, alg.r(), alg.s()).unwrap(), 0);
        assert!(manin_check(&alg).unwrap().holds);
    }
    let free = Algebra::free(2, 'a').unwrap();
    let d = {
        let z = MixedPoly::zero_with(&free, RatFunc::r(), RatFunc::s().rf_inv().unwrap());
        let mut d = z.like();
        d.add_term(x(&[1]), ExtMono::unit(), free.generator(1, 1));
        d.add_term(x(&[2]), ExtMono::unit(), free.generator(1, 2));
        d
    };
    let sq = d.try_mul(&d).unwrap();
    assert_eq!(sq.to_string(), "(a11*a12 - r*a12*a11)*x[1, 2]");
}

#[test]
fn pf_oracle_free_entries() {
    let alg = Algebra::free(4, 'b').unwrap();
    let b = GenMatrix::from_fn(&alg, 4, 4, |i, j| {
        if i < j {
            alg.letter(Letter::new(i, j))
        } else {
            alg.zero()
        }
    });
    let v = RatFunc::r();
    assert_eq!(
        pf_oracle(&b, &v, FormFlavor::X).unwrap(),
        pf_full(&b, &v).unwrap()
    );
    let s = RatFunc::s();
    assert_eq!(
        pf_oracle(&b, &s, FormFlavor::Y).unwrap(),
        pf_full(&b, &s.rf_inv().unwrap()).unwrap()
    );
    let q = RatFunc::q();
    assert_eq!(hf_oracle(&b, &q).unwrap(), hf_full(&b, &q).unwrap());
    let b2 = GenMatrix::from_fn(&alg, 2, 2, |i, j| {
        if i < j {
            alg.letter(Letter::new(i, j))
        } else {
            alg.zero()
        }
    });
    assert_eq!(
        pf_oracle(&b2, &v, FormFlavor::X).unwrap().to_string(),
        "b12"
    );
}

#[test]
fn pf_oracle_quadratic_entries() {
    let alg = generic(4);
    let b = build_B(&alg).unwrap();
    assert_eq!(
        pf_oracle(&b, alg.r(), FormFlavor::X).unwrap(),
        pf_full(&b, alg.r()).unwrap()
    );
    let bp = build_Bprime(&alg).unwrap();
    assert_eq!(
        pf_oracle(&bp, alg.s(), FormFlavor::Y).unwrap(),
        pf_full(&bp, &alg.s().rf_inv().unwrap()).unwrap()
    );
}

use qpfaff::qexterior::{
    delta, det_oracle, minor_expansion, partial, pf_oracle, x_wedge, y_wedge, DetMode, ExtMono,
    FormFlavor,
};
use qpfaff::qlinalg::{
    adjugate, build_B, build_Bprime, cdet, cofactor_row, enumerate_pi, enumerate_pi_prime,
    evaluate_numeric, hf_full, hf_matching, laplace_row, observed_antisymmetry, per, per_q,
    pf_full, pf_matching, rdet, verify_identity, GenMatrix, MinorSide,
};
use qpfaff::{Algebra, Error, RatFunc, Regime};

fn generic(n: usize) -> std::sync::Arc<Algebra> {
    Algebra::single(n, &Regime::Generic).unwrap()
}

#[test]
fn determinants_at_two() {
    let a = generic(2);
    let m = GenMatrix::generic(&a);
    assert_eq!(rdet(&m).unwrap().to_string(), "a11*a22 - r*a12*a21");
    assert_eq!(cdet(&m).unwrap(), rdet(&m).unwrap());
    let qn = Algebra::single(2, &Regime::QNegative).unwrap();
    let expected = &qn.word(&[qpfaff::Letter::new(1, 1), qpfaff::Letter::new(2, 2)])
        + &qn
            .word(&[qpfaff::Letter::new(2, 1), qpfaff::Letter::new(1, 2)])
            .scale(&RatFunc::q());
    assert_eq!(per_q(&GenMatrix::generic(&qn)).unwrap(), expected);
    assert!(per_q(&m).is_err());
}

#[test]
fn minors_laplace_adjugate_tau() {
    let a = generic(2);
    let m = GenMatrix::generic(&a);
    assert_eq!(m.minor(&[1], &[2]).unwrap().get(1, 1), &a.generator(1, 2));
    assert_eq!(laplace_row(&m, &[1], &[2]).unwrap(), rdet(&m).unwrap());
    assert!(cofactor_row(&m, 1, 2, MinorSide::Right).unwrap().is_zero());
    let adj = adjugate(&m).unwrap();
    let shown: Vec<String> = adj.entries().iter().map(|p| p.to_string()).collect();
    assert_eq!(shown, ["a22", "-a12", "-a21", "a11"]);
    let t = m.tau(&RatFunc::r()).unwrap();
    assert_eq!(t.get(1, 2).to_string(), "r*a12");
    assert_eq!(t.get(2, 1).to_string(), "1/r*a21");
}

#[test]
fn permutation_sets() {
    assert_eq!(enumerate_pi_prime(4).len(), 6);
    assert_eq!(enumerate_pi(4).len(), 3);
    assert_eq!(enumerate_pi_prime(6).len(), 90);
    assert_eq!(enumerate_pi(6).len(), 15);
}

#[test]
fn pfaffian_forms_on_free_entries() {
    let f = Algebra::free(4, 'b').unwrap();
    let b = GenMatrix::from_fn(
        &f,
        4,
        4,
        |i, j| if i < j { f.generator(i, j) } else { f.zero() },
    );
    let q = RatFunc::q();
    let f2 = Algebra::free(2, 'b').unwrap();
    let two = GenMatrix::from_fn(&f2, 2, 2, |i, j| {
        if i < j {
            f2.generator(i, j)
        } else {
            f2.zero()
        }
    });
    assert_eq!(pf_full(&two, &q).unwrap().to_string(), "b12");
    assert_eq!(hf_full(&two, &q).unwrap().to_string(), "b12");
    let pm = pf_matching(&b, &RatFunc::r()).unwrap();
    assert_eq!(pm.to_string(), "b12*b34 - r*b13*b24 + r^2*b14*b23");
    let hm = hf_matching(&b, &RatFunc::r()).unwrap();
    assert_eq!(hm.to_string(), "b12*b34 + r*b13*b24 + r^2*b14*b23");
}

#[test]
fn b_matrices() {
    let a = generic(2);
    let b = build_B(&a).unwrap();
    let bp = build_Bprime(&a).unwrap();
    assert_eq!(b.get(1, 2).to_string(), "a11*a22 - r*a12*a21");
    assert_eq!(bp.get(1, 2).to_string(), "a11*a22 - r*a12*a21");
    let a4 = generic(4);
    let s_inv = RatFunc::s().rf_inv().unwrap();
    assert_eq!(observed_antisymmetry(&build_B(&a4).unwrap()), Some(-&s_inv));
    assert_eq!(
        observed_antisymmetry(&build_Bprime(&a4).unwrap()),
        Some(-&RatFunc::r())
    );
    assert!(matches!(
        qpfaff::qlinalg::jay(&a, &RatFunc::r(), 3),
        Err(Error::OddSize(3))
    ));
}

#[test]
fn verify_examples() {
    assert!(
        verify_identity("det_rc_eq", 3, &Regime::Generic)
            .unwrap()
            .holds
    );
    assert!(
        verify_identity("pf_rdet", 4, &Regime::Generic)
            .unwrap()
            .holds
    );
    let maya = verify_identity("maya", 4, &Regime::Generic).unwrap();
    assert!(!maya.holds && maya.residual_terms > 0);
    assert!(matches!(
        verify_identity("nope", 2, &Regime::Generic),
        Err(Error::UnknownIdentity(_))
    ));
    assert!(matches!(
        verify_identity("pf_rdet", 3, &Regime::Generic),
        Err(Error::UnsupportedSize { .. })
    ));
    assert!(matches!(
        verify_identity("hf_per", 4, &Regime::Generic),
        Err(Error::UnsupportedRegime { .. })
    ));
}

#[test]
fn numeric_evaluation() {
    let a = Algebra::single(2, &Regime::classical()).unwrap();
    let m = GenMatrix::generic(&a);
    let vals = [[1, 2], [3, 4]];
    let at =
        |i: usize, j: usize| num_rational::BigRational::from_integer(vals[i - 1][j - 1].into());
    assert_eq!(
        evaluate_numeric(&rdet(&m).unwrap(), at).unwrap(),
        num_rational::BigRational::from_integer((-2).into())
    );
    assert_eq!(
        evaluate_numeric(&per(&m).unwrap(), at).unwrap(),
        num_rational::BigRational::from_integer(10.into())
    );
    let g = GenMatrix::generic(&generic(2));
    assert!(evaluate_numeric(&rdet(&g).unwrap(), at).is_err());
}

#[test]
fn exterior_examples() {
    let r = RatFunc::r();
    let s = RatFunc::s();
    let x = |i: &[usize]| ExtMono::from_indices(i).unwrap();
    assert_eq!(x_wedge(x(&[2]), x(&[1]), &r).unwrap(), (-&r, x(&[1, 2])));
    assert!(x_wedge(x(&[1]), x(&[1]), &r).is_none());
    assert_eq!(
        x_wedge(x(&[1, 3]), x(&[2]), &r).unwrap(),
        (-&r, x(&[1, 2, 3]))
    );
    let si = s.rf_inv().unwrap();
    assert_eq!(y_wedge(x(&[2]), x(&[1]), &s).unwrap(), (-&si, x(&[1, 2])));
    assert_eq!(
        y_wedge(x(&[2, 3]), x(&[1]), &s).unwrap().0,
        si.pow(2).unwrap()
    );
    assert!(ExtMono::from_indices(&[2, 1]).is_err());

    let a = generic(2);
    assert_eq!(delta(&a, 1).unwrap().to_string(), "(a11)*x[1] + (a12)*x[2]");
    assert_eq!(
        partial(&a, 2).unwrap().to_string(),
        "(a12)*y[1] + (a22)*y[2]"
    );
    let d = delta(&a, 1).unwrap();
    assert!(d.try_mul(&d).unwrap().is_zero());
}

#[test]
fn wedge_oracles() {
    let a1 = generic(1);
    assert_eq!(det_oracle(&a1, DetMode::Row).unwrap().to_string(), "a11");
    let a = generic(2);
    assert_eq!(
        det_oracle(&a, DetMode::Row).unwrap().to_string(),
        "a11*a22 - r*a12*a21"
    );
    assert_eq!(
        det_oracle(&a, DetMode::Column).unwrap(),
        det_oracle(&a, DetMode::Row).unwrap()
    );
    let m = minor_expansion(&a, &[1]).unwrap();
    assert_eq!(m[&vec![1]], a.generator(1, 1));
    assert_eq!(m[&vec![2]], a.generator(1, 2));
    let full = minor_expansion(&a, &[1, 2]).unwrap();
    assert_eq!(full[&vec![1, 2]], rdet(&GenMatrix::generic(&a)).unwrap());
    assert!(minor_expansion(&a, &[1, 1])
        .unwrap()
        .values()
        .all(|p| p.is_zero()));

    let f = Algebra::free(4, 'b').unwrap();
    let b = GenMatrix::from_fn(
        &f,
        4,
        4,
        |i, j| if i < j { f.generator(i, j) } else { f.zero() },
    );
    let r = RatFunc::r();
    let r4 = r.pow(4).unwrap();
    let norm = (&RatFunc::from_int(1) + &r4).rf_inv().unwrap();
    let mut expected = f.zero();
    for (w, c) in [
        ([(1, 2), (3, 4)], RatFunc::from_int(1)),
        ([(3, 4), (1, 2)], r4.clone()),
        ([(1, 3), (2, 4)], -&r),
        ([(2, 4), (1, 3)], -&r.pow(3).unwrap()),
        ([(1, 4), (2, 3)], r.pow(2).unwrap()),
        ([(2, 3), (1, 4)], r.pow(2).unwrap()),
    ] {
        let word = f.word(&w.map(|(i, j)| qpfaff::Letter::new(i, j)));
        expected = &expected + &word.scale(&(&c * &norm));
    }
    assert_eq!(pf_oracle(&b, &r, FormFlavor::X).unwrap(), expected);
}

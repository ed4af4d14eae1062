//! Multivariate gcd over the integers by recursive subresultant remainder
//! sequences with content extraction.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use super::poly::{IntPoly, Mono};

/// Greatest common divisor with positive graded-lex leading coefficient.
/// `gcd(0, 0) = 0`.
pub fn poly_gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let vars = a.vars().join(b.vars());
    if a.is_zero() {
        return normalize_sign(b.clone().with_vars(vars));
    }
    if b.is_zero() {
        return normalize_sign(a.clone().with_vars(vars));
    }
    if a.is_monomial() {
        return term_gcd(b, a).with_vars(vars);
    }
    if b.is_monomial() {
        return term_gcd(a, b).with_vars(vars);
    }
    let main = match (0..vars.len())
        .rev()
        .find(|&v| a.degree_in(v) > 0 || b.degree_in(v) > 0)
    {
        Some(v) => v,
        None => {
            return IntPoly::constant(vars, a.constant_term().gcd(&b.constant_term()));
        }
    };
    if a.degree_in(main) == 0 {
        return poly_gcd(a, &content_in(b, main));
    }
    if b.degree_in(main) == 0 {
        return poly_gcd(&content_in(a, main), b);
    }

    let ca = content_in(a, main);
    let cb = content_in(b, main);
    let c = poly_gcd(&ca, &cb);
    let pa = a.exact_div(&ca).expect("content divides");
    let pb = b.exact_div(&cb).expect("content divides");
    let g = subresultant_prs(pa, pb, main);
    normalize_sign(&c * &g)
}

/// gcd of `p` with the single term `t`: only monomial and integer factors can be shared.
fn term_gcd(p: &IntPoly, t: &IntPoly) -> IntPoly {
    let (tm, tc) = t.lead().expect("nonzero term");
    let c = p.content().gcd(tc);
    IntPoly::monomial(p.vars(), p.min_mono().gcd(tm), c)
}

fn normalize_sign(p: IntPoly) -> IntPoly {
    if p.lead_is_negative() {
        -p
    } else {
        p
    }
}

/// gcd of the coefficients of `p` viewed as a polynomial in `x_var`.
pub(crate) fn content_in(p: &IntPoly, var: usize) -> IntPoly {
    let mut g = IntPoly::zero(p.vars());
    for k in (0..=p.degree_in(var)).rev() {
        let c = p.coeff_in(var, k);
        if c.is_zero() {
            continue;
        }
        g = poly_gcd(&g, &c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn primitive_part_in(p: &IntPoly, var: usize) -> IntPoly {
    if p.is_zero() {
        return p.clone();
    }
    let c = content_in(p, var);
    normalize_sign(p.exact_div(&c).expect("content divides"))
}

/// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b` in `x_var`.
pub(crate) fn prem(a: &IntPoly, b: &IntPoly, var: usize) -> IntPoly {
    let db = b.degree_in(var);
    let lcb = b.lc_in(var);
    let da = a.degree_in(var);
    if da < db {
        return a.clone();
    }
    let mut e = da - db + 1;
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(var) >= db {
        let dr = r.degree_in(var);
        let shifted = r
            .lc_in(var)
            .mul_term(&Mono::var(var, dr - db), &BigInt::one());
        r = &(&lcb * &r) - &(&shifted * b);
        e -= 1;
    }
    &r * &lcb.pow(e)
}

/// gcd of two polynomials that are primitive in `x_var`.
fn subresultant_prs(a: IntPoly, b: IntPoly, var: usize) -> IntPoly {
    let vars = a.vars().join(b.vars());
    let (mut a, mut b) = if a.degree_in(var) >= b.degree_in(var) {
        (a, b)
    } else {
        (b, a)
    };
    let mut g = IntPoly::one(vars);
    let mut h = IntPoly::one(vars);
    loop {
        let d = a.degree_in(var) - b.degree_in(var);
        let r = prem(&a, &b, var);
        if r.is_zero() {
            break;
        }
        if r.degree_in(var) == 0 {
            return IntPoly::one(vars);
        }
        let divisor = &g * &h.pow(d);
        a = b;
        b = r
            .exact_div(&divisor)
            .expect("subresultant division is exact");
        g = a.lc_in(var);
        h = if d == 0 {
            h
        } else {
            g.pow(d)
                .exact_div(&h.pow(d - 1))
                .expect("subresultant division is exact")
        };
    }
    primitive_part_in(&b, var)
}

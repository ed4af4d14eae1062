use super::matrix::GenMatrix;
use crate::error::Result;
use crate::ncalg::NCPoly;
use crate::ratfunc::RatFunc;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MayaSign {
    /// `b_ij b_kl - q b_ik b_jl + q^2 b_il b_jk = b_kl b_ij - q^-1 b_jl b_ik + q^-2 b_jk b_il`
    Plus,
    /// The `(-q)` variant, all middle signs positive.
    Minus,
}

/// Normalized `lhs - rhs` of the Maya relation for every `i < j < k < l`,
/// in lexicographic order of the quadruple. Empty below size 4.
pub fn maya_residuals(b: &GenMatrix, q: &RatFunc, sign: MayaSign) -> Result<Vec<NCPoly>> {
    let m = b.require_square()?;
    let eps = match sign {
        MayaSign::Plus => -1,
        MayaSign::Minus => 1,
    };
    let one = RatFunc::one(q.vars());
    let c1 = q.scale_int(eps);
    let c2 = q.pow(2)?;
    let d1 = q.pow(-1)?.scale_int(eps);
    let d2 = q.pow(-2)?;
    let e = |i: usize, j: usize| b.get(i, j);
    let mut out = Vec::new();
    for i in 1..=m {
        for j in (i + 1)..=m {
            for k in (j + 1)..=m {
                for l in (k + 1)..=m {
                    let lhs = [
                        (e(i, j), e(k, l), &one),
                        (e(i, k), e(j, l), &c1),
                        (e(i, l), e(j, k), &c2),
                    ];
                    let rhs = [
                        (e(k, l), e(i, j), &one),
                        (e(j, l), e(i, k), &d1),
                        (e(j, k), e(i, l), &d2),
                    ];
                    let mut acc = b.algebra().zero();
                    for (x, y, c) in lhs {
                        acc = &acc + &(x * y).scale(c);
                    }
                    for (x, y, c) in rhs {
                        acc = &acc - &(x * y).scale(c);
                    }
                    out.push(acc);
                }
            }
        }
    }
    Ok(out)
}

use crate::error::{Error, Result};
use crate::ratfunc::RatFunc;

/// Basis monomial `x_{i1} ^ ... ^ x_{it}` with `i1 < ... < it`, stored as a
/// bit set (bit `i - 1` for index `i`). Indices run up to 32.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ExtMono(u32);

/// Alias used for the `x` family.
pub type XMono = ExtMono;
/// Alias used for the `y` family.
pub type YMono = ExtMono;

pub const MAX_INDEX: usize = 32;

impl ExtMono {
    pub fn unit() -> ExtMono {
        ExtMono(0)
    }

    pub fn single(i: usize) -> ExtMono {
        assert!(
            (1..=MAX_INDEX).contains(&i),
            "exterior index {} out of range",
            i
        );
        ExtMono(1 << (i - 1))
    }

    /// From a strictly increasing index list.
    pub fn from_indices(idx: &[usize]) -> Result<ExtMono> {
        let mut bits = 0u32;
        let mut last = 0;
        for &i in idx {
            if i <= last || i > MAX_INDEX {
                return Err(Error::InvalidArgument(format!(
                    "{:?} is not a strictly increasing index list",
                    idx
                )));
            }
            bits |= 1 << (i - 1);
            last = i;
        }
        Ok(ExtMono(bits))
    }

    /// `x_1 ^ ... ^ x_n`.
    pub fn top(n: usize) -> ExtMono {
        assert!(n <= MAX_INDEX);
        ExtMono(if n == 32 { u32::MAX } else { (1u32 << n) - 1 })
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn indices(self) -> Vec<usize> {
        (1..=MAX_INDEX)
            .filter(|&i| self.0 & (1 << (i - 1)) != 0)
            .collect()
    }

    pub fn degree(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_unit(self) -> bool {
        self.0 == 0
    }

    /// `None` if the index sets meet; otherwise the merged monomial and the
    /// number of transpositions needed to sort `self ++ other`.
    pub fn merge(self, other: ExtMono) -> Option<(usize, ExtMono)> {
        if self.0 & other.0 != 0 {
            return None;
        }
        let mut inv = 0;
        let mut rest = other.0;
        while rest != 0 {
            let b = rest.trailing_zeros();
            inv += (self.0 >> b).count_ones() as usize;
            rest &= rest - 1;
        }
        Some((inv, ExtMono(self.0 | other.0)))
    }
}

/// Wedge in the algebra with `e_j ^ e_i = -p e_i ^ e_j` (`i < j`) and `e_i ^ e_i = 0`.
pub fn wedge(m1: ExtMono, m2: ExtMono, p: &RatFunc) -> Option<(RatFunc, ExtMono)> {
    let (inv, m) = m1.merge(m2)?;
    let c = (-p).pow(inv as i64).expect("nonnegative exponent");
    Some((c, m))
}

/// `x` wedge: `x_j ^ x_i = -r x_i ^ x_j`.
pub fn x_wedge(m1: XMono, m2: XMono, r: &RatFunc) -> Option<(RatFunc, XMono)> {
    wedge(m1, m2, r)
}

/// `y` wedge: `y_j ^ y_i = -s^-1 y_i ^ y_j`.
pub fn y_wedge(m1: YMono, m2: YMono, s: &RatFunc) -> Option<(RatFunc, YMono)> {
    wedge(m1, m2, &s.rf_inv().expect("s is nonzero"))
}

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ncalg::{Algebra, NCPoly};
use crate::ratfunc::RatFunc;

/// Matrix with entries in one algebra. Indices are 1-based.
#[derive(Clone, Debug)]
pub struct GenMatrix {
    alg: Arc<Algebra>,
    rows: usize,
    cols: usize,
    entries: Vec<NCPoly>,
}

impl GenMatrix {
    pub fn new(
        alg: &Arc<Algebra>,
        rows: usize,
        cols: usize,
        entries: Vec<NCPoly>,
    ) -> Result<GenMatrix> {
        if entries.len() != rows * cols {
            return Err(Error::InvalidArgument(format!(
                "{} entries for a {}x{} matrix",
                entries.len(),
                rows,
                cols
            )));
        }
        let probe = alg.zero();
        if entries.iter().any(|e| !e.same_algebra(&probe)) {
            return Err(Error::MixedAlgebras);
        }
        Ok(GenMatrix {
            alg: alg.clone(),
            rows,
            cols,
            entries,
        })
    }

    pub fn from_fn<F>(alg: &Arc<Algebra>, rows: usize, cols: usize, mut f: F) -> GenMatrix
    where
        F: FnMut(usize, usize) -> NCPoly,
    {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 1..=rows {
            for j in 1..=cols {
                entries.push(f(i, j));
            }
        }
        GenMatrix {
            alg: alg.clone(),
            rows,
            cols,
            entries,
        }
    }

    /// The generator matrix `A = (a_ij)`.
    pub fn generic(alg: &Arc<Algebra>) -> GenMatrix {
        let n = alg.n();
        GenMatrix::from_fn(alg, n, n, |i, j| alg.generator(i, j))
    }

    pub fn zeros(alg: &Arc<Algebra>, rows: usize, cols: usize) -> GenMatrix {
        GenMatrix::from_fn(alg, rows, cols, |_, _| alg.zero())
    }

    /// `c * I`.
    pub fn scalar_identity(alg: &Arc<Algebra>, size: usize, c: &NCPoly) -> GenMatrix {
        GenMatrix::from_fn(
            alg,
            size,
            size,
            |i, j| if i == j { c.clone() } else { alg.zero() },
        )
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &NCPoly {
        assert!(
            i >= 1 && i <= self.rows && j >= 1 && j <= self.cols,
            "entry ({}, {}) out of range",
            i,
            j
        );
        &self.entries[(i - 1) * self.cols + (j - 1)]
    }

    pub fn entries(&self) -> &[NCPoly] {
        &self.entries
    }

    pub(crate) fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn transpose(&self) -> GenMatrix {
        GenMatrix::from_fn(&self.alg, self.cols, self.rows, |i, j| {
            self.get(j, i).clone()
        })
    }

    /// Product with noncommuting entries: `(MN)_ij = sum_k m_ik n_kj` in that order.
    pub fn mul(&self, other: &GenMatrix) -> Result<GenMatrix> {
        if self.cols != other.rows {
            return Err(Error::InvalidArgument(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let probe = self.alg.zero();
        if !other.alg.zero().same_algebra(&probe) {
            return Err(Error::MixedAlgebras);
        }
        Ok(GenMatrix::from_fn(
            &self.alg,
            self.rows,
            other.cols,
            |i, j| {
                let mut acc = self.alg.zero();
                for k in 1..=self.cols {
                    let (x, y) = (self.get(i, k), other.get(k, j));
                    if !x.is_zero() && !y.is_zero() {
                        acc = &acc + &(x * y);
                    }
                }
                acc
            },
        ))
    }

    pub fn sub(&self, other: &GenMatrix) -> Result<GenMatrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::InvalidArgument("shape mismatch".into()));
        }
        let entries: Result<Vec<NCPoly>> = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.try_sub(b))
            .collect();
        GenMatrix::new(&self.alg, self.rows, self.cols, entries?)
    }

    pub fn scale(&self, c: &RatFunc) -> GenMatrix {
        GenMatrix {
            alg: self.alg.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e.scale(c)).collect(),
        }
    }

    /// Submatrix on the listed rows and columns, in the order given.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Result<GenMatrix> {
        for &i in rows {
            if i == 0 || i > self.rows {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    max: self.rows,
                });
            }
        }
        for &j in cols {
            if j == 0 || j > self.cols {
                return Err(Error::IndexOutOfRange {
                    index: j,
                    max: self.cols,
                });
            }
        }
        Ok(GenMatrix::from_fn(
            &self.alg,
            rows.len(),
            cols.len(),
            |a, b| self.get(rows[a - 1], cols[b - 1]).clone(),
        ))
    }

    /// `C^tau_v = D_v^-1 C D_v`: entry `(i, j)` scaled by `v^(j-i)`.
    pub fn tau(&self, v: &RatFunc) -> Result<GenMatrix> {
        let mut entries = Vec::with_capacity(self.entries.len());
        for i in 1..=self.rows {
            for j in 1..=self.cols {
                let c = v.pow(j as i64 - i as i64)?;
                entries.push(self.get(i, j).scale(&c));
            }
        }
        Ok(GenMatrix {
            alg: self.alg.clone(),
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(NCPoly::is_zero)
    }

    /// Total number of terms over all entries.
    pub fn term_count(&self) -> usize {
        self.entries.iter().map(NCPoly::nterms).sum()
    }
}

impl PartialEq for GenMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.entries == other.entries
    }
}

/// Block diagonal `J_v = diag(J, ..., J)` with `J = (0 1; -v 0)`.
pub fn jay(alg: &Arc<Algebra>, v: &RatFunc, size: usize) -> Result<GenMatrix> {
    if !size.is_multiple_of(2) {
        return Err(Error::OddSize(size));
    }
    let one = alg.one();
    let minus_v = alg.scalar(-v);
    Ok(GenMatrix::from_fn(alg, size, size, |i, j| {
        if i % 2 == 1 && j == i + 1 {
            one.clone()
        } else if i % 2 == 0 && j + 1 == i {
            minus_v.clone()
        } else {
            alg.zero()
        }
    }))
}

/// `B = A^T J_{s^-1} A`, so that `b_ij = sum_m (a_{2m-1,i} a_{2m,j} - s^-1 a_{2m,i} a_{2m-1,j})`.
#[allow(non_snake_case)]
pub fn build_B(alg: &Arc<Algebra>) -> Result<GenMatrix> {
    let a = GenMatrix::generic(alg);
    let s_inv = alg.s().rf_inv()?;
    let j = jay(alg, &s_inv, alg.n())?;
    a.transpose().mul(&j)?.mul(&a)
}

/// `B' = A J_r A^T`, so that `b'_ij = sum_m (a_{i,2m-1} a_{j,2m} - r a_{i,2m} a_{j,2m-1})`.
#[allow(non_snake_case)]
pub fn build_Bprime(alg: &Arc<Algebra>) -> Result<GenMatrix> {
    let a = GenMatrix::generic(alg);
    let j = jay(alg, alg.r(), alg.n())?;
    a.mul(&j)?.mul(&a.transpose())
}

/// The scalar `c` with `m_ji = c m_ij` for every `i < j`, if one exists.
///
/// Read off from the first nonzero upper entry and then checked everywhere.
pub fn observed_antisymmetry(m: &GenMatrix) -> Option<RatFunc> {
    let size = m.rows();
    let mut factor: Option<RatFunc> = None;
    for i in 1..=size {
        for j in (i + 1)..=size {
            let (up, low) = (m.get(i, j), m.get(j, i));
            if up.is_zero() {
                if low.is_zero() {
                    continue;
                }
                return None;
            }
            let (w, c) = up.terms().next().expect("nonzero entry");
            let c = low.coeff(w)?.rf_div(c).ok()?;
            if low != &up.scale(&c) {
                return None;
            }
            match &factor {
                Some(f) if *f != c => return None,
                Some(_) => {}
                None => factor = Some(c),
            }
        }
    }
    factor
}

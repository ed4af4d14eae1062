//! Commutative brute force over the integers, for the `r = s = 1` checks.

/// Square integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    pub size: usize,
    pub data: Vec<i128>,
}

impl IntMatrix {
    pub fn from_fn<F: FnMut(usize, usize) -> i128>(size: usize, mut f: F) -> IntMatrix {
        let mut data = Vec::with_capacity(size * size);
        for i in 1..=size {
            for j in 1..=size {
                data.push(f(i, j));
            }
        }
        IntMatrix { size, data }
    }

    /// 1-based entry.
    pub fn at(&self, i: usize, j: usize) -> i128 {
        self.data[(i - 1) * self.size + (j - 1)]
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        IntMatrix::from_fn(self.size, |i, j| {
            (1..=self.size)
                .map(|k| self.at(i, k) * other.at(k, j))
                .sum()
        })
    }

    pub fn transpose(&self) -> IntMatrix {
        IntMatrix::from_fn(self.size, |i, j| self.at(j, i))
    }

    /// `diag(J, ..., J)` with `J = (0 1; -v 0)`.
    pub fn jay(size: usize, v: i128) -> IntMatrix {
        IntMatrix::from_fn(size, |i, j| {
            if i % 2 == 1 && j == i + 1 {
                1
            } else if i % 2 == 0 && j + 1 == i {
                -v
            } else {
                0
            }
        })
    }
}

fn perm_sum(m: &IntMatrix, signed: bool) -> i128 {
    // Laplace expansion along the first row, over the remaining columns
    fn rec(m: &IntMatrix, row: usize, cols: &mut Vec<usize>, signed: bool) -> i128 {
        if cols.is_empty() {
            return 1;
        }
        let mut acc = 0;
        for k in 0..cols.len() {
            let c = cols.remove(k);
            let sign = if signed && k % 2 == 1 { -1 } else { 1 };
            acc += sign * m.at(row, c) * rec(m, row + 1, cols, signed);
            cols.insert(k, c);
        }
        acc
    }
    rec(m, 1, &mut (1..=m.size).collect(), signed)
}

pub fn det(m: &IntMatrix) -> i128 {
    perm_sum(m, true)
}

pub fn per(m: &IntMatrix) -> i128 {
    perm_sum(m, false)
}

fn matching_sum(m: &IntMatrix, signed: bool) -> i128 {
    fn rec(m: &IntMatrix, rest: &mut Vec<usize>, signed: bool) -> i128 {
        if rest.is_empty() {
            return 1;
        }
        let first = rest.remove(0);
        let mut acc = 0;
        for k in 0..rest.len() {
            let j = rest.remove(k);
            let sign = if signed && k % 2 == 1 { -1 } else { 1 };
            acc += sign * m.at(first, j) * rec(m, rest, signed);
            rest.insert(k, j);
        }
        rest.insert(0, first);
        acc
    }
    rec(m, &mut (1..=m.size).collect(), signed)
}

/// Pfaffian of the strict upper triangle.
pub fn pf(m: &IntMatrix) -> i128 {
    matching_sum(m, true)
}

/// Hafnian of the strict upper triangle: the sum over perfect matchings.
pub fn hf(m: &IntMatrix) -> i128 {
    matching_sum(m, false)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        let a = IntMatrix {
            size: 2,
            data: vec![1, 2, 3, 4],
        };
        assert_eq!(det(&a), -2);
        assert_eq!(per(&a), 10);
        let b = IntMatrix::from_fn(4, |i, j| (10 * i + j) as i128);
        // b12 b34 - b13 b24 + b14 b23
        assert_eq!(pf(&b), 12 * 34 - 13 * 24 + 14 * 23);
        assert_eq!(hf(&b), 12 * 34 + 13 * 24 + 14 * 23);
    }
}

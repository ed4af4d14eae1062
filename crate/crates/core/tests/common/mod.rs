//! Test-side reference implementations, written directly from the defining
//! sums and sharing no code with the library's linear algebra.
#![allow(dead_code)]

use std::sync::Arc;

use qpfaff::{Algebra, NCPoly, RatFunc};

/// Dense square matrix over an algebra, 0-based.
pub type Mat = Vec<Vec<NCPoly>>;

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

pub fn inversions(p: &[usize]) -> usize {
    (0..p.len())
        .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| p[i] > p[j])
        .count()
}

pub fn generic_matrix(alg: &Arc<Algebra>) -> Mat {
    let n = alg.n();
    (1..=n)
        .map(|i| (1..=n).map(|j| alg.generator(i, j)).collect())
        .collect()
}

pub fn submatrix(m: &Mat, rows: &[usize], cols: &[usize]) -> Mat {
    rows.iter()
        .map(|&i| cols.iter().map(|&j| m[i][j].clone()).collect())
        .collect()
}

fn product(alg: &Arc<Algebra>, factors: impl Iterator<Item = NCPoly>) -> NCPoly {
    factors.fold(alg.one(), |acc, f| &acc * &f)
}

fn power(w: &RatFunc, e: usize) -> RatFunc {
    w.pow(e as i64).unwrap()
}

/// `Σ_σ w^{l(σ)} m[0][σ0] m[1][σ1] ...`
pub fn row_sum(alg: &Arc<Algebra>, m: &Mat, w: &RatFunc) -> NCPoly {
    let n = m.len();
    let mut acc = alg.zero();
    for p in permutations(n) {
        let t = product(alg, (0..n).map(|i| m[i][p[i]].clone()));
        acc = &acc + &t.scale(&power(w, inversions(&p)));
    }
    acc
}

/// `Σ_σ w^{l(σ)} m[σ0][0] m[σ1][1] ...`
pub fn col_sum(alg: &Arc<Algebra>, m: &Mat, w: &RatFunc) -> NCPoly {
    let n = m.len();
    let mut acc = alg.zero();
    for p in permutations(n) {
        let t = product(alg, (0..n).map(|j| m[p[j]][j].clone()));
        acc = &acc + &t.scale(&power(w, inversions(&p)));
    }
    acc
}

pub fn rdet(alg: &Arc<Algebra>, m: &Mat) -> NCPoly {
    row_sum(alg, m, &-alg.r())
}

pub fn cdet(alg: &Arc<Algebra>, m: &Mat) -> NCPoly {
    col_sum(alg, m, &-&alg.s().rf_inv().unwrap())
}

pub fn mat_mul(alg: &Arc<Algebra>, a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).fold(alg.zero(), |acc, k| &acc + &(&a[i][k] * &b[k][j])))
                .collect()
        })
        .collect()
}

pub fn transpose(a: &Mat) -> Mat {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| a[j][i].clone()).collect())
        .collect()
}

/// Block diagonal with 2x2 blocks `[[0, 1], [-v, 0]]`.
pub fn jay(alg: &Arc<Algebra>, v: &RatFunc, size: usize) -> Mat {
    (0..size)
        .map(|i| {
            (0..size)
                .map(|j| {
                    if i % 2 == 0 && j == i + 1 {
                        alg.one()
                    } else if i % 2 == 1 && j + 1 == i {
                        alg.scalar(-v)
                    } else {
                        alg.zero()
                    }
                })
                .collect()
        })
        .collect()
}

/// `A^T J_{s^-1} A`.
pub fn b_matrix(alg: &Arc<Algebra>) -> Mat {
    let a = generic_matrix(alg);
    let j = jay(alg, &alg.s().rf_inv().unwrap(), alg.n());
    mat_mul(alg, &mat_mul(alg, &transpose(&a), &j), &a)
}

/// `A J_r A^T`.
pub fn b_prime_matrix(alg: &Arc<Algebra>) -> Mat {
    let a = generic_matrix(alg);
    let j = jay(alg, alg.r(), alg.n());
    mat_mul(alg, &mat_mul(alg, &a, &j), &transpose(&a))
}

/// `Σ_{σ ∈ Π'} w^{l(σ)} b_{σ1σ2} b_{σ3σ4} ...`, optionally restricted to
/// matchings (`σ1 < σ3 < ...`).
pub fn pair_sum(alg: &Arc<Algebra>, b: &Mat, w: &RatFunc, matchings_only: bool) -> NCPoly {
    let m = b.len();
    let mut acc = alg.zero();
    for p in permutations(m) {
        let pairs_ok = (0..m / 2).all(|k| p[2 * k] < p[2 * k + 1]);
        let matching_ok = !matchings_only || (1..m / 2).all(|k| p[2 * k - 2] < p[2 * k]);
        if !(pairs_ok && matching_ok) {
            continue;
        }
        let t = product(alg, (0..m / 2).map(|k| b[p[2 * k]][p[2 * k + 1]].clone()));
        acc = &acc + &t.scale(&power(w, inversions(&p)));
    }
    acc
}

fn factorial(n: usize, v: &RatFunc) -> RatFunc {
    let one = RatFunc::one(v.vars());
    let mut acc = one.clone();
    for k in 1..=n {
        let mut int = RatFunc::zero(v.vars());
        for e in 0..k {
            int = &int + &power(v, e);
        }
        acc = &acc * &int;
    }
    acc
}

/// `Pf_v(B) = [n]_{v^4}!^{-1} Σ_{Π'} (-v)^{l(σ)} ...`
pub fn pf(alg: &Arc<Algebra>, b: &Mat, v: &RatFunc) -> NCPoly {
    let norm = factorial(b.len() / 2, &power(v, 4)).rf_inv().unwrap();
    pair_sum(alg, b, &-v, false).scale(&norm)
}

/// `Hf_q(B) = [n]_{q^4}!^{-1} Σ_{Π'} q^{l(σ)} ...`
pub fn hf(alg: &Arc<Algebra>, b: &Mat, q: &RatFunc) -> NCPoly {
    let norm = factorial(b.len() / 2, &power(q, 4)).rf_inv().unwrap();
    pair_sum(alg, b, q, false).scale(&norm)
}

/// Maya relation residuals: `b_ij b_kl + ε q b_ik b_jl + q² b_il b_jk`
/// minus `b_kl b_ij + ε q⁻¹ b_jl b_ik + q⁻² b_jk b_il`.
pub fn maya(b: &Mat, q: &RatFunc, eps: i64) -> Vec<NCPoly> {
    let m = b.len();
    let qi = q.rf_inv().unwrap();
    let mut out = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            for k in j + 1..m {
                for l in k + 1..m {
                    let t = |x: usize, y: usize, z: usize, u: usize, c: RatFunc| {
                        (&b[x][y] * &b[z][u]).scale(&c)
                    };
                    let one = RatFunc::one(q.vars());
                    let lhs = &(&t(i, j, k, l, one.clone()) + &t(i, k, j, l, q.scale_int(eps)))
                        + &t(i, l, j, k, power(q, 2));
                    let rhs = &(&t(k, l, i, j, one) + &t(j, l, i, k, qi.scale_int(eps)))
                        + &t(j, k, i, l, power(&qi, 2));
                    out.push(&lhs - &rhs);
                }
            }
        }
    }
    out
}

pub fn to_mat(g: &qpfaff::GenMatrix) -> Mat {
    (1..=g.rows())
        .map(|i| (1..=g.cols()).map(|j| g.get(i, j).clone()).collect())
        .collect()
}

/// Integer brute force, recursive expansion along the first row.
pub mod int {
    pub type IMat = Vec<Vec<i128>>;

    fn drop(m: &IMat, rows: &[usize], cols: &[usize]) -> IMat {
        (0..m.len())
            .filter(|i| !rows.contains(i))
            .map(|i| {
                (0..m.len())
                    .filter(|j| !cols.contains(j))
                    .map(|j| m[i][j])
                    .collect()
            })
            .collect()
    }

    pub fn det(m: &IMat) -> i128 {
        if m.is_empty() {
            return 1;
        }
        (0..m.len())
            .map(|j| if j % 2 == 0 { 1 } else { -1 } * m[0][j] * det(&drop(m, &[0], &[j])))
            .sum()
    }

    pub fn per(m: &IMat) -> i128 {
        if m.is_empty() {
            return 1;
        }
        (0..m.len())
            .map(|j| m[0][j] * per(&drop(m, &[0], &[j])))
            .sum()
    }

    pub fn pf(m: &IMat) -> i128 {
        if m.is_empty() {
            return 1;
        }
        (1..m.len())
            .map(|j| if j % 2 == 1 { 1 } else { -1 } * m[0][j] * pf(&drop(m, &[0, j], &[0, j])))
            .sum()
    }

    pub fn hf(m: &IMat) -> i128 {
        if m.is_empty() {
            return 1;
        }
        (1..m.len())
            .map(|j| m[0][j] * hf(&drop(m, &[0, j], &[0, j])))
            .sum()
    }

    pub fn mul(a: &IMat, b: &IMat) -> IMat {
        let n = a.len();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum())
                    .collect()
            })
            .collect()
    }

    pub fn transpose(a: &IMat) -> IMat {
        (0..a.len())
            .map(|i| (0..a.len()).map(|j| a[j][i]).collect())
            .collect()
    }

    pub fn jay(size: usize) -> IMat {
        (0..size)
            .map(|i| {
                (0..size)
                    .map(|j| match (i % 2, j as i64 - i as i64) {
                        (0, 1) => 1,
                        (1, -1) => -1,
                        _ => 0,
                    })
                    .collect()
            })
            .collect()
    }
}

/// Rewriting by direct pattern matching on letter pairs, leftmost first.
pub mod naive {
    use std::collections::BTreeMap;

    use qpfaff::{NCPoly, RatFunc};

    type Pos = (u8, u8);

    pub type Naive = BTreeMap<Vec<(u8, u8)>, RatFunc>;

    /// Straight transcription of the four rules, applied to the first
    /// descending adjacent pair until none is left.
    fn naive_rule(x: Pos, y: Pos) -> Option<Vec<(Pos, Pos, RatFunc)>> {
        let one = RatFunc::one(RatFunc::r().vars());
        if x <= y {
            return None;
        }
        let ((a, b), (c, d)) = (x, y);
        Some(if a == c {
            vec![(y, x, RatFunc::r().rf_inv().unwrap())]
        } else if b == d {
            vec![(y, x, RatFunc::s())]
        } else if b < d {
            vec![(y, x, &RatFunc::r() * &RatFunc::s())]
        } else {
            vec![
                (y, x, one),
                ((c, b), (a, d), -(&RatFunc::r() - &RatFunc::s())),
            ]
        })
    }

    pub fn naive_normalize(input: Naive) -> Naive {
        let mut todo = input;
        let mut done = Naive::new();
        while let Some((w, c)) = todo.pop_first() {
            let hit = (0..w.len().saturating_sub(1))
                .find_map(|i| naive_rule(w[i], w[i + 1]).map(|rule| (i, rule)));
            let target = match hit {
                None => {
                    add(&mut done, w, c);
                    continue;
                }
                Some(h) => h,
            };
            let (i, rule) = target;
            for (p, q, k) in rule {
                let mut v = w.clone();
                v[i] = p;
                v[i + 1] = q;
                add(&mut todo, v, &c * &k);
            }
        }
        done
    }

    fn add(m: &mut Naive, w: Vec<(u8, u8)>, c: RatFunc) {
        let sum = match m.get(&w) {
            Some(a) => a + &c,
            None => c,
        };
        if sum.is_zero() {
            m.remove(&w);
        } else {
            m.insert(w, sum);
        }
    }

    pub fn to_naive(p: &NCPoly) -> Naive {
        p.terms()
            .map(|(w, c)| {
                (
                    w.letters().iter().map(|l| (l.row, l.col)).collect(),
                    c.clone(),
                )
            })
            .collect()
    }
}

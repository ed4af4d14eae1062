//! Permutations, inversion counts and the constrained families used by
//! Pfaffian and Hafnian sums.

/// A bijection of `1..=m`, stored as its image list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(m: usize) -> Permutation {
        Permutation((1..=m).collect())
    }

    /// `None` unless `images` is a bijection of `1..=images.len()`.
    pub fn from_images(images: Vec<usize>) -> Option<Permutation> {
        let m = images.len();
        let mut seen = vec![false; m + 1];
        for &x in &images {
            if x == 0 || x > m || seen[x] {
                return None;
            }
            seen[x] = true;
        }
        Some(Permutation(images))
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `σ(i)`, 1-based.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    /// Number of pairs `i < j` with `σ(i) > σ(j)`.
    pub fn inversions(&self) -> usize {
        inversions(&self.0)
    }
}

pub fn inversions(seq: &[usize]) -> usize {
    let mut count = 0;
    for i in 0..seq.len() {
        for j in (i + 1)..seq.len() {
            if seq[i] > seq[j] {
                count += 1;
            }
        }
    }
    count
}

/// All of `S_m` in lexicographic order.
pub fn all_permutations(m: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(m);
    let mut used = vec![false; m + 1];
    fn rec(m: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
        if cur.len() == m {
            out.push(Permutation(cur.clone()));
            return;
        }
        for x in 1..=m {
            if !used[x] {
                used[x] = true;
                cur.push(x);
                rec(m, cur, used, out);
                cur.pop();
                used[x] = false;
            }
        }
    }
    rec(m, &mut cur, &mut used, &mut out);
    out
}

/// `Π'`: permutations of `1..=2n` with `σ(2i-1) < σ(2i)` for every `i`.
pub fn enumerate_pi_prime(size: usize) -> Vec<Permutation> {
    all_permutations(size)
        .into_iter()
        .filter(|p| p.0.chunks(2).all(|c| c.len() == 2 && c[0] < c[1]))
        .collect()
}

/// `Π`: the subset of `Π'` with `σ(1) < σ(3) < ... < σ(2n-1)`, i.e. perfect
/// matchings written with pairs sorted by their smaller element.
pub fn enumerate_pi(size: usize) -> Vec<Permutation> {
    enumerate_pi_prime(size)
        .into_iter()
        .filter(|p| {
            p.0.iter()
                .step_by(2)
                .collect::<Vec<_>>()
                .windows(2)
                .all(|w| w[0] < w[1])
        })
        .collect()
}

/// Increasing subsets of `1..=m` of size `t`, in lexicographic order.
pub fn subsets(m: usize, t: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(t);
    fn rec(start: usize, m: usize, t: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == t {
            out.push(cur.clone());
            return;
        }
        for x in start..=m {
            if m - x + 1 < t - cur.len() {
                break;
            }
            cur.push(x);
            rec(x + 1, m, t, cur, out);
            cur.pop();
        }
    }
    rec(1, m, t, &mut cur, &mut out);
    out
}

/// Elements of `1..=m` not in the sorted list `sub`.
pub fn complement(m: usize, sub: &[usize]) -> Vec<usize> {
    (1..=m).filter(|x| !sub.contains(x)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inversion_counts() {
        assert_eq!(Permutation::identity(5).inversions(), 0);
        assert_eq!(
            Permutation::from_images(vec![3, 2, 1])
                .unwrap()
                .inversions(),
            3
        );
        assert_eq!(
            Permutation::from_images(vec![2, 1, 4, 3])
                .unwrap()
                .inversions(),
            2
        );
        assert!(Permutation::from_images(vec![1, 1]).is_none());
    }

    #[test]
    fn constrained_families() {
        assert_eq!(all_permutations(4).len(), 24);
        // brute-force counts: 4!/2^2 and 3!! = 3
        assert_eq!(enumerate_pi_prime(4).len(), 6);
        assert_eq!(enumerate_pi(4).len(), 3);
        assert_eq!(enumerate_pi_prime(6).len(), 90);
        assert_eq!(enumerate_pi(6).len(), 15);
        let pi: Vec<usize> = enumerate_pi(4)
            .iter()
            .map(Permutation::inversions)
            .collect();
        assert_eq!(pi, vec![0, 1, 2]);
    }

    #[test]
    fn subset_enumeration() {
        assert_eq!(subsets(4, 2).len(), 6);
        assert_eq!(subsets(3, 0), vec![Vec::<usize>::new()]);
        assert_eq!(complement(4, &[1, 3]), vec![2, 4]);
    }
}

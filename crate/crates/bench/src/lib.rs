//! Seeded workloads shared by the benchmarks.

use std::sync::Arc;

use qpfaff::checks::random_poly;
use qpfaff::{Algebra, NCPoly, Regime};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn generic_algebra(n: usize) -> Arc<Algebra> {
    Algebra::single(n, &Regime::Generic).expect("valid size")
}

/// `count` unnormalized random elements with words of length up to `degree`.
pub fn random_inputs(alg: &Arc<Algebra>, count: usize, degree: usize, seed: u64) -> Vec<NCPoly> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| random_poly(alg, &mut rng, 4, degree))
        .collect()
}

//! Quantum linear algebra over `A_{r,s}(n)`.

mod det;
mod identities;
mod matrix;
mod maya;
mod numeric;
mod perm;
mod pfaff;

pub use det::{
    adjugate, cdet, cofactor_col, cofactor_row, laplace_col, laplace_row, per, per_q, rdet,
    weighted_perm_sum, weighted_perm_sum_naive, Along, MinorSide,
};
pub use identities::{
    verify_identity, verify_identity_with, Family, Identity, VerifyOptions, DET_SIZE_CAP,
    PF_SIZE_CAP,
};
pub use matrix::{build_B, build_Bprime, jay, observed_antisymmetry, GenMatrix};
pub use maya::{maya_residuals, MayaSign};
pub use numeric::evaluate_numeric;
pub use perm::{
    all_permutations, complement, enumerate_pi, enumerate_pi_prime, inversions, subsets,
    Permutation,
};
pub use pfaff::{
    hf_full, hf_matching, hf_recursive, pair_sum, pair_sum_naive, pf_full, pf_matching,
    pf_recursive,
};

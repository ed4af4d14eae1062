pub mod checks;
pub mod classical;
pub mod error;
pub mod ncalg;
pub mod qexterior;
pub mod qlinalg;
pub mod ratfunc;
pub mod report;

pub use error::{Error, Result};
pub use ncalg::{Algebra, AlgebraSpec, Flavor, Letter, NCPoly, Regime, Side, Strategy, Word};
pub use qexterior::{ExtMono, MixedPoly};
pub use qlinalg::{GenMatrix, Identity, Permutation};
pub use ratfunc::{q_factorial, q_integer, IntPoly, RatFunc, VarSet};
pub use report::Report;

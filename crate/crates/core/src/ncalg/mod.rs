//! The quantum matrix semigroup `A_{r,s}(n)` as a rewriting system.
//!
//! Words are normal when non-decreasing in the letter order; the four
//! families of quadratic relations are oriented so that every rewrite
//! strictly decreases a word lexicographically, which makes reduction
//! terminate. Coefficients never leave the parameter field.

mod algebra;
mod hopf;
mod poly;
mod word;

pub use algebra::{Algebra, AlgebraSpec, Flavor, Regime, Strategy};
pub use hopf::{coproduct, counit, counit_on, embed};
pub use poly::{NCPoly, SerializedPoly, SerializedTerm};
pub use word::{Letter, Side, Word};

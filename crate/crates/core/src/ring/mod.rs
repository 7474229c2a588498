//! Exact arithmetic in `R = Z[x^±1, y^±1]` and in its fraction field `Q(x, y)`.
//!
//! `R` is the group ring `Z[H]` of the free abelian group `H` on `{x, y}`;
//! monomials are the elements of `H`. Coefficients are arbitrary precision.

mod laurent;
mod monomial;
mod rational;

pub use laurent::{lp, LaurentPoly};
pub use monomial::Monomial;
pub use rational::RationalFunction;

//! Cells, chains and twisted chain complexes.
//!
//! [`sal_fn`] is the one-vertex complex `Sal(F_n)` with the weights
//! `a_i, b_i -> x`, `c_i -> y`; [`sal_an_mod_sigma2`] is the larger complex
//! it is collapsed from. [`CwComplex::twisted`] turns any 2-complex with
//! edge weights into a chain complex over `Z[H]`, which is also how the
//! general Salvetti complexes of [`crate::arrangement`] are twisted.

mod cell;
mod chain;
mod cw;
mod fibre;
mod quotient;

pub use cell::{Cell, CellLabel};
pub use chain::{word_to_chain, EdgeWord, Letter, TwistedChain};
pub use cw::{CwComplex, TwistedComplex, H1};
pub(crate) use fibre::check_n;
pub use fibre::{
    check_differential, fn_a_cells, fn_b_cells, fn_boundary_word, fn_differential_closed_form, fn_edges, fn_faces, fn_weight, sal_fn, sal_fn_cw};
pub use quotient::{check_collapse, free_reduce, quotient_boundary_word, quotient_endpoints, sal_an_mod_sigma2};

//! Exact computations around the Lawrence–Krammer–Bigelow (LKB)
//! representation of the braid group `B_n`.
//!
//! The crate builds Salvetti complexes of real line arrangements, the
//! twisted chain complex of the fibre `F_n` with coefficients in
//! `Z[x^±1, y^±1]`, explicit bases of its second homology, and the braid
//! group action on that homology. Every structural claim is checked by exact
//! computation; see [`verify`] for the complete suite.
//!
//! ```
//! use lkb::action::lkb_generator;
//! use lkb::ring::lp;
//!
//! let rho = lkb_generator(1, 2).unwrap();
//! assert_eq!(rho[(0, 0)], lp("-x^2*y"));
//! ```

pub mod action;
pub mod arrangement;
pub mod complex;
mod error;
pub mod homology;
pub mod linalg;
pub mod report;
pub mod ring;
pub mod verify;

pub use error::{Error, Result};

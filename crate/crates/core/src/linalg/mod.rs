//! Dense matrices over `R`, `Q(x, y)` and `Z`, with exact elimination.
//!
//! Matrices over `Q(x, y)` are never reduced entry by entry: rows are first
//! multiplied by a common multiple of their denominators, and the resulting
//! Laurent polynomial matrix is reduced fraction-free (see [`elimination`]).

pub mod elimination;
mod matrix;
mod smith;

pub use elimination::{
    field_det, field_inverse, field_kernel, field_rank, field_rref, field_solve, ring_det, ring_inverse,
    ring_kernel, ring_kernel_integral, ring_rank, Echelon,
};
pub use matrix::{FieldMatrix, IntMatrix, Matrix, RingMatrix, Scalar};
pub use smith::{in_column_lattice, smith_form, SmithForm};

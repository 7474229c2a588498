//! Twisted homology `H_2(F_n; Γ_π)`: the cycles `E_{i,j}`, the integral
//! basis `X_{i,j}`, and untwisted `H_1(F_n; Z)`.
//!
//! `H_2` is the kernel of `d_2` (there are no 3-cells). Over `Q(x, y)` it is
//! spanned by the `E_{i,j}`; over `R` it is free on the `X_{i,j}`.

mod cycles;
mod h1;
mod integral;

pub use cycles::{
    e_basis, e_coordinates, e_cycle, e_leading, e_matrix, eta, kernel_rank, pairs, v_chain, v_membership,
    verify_eta_triangular, EtaReport, KernelReport, VKind,
};
pub(crate) use cycles::{check_pair, e_coordinates_in};
pub use h1::{h1_fn, H1Report};
pub use integral::{a_order, integral_basis, integral_x, integral_x_in_e, reduce_to_integral_basis};

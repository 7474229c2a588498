//! The braid group action: the LKB matrices `ρ_k`, the cellular maps `S_k`
//! of `Sal(F_n)` realizing `σ_k`, the action they induce on `H_2(F_n; Γ_π)`,
//! and the fork basis.
//!
//! ```
//! use lkb::action::{homology_action, lkb_generator};
//!
//! for k in 1..3 {
//!     assert!(homology_action(k, 3).unwrap().same_entries(&lkb_generator(k, 3).unwrap()));
//! }
//! ```

mod braid;
mod chain_map;
mod eigen;
mod fork;
mod relations;

pub use braid::{lkb_generator, lkb_generator_inverse, lkb_word, pair_labels, rho_image, word_product, BraidWord};
pub use chain_map::{
    chain_action, h1_action, h1_class, homology_action, kernel_action, s_edge_word, s_face_chain, u_chain, ChainEndo,
    H1Action,
};
pub use eigen::{eigen_structure_check, f_vector, g_vector, EigenReport};
pub use fork::{
    fork_basis_action, fork_chain, fork_change_of_basis, fork_formula, fork_in_e_basis, verify_fork_boundary,
    ForkBoundaryReport, ForkPart,
};
pub use relations::{check_braid_relations, det_unit_check, DetReport, Level, Relation, RelationReport};

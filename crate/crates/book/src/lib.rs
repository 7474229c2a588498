//! Guide chapters as doc-tests. Each module includes one chapter of the
//! book so its code blocks run with `cargo test`.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/laurent.md")]
pub mod laurent {}

#[doc = include_str!("../../../book/src/representation.md")]
pub mod representation {}

#[doc = include_str!("../../../book/src/arrangements.md")]
pub mod arrangements {}

#[doc = include_str!("../../../book/src/fibre.md")]
pub mod fibre {}

#[doc = include_str!("../../../book/src/homology.md")]
pub mod homology {}

#[doc = include_str!("../../../book/src/action.md")]
pub mod action {}

#[doc = include_str!("../../../book/src/forks.md")]
pub mod forks {}

#[doc = include_str!("../../../book/src/verification.md")]
pub mod verification {}

//! Doc-test harness for the book under `book/`.
//!
//! Each chapter is attached to an empty module as documentation, so
//! `cargo test --doc` compiles and runs every Rust snippet in the book
//! against the current `hilbco` API. A chapter that drifts from the code
//! fails the build here.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/monomial-ideals.md")]
pub mod monomial_ideals {}

#[doc = include_str!("../../../book/src/counting-lengths.md")]
pub mod counting_lengths {}

#[doc = include_str!("../../../book/src/primary-decomposition.md")]
pub mod primary_decomposition {}

#[doc = include_str!("../../../book/src/semigroup-rings.md")]
pub mod semigroup_rings {}

#[doc = include_str!("../../../book/src/rings-and-ideals.md")]
pub mod rings_and_ideals {}

#[doc = include_str!("../../../book/src/hilbert-functions.md")]
pub mod hilbert_functions {}

#[doc = include_str!("../../../book/src/reduction-recurrence.md")]
pub mod reduction_recurrence {}

#[doc = include_str!("../../../book/src/cohen-macaulay-analysis.md")]
pub mod cohen_macaulay_analysis {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}

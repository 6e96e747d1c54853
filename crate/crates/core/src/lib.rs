//! Exact combinatorics behind the modular generalized Springer correspondence.
//!
//! Everything here is integer-exact: partitions are explicit part lists,
//! group orders are prime-exponent maps, and there is no floating point
//! anywhere. The crate is `no_std` (it only needs `alloc`), so the heavy
//! lifting can be reused from any frontend; the companion `mgsc` CLI adds
//! IO and serialization on top.
//!
//! - [`partitions`]: partition algebra — transpose, ℓ-regular and
//!   ℓ-restricted tests, enumerations, base-ℓ expansions.
//! - [`rootdata`]: Cartan types, Dynkin diagrams, factored Weyl group
//!   orders, and minimal Levi subsets whose Weyl groups contain an ℓ-Sylow.
//! - [`glspringer`]: the full correspondence for GL(n) — cuspidal data,
//!   relative Weyl groups, the induction bijection and its inverse.
//! - [`classical`]: distinguished nilpotent orbits in types B/C/D and the
//!   characteristic-2 cuspidal classification, with an independent
//!   sl₂-grading oracle.
//! - [`tables`]: curated cuspidal-pair counts for exceptional types and the
//!   G₂ series assignments.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod classical;
pub mod factored;
pub mod glspringer;
pub mod partitions;
pub mod prime;
pub mod rootdata;
pub mod tables;

pub use factored::FactoredOrder;
pub use partitions::Partition;
pub use prime::Prime;
pub use rootdata::{CartanType, DynkinDiagram, Series, SimpleSubset};

//! Conjugates, paratopisms, and classification of Latin squares.
//!
//! A Latin square of order n has six conjugates (adjugates, parastrophes),
//! one per permutation of the roles row/column/symbol. This crate builds
//! each conjugate directly from the square — transposing and/or replacing
//! rows or columns by their permutation inverses — and keeps the classical
//! orthogonal-array route alongside as an independent oracle.
//!
//! On top of the conjugates sits the paratopism group: quadruples
//! (α, β, γ, η) of an isotopism and a conjugate tag, 6(n!)³ elements in
//! all, with the swap laws that move an isotopism past a conjugate and the
//! composition rule they induce. The `classify` module uses that machinery
//! to enumerate reduced squares of small orders, partition them into
//! isotopy classes, types, inverse types, and main classes, and compute
//! autoparatopism (stabilizer) groups, with cycle-structure pruning to skip
//! non-representative prefixes during search.
//!
//! The crate is `no_std` (it allocates, nothing more); parsing of files,
//! random generation, and the command-line front end live in the companion
//! `paratopy-cli` crate.
//!
//! Conventions, fixed everywhere:
//!
//! - symbols and indices are 1-based in every textual form and 0-based in
//!   memory;
//! - composition acts right-to-left: (p·q)(i) = p(q(i));
//! - a paratopism conjugates first, then applies its isotopism;
//! - the inverse of a row or column is its permutation inverse, never the
//!   reversed sequence.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod classify;
pub mod conjugate;
pub mod error;
pub mod oa;
pub mod perm;
pub mod square;

mod paratopism;
#[cfg(test)]
mod testutil;

pub use classify::{
    all_reduced, autoparatopism_group, classify, count_reduced, isotopy_class_reduced,
    pair_signature, reduced_squares, ClassInfo, ClassKind, Classification, EnumOptions,
    PairSignature, Partition, StabilizerGroup,
};
pub use conjugate::ConjugateTag;
pub use error::Error;
pub use oa::OrthogonalArray;
pub use paratopism::{paratopism, swap_conjugate_isotopism, Paratopism, SwapSide};
pub use perm::{permutations, CycleStructure, Permutation};
pub use square::{Isotopism, LatinSquare};

//! Finite generalized ordered types: strict orders with a derived weak
//! order and positive antisymmetry, plus exhaustive enumeration of all
//! subtypes order-isomorphic to a pattern.
//!
//! The crate is `no_std` (alloc only); IO, file formats, and the CLI
//! live in the companion `gorder-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bits;
pub mod fin;
pub mod funcspace;
pub mod matcher;
pub mod order;

pub use matcher::{
    automorphisms, brute_force_match, enumerate_two_chain, match_pattern, Embedding, MatchResult,
    Pattern,
};
pub use order::{
    axiom_report, Carrier, Classification, OrderError, OrderedType, StrictRelation,
    ViolationReport,
};

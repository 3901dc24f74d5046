//! Longest Common Weakly Increasing Subsequence (LCWIS) solvers and the
//! reduction machinery that turns MAX-CNF-SAT instances into LCWIS instances.
//!
//! The crate is split along the pipeline stages:
//!
//! - [`seq`] — sequences over an integer alphabet, weight functions, and the
//!   elementary predicates everything else builds on.
//! - [`solve`] — quadratic DP solvers for LCWIS and its weighted variant,
//!   plus exponential brute-force oracles used as ground truth in tests.
//! - [`gadget`] — coordinate gadgets, vector gadgets, the combining
//!   construction that embeds many gadget pairs into one sequence pair, the
//!   weight-expansion map, and AND/OR combinators.
//! - [`reduce`] — the instance-transformation chain
//!   CNF → most-orthogonal vectors → LCWIS, with decoding certificates and
//!   brute-force oracles for both endpoints.
//! - [`verify`] — seeded property suites that check every gadget identity
//!   and combining equality against the oracles.
//!
//! Everything here is pure computation over immutable values; the companion
//! `lcwis-cli` crate carries file formats, benchmarking, and the command-line
//! surface.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod gadget;
pub mod reduce;
pub mod rng;
pub mod seq;
pub mod solve;
pub mod verify;

pub use seq::{Sequence, Symbol, WeightedAlphabet};

//! Exact-arithmetic toolkit for composition-theoretic series: reciprocals of
//! lacunary theta series as signed sums over integer compositions, with every
//! identity mechanically cross-checked against independent oracles.
//!
//! The crate is organized around a small pipeline:
//!
//! - [`partsets`]: the allowed-part alphabets (polygonal numbers, residue
//!   classes, and their variants)
//! - [`powerseries`]: truncated integer power series with Cauchy products,
//!   reciprocals, and q-Pochhammer product expansion
//! - [`qgen`]: the named generating functions and Ramanujan theta sums,
//!   built from both the sum and the product side
//! - [`compositions`]: restricted composition enumeration, weight rules, and
//!   the weighted sums with both a brute-force oracle and a DP fast path
//! - [`partitions`]: partition-side counting (the ground truth side of every
//!   identity)
//! - [`dirichlet`]: the norm-indexed analogue (composition zeta functions,
//!   the Mobius identity) plus numeric evaluations with tail bounds
//! - [`verify`]: the identity registry; each identity is recomputed along
//!   several independent paths and must agree exactly
//! - [`asymptotics`]: closed-form growth rates and exact/asymptotic ratio
//!   reports in high-precision floating point
//!
//! All identity checks are exact integer comparisons; floating point only
//! appears in the zeta evaluations and asymptotic reports, always with an
//! explicit error bound.

pub mod asymptotics;
pub mod compositions;
pub mod dirichlet;
pub mod error;
pub mod partitions;
pub mod partsets;
pub mod powerseries;
pub mod qgen;
pub mod verify;

pub use error::{Error, Result};

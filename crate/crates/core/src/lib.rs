//! Exact computations on Fano schemes of linear subspaces in determinantal
//! varieties of symmetric, alternating and rectangular matrices.
//!
//! - [`invariants`]: closed-form dimensions, emptiness, the connectedness graph.
//! - [`exactalg`]: fields, sparse polynomials, exact linear algebra.
//! - [`spaces`]: explicit matrix spaces and staircase patterns.
//! - [`tangent`]: Zariski tangent dimensions by two independent methods.
//! - [`oracle`]: finite-field exhaustive checks.
//! - [`cli`]: report assembly, DOT export and verification suites.

pub mod cli;
pub mod error;
pub mod exactalg;
pub mod invariants;
pub mod oracle;
pub mod spaces;
pub mod tangent;

pub use error::{Error, Result};

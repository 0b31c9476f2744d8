//! Unit graphs over `Z_n` and the linear codes spanned by their incidence
//! matrices.
//!
//! The unit graph `G(Z_n)` has vertex set `{0, .., n-1}` with distinct `x`,
//! `y` adjacent exactly when `x + y` is a unit mod `n`. Over a prime field
//! `F_q` the rows of the unoriented incidence matrix of `G(Z_n)` span a
//! linear code whose parameters (length, dimension, minimum distance, and
//! the dual's) admit closed-form predictions in terms of `n` and the Euler
//! totient. This crate computes every invariant independently (BFS, max
//! flow, Gaussian elimination, exhaustive or bounded distance search) and
//! checks the computed values against the predictions.
//!
//! Module map:
//! - [`ring_zn`]: factorization, totient, unit/non-unit classification
//! - [`unit_graph`]: graph construction, invariants, predictions
//! - [`gf_linalg`]: dense matrices over `F_q`, rank / rref / null space
//! - [`code_builder`]: incidence matrices, codes, parameter predictions
//! - [`distance`]: exhaustive and bounded minimum-distance search
//! - [`verify`]: prediction-vs-computation reports, parallel sweeps
//! - [`report`]: stable serialization of verification reports

pub mod code_builder;
pub mod distance;
mod error;
pub mod gf_linalg;
pub mod report;
pub mod ring_zn;
pub mod unit_graph;
pub mod verify;

mod flow;

pub use error::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

//! Rota-Baxter structure on groups, Lie algebras and crossed modules,
//! together with the derived constructions (graphs, descended
//! structures, semidirect products, induced operators) and the
//! Yang-Baxter solution checkers built from them.
//!
//! Everything is verified rather than assumed: finite carriers are
//! swept exhaustively, matrix carriers are sampled deterministically
//! and compared against a tolerance, and Lie algebra identities are
//! checked over basis tuples (exactly, in the rational regime).

// sweeps are indexed on purpose: indices are the element ids and basis
// positions that witnesses must name
#![allow(clippy::needless_range_loop)]

pub mod catalog;
pub mod crossed;
pub mod doc;
pub mod group;
pub mod lie;
pub mod mat;
pub mod rb;
pub mod report;
pub mod rng;
pub mod scalar;
pub mod suites;
pub mod tangent;
pub mod ybe;

pub use group::{CarrierGroup, Element, GroupAction, GroupMap};
pub use lie::LieAlgebra;
pub use mat::Mat;
pub use report::{CheckError, CheckStatus, Derived, Mode, ValidationReport};
pub use scalar::{Rat, Scalar};

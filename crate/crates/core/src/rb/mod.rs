//! Rota-Baxter operators and everything they induce.

pub mod algebra;
pub mod groups;

pub use algebra::{AlgebraRB, AlgebraRBPair, Connection};
pub use groups::{GroupRB, GroupRBPair};

//! Exact verification toolkit for Hecke symmetries.
//!
//! Given an invertible solution R of the braid equation satisfying the Hecke
//! quadratic relation, this crate constructs the associated quantum exterior
//! and symmetric algebras, the two-sided Koszul bicomplex connecting them, and
//! the numerical invariants attached to the pair: bidegree dimension tables,
//! Poincare series with rational reconstruction, the quantum rank, and the
//! homological determinant evaluated on supermatrix points.
//!
//! All arithmetic is exact over the rationals. There is no floating point
//! anywhere and no tolerance parameter: every check either holds identically
//! or fails with a witness.

pub mod error;
pub mod hecke;
pub mod koszul;
pub mod matrix;
pub mod partitions;
pub mod poly;
pub mod qspaces;
pub mod rat;
pub mod ratfunc;
pub mod zoo;

mod par;

pub use error::Error;
pub use hecke::{check_hecke, AxiomReport, HeckeSym};
pub use matrix::ExactMatrix;
pub use rat::Rat;

/// Resource limits shared by the heavier constructions.
#[derive(Debug, Clone)]
pub struct Limits {
    /// Largest ambient tensor power dimension that may be materialized.
    pub max_ambient_dim: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_ambient_dim: 200_000,
        }
    }
}

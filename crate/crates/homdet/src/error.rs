//! Error taxonomy shared across the crate.

use crate::hecke::AxiomReport;
use crate::rat::Rat;

/// Everything that can go wrong during construction or verification.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// A q-factorial vanished: `[k]_q = 0` for the reported k.
    #[error("q = {q} is a root of unity obstruction: [{k}]_q = 0")]
    RootOfUnity { k: usize, q: Rat },

    /// A rational function was evaluated at a zero of its denominator.
    #[error("pole at q = {q}")]
    PoleAtQ { q: Rat },

    /// Matrix shapes do not match the requested operation.
    #[error("dimension error: {0}")]
    Dimension(String),

    /// The half adjoint of R is singular, so no contraction P exists.
    #[error("half adjoint is singular, R is not closed")]
    SingularHalfAdjoint,

    /// R failed one of the Hecke axioms; the report carries witnesses.
    #[error("axiom violation:\n{report}")]
    AxiomViolation { report: AxiomReport },

    /// A tensor leg index was out of range.
    #[error("index {i} out of range for {n} tensor factors")]
    Index { i: usize, n: usize },

    /// Two symmetries with different q values were combined.
    #[error("mismatched q parameters: {left} vs {right}")]
    MismatchedQ { left: Rat, right: Rat },

    /// A homology space expected to be a line has a different dimension.
    #[error("homology at ({k},{l}) has dimension {dim}, expected 1")]
    NotOneDimensional { k: usize, l: usize, dim: usize },

    /// A group action failed to commute with the differentials.
    #[error("action does not commute with the differential at ({k},{l})")]
    NotCommuting { k: usize, l: usize },

    /// Malformed input: matrix files, rational literals, option values.
    #[error("parse error: {0}")]
    Parse(String),

    /// Rational reconstruction did not stabilize on the available terms.
    #[error("series reconstruction undetermined after {terms} terms")]
    Undetermined { terms: usize },

    /// A reconstructed Poincare series has roots of the wrong sign.
    #[error("root sign violation: {0}")]
    RootSignViolation(String),

    /// A construction would exceed the configured ambient dimension cap.
    #[error("resource cap exceeded: needed dimension {dim} > cap {cap}")]
    ResourceCap { dim: usize, cap: usize },
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

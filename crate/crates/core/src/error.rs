//! Error types shared across the crate.

use thiserror::Error;

/// Errors raised while constructing or querying simplicial complexes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("face {face:?} has {got} vertices, expected {expected}")]
    FaceCardinality {
        face: Vec<usize>,
        got: usize,
        expected: usize,
    },
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("face contains repeated vertex {vertex}")]
    RepeatedVertex { vertex: usize },
    #[error("{0:?} is not a face of the complex")]
    NotAFace(Vec<usize>),
    #[error("dimension {dim} out of range for a {k}-dimensional complex")]
    DimensionOutOfRange { dim: i32, k: usize },
    #[error("complete complex needs n >= k+1, got n = {n}, k = {k}")]
    TooFewVertices { n: usize, k: usize },
    #[error("invalid complex file: {0}")]
    Format(String),
}

/// Errors raised by the dense linear-algebra kernels.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum LinalgError {
    #[error("matrix is not symmetric (max asymmetry {max_asymmetry:e})")]
    NotSymmetric { max_asymmetry: f64 },
    #[error("matrix is not positive definite (pivot {pivot:e} at index {index})")]
    NotPositiveDefinite { pivot: f64, index: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

/// Errors raised by the semidefinite-programming layer.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SdpError {
    #[error("problem has no constraints")]
    NoConstraints,
    #[error("problem data contains a non-finite value")]
    NonFinite,
    #[error("constraint {index} references block {block}, but there are {blocks} blocks")]
    BadBlock {
        index: usize,
        block: usize,
        blocks: usize,
    },
    #[error("constraint {index} entry ({row},{col}) outside block of dimension {dim}")]
    EntryOutOfRange {
        index: usize,
        row: usize,
        col: usize,
        dim: usize,
    },
    #[error("constraint {index} has zero coefficients but nonzero right-hand side {rhs}")]
    ZeroRow { index: usize, rhs: f64 },
    #[error("certificate violates {condition} by {violation:e}")]
    InfeasibleCertificate { condition: String, violation: f64 },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Errors raised by the exact combinatorial searches.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("search budget of {budget} nodes exhausted")]
    BudgetExhausted { budget: u64 },
    #[error("homomorphism map is malformed: {0}")]
    MalformedMap(String),
    #[error("complex is not regular: face degrees differ ({0} vs {1})")]
    NotRegular(usize, usize),
}

/// Errors raised while assembling theta programs and bounds.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ThetaError {
    #[error("level {level} outside [{min}, {max}] (independence number {max})")]
    LevelOutOfRange {
        level: usize,
        min: usize,
        max: usize,
    },
    #[error("no independent sets of size {size}")]
    EmptyIndexSet { size: usize },
    #[error("graph is not regular (degrees {0} and {1} both occur)")]
    NotRegular(usize, usize),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Sdp(#[from] SdpError),
}

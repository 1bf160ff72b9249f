//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed edge-list input.
    #[error("parse error at line {line}: {reason}")]
    Parse { line: usize, reason: String },

    /// A loop edge (a, a) was supplied; simple graphs have none.
    #[error("loop edge ({v}, {v}) rejected: simple graphs have no loops")]
    LoopEdge { v: usize },

    /// A vertex id outside 1..=n.
    #[error("vertex {v} out of range 1..={n}")]
    VertexOutOfRange { v: usize, n: usize },

    /// Two operands act on different qubit counts.
    #[error("size mismatch: {left} vs {right} qubits")]
    SizeMismatch { left: usize, right: usize },

    /// A two-qubit gate was given the same qubit twice.
    #[error("qubits must differ, both are {q}")]
    DuplicateQubit { q: usize },

    /// A desk-scale capacity limit was exceeded.
    #[error("{what}: limit is {limit}, requested {requested}")]
    Capacity { what: &'static str, limit: usize, requested: usize },

    /// A value outside an operation's domain.
    #[error("domain error: {reason}")]
    Domain { reason: String },

    /// A hub set fails the cover precondition; names one uncovered edge.
    #[error("hub set does not cover edge ({a}, {b})")]
    UncoveredEdge { a: usize, b: usize },

    /// Text or JSON describing a Pauli string could not be parsed.
    #[error("invalid Pauli string: {reason}")]
    PauliFormat { reason: String },

    /// A generator set violated the commuting/Hermitian contract.
    #[error("invalid generator set: {reason}")]
    InvalidGenerators { reason: String },

    /// JSON with the wrong shape for the requested value.
    #[error("invalid JSON: {reason}")]
    JsonFormat { reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

use crate::spectra::SpectrumKind;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: self-loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },

    #[error("line {line}: vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { line: usize, vertex: usize, n: usize },

    #[error("{family} needs at least {min} vertices, got {n}")]
    TooFewVertices { family: &'static str, n: usize, min: usize },

    #[error("join graph needs 1 <= p <= n-1, got n={n}, p={p}")]
    JoinParameter { n: usize, p: usize },

    #[error("vertices {first} and {second} share lattice coordinates")]
    DuplicateCoordinate { first: usize, second: usize },

    #[error("vertex {vertex}: expected {expected} coordinates, found {found}")]
    DimensionMismatch {
        vertex: usize,
        expected: usize,
        found: usize,
    },

    #[error("edge {index} ({u},{v}) does not join lattice neighbours")]
    NotLatticeNeighbors { index: usize, u: usize, v: usize },

    #[error("embedding does not match graph: {0}")]
    InconsistentEmbedding(String),

    #[error("edge probability must lie in (0, 1], got {0}")]
    InvalidProbability(f64),

    #[error("no connected graph after {attempts} draws at edge probability {probability}; try a larger probability")]
    RetryBudget { attempts: usize, probability: f64 },

    #[error("vertex {vertex} has degree zero; the normalized Laplacian is undefined")]
    IsolatedVertex { vertex: usize },

    #[error("graph is not connected")]
    NotConnected,

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {residual:e})")]
    NoConvergence { sweeps: usize, residual: f64 },

    #[error("{what} = {value} outside the valid range {min}..={max}")]
    OutOfRange {
        what: &'static str,
        value: f64,
        min: f64,
        max: f64,
    },

    #[error("expected a {expected} spectrum, got {found}")]
    WrongSpectrumKind {
        expected: SpectrumKind,
        found: SpectrumKind,
    },

    #[error("eigenvectors are required but the spectrum carries none")]
    MissingEigenvectors,

    #[error("vertex subset must have {expected} distinct vertices, got {found}")]
    SubsetSize { expected: usize, found: usize },

    #[error("exhaustive search over {candidates} candidates exceeds the budget of {budget}; use a greedy strategy")]
    ExhaustiveBudget { candidates: u128, budget: u128 },

    #[error("pair set must contain {expected} ordered pairs, got {found}")]
    PairSetCardinality { expected: usize, found: usize },

    #[error("invalid pair ({u},{v}): {reason}")]
    InvalidPair { u: usize, v: usize, reason: &'static str },

    #[error("not enough distinct ordered pairs: need {needed}, only {available} exist")]
    InsufficientPairs { needed: usize, available: usize },

    #[error("{0}")]
    Unsupported(String),

    #[error("{0}")]
    InvalidArgument(String),

    #[error("sequence `{0}` must be nondecreasing")]
    Unsorted(&'static str),

    #[error("internal consistency check failed: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn out_of_range(
        what: &'static str,
        value: impl Into<f64>,
        min: impl Into<f64>,
        max: impl Into<f64>,
    ) -> Self {
        Error::OutOfRange {
            what,
            value: value.into(),
            min: min.into(),
            max: max.into(),
        }
    }
}

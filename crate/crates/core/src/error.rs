use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("a graph needs at least one vertex")]
    NoVertices,
    #[error("edge ({u}, {v}) references a vertex outside 0..{n}")]
    IndexOutOfRange { u: usize, v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("invalid degree sequence: {0}")]
    InvalidDegreeSequence(&'static str),
    #[error("invalid family parameters: {0}")]
    InvalidFamily(&'static str),
    #[error("no connected G(n, p) sample after {0} attempts")]
    ConnectivityRetryExhausted(usize),
    #[error("Jacobi iteration did not converge within {0} sweeps")]
    NoConvergence(usize),
    #[error("spectrum inconsistent with {components} connected components (eigenvalue {value:e})")]
    SpectralInconsistency { components: usize, value: f64 },
    #[error("graph has no non-zero Laplacian eigenvalues")]
    NoNonzeroEigenvalues,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("sequence is not non-increasing at position {0}")]
    NotSorted(usize),
    #[error("sequence lengths differ: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("need at least {need} vertices, got {got}")]
    TooSmall { need: usize, got: usize },
    #[error("power sum undefined: entry {value} at position {index} with exponent {alpha}")]
    DomainViolation {
        index: usize,
        value: f64,
        alpha: f64,
    },
    #[error("invalid pinch: {0}")]
    BadPinch(&'static str),
    #[error("unknown bound id `{0}`")]
    UnknownBound(alloc::string::String),
    #[error("bad parameter for {bound}: {reason}")]
    BadParameter {
        bound: &'static str,
        reason: &'static str,
    },
}

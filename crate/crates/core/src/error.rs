use thiserror::Error;

/// Errors for every fallible operation in the crate.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partite spec: {0}")]
    InvalidSpec(String),

    #[error("vertex {v} out of range for {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },

    #[error("{0} is not a subset of the vertex set")]
    NotASubset(String),

    #[error("invalid hypergraph: {0}")]
    InvalidHypergraph(String),

    #[error("transversal undefined for edgeless hypergraph")]
    EdgelessHypergraph,

    #[error("contracted an isolated edge at vertex {v}")]
    ContractedIsolatedEdge { v: usize },

    #[error("set {0} is not a face of the complex")]
    FaceNotInComplex(String),

    #[error("skeleton index {i} out of range for dimension {dim}")]
    SkeletonOutOfRange { i: usize, dim: i64 },

    #[error("Alexander dual of the void complex is undefined")]
    DualOfVoid,

    #[error("operation undefined for the zero ideal")]
    ZeroIdeal,

    #[error("chain degree {i} out of range for dimension {dim}")]
    ChainDegreeOutOfRange { i: i64, dim: i64 },

    #[error("{p} is not prime")]
    NotPrime { p: u64 },

    #[error("Serre condition index must be at least 2, got {r}")]
    SerreIndexTooSmall { r: usize },

    #[error("l must be at least 1")]
    LevelParameterZero,

    #[error("ideal is not equigenerated")]
    NotEquigenerated,

    #[error("{what} capped at {cap}, got {actual}; call the *_with_cap variant to override")]
    CapExceeded { what: &'static str, actual: usize, cap: usize },

    #[error("invalid complex: {0}")]
    InvalidComplex(String),

    #[error("invalid sweep config: {0}")]
    InvalidSweepConfig(String),
}

pub type Result<T> = std::result::Result<T, Error>;

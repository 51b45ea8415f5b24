use thiserror::Error;

use crate::subset::Subset;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("ground set must have at least one element")]
    EmptyGroundSet,
    #[error("ground set of size {n} exceeds the cap of {cap}")]
    GroundSetTooLarge { n: usize, cap: usize },
    #[error("label {0} is not a valid element label")]
    BadLabel(usize),
    #[error("subset {subset:?} is not contained in [{n}]")]
    OutOfGround { subset: Subset, n: usize },
    #[error("operands live on different ground sets ([{left}] vs [{right}])")]
    GroundMismatch { left: usize, right: usize },

    #[error("the empty set cannot be a circuit")]
    EmptyCircuit,
    #[error("circuit {0:?} has fewer than three elements; only simple matroids are supported")]
    NotSimple(Subset),
    #[error("circuit {smaller:?} is contained in circuit {larger:?}")]
    ComparablePair { smaller: Subset, larger: Subset },
    #[error("circuit elimination fails for {c1:?}, {c2:?} at element {element}")]
    EliminationFailure {
        c1: Subset,
        c2: Subset,
        element: usize,
    },

    #[error("matrix column {0} is zero (loop)")]
    ZeroColumn(usize),
    #[error("matrix columns {0} and {1} are equal (parallel elements)")]
    EqualColumns(usize, usize),
    #[error("matrix has {0} rows; at most 128 are supported")]
    TooManyRows(usize),
    #[error("edge {edge} is a loop at vertex {vertex}")]
    GraphLoop { edge: usize, vertex: usize },
    #[error("edges {0} and {1} are parallel")]
    ParallelEdges(usize, usize),
    #[error("edge {edge} uses vertex {vertex} outside 1..={vertices}")]
    VertexOutOfRange {
        edge: usize,
        vertex: usize,
        vertices: usize,
    },

    #[error("{0:?} is not a circuit of the matroid")]
    NotACircuit(Subset),
    #[error("element is not homogeneous")]
    NotHomogeneous,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("chordality level must be at least 4, got {0}")]
    ChordalityLevel(usize),
    #[error("adicity level must be at least 1, got {0}")]
    AdicityLevel(usize),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("unknown builtin instance {0:?}")]
    UnknownBuiltin(String),
}

use thiserror::Error;

/// Errors produced by graph construction, classification and the game /
/// equilibrium operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {vertex} in layer {layer}")]
    SelfLoop { vertex: usize, layer: usize },
    #[error("duplicate edge {{{u},{v}}} in layer {layer}")]
    DuplicateEdge { u: usize, v: usize, layer: usize },
    #[error("a temporal graph needs at least one layer")]
    NoLayers,
    #[error("empty interval: lo {lo} > hi {hi}")]
    EmptyInterval { lo: usize, hi: usize },
    #[error("cycle distances require u < v <= n (got u={u}, v={v}, n={n})")]
    BadCyclePair { u: usize, v: usize, n: usize },
    #[error("graph is not a monotonically growing temporal cycle")]
    NotGrowingCycle,
    #[error("normalized cycle is degenerate (static after trimming)")]
    DegenerateCycle,
    #[error("graph is not a monotonically growing temporal linear forest")]
    NotGrowingForest,
    #[error("graph is not a monotonically growing temporal path")]
    NotGrowingPath,
    #[error("graph is not a superset temporal path")]
    NotSupersetPath,
    #[error("graph is not a superset temporal linear forest")]
    NotSupersetForest,
    #[error("unknown generator family `{0}`")]
    UnknownFamily(String),
    #[error("invalid generator parameters: {0}")]
    BadFamilyParams(String),
    #[error("a strategy profile needs at least one position")]
    EmptyProfile,
    #[error("a two-player operation got a profile of length {0}")]
    NotTwoPlayers(usize),
    #[error("boundary interval lookup is undefined for the vertex itself ({0})")]
    IntervalAtSelf(usize),
}

pub type Result<T> = std::result::Result<T, Error>;

use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("edge {tail}->{head} references a vertex outside 1..={n}")]
    VertexOutOfRange { tail: usize, head: usize, n: usize },
    #[error("edge index {0} is out of range")]
    EdgeOutOfRange(usize),
    #[error("edge {0} in the contraction set has nonzero gain")]
    NonNeutralEdgeInSet(usize),
    #[error("edge set is not balanced")]
    UnbalancedSet,
    #[error("subset expansion over {edges} edges exceeds the bound of {bound}")]
    TooManyEdges { edges: usize, bound: usize },
    #[error("graph has a neutral edge")]
    NeutralEdgePresent,
    #[error("invalid lower-degree sequence: {0}")]
    InvalidSequence(String),
    #[error("invalid set partition: {0}")]
    InvalidPartition(String),
    #[error("modulus must be at least 1")]
    InvalidModulus,
    #[error("rational expression did not clear to integer coefficients")]
    NonIntegerResult,
    #[error("{0}")]
    InvalidArgument(String),
}

pub type Result<T> = core::result::Result<T, Error>;

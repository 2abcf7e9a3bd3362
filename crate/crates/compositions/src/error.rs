use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid family parameter: {0}")]
    InvalidFamily(String),
    #[error("tree payload is not a tree: {0}")]
    InvalidTree(String),
    #[error("invalid edge list: {0}")]
    InvalidEdgeList(String),
    #[error("anchor vertex {anchor} out of range for graph on {n} vertices")]
    InvalidAnchor { anchor: usize, n: usize },
    #[error("ambient complete graph on {ambient} vertices is too small for a graph on {n} vertices")]
    AmbientTooSmall { ambient: usize, n: usize },
    #[error("vertex subset may not be empty")]
    EmptySubset,
    #[error("graph on {n} vertices exceeds the oracle limit {limit}")]
    OracleLimit { n: usize, limit: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("series truncation orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("series constant term is not 1")]
    NonUnitConstant,
    #[error("coefficient index n={n} exceeds truncation order {order}")]
    BeyondTruncation { n: usize, order: usize },
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("direct link missing: L[{0}][{0}] must be 1")]
    DirectLinkMissing(usize),

    #[error("adjacency entry L[{row}][{col}] = {value} is not binary")]
    NonBinaryEntry { row: usize, col: usize, value: i64 },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("node index {index} out of range for K = {k}")]
    IndexOutOfRange { index: usize, k: usize },

    #[error("transmitter {tx} and receiver {rx} are adjacent (L[{rx}][{tx}] = 1)")]
    AdjacentPair { tx: usize, rx: usize },

    #[error("K = {k} exceeds the exhaustive limit {limit}")]
    LimitExceeded { k: usize, limit: usize },

    #[error("node {to} is unreachable from node {from} in the backhaul graph")]
    Unreachable { from: usize, to: usize },

    #[error("matrix contains NaN or infinite entries")]
    NonFinite,

    #[error("K = {0} is odd; the even-K trade-off applies only to even K")]
    OddK(usize),

    #[error("K = {0} is even; the odd-K trade-off applies only to odd K >= 3")]
    EvenK(usize),

    #[error("partition must be a nonempty proper subset of the users")]
    EmptyPartition,

    #[error("super channel matrix is singular (numeric rank {rank} < {expected})")]
    SingularChannel { rank: usize, expected: usize },

    #[error("degenerate power grid: {0}")]
    DegenerateGrid(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use crate::bitstring::Family;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("operation is undefined for the null string")]
    NullString,

    #[error("invalid bit character {0:?} (expected '0' or '1')")]
    InvalidBit(char),

    #[error("{string:?} is not a {family} string")]
    NotMember { family: Family, string: String },

    #[error("{0:?} has no preimage: the two alternating strings of even length are excluded")]
    ExcludedAlternating(String),

    #[error("n={n} exceeds the cap {cap} for {what}")]
    CapExceeded { n: u32, cap: u32, what: &'static str },

    #[error("n={n} is out of range for {what} (minimum {min})")]
    IndexOutOfRange { n: u32, min: u32, what: &'static str },

    #[error("k must be positive")]
    ZeroIndex,

    #[error("rotation anchor must be nonempty")]
    EmptyAnchor,

    #[error("strings in S must share one length")]
    MixedLengths,

    #[error("graph is disconnected: {0} is unreachable")]
    Disconnected(String),

    #[error("vertex {0} is not in the graph")]
    NoSuchVertex(String),

    #[error("decomposition blocks overlap at n={n}: {label} appears in blocks i={i} and i={j}")]
    BlockOverlap { n: u32, label: String, i: usize, j: usize },

    #[error("block i={i} of the n={n} decomposition has {got} strings, expected {expected}")]
    BlockSize { n: u32, i: usize, got: usize, expected: usize },

    #[error("graph has {order} vertices; {what} is capped at {cap}")]
    GraphTooLarge { order: usize, cap: usize, what: &'static str },

    #[error("a Hamiltonian cycle needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),

    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

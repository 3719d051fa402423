use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("permutation orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("images do not form a bijection on 1..{0}")]
    NotABijection(usize),
    #[error("permutation is not a matching (needs all cycles of length 2)")]
    NotMatching,
    #[error("map order must be even, got {0}")]
    OddOrder(usize),
    #[error("maps have different n-matchings; multiplication is not defined")]
    MatchingMismatch,
    #[error("corner {0} out of range 1..{1}")]
    CornerOutOfRange(usize, usize),
    #[error("corner {0} repeated in cycle notation")]
    RepeatedCorner(usize),
    #[error("malformed cycle notation: {0}")]
    ParseCycles(String),
    #[error("transposition corners must be distinct, got ({0} {0})")]
    DegeneratePair(usize),
    #[error("map is not selfconjugate")]
    NotSelfconjugate,
    #[error("knot cycle index {0} out of range (knot has {1} cycles)")]
    BadCycleIndex(usize, usize),
    #[error("size {0} exceeds the enumeration bound {1}")]
    BoundExceeded(usize, usize),
    #[error("conjugator does not witness the given pair of maps")]
    InvalidWitness,
    #[error("unknown export format: {0}")]
    UnknownFormat(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid binary word {0:?}: letters must be 0 or 1")]
    InvalidBinaryWord(String),

    #[error("invalid sequence {0:?}: expected comma-separated positive integers")]
    InvalidSequence(String),

    #[error("index must be at least 1")]
    ZeroIndex,

    #[error("embedding requires i < j, got i = {i}, j = {j}")]
    IndexOrder { i: usize, j: usize },

    #[error("sequences are equal")]
    EqualSequences,

    #[error("sequences are not in lexicographic order: {first} does not precede {second}")]
    Unordered { first: String, second: String },

    #[error("word would have {0} letters, which exceeds the size limit")]
    TooLarge(u128),

    #[error("no divergence found up to length {0}")]
    DivergenceNotFound(usize),

    #[error("invalid pin word {0:?}")]
    InvalidPinWord(String),

    #[error("pin word violates alternation at position {0}")]
    Alternation(usize),

    #[error("pin word violates subscript consistency at position {0}")]
    Subscript(usize),

    #[error("operation is undefined on the empty word")]
    EmptyWord,

    #[error("invalid permutation {0:?}")]
    InvalidPermutation(String),

    #[error("length {n} exceeds the enumeration bound {bound}")]
    AboveBound { n: usize, bound: usize },

    #[error("length must be at least 1")]
    ZeroLength,

    #[error("sequence term {0} is not a power of two")]
    NotPowerOfTwo(u64),

    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),

    #[error("invalid directive word {0:?}")]
    InvalidDirective(String),

    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

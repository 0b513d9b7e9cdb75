use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("strand count must be at least {min}, got {n}")]
    InvalidStrandCount { n: usize, min: usize },

    #[error("generator index {index} out of range for {n} strands")]
    GeneratorOutOfRange { index: i64, n: usize },

    #[error("malformed token `{0}`")]
    MalformedToken(String),

    #[error("strand counts differ: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("label set must be nonempty")]
    EmptyLabelSet,

    #[error("label {label} out of range for {n} strands")]
    LabelOutOfRange { label: usize, n: usize },

    #[error("word contains a negative letter; a positive word is required")]
    NonPositiveWord,

    #[error("`{0}` is not a permutation in bracket notation")]
    InvalidPermutation(String),

    #[error("empty set of permutations")]
    EmptySet,

    #[error("pair ({i},{j}) is invalid for {n} strands")]
    InvalidPair { i: usize, j: usize, n: usize },

    #[error("comparator is not antisymmetric on vertices {0} and {1}")]
    InconsistentOrder(usize, usize),

    #[error("malformed character term `{0}`")]
    MalformedCharacter(String),

    #[error("chi({m},{n}) requires 3 <= m <= n")]
    InvalidCharacterParams { m: usize, n: usize },

    #[error("χ(Δ) ≠ 0 (value {0}); ascending links are only analysed when χ(Δ) = 0")]
    NonzeroDeltaValue(String),

    #[error("character is trivial")]
    TrivialCharacter,

    #[error("k = {k} outside the window 0 <= k < {bound}")]
    KOutOfRange { k: usize, bound: usize },

    #[error("too many centers ({0}) for subset enumeration")]
    TooManyCenters(usize),

    #[error("integer overflow during elimination")]
    Overflow,
}

use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("pair ({0},{0}) is a loop")]
    SelfPair(usize),
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("pair ({0},{1}) listed twice")]
    DuplicatePair(usize, usize),
    #[error("pair ({0},{1}) missing")]
    MissingPair(usize, usize),
    #[error("color {color} out of range for lambda = {lambda}")]
    ColorOutOfRange { color: u32, lambda: u32 },
    #[error("lambda = {0} not supported (need 1..=64)")]
    BadColorCount(u32),
    #[error("vertex list is not strictly ascending")]
    NotAscending,
    #[error("color map is not a bijection")]
    NotBijective,
    #[error("palette violates its budget")]
    BudgetViolated,
    #[error("invalid parameter: {0}")]
    Parameter(&'static str),
    #[error("malformed ordinal: {0}")]
    Ordinal(&'static str),
    #[error("resource cap exceeded after {checked} colorings")]
    ResourceCap { checked: u64 },
    #[error("sets in the family have unequal sizes")]
    UnequalSizes,
}

use thiserror::Error;

use crate::partitions::Partition;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },

    #[error("parts must be weakly decreasing: {0:?}")]
    NotDecreasing(Vec<u32>),

    #[error("partitions have different sizes: |{left}| = {} but |{right}| = {}", left.size(), right.size())]
    SizeMismatch { left: Partition, right: Partition },

    #[error("alpha = ({0}) has a part larger than 2")]
    AlphaTooWide(Partition),

    #[error("weight mismatch: |alpha| + |gamma| = {lhs} but |beta| = {rhs}")]
    WeightMismatch { lhs: u32, rhs: u32 },

    #[error("gamma = ({gamma}) is not contained in beta = ({beta})")]
    NotContained { gamma: Partition, beta: Partition },

    #[error("invalid LR-tableau: {0}")]
    InvalidTableau(String),

    #[error("invalid Klein tableau: rule ({rule}) fails in row {row}")]
    KleinRule { rule: char, row: u32 },

    #[error("invalid arc ({source_point}, {target}): the source must lie left of the target")]
    InvalidArc { source_point: u32, target: u32 },

    #[error("point {point}: degree {found} but beta'_i - gamma'_i = {expected}")]
    DegreeMismatch { point: u32, expected: u32, found: u32 },

    #[error("node {from} is not below node {to}")]
    NotComparable { from: usize, to: usize },

    #[error("node index {index} out of range (poset has {len} nodes)")]
    NodeIndex { index: usize, len: usize },

    #[error("Bruhat condition {condition} violated: {detail}")]
    BruhatCondition { condition: u8, detail: String },

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("search space {p}^{exponent} exceeds the limit {limit}")]
    SearchLimit { p: u64, exponent: u32, limit: u64 },

    #[error("interpolation needs at least {needed} distinct primes, got {got}")]
    InsufficientPoints { needed: usize, got: usize },

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn parse(what: &'static str, input: &str) -> Self {
        Error::Parse { what, input: input.to_string() }
    }
}

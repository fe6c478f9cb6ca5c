use thiserror::Error;

/// Errors raised by the combinatorial and algebraic layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed partition `{0}`")]
    MalformedPartition(String),
    #[error("{0}")]
    Parse(String),
    #[error("parts must be positive and weakly decreasing: {0:?}")]
    NotAPartition(Vec<i64>),
    #[error("parts must be strictly decreasing: {0:?}")]
    NotStrict(Vec<u32>),
    #[error("partition {0} is not doubled distinct")]
    NotDoubledDistinct(String),
    #[error("partition {0} is not self-conjugate")]
    NotSelfConjugate(String),
    #[error("partition {partition} is not a {t}-core")]
    NotACore { partition: String, t: usize },
    #[error("boundary word is unbalanced: {ones_left} ones left of the median, {zeros_right} zeros right of it")]
    UnbalancedWord { ones_left: usize, zeros_right: usize },
    #[error("core vector {0:?} does not sum to zero")]
    UnbalancedVector(Vec<i64>),
    #[error("core vector {0:?} violates the family symmetry")]
    AsymmetricVector(Vec<i64>),
    #[error("invalid modulus: {0}")]
    Modulus(String),
    #[error("invalid V-coding {v:?}: {reason}")]
    InvalidCoding { v: Vec<i64>, reason: String },
    #[error("partition {0} is empty")]
    EmptyCore(String),
    #[error("tau vanishes at {0}")]
    TauZero(i64),
    #[error("exact division failed, residual {0}")]
    InexactDivision(String),
    #[error("series is not invertible: {0}")]
    NotInvertible(String),
    #[error("log requires constant term 1, found {0}")]
    LogConstant(String),
    #[error("exp requires a zero constant term")]
    ExpConstant,
    #[error("Pochhammer base has grade zero; the product never stabilises")]
    DegeneratePochhammer,
    #[error("partition {mu} has more than {t} parts")]
    TooManyParts { mu: String, t: usize },
    /// A run that cannot start: missing or out-of-range parameters, or a
    /// refused memory estimate.
    #[error("{0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;

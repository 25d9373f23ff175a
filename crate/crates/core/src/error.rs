use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("{0} is not a prime power")]
    NotPrimePower(u32),
    #[error("field order {0} exceeds 256")]
    FieldTooLarge(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("invalid reduction polynomial: {0}")]
    InvalidModulus(String),
    #[error("reduction polynomial is reducible over GF({0})")]
    ReducibleModulus(u32),
    #[error("element index {index} out of range for GF({order})")]
    ElementOutOfRange { index: usize, order: usize },
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("operands are defined over different fields")]
    FieldMismatch,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("shift vector must have at least one coordinate")]
    EmptyShiftVector,
    #[error("matrix is not lambda-vector-circulant")]
    NotVectorCirculant,
    #[error("quotient ring contexts differ")]
    ContextMismatch,
    #[error("additive codes are defined over GF(4) only")]
    NotF4,
    #[error("code length {0} exceeds the supported maximum of 64")]
    CodeTooLong(usize),
    #[error("cannot parse field element {0:?}")]
    ParseElement(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("enumeration refused: k = {k} exceeds the limit of {limit}")]
    EnumerationGuard { k: usize, limit: usize },
    #[error("minimum distance is undefined for the zero code (k = 0)")]
    TrivialCode,
    #[error("exhaustive search refused for n = {n}: needs {work} work units, budget is {budget}")]
    SearchGuard { n: usize, work: u128, budget: u128 },
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

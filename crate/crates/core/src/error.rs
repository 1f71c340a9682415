use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),

    #[error("field of order {p}^{n} exceeds the supported size 2^16")]
    FieldTooLarge { p: u32, n: u32 },

    #[error("invalid modulus: {0}")]
    InvalidModulus(String),

    #[error("modulus is reducible over F_{0}")]
    ReducibleModulus(u32),

    #[error("element {0} does not generate the multiplicative group")]
    NotAGenerator(u32),

    #[error("value {value} is not an element of a field of order {q}")]
    OutOfRange { value: u64, q: u32 },

    #[error("domain error: {0}")]
    Domain(&'static str),

    #[error("degenerate input: {0}")]
    Degenerate(&'static str),

    #[error("usage error: {0}")]
    Usage(String),

    #[error("format error: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

/// Errors for malformed inputs and resource caps.
///
/// Mathematical failures (a violated axiom, a non-perfect code) are never
/// errors; checkers report them as data.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u32, u32),
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("not in image: {0}")]
    NotInImage(String),
    #[error("not a codeword: {0}")]
    NotACodeword(String),
    #[error("closure exceeded the size limit of {0} codewords")]
    SizeLimitExceeded(usize),
    #[error("enumeration exceeded the limit of {0} maps")]
    LimitExceeded(usize),
    #[error("degenerate code: {0}")]
    DegenerateCode(String),
    #[error("empty code")]
    EmptyCode,
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("parity error: {0}")]
    ParityError(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use alloc::string::String;

use crate::exactmath::ExactInt;

/// Errors surfaced by the library.
///
/// `Usage` covers inputs that violate an operation's stated hypotheses;
/// everything else is a runtime failure of an otherwise valid request.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("usage error: {0}")]
    Usage(String),
    #[error("factorization incomplete: cofactor {cofactor} of {n} left unfactored")]
    FactorizationIncomplete { n: ExactInt, cofactor: ExactInt },
    #[error("bound too large to enumerate: {0}")]
    BoundTooLarge(String),
    #[error("enumeration covered {actual} candidates, closed form expects {expected}")]
    CoverageMismatch { expected: u64, actual: u64 },
    #[error("record failed re-verification: {0}")]
    Unverified(String),
}

impl Error {
    pub(crate) fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub fn is_usage(&self) -> bool {
        matches!(self, Error::Usage(_))
    }
}

pub type Result<T, E = Error> = core::result::Result<T, E>;

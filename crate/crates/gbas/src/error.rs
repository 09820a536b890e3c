//! Crate-wide error type.
//!
//! Errors fall into four classes that the CLI maps onto distinct exit
//! codes: domain errors (bad parameters), data errors (malformed or
//! exhausted input streams), budget exhaustion (a sequential estimator hit
//! its draw cap before stopping), and I/O failures.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A parameter is outside its documented domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// An input value is malformed or out of range. `line` is the
    /// 1-based line number when the value came from a text stream.
    #[error("data error{}: {message}", line.map(|l| format!(" at line {l}")).unwrap_or_default())]
    Data {
        line: Option<u64>,
        message: String,
    },

    /// A finite source ran out of values before the consumer stopped.
    #[error("data error: input exhausted after {drawn} values")]
    Exhausted { drawn: u64 },

    /// A sequential estimator spent its entire draw budget without
    /// reaching its stopping condition. Partial state is carried so the
    /// caller can report how far the run got.
    #[error(
        "draw budget of {budget} exhausted: {successes} successes after {draws} draws"
    )]
    BudgetExhausted {
        budget: u64,
        draws: u64,
        successes: u64,
        /// Accumulated exponential mass at the point of exhaustion, where
        /// the estimator tracks one (GBAS only).
        r_partial: Option<f64>,
    },

    /// A replicate inside a harness run failed; wraps the underlying error.
    #[error("replicate {replicate} failed: {source}")]
    Replicate {
        replicate: u64,
        #[source]
        source: Box<Error>,
    },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn data(line: Option<u64>, msg: impl Into<String>) -> Self {
        Error::Data {
            line,
            message: msg.into(),
        }
    }

    /// Innermost error after unwrapping any replicate wrappers.
    pub fn root(&self) -> &Error {
        match self {
            Error::Replicate { source, .. } => source.root(),
            other => other,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn data_error_formats_line_number() {
        let e = Error::data(Some(17), "expected 0 or 1, found \"2\"");
        assert_eq!(
            e.to_string(),
            "data error at line 17: expected 0 or 1, found \"2\""
        );
        let e = Error::data(None, "value 1.5 outside [0,1]");
        assert_eq!(e.to_string(), "data error: value 1.5 outside [0,1]");
    }

    #[test]
    fn replicate_root_unwraps() {
        let inner = Error::domain("k must be >= 2");
        let wrapped = Error::Replicate {
            replicate: 3,
            source: Box::new(inner),
        };
        assert!(matches!(wrapped.root(), Error::Domain(_)));
    }
}

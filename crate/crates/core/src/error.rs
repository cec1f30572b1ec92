use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid dimension: {0}")]
    InvalidDimension(String),

    #[error("matrix is not Hermitian (max entry deviation {0:e})")]
    NotHermitian(f64),

    #[error("invalid Bloch vector: norm {0} exceeds 1")]
    InvalidBloch(f64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A density-matrix invariant does not hold. The first field names it.
    #[error("invalid state: {invariant} ({detail})")]
    InvalidState {
        invariant: &'static str,
        detail: String,
    },

    #[error("numerical degeneracy: {0}")]
    NumericalDegeneracy(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn state(invariant: &'static str, detail: impl Into<String>) -> Self {
        Error::InvalidState {
            invariant,
            detail: detail.into(),
        }
    }

    /// True for errors that describe a rejected state rather than malformed input.
    pub fn is_invalid_state(&self) -> bool {
        matches!(
            self,
            Error::InvalidState { .. }
                | Error::InvalidBloch(_)
                | Error::InvalidParameter(_)
                | Error::NotHermitian(_)
        )
    }
}

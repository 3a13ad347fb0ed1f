use thiserror::Error;

/// Errors raised by the numerical routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("argument outside domain: {0}")]
    Domain(String),
    #[error("pole: {0}")]
    Pole(String),
    #[error("series did not converge within {max_terms} terms: {what}")]
    NonConvergent { what: String, max_terms: usize },
    #[error("negative measure weight {weight:e} at atom {index}")]
    PositivityViolation { index: usize, weight: f64 },
    #[error("accuracy loss: {0}")]
    AccuracyLoss(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn non_convergent(what: impl Into<String>, max_terms: usize) -> Self {
        Error::NonConvergent {
            what: what.into(),
            max_terms,
        }
    }

    /// True for precondition failures (domain, pole, parameters, positivity).
    pub fn is_domain_error(&self) -> bool {
        matches!(
            self,
            Error::InvalidParams(_)
                | Error::Domain(_)
                | Error::Pole(_)
                | Error::PositivityViolation { .. }
        )
    }

    /// True for failures of a numerical process that was given valid input.
    pub fn is_convergence_error(&self) -> bool {
        matches!(self, Error::NonConvergent { .. } | Error::AccuracyLoss(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;

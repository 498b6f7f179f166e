use crate::C64;
use thiserror::Error;

/// Errors raised by evaluation, quadrature and scanning routines.
///
/// Each variant maps to a stable short code (see [`Error::code`]) that the
/// command-line front-end prints on failure.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{function}: pole at {at}")]
    Pole { function: &'static str, at: C64 },

    #[error("{function}: argument {at} lies on the branch cut")]
    BranchCut { function: &'static str, at: C64 },

    #[error("{function}: {reason}")]
    Domain {
        function: &'static str,
        reason: String,
    },

    #[error("{what}: no convergence (error estimate {estimate:.3e})")]
    NonConvergence { what: &'static str, estimate: f64 },

    #[error("argument principle: |F| below threshold at boundary point {at}")]
    BoundaryZero { at: C64 },

    #[error("{what}: budget exceeded")]
    Budget { what: &'static str },

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn domain(function: &'static str, reason: impl Into<String>) -> Self {
        Error::Domain {
            function,
            reason: reason.into(),
        }
    }

    /// Machine-parsable code for the error class.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Pole { .. } => "E_POLE",
            Error::BranchCut { .. } => "E_BRANCH",
            Error::Domain { .. } => "E_DOMAIN",
            Error::NonConvergence { .. } => "E_CONVERGENCE",
            Error::BoundaryZero { .. } => "E_BOUNDARY_ZERO",
            Error::Budget { .. } => "E_BUDGET",
            Error::Parse(_) => "E_PARSE",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

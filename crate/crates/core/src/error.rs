use std::path::PathBuf;

/// Errors raised by the closure, the two solvers and the post-processing tools.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid state: {0}")]
    InvalidState(String),

    #[error("internal consistency error: {0}")]
    Consistency(String),

    #[error("stability limit exceeded at cell {cell}: cfl*|u| = {courant:.6} (|u| = {speed:.6})")]
    Stability {
        cell: usize,
        speed: f64,
        courant: f64,
    },

    #[error("usage: {0}")]
    Usage(String),

    #[error("schema mismatch in {path}: {reason}")]
    Schema { path: PathBuf, reason: String },

    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("csv error on {path}: {source}")]
    Csv {
        path: PathBuf,
        #[source]
        source: csv::Error,
    },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn csv(path: impl Into<PathBuf>, source: csv::Error) -> Self {
        Error::Csv {
            path: path.into(),
            source,
        }
    }

    /// True for failures of the numerical pipeline (as opposed to usage or I/O problems).
    pub fn is_solver_failure(&self) -> bool {
        matches!(
            self,
            Error::InvalidInput(_)
                | Error::Domain(_)
                | Error::InvalidState(_)
                | Error::Consistency(_)
                | Error::Stability { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

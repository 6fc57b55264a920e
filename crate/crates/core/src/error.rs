use std::path::PathBuf;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain violation: {0}")]
    Domain(String),

    #[error("invalid averaging measure: {0}")]
    InvalidMeasure(String),

    #[error("invalid sample data: {0}")]
    Samples(String),

    #[error("floating-point overflow in {0}")]
    Overflow(&'static str),

    #[error(
        "quadrature did not converge on [{lower}, {upper}]: \
         estimate {estimate:e} with error {error:e} above tolerance {tolerance:e}"
    )]
    Quadrature {
        lower: f64,
        upper: f64,
        estimate: f64,
        error: f64,
        tolerance: f64,
    },

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{}: {source}", path.display())]
    Csv {
        path: PathBuf,
        #[source]
        source: csv::Error,
    },

    #[error("{}: {source}", path.display())]
    Json {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// Process exit code used by the command-line front end.
    ///
    /// `1` is reserved for usage errors, which are detected before any
    /// library call.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Quadrature { .. } | Error::Overflow(_) => 3,
            Error::Domain(_)
            | Error::InvalidMeasure(_)
            | Error::Samples(_)
            | Error::Io { .. }
            | Error::Csv { .. }
            | Error::Json { .. } => 2,
        }
    }
}

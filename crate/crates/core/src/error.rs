use thiserror::Error;

/// Errors raised by the decision procedures and parsers in this crate.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("words belong to different group schemes")]
    SchemeMismatch,
    #[error("the identity element is not a valid input here")]
    TrivialElement,
    #[error("search bound must be positive, got {0}")]
    NonpositiveBound(i64),
    #[error("element is not parabolic")]
    NotParabolic,
    #[error("element is not hyperbolic")]
    NotHyperbolic,
    #[error("element is not elliptic")]
    NotElliptic,
    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),
    #[error("malformed certificate: {0}")]
    MalformedCertificate(String),
    #[error("parse error at offset {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("invalid invariant: {0}")]
    InvalidInvariant(String),
    #[error("base orbifold has no boundary; exact element computations are unsupported")]
    UnsupportedBase,
    #[error("unknown sweep suite {0:?}")]
    UnknownSuite(String),
    #[error("unsupported torsion order {0}")]
    UnsupportedOrder(i64),
}

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

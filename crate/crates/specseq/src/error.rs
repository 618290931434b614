//! Crate-wide error type and the classification used for process exit codes.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Field(#[from] crate::field::FieldError),
    #[error(transparent)]
    Linalg(#[from] crate::matrix::LinalgError),
    #[error(transparent)]
    Complex(#[from] crate::cochain::ComplexError),
    #[error(transparent)]
    Poly(#[from] crate::polycomplex::PolyError),
    #[error(transparent)]
    Filtration(#[from] crate::filtration::FiltrationError),
    #[error(transparent)]
    Engine(#[from] crate::spectral::EngineError),
    #[error(transparent)]
    Snake(#[from] crate::snake::SnakeError),
    #[error(transparent)]
    Morphism(#[from] crate::morphism::MorphismError),
    #[error("{0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Coarse classification driving the CLI exit codes: 2 for validation
/// failures, 3 for unmet hypotheses, 4 for internal consistency failures.
#[derive(Debug, Copy, Clone, PartialEq, Eq)]
pub enum ErrorKind {
    Validation,
    Hypothesis,
    Internal,
    Io,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        use crate::morphism::MorphismError;
        use crate::snake::SnakeError;
        use crate::spectral::EngineError;
        match self {
            Error::Engine(EngineError::Unbounded)
            | Error::Engine(EngineError::NotCanonicallyBounded) => ErrorKind::Hypothesis,
            Error::Engine(EngineError::Internal(_)) => ErrorKind::Internal,
            Error::Snake(SnakeError::Internal(_)) | Error::Snake(SnakeError::Engine(EngineError::Internal(_))) => {
                ErrorKind::Internal
            }
            Error::Morphism(MorphismError::Incompatible { .. })
            | Error::Morphism(MorphismError::NotNested) => ErrorKind::Hypothesis,
            Error::Morphism(MorphismError::Internal(_)) => ErrorKind::Internal,
            Error::Morphism(MorphismError::Engine(EngineError::Internal(_))) => ErrorKind::Internal,
            Error::Morphism(MorphismError::Engine(EngineError::Unbounded)) => ErrorKind::Hypothesis,
            Error::Io(_) => ErrorKind::Io,
            _ => ErrorKind::Validation,
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self.kind() {
            ErrorKind::Validation => 2,
            ErrorKind::Hypothesis => 3,
            ErrorKind::Internal => 4,
            ErrorKind::Io => 1,
        }
    }
}

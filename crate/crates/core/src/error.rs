use thiserror::Error;

/// Errors raised by the kernel.
///
/// Validation failures carry a readable counterexample; input problems
/// (parsing, unknown names) are kept separate so the CLI can map them onto
/// distinct exit codes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("pole at q = {point}: denominator {denominator} vanishes")]
    Pole { point: String, denominator: String },

    #[error("division by zero")]
    DivisionByZero,

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),

    #[error("arrow `{arrow}` has undeclared {end} `{vertex}`")]
    DanglingArrow {
        arrow: String,
        end: &'static str,
        vertex: String,
    },

    #[error("duplicate identifier `{0}`")]
    DuplicateId(String),

    #[error("endpoint mismatch: {0}")]
    EndpointMismatch(String),

    #[error("support bound {bound} exceeded: {detail}")]
    BoundExceeded { bound: usize, detail: String },

    #[error("invalid monoid: {0}")]
    InvalidMonoid(String),

    #[error("invalid bimodule action: {0}")]
    InvalidBimodule(String),

    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),

    #[error("unsupported shape: {0}")]
    UnsupportedShape(String),

    #[error("out of range: {0}")]
    OutOfRange(String),

    #[error("invalid document: {0}")]
    Document(String),
}

impl Error {
    /// True for errors describing a mathematical counterexample rather than
    /// malformed input.
    pub fn is_validation_failure(&self) -> bool {
        matches!(
            self,
            Error::InvalidMonoid(_)
                | Error::InvalidBimodule(_)
                | Error::EndpointMismatch(_)
                | Error::InvalidRepresentation(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;

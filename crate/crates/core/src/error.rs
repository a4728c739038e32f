use thiserror::Error;

/// Errors raised by the category calculator.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("constraint violation: {0}")]
    ConstraintViolation(String),
    #[error("Hom space from position {from} to position {to} is zero")]
    ZeroHom { from: i64, to: i64 },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("bad distance {0}: expected a nonzero morphism of distance in [1, l-1]")]
    BadDistance(i64),
    #[error("index set {0} is not wide")]
    NotWide(String),
    #[error("object at position {0} is not a member of the subcategory")]
    NotMember(i64),
    #[error("expected an indecomposable object, found {0} summands")]
    NotIndecomposable(usize),
    #[error("position {0} lies outside the fundamental window [1, period]")]
    OutOfWindow(i64),
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::ConstraintViolation(_) => "ConstraintViolation",
            Error::ZeroHom { .. } => "ZeroHom",
            Error::ShapeMismatch(_) => "ShapeMismatch",
            Error::BadDistance(_) => "BadDistance",
            Error::NotWide(_) => "NotWide",
            Error::NotMember(_) => "NotMember",
            Error::NotIndecomposable(_) => "NotIndecomposable",
            Error::OutOfWindow(_) => "OutOfWindow",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum QbaxError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error("generator `{0}` is not in algebra `{1}`")]
    UnknownGenerator(String, String),
    #[error("map `{map}` has no image for generator `{gen}`")]
    PartialMap { map: String, gen: String },
    #[error("coefficient `{0}` is not invertible")]
    NotInvertible(String),
    #[error("coefficient `{0}` acquires a factor of i under the spectral rotation")]
    ImaginaryCoefficient(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("argument outside the convergence region: {0}")]
    OutsideStrip(String),
    #[error("quadrature failed to certify: {0}")]
    QuadratureUncertified(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("unknown identifier `{0}`")]
    UnknownId(String),
}

pub type Result<T> = std::result::Result<T, QbaxError>;

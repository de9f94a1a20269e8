use thiserror::Error;

/// Crate-wide error type. Mathematical failures that a verifier is supposed
/// to report (a failed axiom check, say) are report content, not errors;
/// these are contract violations on inputs.
#[derive(Debug, Error)]
pub enum Error {
    #[error("format mismatch: {0}")]
    FormatMismatch(String),
    #[error("not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("degenerate bilinear form")]
    DegenerateForm,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error("grading missing or incompatible: {0}")]
    Grading(String),
    #[error("coinduced module is infinite-dimensional: {0}")]
    InfiniteDimensional(String),
    #[error("cochain is not a cocycle")]
    NotACocycle,
    #[error("splitting requires field extension: {0}")]
    FieldExtensionNeeded(String),
    #[error("summand outside the catalog: {0}")]
    OutsideCatalog(String),
    #[error("non-rational spectrum")]
    NonRationalSpectrum,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;

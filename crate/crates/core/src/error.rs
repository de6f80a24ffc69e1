//! Error type shared by all form backends and the solver.

use std::fmt;

/// Errors raised by form algebra, the spectral solver, and the analysis layer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FormError {
    /// Two operands live in different ambient dimensions.
    DimensionMismatch { expected: usize, found: usize },
    /// Two operands have different form degrees where equal degrees are required.
    DegreeMismatch { expected: i64, found: i64 },
    /// An index sequence is not strictly increasing inside `1..=n`.
    InvalidIndexSet(String),
    /// Interior product applied to a form of degree zero or less.
    InteriorOnScalar,
    /// Data has a nonzero constant Fourier mode; the Laplacian is not invertible there.
    NonTrivialKernel,
    /// Hodge system data violates the compatibility conditions `df = 0`, `d*g = 0`.
    IncompatibleData(String),
    /// A translation produced phases outside the exact scalar ring.
    TranslationNotExact,
    /// Grid resolution below the Nyquist bound of the sampled spectrum.
    UnderSampled { required: usize, got: usize },
    /// A matrix expected to be invertible is singular.
    SingularMatrix,
    /// Parameter outside its documented range.
    InvalidParameter(String),
}

impl fmt::Display for FormError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormError::DimensionMismatch { expected, found } => {
                write!(f, "ambient dimension mismatch: expected {expected}, found {found}")
            }
            FormError::DegreeMismatch { expected, found } => {
                write!(f, "form degree mismatch: expected {expected}, found {found}")
            }
            FormError::InvalidIndexSet(msg) => write!(f, "invalid index set: {msg}"),
            FormError::InteriorOnScalar => {
                write!(f, "interior product requires a form of degree >= 1")
            }
            FormError::NonTrivialKernel => {
                write!(f, "nonzero constant mode: Laplacian has a nontrivial kernel")
            }
            FormError::IncompatibleData(msg) => write!(f, "incompatible system data: {msg}"),
            FormError::TranslationNotExact => {
                write!(f, "translation phase lies outside the exact scalar ring")
            }
            FormError::UnderSampled { required, got } => {
                write!(f, "grid undersampled: need at least {required} points per axis, got {got}")
            }
            FormError::SingularMatrix => write!(f, "matrix is singular"),
            FormError::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
        }
    }
}

impl std::error::Error for FormError {}

pub type Result<T> = std::result::Result<T, FormError>;

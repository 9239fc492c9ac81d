use std::fmt;

use thiserror::Error;

/// Why a parameter fell outside the domain an operation accepts.
#[derive(Debug, Clone, PartialEq)]
pub enum DomainViolation {
    /// Noise strength outside `[0, 1]`.
    NoiseOutOfRange { x: f64 },
    /// Hilbert-space dimension below 2.
    DimensionTooSmall { d: usize },
    /// The anti-degrading map needs `d·δ² = (2x−1)/x ≥ 0`, i.e. `x ≥ 1/2`.
    BelowAntidegradingThreshold { x: f64, d_delta_sq: f64 },
    /// The transpose-depolarizing normalization is only a channel for qutrits.
    UnsupportedDimension { d: usize, required: usize },
}

impl fmt::Display for DomainViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NoiseOutOfRange { x } => write!(f, "noise strength x = {x} is outside [0, 1]"),
            Self::DimensionTooSmall { d } => write!(f, "dimension d = {d} must be at least 2"),
            Self::BelowAntidegradingThreshold { x, d_delta_sq } => write!(
                f,
                "no anti-degrading map at x = {x}: d*delta^2 = (2x-1)/x = {d_delta_sq} is negative"
            ),
            Self::UnsupportedDimension { d, required } => {
                write!(f, "dimension d = {d} is not supported (requires d = {required})")
            }
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("matrix is not Hermitian (max |m - m^dagger| = {0:e})")]
    Hermiticity(f64),

    #[error("matrix is not positive semidefinite (min eigenvalue {0:e})")]
    NotPositive(f64),

    #[error("matrix is not normalized (trace {0})")]
    Normalization(f64),

    #[error("non-finite matrix entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    #[error("parameter out of domain: {0}")]
    ParameterDomain(DomainViolation),

    #[error("format error: {0}")]
    Format(String),

    #[error("channel is not trace preserving: residual {residual:e}")]
    Validation { residual: f64 },

    #[error("usage error: {0}")]
    Usage(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// The would-be `d·δ²` when the anti-degrading map could not be built.
    pub fn d_delta_sq(&self) -> Option<f64> {
        match self {
            Self::ParameterDomain(DomainViolation::BelowAntidegradingThreshold {
                d_delta_sq, ..
            }) => Some(*d_delta_sq),
            _ => None,
        }
    }

    pub(crate) fn dim(msg: impl Into<String>) -> Self {
        Self::Dimension(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

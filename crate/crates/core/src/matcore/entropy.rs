use super::{hermitian_eigenvalues, ComplexMatrix};
use crate::error::{Error, Result};

/// Eigenvalues in `[-EIGEN_CLIP, 0)` count as round-off and are clipped to 0;
/// anything more negative is a genuine positivity violation.
pub const EIGEN_CLIP: f64 = 1e-10;

/// Allowed deviation of the trace from 1.
pub const TRACE_TOL: f64 = 1e-8;

/// Von Neumann entropy in bits.
pub fn von_neumann_entropy(rho: &ComplexMatrix) -> Result<f64> {
    let spectrum = hermitian_eigenvalues(rho)?;
    let trace: f64 = rho.trace().re;
    if (trace - 1.0).abs() > TRACE_TOL {
        return Err(Error::Normalization(trace));
    }
    spectrum_entropy(&spectrum)
}

/// `−Σ λ log₂ λ` with the clipping policy of [`von_neumann_entropy`] and
/// `0·log 0 = 0`.
pub fn spectrum_entropy(spectrum: &[f64]) -> Result<f64> {
    let mut s = 0.0;
    for &l in spectrum {
        if l < -EIGEN_CLIP {
            return Err(Error::NotPositive(l));
        }
        if l > 0.0 {
            s -= l * l.log2();
        }
    }
    Ok(s)
}

use num_complex::Complex64;
use rand::Rng;

use super::entropy::{EIGEN_CLIP, TRACE_TOL};
use super::{gaussian_matrix, hermitian_eigenvalues, ComplexMatrix, HERMITICITY_TOL};
use crate::error::{Error, Result};

/// A Hermitian, positive semidefinite, unit-trace matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix(ComplexMatrix);

impl DensityMatrix {
    pub fn new(m: ComplexMatrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::dim(format!("density matrix must be square, got {}x{}", m.rows(), m.cols())));
        }
        let defect = m.hermiticity_defect();
        if defect > HERMITICITY_TOL {
            return Err(Error::Hermiticity(defect));
        }
        let trace = m.trace();
        if (trace.re - 1.0).abs() > TRACE_TOL || trace.im.abs() > TRACE_TOL {
            return Err(Error::Normalization(trace.re));
        }
        let min = hermitian_eigenvalues(&m)?[0];
        if min < -EIGEN_CLIP {
            return Err(Error::NotPositive(min));
        }
        Ok(Self(m))
    }

    pub fn maximally_mixed(d: usize) -> Self {
        Self(ComplexMatrix::identity(d).scale_real(1.0 / d as f64))
    }

    /// `|ψ⟩⟨ψ|` for the normalized `psi`.
    pub fn pure(psi: &[Complex64]) -> Result<Self> {
        let norm = psi.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::Normalization(norm));
        }
        let v: Vec<Complex64> = psi.iter().map(|z| z / norm).collect();
        Ok(Self(ComplexMatrix::outer(&v, &v)))
    }

    /// Computational basis projector `|k⟩⟨k|`.
    pub fn basis(d: usize, k: usize) -> Self {
        Self(ComplexMatrix::unit(d, d, k, k))
    }

    /// `AA†/tr(AA†)`; `a` must be square and nonzero.
    pub fn from_factor(a: &ComplexMatrix) -> Self {
        let p = &(a * &a.adjoint());
        let t = p.trace().re;
        assert!(t > 0.0, "zero factor has no normalized density matrix");
        // exactly Hermitian by construction, so symmetrize away round-off
        Self(p.hermitian_part().scale_real(1.0 / t))
    }

    /// Random state from the Hilbert–Schmidt (Ginibre) ensemble.
    pub fn random<R: Rng + ?Sized>(d: usize, rng: &mut R) -> Self {
        Self::from_factor(&gaussian_matrix(d, d, rng))
    }

    pub fn dim(&self) -> usize {
        self.0.rows()
    }

    pub fn as_matrix(&self) -> &ComplexMatrix {
        &self.0
    }

    pub fn into_inner(self) -> ComplexMatrix {
        self.0
    }
}

impl AsRef<ComplexMatrix> for DensityMatrix {
    fn as_ref(&self) -> &ComplexMatrix {
        &self.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn validation_errors() {
        let unnormalized = ComplexMatrix::identity(2);
        assert!(matches!(DensityMatrix::new(unnormalized), Err(Error::Normalization(_))));
        let negative = ComplexMatrix::from_real_diagonal(&[1.5, -0.5]);
        assert!(matches!(DensityMatrix::new(negative), Err(Error::NotPositive(_))));
        let rect = ComplexMatrix::zeros(2, 3);
        assert!(matches!(DensityMatrix::new(rect), Err(Error::Dimension(_))));
    }

    #[test]
    fn random_states_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for d in 1..6 {
            let rho = DensityMatrix::random(d, &mut rng);
            assert!(DensityMatrix::new(rho.into_inner()).is_ok());
        }
    }

    #[test]
    fn pure_normalizes() {
        let rho = DensityMatrix::pure(&[Complex64::new(3.0, 0.0), Complex64::new(0.0, 4.0)]).unwrap();
        assert!((rho.as_matrix().trace().re - 1.0).abs() < 1e-15);
        assert!((rho.as_matrix()[(0, 0)].re - 0.36).abs() < 1e-15);
    }
}

use nalgebra::SymmetricEigen;
use num_complex::Complex64;

use super::ComplexMatrix;
use crate::error::{Error, Result};

/// Maximum entry-wise deviation from Hermiticity accepted by [`hermitian_eig`].
pub const HERMITICITY_TOL: f64 = 1e-9;

/// Spectral decomposition `m = V diag(λ) V†` of a Hermitian matrix.
#[derive(Debug, Clone)]
pub struct HermitianEig {
    /// Ascending.
    pub eigenvalues: Vec<f64>,
    /// Orthonormal eigenvectors as columns, in the order of `eigenvalues`.
    pub eigenvectors: ComplexMatrix,
}

impl HermitianEig {
    pub fn reconstruct(&self) -> ComplexMatrix {
        let v = &self.eigenvectors;
        let n = self.eigenvalues.len();
        ComplexMatrix::from_fn(n, n, |r, c| {
            (0..n).map(|k| v[(r, k)] * self.eigenvalues[k] * v[(c, k)].conj()).sum()
        })
    }

    /// `V diag(f(λ)) V†`.
    pub fn map_spectrum(&self, f: impl Fn(f64) -> f64) -> ComplexMatrix {
        let v = &self.eigenvectors;
        let n = self.eigenvalues.len();
        let fl: Vec<f64> = self.eigenvalues.iter().map(|&l| f(l)).collect();
        ComplexMatrix::from_fn(n, n, |r, c| {
            (0..n).map(|k| v[(r, k)] * fl[k] * v[(c, k)].conj()).sum::<Complex64>()
        })
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.eigenvalues[0]
    }
}

/// Eigendecomposition of a Hermitian matrix. The input is symmetrized as
/// `(m + m†)/2` after the Hermiticity check.
pub fn hermitian_eig(m: &ComplexMatrix) -> Result<HermitianEig> {
    if !m.is_square() {
        return Err(Error::dim(format!("eigendecomposition of a {}x{} matrix", m.rows(), m.cols())));
    }
    let defect = m.hermiticity_defect();
    if defect > HERMITICITY_TOL {
        return Err(Error::Hermiticity(defect));
    }
    let eig = SymmetricEigen::new(m.hermitian_part().to_nalgebra());
    let mut order: Vec<usize> = (0..eig.eigenvalues.len()).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));

    let vecs = ComplexMatrix::from_nalgebra(&eig.eigenvectors);
    let n = m.rows();
    Ok(HermitianEig {
        eigenvalues: order.iter().map(|&k| eig.eigenvalues[k]).collect(),
        eigenvectors: ComplexMatrix::from_fn(n, n, |r, c| vecs[(r, order[c])]),
    })
}

/// Ascending eigenvalues only.
pub fn hermitian_eigenvalues(m: &ComplexMatrix) -> Result<Vec<f64>> {
    if !m.is_square() {
        return Err(Error::dim(format!("eigenvalues of a {}x{} matrix", m.rows(), m.cols())));
    }
    let defect = m.hermiticity_defect();
    if defect > HERMITICITY_TOL {
        return Err(Error::Hermiticity(defect));
    }
    let mut vals: Vec<f64> = m.hermitian_part().to_nalgebra().symmetric_eigenvalues().iter().copied().collect();
    vals.sort_by(f64::total_cmp);
    Ok(vals)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_has_unit_spectrum() {
        let e = hermitian_eig(&ComplexMatrix::identity(3)).unwrap();
        for l in &e.eigenvalues {
            assert!((l - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn diagonal_spectrum_is_sorted() {
        let e = hermitian_eig(&ComplexMatrix::from_real_diagonal(&[2.0, -1.0, 0.0])).unwrap();
        assert_eq!(e.eigenvalues.len(), 3);
        for (got, want) in e.eigenvalues.iter().zip([-1.0, 0.0, 2.0]) {
            assert!((got - want).abs() < 1e-15);
        }
    }

    #[test]
    fn rejects_non_hermitian() {
        let mut m = ComplexMatrix::identity(2);
        m[(0, 1)] = Complex64::new(0.0, 1.0);
        assert!(matches!(hermitian_eig(&m), Err(Error::Hermiticity(_))));
        assert!(matches!(hermitian_eigenvalues(&m), Err(Error::Hermiticity(_))));
    }

    #[test]
    fn complex_hermitian_reconstructs() {
        // sigma_y has eigenvalues -1, +1
        let m = ComplexMatrix::new(
            2,
            2,
            vec![
                Complex64::new(0.0, 0.0),
                Complex64::new(0.0, -1.0),
                Complex64::new(0.0, 1.0),
                Complex64::new(0.0, 0.0),
            ],
        )
        .unwrap();
        let e = hermitian_eig(&m).unwrap();
        assert!((e.eigenvalues[0] + 1.0).abs() < 1e-14);
        assert!((e.eigenvalues[1] - 1.0).abs() < 1e-14);
        assert!(e.reconstruct().max_abs_diff(&m).unwrap() < 1e-14);
    }
}

//! Seeded random matrices for tests, examples and optimizer starts.

use nalgebra::QR;
use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use super::ComplexMatrix;

/// Matrix with i.i.d. standard complex Gaussian entries (real and imaginary
/// parts each `N(0, 1)`).
pub fn gaussian_matrix<R: Rng + ?Sized>(rows: usize, cols: usize, rng: &mut R) -> ComplexMatrix {
    ComplexMatrix::from_fn(rows, cols, |_, _| {
        Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
    })
}

/// Haar-random unitary from the QR decomposition of a Ginibre matrix, with
/// the phases of `R`'s diagonal absorbed into `Q`.
pub fn random_unitary<R: Rng + ?Sized>(n: usize, rng: &mut R) -> ComplexMatrix {
    let qr = QR::new(gaussian_matrix(n, n, rng).to_nalgebra());
    let q = ComplexMatrix::from_nalgebra(&qr.q());
    let r = qr.r();
    ComplexMatrix::from_fn(n, n, |i, j| {
        let d = r[(j, j)];
        let phase = if d.norm() > 0.0 { d / d.norm() } else { Complex64::new(1.0, 0.0) };
        q[(i, j)] * phase
    })
}

/// The first `cols` columns of a Haar-random `rows × rows` unitary.
pub fn random_isometry<R: Rng + ?Sized>(rows: usize, cols: usize, rng: &mut R) -> ComplexMatrix {
    assert!(cols <= rows, "an isometry needs cols <= rows");
    let u = random_unitary(rows, rng);
    ComplexMatrix::from_fn(rows, cols, |r, c| u[(r, c)])
}

/// Random Hermitian matrix `(G + G†)/2`.
pub fn random_hermitian<R: Rng + ?Sized>(n: usize, rng: &mut R) -> ComplexMatrix {
    gaussian_matrix(n, n, rng).hermitian_part()
}

//! Dense complex linear algebra used throughout the crate: Kronecker
//! products, partial trace and transpose on bipartite spaces, Hermitian
//! eigendecomposition and von Neumann entropy.
//!
//! Matrices are small (the largest is a Choi matrix of a channel into a
//! `1 + d²` dimensional environment), so everything is dense and row-major.

mod eig;
mod entropy;
mod matrix;
mod random;
mod state;

pub use eig::{hermitian_eig, hermitian_eigenvalues, HermitianEig, HERMITICITY_TOL};
pub use entropy::{spectrum_entropy, von_neumann_entropy, EIGEN_CLIP, TRACE_TOL};
pub use matrix::{frobenius_distance, kron, partial_trace, partial_transpose, ComplexMatrix, Subsystem};
pub use random::{gaussian_matrix, random_hermitian, random_isometry, random_unitary};
pub use state::DensityMatrix;

use crate::channels::{compose, KrausChannel};
use crate::error::{Error, Result};
use crate::families::{antidegrading_map, depolarizing, depolarizing_complement, NoiseParameter};
use crate::matcore::{hermitian_eigenvalues, partial_transpose};

/// Noise strength from which the depolarizing channel is anti-degradable in
/// every dimension.
pub const ANTIDEGRADABLE_THRESHOLD: f64 = 0.5;

/// Minimum partial-transpose eigenvalue treated as non-negative.
pub const PPT_TOL: f64 = 1e-10;

/// Ascending eigenvalues of `J^{T_B}`, the partial transpose (over the output
/// factor) of the unnormalized Choi matrix.
pub fn ppt_spectrum(ch: &KrausChannel) -> Result<Vec<f64>> {
    if !ch.is_square() {
        return Err(Error::dim(format!(
            "PPT spectrum needs a square channel, got {} -> {}",
            ch.dim_in(),
            ch.dim_out()
        )));
    }
    let j = ch.choi();
    hermitian_eigenvalues(&partial_transpose(&j.matrix, j.dim_in, j.dim_out)?)
}

pub fn is_ppt(min_eigenvalue: f64) -> bool {
    min_eigenvalue >= -PPT_TOL
}

/// Closed-form partial-transpose spectrum of the depolarizing Choi matrix,
/// `(1−x)𝒫 + (x/d)I`: the swap `𝒫` is `+1` on the `d(d+1)/2` symmetric
/// vectors `|i,j⟩ + |j,i⟩` and `−1` on the `d(d−1)/2` antisymmetric ones.
#[derive(Debug, Clone, PartialEq)]
pub struct PptSpectrum {
    /// Ascending, with multiplicities.
    pub eigenvalues: Vec<f64>,
    /// `(1−x) + x/d`.
    pub sym_value: f64,
    /// `−(1−x) + x/d`.
    pub antisym_value: f64,
    pub d: usize,
    pub x: f64,
}

impl PptSpectrum {
    pub fn sym_multiplicity(&self) -> usize {
        self.d * (self.d + 1) / 2
    }

    pub fn antisym_multiplicity(&self) -> usize {
        self.d * (self.d - 1) / 2
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.antisym_value.min(self.sym_value)
    }
}

pub fn analytic_ppt_spectrum(p: NoiseParameter) -> PptSpectrum {
    let (d, x) = (p.d(), p.x());
    let sym_value = (1.0 - x) + x / d as f64;
    let antisym_value = -(1.0 - x) + x / d as f64;
    let mut eigenvalues = vec![antisym_value; d * (d - 1) / 2];
    eigenvalues.extend(std::iter::repeat_n(sym_value, d * (d + 1) / 2));
    eigenvalues.sort_by(f64::total_cmp);
    PptSpectrum { eigenvalues, sym_value, antisym_value, d, x }
}

/// `d/(d+1)`: the depolarizing channel is PPT (entanglement binding) from
/// here on. Strictly above [`ANTIDEGRADABLE_THRESHOLD`] for every `d ≥ 2`.
pub fn ppt_threshold(d: usize) -> f64 {
    d as f64 / (d as f64 + 1.0)
}

/// Choi distance between `𝒩 ∘ 𝒟ₓᶜ` and `𝒟ₓ`. Fails below `x = 1/2` where
/// `𝒩` does not exist.
pub fn antidegradability_residual(p: NoiseParameter) -> Result<f64> {
    let n = antidegrading_map(p)?;
    let recovered = compose(&n, &depolarizing_complement(p))?;
    recovered.choi().distance(&depolarizing(p).choi())
}

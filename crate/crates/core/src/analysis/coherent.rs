use num_complex::Complex64;

use crate::channels::KrausChannel;
use crate::error::{Error, Result};
use crate::matcore::{
    hermitian_eig, hermitian_eigenvalues, spectrum_entropy, ComplexMatrix, DensityMatrix,
};

/// Single-letter coherent information `S(Λ(ρ)) − S(Λᶜ(ρ))` in bits.
pub fn coherent_information(ch: &KrausChannel, rho: &DensityMatrix) -> Result<f64> {
    CoherentInformation::new(ch).value(rho.as_matrix())
}

/// A channel paired with its complement, evaluated repeatedly by the
/// optimizer.
#[derive(Debug, Clone)]
pub struct CoherentInformation {
    channel: KrausChannel,
    complement: KrausChannel,
}

impl CoherentInformation {
    pub fn new(ch: &KrausChannel) -> Self {
        Self { channel: ch.clone(), complement: ch.complementary() }
    }

    pub fn channel(&self) -> &KrausChannel {
        &self.channel
    }

    pub fn dim_in(&self) -> usize {
        self.channel.dim_in()
    }

    pub fn value(&self, rho: &ComplexMatrix) -> Result<f64> {
        let out = self.channel.apply(rho)?;
        let env = self.complement.apply(rho)?;
        let s_out = output_entropy(&out)?;
        let s_env = output_entropy(&env)?;
        Ok(s_out - s_env)
    }

    /// Value at `ρ = AA†/tr(AA†)`.
    pub fn value_at_factor(&self, a: &ComplexMatrix) -> Result<f64> {
        self.value(DensityMatrix::from_factor(a).as_matrix())
    }

    /// Value and gradient with respect to the factor `A` of
    /// `ρ = AA†/tr(AA†)`. The gradient is packed as a complex matrix whose
    /// real (imaginary) parts are the partial derivatives with respect to
    /// `Re A` (`Im A`).
    ///
    /// With `L = log₂σ` for each output, `dI_c = tr(G dρ)` where
    /// `G = Λᶜ†(L_E) − Λ†(L_B)`; pushing `dρ` through the normalization gives
    /// `∇ = 2 (G − tr(Gρ)I) A / tr(AA†)`.
    pub fn value_and_gradient(&self, a: &ComplexMatrix) -> Result<(f64, ComplexMatrix)> {
        let t = (a * &a.adjoint()).trace().re;
        let rho = DensityMatrix::from_factor(a);
        let rho = rho.as_matrix();

        let out_eig = hermitian_eig(&self.channel.apply(rho)?)?;
        let env_eig = hermitian_eig(&self.complement.apply(rho)?)?;
        let value = spectrum_entropy(&out_eig.eigenvalues)? - spectrum_entropy(&env_eig.eigenvalues)?;

        let log_floor = |l: f64| l.max(f64::MIN_POSITIVE).log2();
        let g_out = self.channel.apply_adjoint(&out_eig.map_spectrum(log_floor))?;
        let g_env = self.complement.apply_adjoint(&env_eig.map_spectrum(log_floor))?;
        let g = &g_env - &g_out;
        let shift = (&g * rho).trace().re;
        let h = &g - &ComplexMatrix::identity(g.rows()).scale_real(shift);
        Ok((value, (&h * a).scale_real(2.0 / t)))
    }
}

fn output_entropy(sigma: &ComplexMatrix) -> Result<f64> {
    let t = sigma.trace().re;
    if (t - 1.0).abs() > crate::matcore::TRACE_TOL {
        return Err(Error::Normalization(t));
    }
    spectrum_entropy(&hermitian_eigenvalues(sigma)?)
}

/// Central finite-difference gradient of `value_at_factor` in each real
/// coordinate of `A`, packed like [`CoherentInformation::value_and_gradient`].
pub fn finite_difference_gradient(
    objective: &CoherentInformation,
    a: &ComplexMatrix,
    step: f64,
) -> Result<ComplexMatrix> {
    let mut grad = ComplexMatrix::zeros(a.rows(), a.cols());
    let mut probe = a.clone();
    for r in 0..a.rows() {
        for c in 0..a.cols() {
            let base = a[(r, c)];
            let mut partial = [0.0; 2];
            for (slot, dir) in [Complex64::new(step, 0.0), Complex64::new(0.0, step)].into_iter().enumerate() {
                probe[(r, c)] = base + dir;
                let plus = objective.value_at_factor(&probe)?;
                probe[(r, c)] = base - dir;
                let minus = objective.value_at_factor(&probe)?;
                partial[slot] = (plus - minus) / (2.0 * step);
            }
            probe[(r, c)] = base;
            grad[(r, c)] = Complex64::new(partial[0], partial[1]);
        }
    }
    Ok(grad)
}

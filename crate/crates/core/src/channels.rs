//! Quantum channels in Kraus form and the standard transformations between
//! representations: Choi matrices, Stinespring isometries and complements.
//!
//! Two channels are the same map exactly when their Choi matrices agree, so
//! comparisons never look at Kraus lists (which are far from unique).

use num_complex::Complex64;
use rand::Rng;

use crate::error::{Error, Result};
use crate::matcore::{
    frobenius_distance, hermitian_eigenvalues, partial_trace, random_isometry, ComplexMatrix,
    Subsystem,
};

/// Max-entry tolerance on `ΣK†K − I` for a channel to count as trace preserving.
pub const TP_TOL: f64 = 1e-9;

/// Choi-matrix Frobenius distance below which two channels are equal.
pub const CHANNEL_EQ_TOL: f64 = 1e-9;

/// A linear map `ρ ↦ Σ K ρ K†` from `dim_in` to `dim_out` dimensional
/// operators.
#[derive(Debug, Clone, PartialEq)]
pub struct KrausChannel {
    dim_in: usize,
    dim_out: usize,
    kraus: Vec<ComplexMatrix>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CptReport {
    /// `max |ΣK†K − I|` over entries.
    pub tp_residual: f64,
    pub ok: bool,
}

impl KrausChannel {
    /// Checks shapes only; use [`KrausChannel::validate_cpt`] for trace
    /// preservation.
    pub fn new(dim_in: usize, dim_out: usize, kraus: Vec<ComplexMatrix>) -> Result<Self> {
        if dim_in == 0 || dim_out == 0 {
            return Err(Error::dim("channel dimensions must be positive"));
        }
        if kraus.is_empty() {
            return Err(Error::dim("a channel needs at least one Kraus operator"));
        }
        if let Some((k, op)) = kraus.iter().enumerate().find(|(_, op)| op.shape() != (dim_out, dim_in)) {
            return Err(Error::dim(format!(
                "Kraus operator {k} is {}x{}, expected {dim_out}x{dim_in}",
                op.rows(),
                op.cols()
            )));
        }
        Ok(Self { dim_in, dim_out, kraus })
    }

    /// Like [`KrausChannel::new`] but also rejects maps that are not trace
    /// preserving to within `tol`.
    pub fn new_cpt(dim_in: usize, dim_out: usize, kraus: Vec<ComplexMatrix>, tol: f64) -> Result<Self> {
        let ch = Self::new(dim_in, dim_out, kraus)?;
        let residual = ch.tp_residual();
        if residual >= tol {
            return Err(Error::Validation { residual });
        }
        Ok(ch)
    }

    pub fn identity(d: usize) -> Self {
        Self { dim_in: d, dim_out: d, kraus: vec![ComplexMatrix::identity(d)] }
    }

    /// Random channel with `n_kraus` operators cut from a Haar-random isometry.
    pub fn random<R: Rng + ?Sized>(dim_in: usize, dim_out: usize, n_kraus: usize, rng: &mut R) -> Self {
        assert!(n_kraus * dim_out >= dim_in, "too few Kraus operators for an isometry");
        let v = random_isometry(dim_out * n_kraus, dim_in, rng);
        let kraus = (0..n_kraus)
            .map(|a| ComplexMatrix::from_fn(dim_out, dim_in, |b, i| v[(b * n_kraus + a, i)]))
            .collect();
        Self { dim_in, dim_out, kraus }
    }

    pub fn dim_in(&self) -> usize {
        self.dim_in
    }

    pub fn dim_out(&self) -> usize {
        self.dim_out
    }

    pub fn kraus(&self) -> &[ComplexMatrix] {
        &self.kraus
    }

    pub fn num_kraus(&self) -> usize {
        self.kraus.len()
    }

    pub fn is_square(&self) -> bool {
        self.dim_in == self.dim_out
    }

    fn tp_residual(&self) -> f64 {
        let mut sum = ComplexMatrix::zeros(self.dim_in, self.dim_in);
        for k in &self.kraus {
            sum = &sum + &(&k.adjoint() * k);
        }
        sum.max_abs_diff(&ComplexMatrix::identity(self.dim_in)).expect("same shape")
    }

    pub fn validate_cpt(&self) -> CptReport {
        let tp_residual = self.tp_residual();
        CptReport { tp_residual, ok: tp_residual < TP_TOL }
    }

    /// `Σ K ρ K†`.
    pub fn apply(&self, rho: &ComplexMatrix) -> Result<ComplexMatrix> {
        if rho.shape() != (self.dim_in, self.dim_in) {
            return Err(Error::dim(format!(
                "channel input is {0}x{0}, got {1}x{2}",
                self.dim_in,
                rho.rows(),
                rho.cols()
            )));
        }
        let mut out = ComplexMatrix::zeros(self.dim_out, self.dim_out);
        for k in &self.kraus {
            out = &out + &k.sandwich(rho);
        }
        Ok(out)
    }

    /// Heisenberg-picture adjoint `X ↦ Σ K† X K`.
    pub fn apply_adjoint(&self, x: &ComplexMatrix) -> Result<ComplexMatrix> {
        if x.shape() != (self.dim_out, self.dim_out) {
            return Err(Error::dim(format!(
                "adjoint channel input is {0}x{0}, got {1}x{2}",
                self.dim_out,
                x.rows(),
                x.cols()
            )));
        }
        let mut out = ComplexMatrix::zeros(self.dim_in, self.dim_in);
        for k in &self.kraus {
            out = &out + &k.adjoint().sandwich(x);
        }
        Ok(out)
    }

    /// Unnormalized Choi matrix `Σ_{ij} |i⟩⟨j| ⊗ Λ(|i⟩⟨j|)`, input factor first.
    pub fn choi(&self) -> ChoiMatrix {
        let (din, dout) = (self.dim_in, self.dim_out);
        let n = din * dout;
        let mut j = ComplexMatrix::zeros(n, n);
        // J = Σ_α |K_α⟩⟩⟨⟨K_α| with |K⟩⟩[i·dout + b] = K[b, i]
        let mut vec = vec![Complex64::new(0.0, 0.0); n];
        for k in &self.kraus {
            for i in 0..din {
                for b in 0..dout {
                    vec[i * dout + b] = k[(b, i)];
                }
            }
            for r in 0..n {
                if vec[r] == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for c in 0..n {
                    j[(r, c)] += vec[r] * vec[c].conj();
                }
            }
        }
        ChoiMatrix { dim_in: din, dim_out: dout, matrix: j }
    }

    /// Isometry `V = Σ_α K_α ⊗ |α⟩` into `B ⊗ E`, with one environment level
    /// per Kraus operator.
    pub fn stinespring(&self) -> StinespringIsometry {
        let env = self.kraus.len();
        let v = ComplexMatrix::from_fn(self.dim_out * env, self.dim_in, |r, i| {
            self.kraus[r % env][(r / env, i)]
        });
        StinespringIsometry { dim_in: self.dim_in, dim_out: self.dim_out, dim_env: env, v }
    }

    /// The complementary channel `ρ ↦ Tr_B(VρV†)` into the environment. Its
    /// Kraus operators are `E_b = Σ_α |α⟩⟨b| K_α`, one per output level `b`.
    pub fn complementary(&self) -> KrausChannel {
        let env = self.kraus.len();
        let kraus = (0..self.dim_out)
            .map(|b| ComplexMatrix::from_fn(env, self.dim_in, |a, i| self.kraus[a][(b, i)]))
            .collect();
        KrausChannel { dim_in: self.dim_in, dim_out: env, kraus }
    }
}

/// Sequential composition `outer ∘ inner`. The Kraus list is every product
/// `K_o K_i` and is not pruned.
pub fn compose(outer: &KrausChannel, inner: &KrausChannel) -> Result<KrausChannel> {
    if outer.dim_in != inner.dim_out {
        return Err(Error::dim(format!(
            "cannot compose: outer input {} != inner output {}",
            outer.dim_in, inner.dim_out
        )));
    }
    let kraus = outer
        .kraus
        .iter()
        .flat_map(|ko| inner.kraus.iter().map(move |ki| ko * ki))
        .collect();
    Ok(KrausChannel { dim_in: inner.dim_in, dim_out: outer.dim_out, kraus })
}

/// Unnormalized Choi matrix of an arbitrary linear map, built by applying it
/// to every matrix unit `|i⟩⟨j|`.
pub fn choi_from_map(
    dim_in: usize,
    dim_out: usize,
    mut map: impl FnMut(&ComplexMatrix) -> Result<ComplexMatrix>,
) -> Result<ChoiMatrix> {
    let n = dim_in * dim_out;
    let mut j = ComplexMatrix::zeros(n, n);
    for i in 0..dim_in {
        for k in 0..dim_in {
            let block = map(&ComplexMatrix::unit(dim_in, dim_in, i, k))?;
            if block.shape() != (dim_out, dim_out) {
                return Err(Error::dim(format!(
                    "map returned {}x{}, expected {dim_out}x{dim_out}",
                    block.rows(),
                    block.cols()
                )));
            }
            for b in 0..dim_out {
                for c in 0..dim_out {
                    j[(i * dim_out + b, k * dim_out + c)] = block[(b, c)];
                }
            }
        }
    }
    Ok(ChoiMatrix { dim_in, dim_out, matrix: j })
}

/// Unnormalized Choi–Jamiołkowski matrix; trace equals `dim_in` for a
/// trace-preserving map.
#[derive(Debug, Clone, PartialEq)]
pub struct ChoiMatrix {
    pub dim_in: usize,
    pub dim_out: usize,
    pub matrix: ComplexMatrix,
}

impl ChoiMatrix {
    /// Frobenius distance to another Choi matrix of the same shape.
    pub fn distance(&self, other: &ChoiMatrix) -> Result<f64> {
        if (self.dim_in, self.dim_out) != (other.dim_in, other.dim_out) {
            return Err(Error::dim(format!(
                "Choi matrices of {}->{} and {}->{} channels",
                self.dim_in, self.dim_out, other.dim_in, other.dim_out
            )));
        }
        frobenius_distance(&self.matrix, &other.matrix)
    }

    /// Checks Hermiticity, positivity (min eigenvalue ≥ −1e−9) and
    /// `tr J = dim_in` (1e−8).
    pub fn check(&self) -> Result<()> {
        let spectrum = hermitian_eigenvalues(&self.matrix)?;
        if spectrum[0] < -1e-9 {
            return Err(Error::NotPositive(spectrum[0]));
        }
        let t = self.matrix.trace().re;
        if (t - self.dim_in as f64).abs() > 1e-8 {
            return Err(Error::Normalization(t));
        }
        Ok(())
    }
}

/// Channel equality: Choi matrices within [`CHANNEL_EQ_TOL`].
pub fn same_channel(a: &KrausChannel, b: &KrausChannel) -> Result<bool> {
    Ok(a.choi().distance(&b.choi())? < CHANNEL_EQ_TOL)
}

/// Isometric extension `V: A → B ⊗ E`, rows indexed `b·dim_env + e`.
#[derive(Debug, Clone)]
pub struct StinespringIsometry {
    pub dim_in: usize,
    pub dim_out: usize,
    pub dim_env: usize,
    pub v: ComplexMatrix,
}

impl StinespringIsometry {
    /// `max |V†V − I|`.
    pub fn isometry_residual(&self) -> f64 {
        (&self.v.adjoint() * &self.v)
            .max_abs_diff(&ComplexMatrix::identity(self.dim_in))
            .expect("same shape")
    }

    /// `VρV†` on `B ⊗ E`.
    pub fn dilate(&self, rho: &ComplexMatrix) -> Result<ComplexMatrix> {
        if rho.shape() != (self.dim_in, self.dim_in) {
            return Err(Error::dim(format!("isometry input is {0}x{0}", self.dim_in)));
        }
        Ok(self.v.sandwich(rho))
    }

    /// `Tr_E(VρV†)`.
    pub fn output(&self, rho: &ComplexMatrix) -> Result<ComplexMatrix> {
        partial_trace(&self.dilate(rho)?, self.dim_out, self.dim_env, Subsystem::A)
    }

    /// `Tr_B(VρV†)`.
    pub fn environment(&self, rho: &ComplexMatrix) -> Result<ComplexMatrix> {
        partial_trace(&self.dilate(rho)?, self.dim_out, self.dim_env, Subsystem::B)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matcore::DensityMatrix;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn identity_is_cpt() {
        let r = KrausChannel::identity(3).validate_cpt();
        assert_eq!(r.tp_residual, 0.0);
        assert!(r.ok);
    }

    #[test]
    fn half_identity_is_not_tp() {
        let ch = KrausChannel::new(2, 2, vec![ComplexMatrix::identity(2).scale_real(0.5)]).unwrap();
        let r = ch.validate_cpt();
        assert!(!r.ok);
        assert!((r.tp_residual - 0.75).abs() < 1e-15);
        assert!(matches!(
            KrausChannel::new_cpt(2, 2, ch.kraus().to_vec(), 1e-6),
            Err(Error::Validation { .. })
        ));
    }

    #[test]
    fn new_rejects_mismatched_shapes() {
        let err = KrausChannel::new(2, 2, vec![ComplexMatrix::identity(3)]).unwrap_err();
        assert!(matches!(err, Error::Dimension(_)));
        assert!(KrausChannel::new(2, 2, vec![]).is_err());
    }

    #[test]
    fn apply_checks_dims() {
        let ch = KrausChannel::identity(2);
        assert!(matches!(ch.apply(&ComplexMatrix::identity(3)), Err(Error::Dimension(_))));
    }

    #[test]
    fn identity_choi_is_rank_one() {
        let j = KrausChannel::identity(2).choi();
        let spectrum = hermitian_eigenvalues(&j.matrix).unwrap();
        assert!((spectrum[3] - 2.0).abs() < 1e-14);
        assert!(spectrum[..3].iter().all(|l| l.abs() < 1e-14));
        assert!((j.matrix.trace().re - 2.0).abs() < 1e-15);
        j.check().unwrap();
    }

    #[test]
    fn identity_stinespring_and_complement() {
        let ch = KrausChannel::identity(2);
        let s = ch.stinespring();
        assert_eq!(s.dim_env, 1);
        assert_eq!(s.v, ComplexMatrix::identity(2));
        let comp = ch.complementary();
        assert_eq!(comp.dim_out(), 1);
        let rho = DensityMatrix::random(2, &mut ChaCha8Rng::seed_from_u64(5));
        let out = comp.apply(rho.as_matrix()).unwrap();
        assert!((out[(0, 0)].re - 1.0).abs() < 1e-14);
    }

    #[test]
    fn compose_rejects_mismatch() {
        let a = KrausChannel::identity(2);
        let b = KrausChannel::identity(3);
        assert!(matches!(compose(&a, &b), Err(Error::Dimension(_))));
    }

    #[test]
    fn random_channel_is_cpt() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let ch = KrausChannel::random(3, 2, 4, &mut rng);
        assert!(ch.validate_cpt().tp_residual < 1e-12);
        ch.choi().check().unwrap();
    }
}

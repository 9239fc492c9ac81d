//! Concrete channel families.
//!
//! The `d`-dimensional depolarizing channel `ρ ↦ (1−x)ρ + x·tr(ρ)·I/d` has
//! the Kraus operators `√(1−x)·I` and `√(x/d)|i⟩⟨j|`, so its environment is
//! `1 + d²` dimensional with basis `{|0⟩, |i,j⟩}`. Environment index 0 is
//! `|0⟩` and index `1 + i·d + j` is `|i,j⟩` (0-based `i, j`).
//!
//! For `x ≥ 1/2` the map [`antidegrading_map`] recovers the channel output
//! from the environment, `𝒩 ∘ 𝒟ₓᶜ = 𝒟ₓ`. Below `1/2` the required `δ²` is
//! negative and construction fails with
//! [`DomainViolation::BelowAntidegradingThreshold`].

use num_complex::Complex64;

use crate::channels::{compose, KrausChannel};
use crate::error::{DomainViolation, Error, Result};
use crate::matcore::ComplexMatrix;

/// Noise strength `x ∈ [0, 1]` on a `d ≥ 2` dimensional system.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NoiseParameter {
    x: f64,
    d: usize,
}

impl NoiseParameter {
    pub fn new(d: usize, x: f64) -> Result<Self> {
        if d < 2 {
            return Err(Error::ParameterDomain(DomainViolation::DimensionTooSmall { d }));
        }
        if !(0.0..=1.0).contains(&x) {
            return Err(Error::ParameterDomain(DomainViolation::NoiseOutOfRange { x }));
        }
        Ok(Self { x, d })
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// `1 + d²`.
    pub fn env_dim(&self) -> usize {
        1 + self.d * self.d
    }
}

/// Environment index of `|i,j⟩`.
#[inline]
pub fn env_index(d: usize, i: usize, j: usize) -> usize {
    1 + i * d + j
}

/// Solution `(β, δ)` of
/// `β²x = 1 − x`, `d·δ² = (2x − 1)/x`, `β² + d·δ² = 1`,
/// taking non-negative roots, plus the complement's coherence `ξ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AntiDegradingParams {
    pub x: f64,
    pub d: usize,
    pub beta: f64,
    pub delta: f64,
    pub xi: f64,
}

impl AntiDegradingParams {
    pub fn solve(p: NoiseParameter) -> Result<Self> {
        let (x, d) = (p.x, p.d as f64);
        let d_delta_sq = d_delta_squared(x);
        if d_delta_sq.is_nan() || d_delta_sq < 0.0 {
            return Err(Error::ParameterDomain(DomainViolation::BelowAntidegradingThreshold {
                x,
                d_delta_sq,
            }));
        }
        Ok(Self {
            x,
            d: p.d,
            beta: ((1.0 - x) / x).sqrt(),
            delta: (d_delta_sq / d).sqrt(),
            xi: complement_coherence(p),
        })
    }

    pub fn d_delta_sq(&self) -> f64 {
        self.d as f64 * self.delta * self.delta
    }
}

/// `(2x − 1)/x`; negative exactly when `x < 1/2`.
pub fn d_delta_squared(x: f64) -> f64 {
    (2.0 * x - 1.0) / x
}

/// `ξ = √(x(1−x)/d)`.
pub fn complement_coherence(p: NoiseParameter) -> f64 {
    (p.x * (1.0 - p.x) / p.d as f64).sqrt()
}

fn real(v: f64) -> Complex64 {
    Complex64::new(v, 0.0)
}

/// Depolarizing channel with Kraus set `{√(1−x)·I} ∪ {√(x/d)|i⟩⟨j|}`.
/// Operator `1 + i·d + j` is `A_{ij}`; zero operators are kept.
pub fn depolarizing(p: NoiseParameter) -> KrausChannel {
    let d = p.d;
    let mut kraus = Vec::with_capacity(p.env_dim());
    kraus.push(ComplexMatrix::identity(d).scale_real((1.0 - p.x).sqrt()));
    let a = (p.x / d as f64).sqrt();
    for i in 0..d {
        for j in 0..d {
            kraus.push(ComplexMatrix::unit(d, d, i, j).scale_real(a));
        }
    }
    KrausChannel::new(d, d, kraus).expect("depolarizing Kraus shapes")
}

/// Closed-form action of the depolarizing channel, `(1−x)ρ + (x/d)tr(ρ)I`.
pub fn depolarizing_action(p: NoiseParameter, rho: &ComplexMatrix) -> ComplexMatrix {
    let mixed = ComplexMatrix::identity(p.d).scale(rho.trace() * (p.x / p.d as f64));
    &rho.scale_real(1.0 - p.x) + &mixed
}

/// Complement of the depolarizing channel, built directly from its closed
/// form (see [`depolarizing_complement_action`]). Kraus operators are
/// `F_m = √(1−x)|0⟩⟨m| + √(x/d) Σ_j |m,j⟩⟨j|` for `m = 0..d`.
pub fn depolarizing_complement(p: NoiseParameter) -> KrausChannel {
    let d = p.d;
    let a = (1.0 - p.x).sqrt();
    let b = (p.x / d as f64).sqrt();
    let kraus = (0..d)
        .map(|m| {
            let mut f = ComplexMatrix::zeros(p.env_dim(), d);
            f[(0, m)] = real(a);
            for j in 0..d {
                f[(env_index(d, m, j), j)] = real(b);
            }
            f
        })
        .collect();
    KrausChannel::new(d, p.env_dim(), kraus).expect("complement Kraus shapes")
}

/// `(1−x)tr(ρ)|0⟩⟨0| + ξ Σ_{ij}(ρ_{ij}|0⟩⟨i,j| + ρ_{ji}|i,j⟩⟨0|)
///  + (x/d) Σ_{ijk} ρ_{jk}|i,j⟩⟨i,k|`, evaluated entry by entry.
pub fn depolarizing_complement_action(p: NoiseParameter, rho: &ComplexMatrix) -> ComplexMatrix {
    let d = p.d;
    let xi = complement_coherence(p);
    let mut out = ComplexMatrix::zeros(p.env_dim(), p.env_dim());
    out[(0, 0)] = rho.trace() * (1.0 - p.x);
    for i in 0..d {
        for j in 0..d {
            out[(0, env_index(d, i, j))] = rho[(i, j)] * xi;
            out[(env_index(d, i, j), 0)] = rho[(j, i)] * xi;
            for k in 0..d {
                out[(env_index(d, i, j), env_index(d, i, k))] = rho[(j, k)] * (p.x / d as f64);
            }
        }
    }
    out
}

/// The map `𝒩: E → B` with Kraus operators
/// `M_k = |k⟩⟨0|/√d`, `N_k = β Σ_j |j⟩⟨k,j|`, `Q_{i,jk} = δ|i⟩⟨j,k|`,
/// ordered `M_0..M_{d−1}, N_0..N_{d−1}, Q_{0,00}..Q_{d−1,(d−1)(d−1)}`.
///
/// Fails for `x < 1/2`, carrying the negative `d·δ²`.
pub fn antidegrading_map(p: NoiseParameter) -> Result<KrausChannel> {
    let params = AntiDegradingParams::solve(p)?;
    let d = p.d;
    let env = p.env_dim();
    let mut kraus = Vec::with_capacity(2 * d + d * d * d);
    let m_coeff = 1.0 / (d as f64).sqrt();
    for k in 0..d {
        kraus.push(ComplexMatrix::unit(d, env, k, 0).scale_real(m_coeff));
    }
    for k in 0..d {
        let mut n = ComplexMatrix::zeros(d, env);
        for j in 0..d {
            n[(j, env_index(d, k, j))] = real(params.beta);
        }
        kraus.push(n);
    }
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                kraus.push(ComplexMatrix::unit(d, env, i, env_index(d, j, k)).scale_real(params.delta));
            }
        }
    }
    Ok(KrausChannel::new(env, d, kraus).expect("anti-degrading Kraus shapes"))
}

/// Qutrit transpose-depolarizing channel `(1−x)ρ + (x/2)(tr(ρ)I − ρᵀ)`.
///
/// Kraus set: `√(1−x)·I` and `√(x/2)(|i⟩⟨j| − |j⟩⟨i|)` for `i < j`. The
/// antisymmetric part sums to `(tr(ρ)I − ρᵀ)/(d−1)`, so the `x/2` weight is a
/// channel only for `d = 3`.
pub fn transpose_depolarizing(x: f64, d: usize) -> Result<KrausChannel> {
    let p = NoiseParameter::new(d, x)?;
    if d != 3 {
        return Err(Error::ParameterDomain(DomainViolation::UnsupportedDimension { d, required: 3 }));
    }
    let mut kraus = vec![ComplexMatrix::identity(d).scale_real((1.0 - p.x).sqrt())];
    let c = (p.x / 2.0).sqrt();
    for i in 0..d {
        for j in (i + 1)..d {
            let anti = &ComplexMatrix::unit(d, d, i, j) - &ComplexMatrix::unit(d, d, j, i);
            kraus.push(anti.scale_real(c));
        }
    }
    KrausChannel::new(d, d, kraus)
}

/// `Λₓ = 𝒟ₓ ∘ Λ`, i.e. `ρ ↦ (1−x)Λ(ρ) + (x/d)tr(ρ)I`.
pub fn contaminate(lambda: &KrausChannel, x: f64) -> Result<KrausChannel> {
    if !lambda.is_square() {
        return Err(Error::dim(format!(
            "contamination needs a square channel, got {} -> {}",
            lambda.dim_in(),
            lambda.dim_out()
        )));
    }
    let p = NoiseParameter::new(lambda.dim_out(), x)?;
    compose(&depolarizing(p), lambda)
}

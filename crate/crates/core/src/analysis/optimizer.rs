//! Multi-restart gradient ascent of the coherent information over density
//! matrices, parametrized without constraints as `ρ = AA†/tr(AA†)`.
//!
//! Step control: a step that lowers the objective (or leaves the PSD cone by
//! more than the entropy clipping window) is rejected and the step size
//! halved; an accepted step grows it by 10%. A restart stops once the
//! objective has moved less than `tolerance` over the last `window`
//! iterations, or after `max_iterations`.
//!
//! The maximum found is a single-letter quantity. A value ≤ 0 is consistent
//! with zero quantum capacity but does not prove it.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::coherent::{finite_difference_gradient, CoherentInformation};
use crate::channels::KrausChannel;
use crate::error::{Error, Result};
use crate::matcore::{gaussian_matrix, ComplexMatrix, DensityMatrix};

/// Largest input dimension the optimizer accepts.
pub const MAX_OPTIMIZER_DIM: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GradientMode {
    Analytic,
    /// Central differences with the given step in every real coordinate.
    FiniteDifference { step: f64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct OptimizerConfig {
    pub restarts: usize,
    pub max_iterations: usize,
    pub tolerance: f64,
    pub window: usize,
    /// Restart `k` draws its starting factor from `seed + k`.
    pub seed: u64,
    pub initial_step: f64,
    pub gradient: GradientMode,
    /// Run restarts on the rayon pool. Results are identical either way.
    pub parallel: bool,
}

impl Default for OptimizerConfig {
    fn default() -> Self {
        Self {
            restarts: 20,
            max_iterations: 500,
            tolerance: 1e-9,
            window: 10,
            seed: 0,
            initial_step: 0.1,
            gradient: GradientMode::Analytic,
            parallel: true,
        }
    }
}

impl OptimizerConfig {
    pub fn with_seed(seed: u64) -> Self {
        Self { seed, ..Self::default() }
    }
}

#[derive(Debug, Clone)]
pub struct CoherentInfoResult {
    /// Best coherent information found, in bits.
    pub value: f64,
    pub optimizer_state: DensityMatrix,
    /// Iterations used by the winning restart.
    pub iterations: usize,
    pub restarts_used: usize,
    /// Whether the winning restart met the stopping tolerance.
    pub converged: bool,
    /// Final value of each restart, in restart order.
    pub restart_values: Vec<f64>,
}

#[derive(Debug, Clone)]
struct RestartOutcome {
    value: f64,
    factor: ComplexMatrix,
    iterations: usize,
    converged: bool,
}

pub fn maximize_coherent_information(
    ch: &KrausChannel,
    cfg: &OptimizerConfig,
) -> Result<CoherentInfoResult> {
    if ch.dim_in() > MAX_OPTIMIZER_DIM {
        return Err(Error::dim(format!(
            "optimizer supports input dimension <= {MAX_OPTIMIZER_DIM}, got {}",
            ch.dim_in()
        )));
    }
    if cfg.restarts == 0 || cfg.max_iterations == 0 || cfg.window == 0 {
        return Err(Error::Usage("optimizer needs at least one restart, iteration and window step".into()));
    }
    let objective = CoherentInformation::new(ch);
    let run = |k: usize| ascend(&objective, cfg, cfg.seed.wrapping_add(k as u64));
    let outcomes: Vec<RestartOutcome> = if cfg.parallel {
        (0..cfg.restarts).into_par_iter().map(run).collect::<Result<_>>()?
    } else {
        (0..cfg.restarts).map(run).collect::<Result<_>>()?
    };

    // strict comparison: lowest restart index wins ties
    let mut best = 0;
    for (k, o) in outcomes.iter().enumerate() {
        if o.value > outcomes[best].value {
            best = k;
        }
    }
    let winner = &outcomes[best];
    Ok(CoherentInfoResult {
        value: winner.value,
        optimizer_state: DensityMatrix::from_factor(&winner.factor),
        iterations: winner.iterations,
        restarts_used: cfg.restarts,
        converged: winner.converged,
        restart_values: outcomes.iter().map(|o| o.value).collect(),
    })
}

fn normalized(a: ComplexMatrix) -> ComplexMatrix {
    let n = a.frobenius_norm();
    a.scale_real(1.0 / n)
}

fn value_and_gradient(
    objective: &CoherentInformation,
    cfg: &OptimizerConfig,
    a: &ComplexMatrix,
) -> Result<(f64, ComplexMatrix)> {
    match cfg.gradient {
        GradientMode::Analytic => objective.value_and_gradient(a),
        GradientMode::FiniteDifference { step } => {
            Ok((objective.value_at_factor(a)?, finite_difference_gradient(objective, a, step)?))
        }
    }
}

fn ascend(objective: &CoherentInformation, cfg: &OptimizerConfig, seed: u64) -> Result<RestartOutcome> {
    let d = objective.dim_in();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut a = normalized(gaussian_matrix(d, d, &mut rng));
    let (mut value, mut grad) = value_and_gradient(objective, cfg, &a)?;
    let mut step = cfg.initial_step;
    let mut history = vec![value];
    let mut iterations = 0;
    let mut converged = false;

    while iterations < cfg.max_iterations {
        iterations += 1;
        let candidate = normalized(&a + &grad.scale_real(step));
        let accepted = match value_and_gradient(objective, cfg, &candidate) {
            Ok((v, g)) if v >= value => Some((v, g)),
            Ok(_) | Err(Error::NotPositive(_)) => None,
            Err(e) => return Err(e),
        };
        match accepted {
            Some((v, g)) => {
                a = candidate;
                value = v;
                grad = g;
                step *= 1.1;
            }
            None => step *= 0.5,
        }
        history.push(value);
        if history.len() > cfg.window {
            let earlier = history[history.len() - 1 - cfg.window];
            if (value - earlier).abs() < cfg.tolerance {
                converged = true;
                break;
            }
        }
    }
    Ok(RestartOutcome { value, factor: a, iterations, converged })
}

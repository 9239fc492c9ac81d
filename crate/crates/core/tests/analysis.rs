use qcap::analysis::*;
use qcap::channels::KrausChannel;
use qcap::families::*;
use qcap::matcore::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn p(d: usize, x: f64) -> NoiseParameter {
    NoiseParameter::new(d, x).unwrap()
}

fn grid21() -> impl Iterator<Item = f64> {
    (0..21).map(|k| k as f64 / 20.0)
}

#[test]
fn analytic_spectrum_matches_numeric_on_grid() {
    for d in 2..=6 {
        for x in grid21() {
            let numeric = ppt_spectrum(&depolarizing(p(d, x))).unwrap();
            let analytic = analytic_ppt_spectrum(p(d, x));
            assert_eq!(numeric.len(), analytic.eigenvalues.len());
            for (a, b) in numeric.iter().zip(&analytic.eigenvalues) {
                assert!((a - b).abs() < 1e-10, "d={d} x={x}: {a} vs {b}");
            }
        }
    }
}

#[test]
fn partial_transposed_choi_is_swap_plus_identity() {
    for d in 2..=4 {
        let x = 0.37;
        let j = depolarizing(p(d, x)).choi();
        let pt = partial_transpose(&j.matrix, d, d).unwrap();
        let n = d * d;
        // (1−x)𝒫 + (x/d)I with 𝒫|i,j⟩ = |j,i⟩
        let oracle = ComplexMatrix::from_fn(n, n, |r, c| {
            let swap = if c == (r % d) * d + r / d { 1.0 - x } else { 0.0 };
            let diag = if r == c { x / d as f64 } else { 0.0 };
            num_complex::Complex64::new(swap + diag, 0.0)
        });
        assert!(pt.max_abs_diff(&oracle).unwrap() < 1e-14);
    }
}

#[test]
fn qubit_half_noise_spectrum() {
    let s = ppt_spectrum(&depolarizing(p(2, 0.5))).unwrap();
    // −(1−x)+x/d = −0.25 once, (1−x)+x/d = 0.75 three times
    assert!((s[0] + 0.25).abs() < 1e-12);
    for v in &s[1..] {
        assert!((v - 0.75).abs() < 1e-12);
    }
}

#[test]
fn min_ppt_eigenvalue_changes_sign_at_threshold() {
    for d in 2..=6 {
        let t = ppt_threshold(d);
        let below = ppt_spectrum(&depolarizing(p(d, t - 1e-6))).unwrap()[0];
        let above = ppt_spectrum(&depolarizing(p(d, t + 1e-6))).unwrap()[0];
        assert!(below < 0.0, "d={d}: {below}");
        assert!(above >= 0.0, "d={d}: {above}");
        let at = ppt_spectrum(&depolarizing(p(d, t))).unwrap()[0];
        assert!(at.abs() < 1e-12, "d={d}: {at}");
    }
}

#[test]
fn coherent_information_qubit_half_noise_is_negative() {
    // oracle: S(B) = 1 for the maximally mixed output; the environment state
    // has the spectrum of J/d = (1−x)|Φ⟩⟨Φ| + (x/d²)I, i.e. {0.625, 0.125 ×3}
    let ch = depolarizing(p(2, 0.5));
    let s_env = -(0.625f64 * 0.625f64.log2() + 3.0 * 0.125 * 0.125f64.log2());
    let expected = 1.0 - s_env;
    let got = coherent_information(&ch, &DensityMatrix::maximally_mixed(2)).unwrap();
    assert!((got - expected).abs() < 1e-12, "{got} vs {expected}");
    assert!(got < 0.0);
}

#[test]
fn coherent_information_light_noise_oracle() {
    // same oracle at x = 0.05: env spectrum {1 − 3x/4, x/4 ×3}
    let x = 0.05;
    let big: f64 = 1.0 - 0.75 * x;
    let small: f64 = x / 4.0;
    let expected = 1.0 + big * big.log2() + 3.0 * small * small.log2();
    let ch = depolarizing(p(2, x));
    let got = coherent_information(&ch, &DensityMatrix::maximally_mixed(2)).unwrap();
    assert!((got - expected).abs() < 1e-12);
    assert!(expected > 0.5);
    let best = maximize_coherent_information(&ch, &OptimizerConfig::with_seed(5)).unwrap();
    assert!(best.value >= got - 1e-9);
}

#[test]
fn gradient_agrees_with_central_differences() {
    let mut rng = ChaCha8Rng::seed_from_u64(300);
    let channels = vec![
        depolarizing(p(2, 0.2)),
        depolarizing(p(3, 0.6)),
        KrausChannel::random(2, 2, 3, &mut rng),
        KrausChannel::random(3, 3, 2, &mut rng),
        contaminate(&KrausChannel::random(2, 2, 2, &mut rng), 0.6).unwrap(),
    ];
    for ch in &channels {
        let objective = CoherentInformation::new(ch);
        for _ in 0..4 {
            let a = gaussian_matrix(ch.dim_in(), ch.dim_in(), &mut rng);
            let (_, analytic) = objective.value_and_gradient(&a).unwrap();
            let numeric = finite_difference_gradient(&objective, &a, 1e-5).unwrap();
            let rel = frobenius_distance(&analytic, &numeric).unwrap() / numeric.frobenius_norm();
            assert!(rel < 1e-4, "relative gradient error {rel}");
        }
    }
}

#[test]
fn best_value_is_monotone_in_restarts() {
    let ch = contaminate(&KrausChannel::random(2, 2, 2, &mut ChaCha8Rng::seed_from_u64(301)), 0.1).unwrap();
    let mut previous = f64::NEG_INFINITY;
    for restarts in 1..=6 {
        let cfg = OptimizerConfig { restarts, ..OptimizerConfig::with_seed(17) };
        let r = maximize_coherent_information(&ch, &cfg).unwrap();
        assert_eq!(r.restarts_used, restarts);
        assert!(r.value >= previous);
        previous = r.value;
    }
}

#[test]
fn optimum_dominates_maximally_mixed_input() {
    let mut rng = ChaCha8Rng::seed_from_u64(302);
    for ch in [depolarizing(p(2, 0.1)), depolarizing(p(3, 0.8)), KrausChannel::random(2, 2, 2, &mut rng)] {
        let d = ch.dim_in();
        let mixed = coherent_information(&ch, &DensityMatrix::maximally_mixed(d)).unwrap();
        let r = maximize_coherent_information(&ch, &OptimizerConfig::with_seed(1)).unwrap();
        assert!(r.value >= mixed - 1e-9);
        let at_state = coherent_information(&ch, &r.optimizer_state).unwrap();
        assert!((at_state - r.value).abs() < 1e-9);
    }
}

#[test]
fn antidegradable_points_have_non_positive_optimum() {
    for d in [2, 3] {
        for x in [0.5, 0.8] {
            assert!(antidegradability_residual(p(d, x)).unwrap() < 1e-9);
            let r = maximize_coherent_information(&depolarizing(p(d, x)), &OptimizerConfig::with_seed(7)).unwrap();
            assert!(r.value <= 1e-7, "d={d} x={x}: {}", r.value);
        }
    }
}

#[test]
fn contaminated_random_channels_have_non_positive_optimum() {
    let mut rng = ChaCha8Rng::seed_from_u64(303);
    for _ in 0..3 {
        let lambda = KrausChannel::random(2, 2, 3, &mut rng);
        let noisy = contaminate(&lambda, 0.55).unwrap();
        let r = maximize_coherent_information(&noisy, &OptimizerConfig::with_seed(11)).unwrap();
        assert!(r.value <= 1e-7, "{}", r.value);
    }
}

#[test]
fn noiseless_qutrit_reaches_log_d() {
    let r = maximize_coherent_information(&depolarizing(p(3, 0.0)), &OptimizerConfig::with_seed(2)).unwrap();
    assert!((r.value - 3f64.log2()).abs() < 1e-6);
    assert!(r.converged);
}

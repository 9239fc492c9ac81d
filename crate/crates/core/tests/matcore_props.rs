use num_complex::Complex64;
use proptest::prelude::*;
use qcap::matcore::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn partial_trace_preserves_trace(seed in any::<u64>(), da in 2usize..=4, db in 2usize..=4) {
        let m = random_hermitian(da * db, &mut rng(seed));
        let t = m.trace();
        for keep in [Subsystem::A, Subsystem::B] {
            let r = partial_trace(&m, da, db, keep).unwrap();
            prop_assert!((r.trace() - t).norm() < 1e-12);
        }
    }

    #[test]
    fn partial_trace_of_product_factorizes(seed in any::<u64>(), da in 1usize..=4, db in 1usize..=4) {
        let mut r = rng(seed);
        let a = gaussian_matrix(da, da, &mut r);
        let b = gaussian_matrix(db, db, &mut r);
        let ab = kron(&a, &b);
        let keep_a = partial_trace(&ab, da, db, Subsystem::A).unwrap();
        let keep_b = partial_trace(&ab, da, db, Subsystem::B).unwrap();
        prop_assert!(keep_a.max_abs_diff(&a.scale(b.trace())).unwrap() < 1e-12);
        prop_assert!(keep_b.max_abs_diff(&b.scale(a.trace())).unwrap() < 1e-12);
    }

    #[test]
    fn partial_transpose_is_trace_preserving_hermitian_involution(seed in any::<u64>(), da in 2usize..=4, db in 2usize..=4) {
        let m = random_hermitian(da * db, &mut rng(seed));
        let pt = partial_transpose(&m, da, db).unwrap();
        prop_assert!((pt.trace() - m.trace()).norm() < 1e-12);
        prop_assert!(pt.hermiticity_defect() < 1e-14);
        prop_assert_eq!(partial_transpose(&pt, da, db).unwrap(), m);
    }

    #[test]
    fn partial_transpose_of_product(seed in any::<u64>(), da in 1usize..=3, db in 1usize..=3) {
        let mut r = rng(seed);
        let a = gaussian_matrix(da, da, &mut r);
        let b = gaussian_matrix(db, db, &mut r);
        let pt = partial_transpose(&kron(&a, &b), da, db).unwrap();
        prop_assert_eq!(pt, kron(&a, &b.transpose()));
    }

    #[test]
    fn eig_reconstructs(seed in any::<u64>(), n in 1usize..=26) {
        let m = random_hermitian(n, &mut rng(seed));
        let e = hermitian_eig(&m).unwrap();
        prop_assert!(e.eigenvalues.windows(2).all(|w| w[0] <= w[1]));
        let rel = frobenius_distance(&e.reconstruct(), &m).unwrap() / m.frobenius_norm();
        prop_assert!(rel < 1e-10, "relative residual {}", rel);
        let v = &e.eigenvectors;
        let vv = &v.adjoint() * v;
        prop_assert!(vv.max_abs_diff(&ComplexMatrix::identity(n)).unwrap() < 1e-10);
    }

    #[test]
    fn entropy_is_unitarily_invariant(seed in any::<u64>(), n in 2usize..=6) {
        let mut r = rng(seed);
        let rho = DensityMatrix::random(n, &mut r);
        let u = random_unitary(n, &mut r);
        let rotated = u.sandwich(rho.as_matrix()).hermitian_part();
        let s0 = von_neumann_entropy(rho.as_matrix()).unwrap();
        let s1 = von_neumann_entropy(&rotated).unwrap();
        prop_assert!((s0 - s1).abs() < 1e-10);
        prop_assert!(s0 >= -1e-12 && s0 <= (n as f64).log2() + 1e-12);
    }

    #[test]
    fn kron_associative_and_bilinear(seed in any::<u64>(), n in 1usize..=3) {
        let mut r = rng(seed);
        let a = gaussian_matrix(n, n + 1, &mut r);
        let b = gaussian_matrix(n + 1, n, &mut r);
        let c = gaussian_matrix(2, n, &mut r);
        let a2 = gaussian_matrix(n, n + 1, &mut r);
        let left = kron(&kron(&a, &b), &c);
        let right = kron(&a, &kron(&b, &c));
        prop_assert!(left.max_abs_diff(&right).unwrap() < 1e-12);

        let s = Complex64::new(0.7, -1.3);
        let lhs = kron(&(&a.scale(s) + &a2), &b);
        let rhs = &kron(&a, &b).scale(s) + &kron(&a2, &b);
        prop_assert!(lhs.max_abs_diff(&rhs).unwrap() < 1e-12);
        let lhs = kron(&a, &(&b.scale(s) + &b));
        let rhs = &kron(&a, &b).scale(s) + &kron(&a, &b);
        prop_assert!(lhs.max_abs_diff(&rhs).unwrap() < 1e-12);
    }

    #[test]
    fn frobenius_distance_is_symmetric(seed in any::<u64>(), n in 1usize..=5) {
        let mut r = rng(seed);
        let a = gaussian_matrix(n, n, &mut r);
        let b = gaussian_matrix(n, n, &mut r);
        prop_assert_eq!(frobenius_distance(&a, &b).unwrap(), frobenius_distance(&b, &a).unwrap());
    }
}

/// Trace and block structure of `kron` against an entry-wise oracle.
#[test]
fn kron_trace_and_blocks_match_entrywise_oracle() {
    let mut r = rng(2024);
    for _ in 0..10 {
        let a = gaussian_matrix(3, 3, &mut r);
        let b = gaussian_matrix(3, 3, &mut r);
        let k = kron(&a, &b);

        let mut oracle_trace = Complex64::new(0.0, 0.0);
        for i in 0..3 {
            for j in 0..3 {
                oracle_trace += a[(i, i)] * b[(j, j)];
            }
        }
        assert!((k.trace() - oracle_trace).norm() < 1e-12);
        assert!((k.trace() - a.trace() * b.trace()).norm() < 1e-12);

        for bi in 0..3 {
            for bj in 0..3 {
                for i in 0..3 {
                    for j in 0..3 {
                        assert_eq!(k[(bi * 3 + i, bj * 3 + j)], a[(bi, bj)] * b[(i, j)]);
                    }
                }
            }
        }
    }
}

#[test]
fn entropy_of_biased_qubit() {
    // -(3/4)log2(3/4) - (1/4)log2(1/4) = 2 - (3/4)log2(3)
    let expected = 2.0 - 0.75 * 3f64.log2();
    let s = von_neumann_entropy(&ComplexMatrix::from_real_diagonal(&[0.75, 0.25])).unwrap();
    assert!((s - expected).abs() < 1e-14);
    assert!((s - 0.811_278_124_459_132_9).abs() < 1e-14);
}

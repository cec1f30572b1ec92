use mmcorr::linalg::{
    hermitian_eigen, hermitian_eigenvalues, kron, singular_values_3, trace_norm_hermitian, C64,
};
use mmcorr::measures::{correlation_distance, covariance_matrix, d1_x_state, mmc, negativity};
use mmcorr::oracles::{classical_cov, d1_oracle, mmc_oracle, measurement_disturbance};
use mmcorr::sampling;
use mmcorr::states::{
    bell_diagonal, bell_diagonal_weights, cc_state, cq_state, partial_transpose, projector_pair,
};
use mmcorr::{ComplexMatrix, DensityMatrix, MeasureReport, RealMatrix3, SearchConfig, XStateParams};
use nalgebra::{Matrix3, Matrix4};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_hermitian(seed: u64, dim: usize) -> ComplexMatrix {
    let mut r = rng(seed);
    let mut m = ComplexMatrix::zeros(dim).unwrap();
    for i in 0..dim {
        m[(i, i)] = C64::new(rand::Rng::random_range(&mut r, -1.0..1.0), 0.0);
        for j in i + 1..dim {
            let z = C64::new(
                rand::Rng::random_range(&mut r, -1.0..1.0),
                rand::Rng::random_range(&mut r, -1.0..1.0),
            );
            m[(i, j)] = z;
            m[(j, i)] = z.conj();
        }
    }
    m
}

fn random_complex(seed: u64, dim: usize) -> ComplexMatrix {
    let mut r = rng(seed);
    let mut m = ComplexMatrix::zeros(dim).unwrap();
    for i in 0..dim {
        for j in 0..dim {
            m[(i, j)] = C64::new(
                rand::Rng::random_range(&mut r, -1.0..1.0),
                rand::Rng::random_range(&mut r, -1.0..1.0),
            );
        }
    }
    m
}

fn to_nalgebra(m: &ComplexMatrix) -> Matrix4<C64> {
    Matrix4::from_fn(|i, j| m[(i, j)])
}

fn reference_eigenvalues(m: &ComplexMatrix) -> Vec<f64> {
    let mut v: Vec<f64> = to_nalgebra(m).symmetric_eigen().eigenvalues.iter().copied().collect();
    v.sort_by(f64::total_cmp);
    v
}

fn sorted(mut v: Vec<f64>) -> Vec<f64> {
    v.sort_by(f64::total_cmp);
    v
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn eigenvalues_match_reference(seed in any::<u64>()) {
        let h = random_hermitian(seed, 4);
        let ours = sorted(hermitian_eigenvalues(&h).unwrap());
        for (a, b) in ours.iter().zip(reference_eigenvalues(&h)) {
            prop_assert!((a - b).abs() < 1e-12, "{a} vs {b}");
        }
        let sum: f64 = ours.iter().sum();
        prop_assert!((sum - h.trace().re).abs() < 1e-12);
    }

    #[test]
    fn eigenvectors_diagonalize(seed in any::<u64>()) {
        let h = random_hermitian(seed, 4);
        let e = hermitian_eigen(&h).unwrap();
        let v = &e.vectors;
        let d = v.adjoint().mul(&h).unwrap().mul(v).unwrap();
        let want = ComplexMatrix::diag(&e.values).unwrap();
        prop_assert!(d.max_abs_diff(&want).unwrap() < 1e-12);
        let vv = v.adjoint().mul(v).unwrap();
        prop_assert!(vv.max_abs_diff(&ComplexMatrix::identity(4).unwrap()).unwrap() < 1e-12);
    }

    #[test]
    fn singular_values_match_reference(vals in proptest::array::uniform9(-1.0f64..1.0)) {
        let q = RealMatrix3([[vals[0], vals[1], vals[2]], [vals[3], vals[4], vals[5]], [vals[6], vals[7], vals[8]]]);
        let ours = singular_values_3(&q);
        let mut reference: Vec<f64> = Matrix3::from_fn(|i, j| q.0[i][j])
            .svd(false, false)
            .singular_values
            .iter()
            .copied()
            .collect();
        reference.sort_by(|a, b| b.total_cmp(a));
        for (a, b) in ours.iter().zip(&reference) {
            prop_assert!((a - b).abs() < 1e-10, "{ours:?} vs {reference:?}");
        }
        let tr = singular_values_3(&q.transpose());
        for (a, b) in ours.iter().zip(tr) {
            prop_assert!((a - b).abs() < 1e-12);
        }
        prop_assert!(ours[0] >= ours[1] && ours[1] >= ours[2] && ours[2] >= 0.0);
    }

    #[test]
    fn trace_norm_bounds_trace(seed in any::<u64>()) {
        let h = random_hermitian(seed, 4);
        let n = trace_norm_hermitian(&h).unwrap();
        prop_assert!(n + 1e-12 >= h.trace().re.abs());
        let reference: f64 = reference_eigenvalues(&h).iter().map(|x| x.abs()).sum();
        prop_assert!((n - reference).abs() < 1e-11);
    }

    #[test]
    fn kron_mixed_product(seed in any::<u64>()) {
        let [a, b, c, d] = [0, 1, 2, 3].map(|k| random_complex(seed.wrapping_add(k), 2));
        let lhs = kron(&a, &b).unwrap().mul(&kron(&c, &d).unwrap()).unwrap();
        let rhs = kron(&a.mul(&c).unwrap(), &b.mul(&d).unwrap()).unwrap();
        prop_assert!(lhs.max_abs_diff(&rhs).unwrap() < 1e-13);
    }

    #[test]
    fn negativity_matches_reference(seed in any::<u64>()) {
        let rho = sampling::mixed_state(&mut rng(seed));
        let pt = partial_transpose(rho.matrix()).unwrap();
        let reference: f64 = reference_eigenvalues(&pt).iter().map(|x| x.abs()).sum::<f64>() - 1.0;
        prop_assert!((negativity(&rho) - reference.max(0.0)).abs() < 1e-11);
    }

    #[test]
    fn mmc_at_most_correlation_distance(seed in any::<u64>()) {
        let rho = sampling::mixed_state(&mut rng(seed));
        prop_assert!(mmc(&rho) <= correlation_distance(&rho) + 1e-12);
        prop_assert!(mmc(&rho) <= 1.0 + 1e-12);
    }

    #[test]
    fn measures_invariant_under_local_unitaries(seed in any::<u64>()) {
        let mut r = rng(seed);
        let rho = sampling::mixed_state(&mut r);
        let (ua, ub) = (sampling::unitary_2(&mut r), sampling::unitary_2(&mut r));
        let rotated = rho.conjugate_local(&ua, &ub).unwrap();
        prop_assert!((mmc(&rho) - mmc(&rotated)).abs() < 1e-11);
        prop_assert!((correlation_distance(&rho) - correlation_distance(&rotated)).abs() < 1e-11);
        prop_assert!((negativity(&rho) - negativity(&rotated)).abs() < 1e-11);
    }

    #[test]
    fn bell_diagonal_chain(seed in any::<u64>()) {
        let c = sampling::tetrahedron_point(&mut rng(seed));
        let rho = bell_diagonal(c[0], c[1], c[2]).unwrap();
        let p = XStateParams::from_density(&rho, 1e-12).unwrap();
        let d1 = d1_x_state(&p, &SearchConfig::minimal()).unwrap().value;
        let (n, m, cd) = (negativity(&rho), mmc(&rho), correlation_distance(&rho));
        prop_assert!(n <= d1 + 1e-10 && d1 <= m + 1e-10 && m <= cd + 1e-10, "{n} {d1} {m} {cd}");
        prop_assert!(bell_diagonal_weights(c).iter().all(|&w| w >= 0.0));
    }

    #[test]
    fn cq_mmc_formula(seed in any::<u64>()) {
        let mut r = rng(seed);
        let p1: f64 = rand::Rng::random(&mut r);
        let (t, f) = sampling::projector_angles(&mut r);
        let (a1, a2) = (sampling::bloch_in_ball(&mut r), sampling::bloch_in_ball(&mut r));
        let rho = cq_state(p1, t, f, &a1, &a2).unwrap();
        let want = 2.0 * p1 * (1.0 - p1) * a1.distance(&a2);
        prop_assert!((mmc(&rho) - want).abs() < 1e-12);
        prop_assert!((correlation_distance(&rho) - want).abs() < 1e-12);
        prop_assert!(measurement_disturbance(&rho, t, f) < 1e-12);
    }

    #[test]
    fn cc_mmc_is_abs_covariance(seed in any::<u64>()) {
        let mut r = rng(seed);
        let p = sampling::prob_table(&mut r);
        let (ta, pa) = sampling::projector_angles(&mut r);
        let (tb, pb) = sampling::projector_angles(&mut r);
        let rho = cc_state(&p, ta, pa, tb, pb).unwrap();
        prop_assert!((mmc(&rho) - classical_cov(&p).abs()).abs() < 1e-12);
        prop_assert!(negativity(&rho) < 1e-12);
    }

    #[test]
    fn report_json_round_trips_bit_exactly(seed in any::<u64>()) {
        let rho = sampling::mixed_state(&mut rng(seed));
        let r = mmcorr::full_report(&rho, &SearchConfig::minimal()).unwrap();
        let back: MeasureReport = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
        prop_assert_eq!(r, back);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn projector_pairs_are_complete_and_orthogonal(theta in -10.0f64..10.0, phi in -10.0f64..10.0) {
        let (p1, p2) = projector_pair(theta, phi);
        let id = ComplexMatrix::identity(2).unwrap();
        let zero = ComplexMatrix::zeros(2).unwrap();
        prop_assert!(p1.add(&p2).unwrap().max_abs_diff(&id).unwrap() < 1e-14);
        prop_assert!(p1.mul(&p2).unwrap().max_abs_diff(&zero).unwrap() < 1e-14);
        prop_assert!(p1.mul(&p1).unwrap().max_abs_diff(&p1).unwrap() < 1e-14);
        prop_assert!(p1.is_hermitian());
    }
}

#[test]
fn covariance_singular_values_are_local_unitary_invariant() {
    let mut r = rng(5);
    for _ in 0..100 {
        let rho = sampling::mixed_state(&mut r);
        let (ua, ub) = (sampling::unitary_2(&mut r), sampling::unitary_2(&mut r));
        let a = singular_values_3(&covariance_matrix(&rho));
        let b = singular_values_3(&covariance_matrix(&rho.conjugate_local(&ua, &ub).unwrap()));
        for (x, y) in a.iter().zip(b) {
            assert!((x - y).abs() < 1e-11);
        }
    }
}

#[test]
fn mmc_oracle_matches_closed_form_on_random_states() {
    let mut r = rng(17);
    let cfg = SearchConfig::default();
    for _ in 0..1000 {
        let rho = sampling::mixed_state(&mut r);
        let (closed, oracle) = (mmc(&rho), mmc_oracle(&rho, &cfg));
        assert!((closed - oracle).abs() < 1e-9, "{closed} vs {oracle}");
    }
}

#[test]
fn d1_oracle_nonnegative_and_antipodal() {
    let mut r = rng(23);
    let cfg = SearchConfig::minimal();
    for _ in 0..50 {
        let rho = sampling::mixed_state(&mut r);
        assert!(d1_oracle(&rho, &cfg) >= 0.0);
        let (t, p) = sampling::projector_angles(&mut r);
        let here = measurement_disturbance(&rho, t, p);
        let there = measurement_disturbance(&rho, std::f64::consts::FRAC_PI_2 - t, p + std::f64::consts::PI);
        assert!((here - there).abs() < 1e-12);
    }
}

#[test]
fn d1_closed_form_matches_oracle_on_x_states() {
    let mut r = rng(29);
    let cfg = SearchConfig::default();
    for _ in 0..200 {
        let p = sampling::x_params(&mut r);
        let rho = DensityMatrix::new(p.matrix()).unwrap();
        let closed = d1_x_state(&p, &cfg).unwrap().value;
        let oracle = d1_oracle(&rho, &cfg);
        assert!((closed - oracle).abs() < 2e-3, "{closed} vs {oracle}");
        // the oracle minimizes, so it can only land at or above the optimum
        assert!(oracle >= closed - 1e-12);
    }
}

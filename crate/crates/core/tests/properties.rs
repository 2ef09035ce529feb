use lur_core::lur::{
    c_lur, c_lur_closed_form, correlation_sum, lur_sum, make_aligned_pairing, mismatch, mismatch_closed_form, optimal_k_total,
    SQUARE_SUM,
};
use lur_core::numerics::{eig_hermitian, kron, partial_trace, partial_transpose_b};
use lur_core::qutrit::{make_asymmetric_frame, make_canonical_basis, rotate_basis};
use lur_core::states::{make_bound_state, random_density_matrix, random_pure_qutrit, sample_separable};
use lur_core::witnesses::ppt_check;
use lur_core::{ComplexMatrix, RealMatrix, Side};
use num_complex::Complex64;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn complex_matrix(dim: usize) -> impl Strategy<Value = ComplexMatrix> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), dim * dim)
        .prop_map(move |v| ComplexMatrix::from_vec(dim, v.into_iter().map(|(re, im)| Complex64::new(re, im)).collect()).unwrap())
}

fn hermitian(dim: usize) -> impl Strategy<Value = ComplexMatrix> {
    complex_matrix(dim).prop_map(|m| &m + &m.adjoint())
}

/// Gram–Schmidt on random rows; degenerate draws are astronomically unlikely.
fn orthogonal(dim: usize) -> impl Strategy<Value = RealMatrix> {
    prop::collection::vec(-1.0f64..1.0, dim * dim).prop_map(move |v| {
        let mut rows: Vec<Vec<f64>> = Vec::new();
        for r in v.chunks(dim) {
            let mut w = r.to_vec();
            for q in &rows {
                let d: f64 = w.iter().zip(q).map(|(a, b)| a * b).sum();
                w.iter_mut().zip(q).for_each(|(a, b)| *a -= d * b);
            }
            let n = w.iter().map(|x| x * x).sum::<f64>().sqrt();
            rows.push(w.into_iter().map(|x| x / n).collect());
        }
        RealMatrix::from_fn(dim, |i, j| rows[i][j])
    })
}

fn grid(n: usize) -> impl Iterator<Item = f64> {
    (0..n).map(move |k| k as f64 / (n - 1) as f64)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn kron_associative(a in complex_matrix(3), b in complex_matrix(2), c in complex_matrix(3)) {
        let left = kron(&kron(&a, &b), &c);
        let right = kron(&a, &kron(&b, &c));
        prop_assert!(left.max_abs_diff(&right) < 1e-12);
    }

    #[test]
    fn partial_transpose_is_exact_involution(m in complex_matrix(9)) {
        prop_assert_eq!(partial_transpose_b(&partial_transpose_b(&m).unwrap()).unwrap(), m);
    }

    #[test]
    fn partial_trace_preserves_trace(h in hermitian(9)) {
        for side in [Side::One, Side::Two] {
            prop_assert!((partial_trace(&h, side).unwrap().trace() - h.trace()).norm() < 1e-12);
        }
    }

    #[test]
    fn eigenvalue_moments(h in hermitian(9)) {
        let spec = eig_hermitian(&h).unwrap();
        prop_assert!((spec.sum() - h.trace().re).abs() < 1e-10);
        let sq: f64 = spec.eigenvalues.iter().map(|x| x * x).sum();
        prop_assert!((sq - h.trace_product(&h).re).abs() < 1e-10);
    }

    #[test]
    fn rotated_bases_stay_generator_bases(rot in orthogonal(8)) {
        let rotated = rotate_basis(&make_canonical_basis(), &rot).unwrap();
        let r = rotated.residuals();
        prop_assert!(r.square_sum < 1e-12, "{:?}", r);
        prop_assert!(r.gram < 1e-12, "{:?}", r);
        prop_assert!(r.trace < 1e-12, "{:?}", r);
    }

    #[test]
    fn frame_is_orthonormal_for_any_a(a in 0.0f64..=1.0) {
        let f = make_asymmetric_frame(a).unwrap();
        prop_assert!(f.mixing.orthogonality_residual() < 1e-12);
        prop_assert!(f.z.trace_product(&f.fxy).norm() < 1e-12);
        prop_assert!(f.z.trace_product(&f.fz).norm() < 1e-12);
        prop_assert!(f.fxy.trace_product(&f.fz).norm() < 1e-12);
    }

    #[test]
    fn separable_states_obey_identity_and_bound(seed in any::<u64>(), components in 1usize..=9, a in 0.0f64..=1.0) {
        let s = sample_separable(seed, components).unwrap();
        let p = make_aligned_pairing(a).unwrap();
        let lur = lur_sum(&s, &p).unwrap();
        let k = correlation_sum(&s, &p).unwrap();
        let m2: f64 = mismatch(&s, &p).iter().map(|x| x * x).sum();
        prop_assert!((lur - (SQUARE_SUM - 2.0 * k - m2)).abs() < 1e-10);
        prop_assert!(lur >= 8.0 - 1e-9);
        prop_assert!(ppt_check(&s).unwrap().is_ppt);
    }
}

#[test]
fn frame_mixing_orthogonal_on_grid() {
    for a in grid(101) {
        let f = make_asymmetric_frame(a).unwrap();
        assert!(f.mixing.orthogonality_residual() < 1e-12);
        for op in [&f.z, &f.fxy, &f.fz] {
            assert!((op.trace_product(op).re - 2.0).abs() < 1e-12);
        }
    }
}

#[test]
fn purity_identity_and_bloch_bound() {
    let basis = make_canonical_basis();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..1000 {
        let rho = random_density_matrix(&mut rng);
        let b = basis.expectations(&rho);
        let len2: f64 = b.iter().map(|x| x * x).sum();
        assert!((rho.trace_product(&rho).re - (1.0 / 3.0 + 0.5 * len2)).abs() < 1e-12);
        assert!(len2 <= 4.0 / 3.0 + 1e-12);

        let pure = ComplexMatrix::projector(&random_pure_qutrit(&mut rng));
        let bp = basis.expectations(&pure);
        assert!((bp.iter().map(|x| x * x).sum::<f64>() - 4.0 / 3.0).abs() < 1e-10);
    }
}

#[test]
fn bound_family_grid_identities() {
    for a in grid(101) {
        let s = make_bound_state(a).unwrap();
        let p = make_aligned_pairing(a).unwrap();
        let lur = lur_sum(&s, &p).unwrap();
        let k = correlation_sum(&s, &p).unwrap();
        let m = mismatch(&s, &p);
        let m2: f64 = m.iter().map(|x| x * x).sum();
        assert!((lur - (SQUARE_SUM - 2.0 * k - m2)).abs() < 1e-10, "a = {a}");
        assert!((c_lur(&s, &p).unwrap() - c_lur_closed_form(a).unwrap()).abs() < 1e-10, "a = {a}");
        let (m7, m8) = mismatch_closed_form(a).unwrap();
        assert!((m[6] - m7).abs() < 1e-10 && (m[7] - m8).abs() < 1e-10, "a = {a}: {m:?}");
        assert!((optimal_k_total(&s).unwrap() - k).abs() < 1e-10);
        if a > 0.0 && a < 1.0 {
            assert!(m2 > 0.0, "a = {a}");
        }
    }
}

#[test]
fn bound_family_is_ppt_on_fine_grid() {
    for a in grid(1001) {
        let r = ppt_check(&make_bound_state(a).unwrap()).unwrap();
        assert!(r.is_ppt, "a = {a}: {r:?}");
    }
}

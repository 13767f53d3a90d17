use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spectra::fixtures::{padded_fixture, random_monic_pencil};
use spectra::reduce::{
    check_preconditions, pad, real_matrix, reduce, CMatrix, FloatRepresentation, PsdTarget, ReduceError, Stage, Tolerances,
};

fn close(a: Complex64, b: Complex64) -> bool {
    (a - b).norm() <= 1e-8 * b.norm().max(1.0)
}

fn assert_same_determinant(reduced: &FloatRepresentation, original: &FloatRepresentation, rng: &mut ChaCha8Rng) {
    let n = original.pencil().len();
    for _ in 0..50 {
        let x: Vec<f64> = (0..n).map(|_| rng.random_range(-1.0..=1.0)).collect();
        let (got, want) = (reduced.eval(&x), original.eval(&x));
        assert!(close(got, want), "at {x:?}: {got} vs {want}");
    }
}

#[test]
fn padded_fixtures_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for rotate in [false, true] {
        for _ in 0..5 {
            let fx = padded_fixture(&mut rng, 6, 3, 3, rotate);
            let report = reduce(&fx.padded, fx.degree, &Tolerances::default());
            assert!(report.succeeded(), "{:?}", report.failure);
            let out = report.monic_pencil().unwrap();
            assert_eq!(out.size(), 3);
            assert!(out.pencil().iter().all(|b| b.shape() == (3, 3)));
            assert!(report.sum_identity_residual.unwrap() <= 1e-9);
            assert_same_determinant(&out, &fx.padded, &mut rng);
            assert_same_determinant(&out, &fx.small, &mut rng);
        }
    }
}

#[test]
fn square_pencils_pass_through() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let rep = FloatRepresentation::new(3, random_monic_pencil(&mut rng, 3, 2)).unwrap();
    let report = reduce(&rep, 3, &Tolerances::default());
    assert!(report.succeeded(), "{:?}", report.failure);
    assert_eq!(report.complement_factor_count, Some(0));
    assert_same_determinant(&report.monic_pencil().unwrap(), &rep, &mut rng);

    let identity = FloatRepresentation::new(2, vec![CMatrix::identity(2, 2)]).unwrap();
    let report = reduce(&identity, 2, &Tolerances::default());
    assert!(report.succeeded());
    assert_same_determinant(&report.monic_pencil().unwrap(), &identity, &mut rng);
}

#[test]
fn uniform_two_three_pencil_shrinks_to_two_by_two() {
    let v = |i: usize| -> Vec<f64> { (0..3).map(|j| if i == j { 2.0 / 3.0 } else { -1.0 / 3.0 }).collect() };
    let pencil = (0..3)
        .map(|i| {
            let v = v(i);
            real_matrix(3, 3, &(0..9).map(|k| v[k / 3] * v[k % 3]).collect::<Vec<_>>())
        })
        .collect();
    let rep = FloatRepresentation::new(3, pencil).unwrap();
    let report = reduce(&rep, 2, &Tolerances::default());
    assert!(report.succeeded(), "{:?}", report.failure);
    let out = report.monic_pencil().unwrap();
    assert_eq!(out.size(), 2);
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    assert_same_determinant(&out, &rep, &mut rng);
}

#[test]
fn reduction_is_deterministic() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let fx = padded_fixture(&mut rng, 5, 2, 3, true);
    let a = reduce(&fx.padded, 2, &Tolerances::default());
    let b = reduce(&fx.padded, 2, &Tolerances::default());
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
}

#[test]
fn failures_name_their_stage() {
    let not_psd = FloatRepresentation::new(1, vec![real_matrix(1, 1, &[-1.0])]).unwrap();
    let report = reduce(&not_psd, 1, &Tolerances::default());
    let failure = report.failure.unwrap();
    assert_eq!(failure.stage, Stage::Preconditions);
    assert_eq!(failure.error, ReduceError::NotPsd { target: PsdTarget::Pencil(1), min_eigenvalue: -1.0 });

    // sum of A_j exceeds I
    let big = FloatRepresentation::new(1, vec![real_matrix(1, 1, &[2.0])]).unwrap();
    assert!(matches!(check_preconditions(&big, 1, &Tolerances::default()), Err(ReduceError::NotPsd { target: PsdTarget::Complement, .. })));

    // corank claims d = 2 but I - A has rank 1
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let t = random_monic_pencil(&mut rng, 1, 1);
    let padded = FloatRepresentation::new(2, vec![pad(&t[0], 2)]).unwrap();
    let report = reduce(&padded, 2, &Tolerances::default());
    assert!(matches!(report.failure.unwrap().error, ReduceError::WrongCorank { observed: 1, expected: 0 }));
}

#[test]
fn single_variable_diagonal() {
    let rep = FloatRepresentation::new(2, vec![real_matrix(2, 2, &[1.0, 0.0, 0.0, 0.0])]).unwrap();
    let report = reduce(&rep, 1, &Tolerances::default());
    assert!(report.succeeded(), "{:?}", report.failure);
    let out = report.monic_pencil().unwrap();
    let b = &out.pencil()[0];
    assert!((b[(0, 0)] - Complex64::new(1.0, 0.0)).norm() < 1e-12);
}

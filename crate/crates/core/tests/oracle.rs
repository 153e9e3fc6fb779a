use coxstokes::linalg::{char_poly, max_abs};
use coxstokes::oracle::dopri::Tolerances;
use coxstokes::oracle::monodromy::integrate_loop;
use coxstokes::oracle::*;
use coxstokes::Error;
use nalgebra::DMatrix;
use num_complex::Complex64;
use num_rational::Rational64;

fn ks(v: &[i64]) -> Vec<Rational64> {
    v.iter().map(|&x| Rational64::from_integer(x)).collect()
}

fn sys(rank: usize, k: &[i64], z: f64) -> MeromorphicSystem {
    build_system(rank, &vec![1.0; rank + 1], &ks(k), z).unwrap()
}

#[test]
fn sl3_matrix_units() {
    let (alg, rep) = standard_rep_sl(2).unwrap();
    let e1 = rep.basis_matrix(alg.e_index(&[1, 0]).unwrap());
    let mut want = DMatrix::<Complex64>::zeros(3, 3);
    want[(0, 1)] = Complex64::new(1.0, 0.0);
    assert_eq!(e1, want);
    for b in 0..alg.dim() {
        assert!(rep.basis_matrix(b).trace().norm() == 0.0);
        // each basis element is ± a single matrix unit or a diagonal H
        assert!(rep.matrices[b].entries.len() <= 2);
    }
    rep.check_homomorphism(&alg).unwrap();
}

#[test]
fn matrix_units_for_larger_ranks() {
    for rank in 2..6 {
        let (alg, rep) = standard_rep_sl(rank).unwrap();
        rep.check_homomorphism(&alg).unwrap();
        assert_eq!(rep.dim, rank + 1);
    }
}

#[test]
fn system_parameters() {
    let s0 = sys(2, &[0, 0, 0], 1.0);
    assert_eq!(s0.n_big, Rational64::from_integer(3));
    assert!(s0.data.m.iter().all(|v| *v == Rational64::from_integer(0)));
    let s1 = sys(2, &[0, 1, 1], 1.0);
    assert_eq!(s1.n_big, Rational64::from_integer(5));
    let fifth = Rational64::new(1, 5);
    assert_eq!(s1.data.affine_values, vec![Rational64::new(-2, 5), fifth, fifth]);
}

#[test]
fn system_errors() {
    assert!(matches!(build_system(2, &[1.0; 3], &ks(&[0, 1, 2]), 1.0), Err(Error::InvalidArgument(_))));
    assert!(matches!(build_system(2, &[1.0; 3], &ks(&[-1, -1, -1]), 1.0), Err(Error::InvalidArgument(_))));
    assert!(build_system(2, &[1.0, -1.0, 1.0], &ks(&[0, 0, 0]), 1.0).is_err());
    assert!(build_system(2, &[1.0; 3], &ks(&[0, 0, 0]), 0.0).is_err());
    assert!(build_system(1, &[1.0; 2], &ks(&[0, 0]), 1.0).is_err());
}

#[test]
fn cyclic_symmetry_of_eta() {
    for (rank, k) in [(2, vec![0, 1, 1]), (3, vec![1, 2, 0, 2]), (4, vec![0, 1, 3, 3, 1])] {
        let s = sys(rank, &k, 0.8);
        assert!(s.cyclic_symmetry_residual() < 1e-12);
    }
}

#[test]
fn formal_solution_sl3() {
    for k in [[0, 0, 0], [0, 1, 1], [2, 0, 0]] {
        let s = sys(2, &k, 1.3);
        let fs = formal_solution(&s, 5).unwrap();
        assert!(fs.max_residual() < 1e-10, "{k:?}: {:?}", fs.residuals);
        assert!(max_abs(fs.lambda0()) < 1e-13, "{k:?}");
        for yk in &fs.y[1..] {
            assert!(yk.diagonal().iter().all(|z| z.norm() == 0.0));
        }
    }
}

/// Substitute the truncated series into the equation in the original frame,
/// independently of the library's bookkeeping.
#[test]
fn formal_solution_substitution_original_frame() {
    let s = sys(3, &[1, 2, 0, 2], 0.7);
    let order = 6;
    let fs = formal_solution(&s, order).unwrap();
    let p = &fs.p;
    let pinv = p.clone().try_inverse().unwrap();
    // coefficients of Υ' at λ^{i-1}: Λ_i for i = -1..order-1
    for j in 0..=order {
        // λ^{j-2}: P (j-1) Y_{j-1} + P Σ Y_a Λ_{j-a-1} − A_{-2} P Y_j − A_{-1} P Y_{j-1}
        let mut r = DMatrix::<Complex64>::zeros(4, 4);
        if j >= 1 {
            r += p * &fs.y[j - 1] * Complex64::new(j as f64 - 1.0, 0.0);
            r -= &s.a_m1 * p * &fs.y[j - 1];
        }
        for a in 0..=j {
            let idx = j - a; // Λ_{j-a-1} lives at lambda[j-a]
            if idx < fs.lambda.len() {
                r += p * &fs.y[a] * &fs.lambda[idx];
            }
        }
        r -= &s.a_m2 * p * &fs.y[j];
        let r = &pinv * r;
        assert!(max_abs(&r) < 1e-9, "order {j}: {}", max_abs(&r));
    }
}

#[test]
fn formal_solution_order_zero() {
    let s = sys(2, &[0, 1, 1], 1.0);
    let fs = formal_solution(&s, 0).unwrap();
    assert_eq!(fs.y.len(), 1);
    assert!(fs.residuals[0] < 1e-12);
}

#[test]
fn formal_solution_rejects_bad_input() {
    let s = sys(2, &[0, 0, 0], 1.0);
    assert!(formal_solution(&s, 31).is_err());
    let mut bad = s.clone();
    bad.a_m2 = DMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![
        Complex64::new(1.0, 0.0),
        Complex64::new(1.0, 0.0),
        Complex64::new(-2.0, 0.0),
    ]));
    assert!(matches!(formal_solution(&bad, 3), Err(Error::NumericFailure(_))));
}

#[test]
fn central_factor() {
    let (pred3, c3) = monodromy::predicted_monodromy(&sys(2, &[0, 0, 0], 1.0)).unwrap();
    assert!((c3 - Complex64::new(1.0, 0.0)).norm() < 1e-12);
    // M⁰ is a Coxeter representative: (M⁰)³ = I
    assert!(max_abs(&(pred3 - DMatrix::identity(3, 3))) < 1e-12);
    let (_, c4) = monodromy::predicted_monodromy(&sys(3, &[1, 2, 0, 2], 1.0)).unwrap();
    assert!((c4 + Complex64::new(1.0, 0.0)).norm() < 1e-12);
}

#[test]
fn monodromy_matches_prediction() {
    for (rank, k) in [(2, vec![0, 0, 0]), (2, vec![0, 1, 1]), (3, vec![1, 2, 0, 2])] {
        let s = sys(rank, &k, 1.0);
        let rep = numerical_monodromy(&s, 1.0, 1e-6).unwrap();
        assert!(rep.passed, "{k:?}: residual {:e}", rep.residual);
        assert!(rep.stats.accepted >= 256);
    }
}

#[test]
fn monodromy_is_isomonodromic_and_radius_independent() {
    let k = [0, 1, 1];
    let mut polys = Vec::new();
    for z in [0.5, 1.0, 2.0] {
        let s = sys(2, &k, z);
        let a = char_poly(&integrate_loop(&s, 0.7, monodromy::default_tolerances()).unwrap().0);
        let b = char_poly(&integrate_loop(&s, 1.3, monodromy::default_tolerances()).unwrap().0);
        let d = a.iter().zip(&b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max);
        assert!(d < 1e-8, "z = {z}: radius change moved char-poly by {d:e}");
        polys.push(a);
    }
    for p in &polys[1..] {
        let d = p.iter().zip(&polys[0]).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max);
        assert!(d < 1e-6);
    }
}

#[test]
fn absurd_tolerance_fails() {
    let s = sys(2, &[0, 1, 1], 1.0);
    let rep = numerical_monodromy(&s, 1.0, 1e-30).unwrap();
    assert!(!rep.passed);
    assert!(rep.residual > 0.0);
}

#[test]
fn integrator_budget() {
    let s = sys(2, &[0, 1, 1], 1.0);
    let tol = Tolerances { max_steps: 10, ..monodromy::default_tolerances() };
    assert!(matches!(integrate_loop(&s, 1.0, tol), Err(Error::Integrator(_))));
}

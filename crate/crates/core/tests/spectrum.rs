use coxstokes::chevalley::ChevalleyAlgebra;
use coxstokes::coxeter::{bipartition, coxeter_plane};
use coxstokes::spectrum::*;
use coxstokes::{Error, RootSystem};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};

fn alg(s: &str) -> ChevalleyAlgebra {
    ChevalleyAlgebra::new(RootSystem::from_str_type(s).unwrap()).unwrap()
}

#[test]
fn a2_default() {
    let a = alg("A2");
    let ep = build_e_plus(&a, &default_coeffs(&a)).unwrap();
    assert_eq!(ep.ad.nrows(), 8);
    assert_eq!(ep.kernel_dim, 2);
    let sr = ad_spectrum(&ep, 3, 1e-7);
    assert!(sr.clustered);
    assert_eq!(sr.nonzero.len(), 6);
    assert!(sr.rays.iter().all(|r| r.count == 1));
}

#[test]
fn a3_has_eight_rays() {
    let a = alg("A3");
    let ep = build_e_plus(&a, &default_coeffs(&a)).unwrap();
    let sr = ad_spectrum(&ep, 4, 1e-7);
    assert!(sr.clustered);
    assert_eq!(sr.rays.len(), 8);
    assert!(sr.rotation_residual < 1e-9);
}

#[test]
fn g2_kernel() {
    let a = alg("G2");
    assert_eq!(build_e_plus(&a, &default_coeffs(&a)).unwrap().kernel_dim, 2);
}

#[test]
fn scaling_scales_spectrum() {
    let a = alg("B3");
    let c = default_coeffs(&a);
    let lam = Complex64::new(0.3, 1.7);
    let s1 = ad_spectrum(&build_e_plus(&a, &c).unwrap(), 6, 1e-7);
    let c2: Vec<Complex64> = c.iter().map(|x| x * lam).collect();
    let s2 = ad_spectrum(&build_e_plus(&a, &c2).unwrap(), 6, 1e-7);
    let scaled: Vec<Complex64> = s1.nonzero.iter().map(|z| z * lam).collect();
    assert!(coxstokes::linalg::multiset_distance(&scaled, &s2.nonzero) < 1e-9);
}

#[test]
fn random_coefficients_remain_regular() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(3);
    for t in ["A3", "B2", "C3", "G2", "D4"] {
        let a = alg(t);
        for _ in 0..10 {
            let c: Vec<Complex64> =
                (0..=a.rank()).map(|_| Complex64::new(rng.gen_range(0.2..2.0), rng.gen_range(-1.0..1.0))).collect();
            let ep = build_e_plus(&a, &c).unwrap();
            assert_eq!(ep.kernel_dim, a.rank(), "{t}");
        }
    }
}

fn matches(t: &str, negate: bool) -> (f64, Complex64) {
    let a = alg(t);
    let b = bipartition(&a.rs);
    let plane = coxeter_plane(&a.rs, &b, 1e-9).unwrap();
    let mut c = default_coeffs(&a);
    if negate {
        c.iter_mut().for_each(|x| *x = -*x);
    }
    let ep = build_e_plus(&a, &c).unwrap();
    let sr = ad_spectrum(&ep, a.rs.coxeter_number, 1e-7);
    assert!(sr.clustered, "{t}");
    let m = match_plane(&sr, &plane, pi2_anchor(&a, &b), 1e-6).unwrap();
    assert!(m.ray_counts_match, "{t}");
    (m.max_residual, m.kappa)
}

#[test]
fn a2_and_b2_match_plane() {
    assert!(matches("A2", false).0 < 1e-8);
    assert!(matches("B2", false).0 < 1e-8);
}

#[test]
fn negating_e_plus_negates_kappa() {
    let (_, k1) = matches("C3", false);
    let (r, _) = matches("C3", true);
    assert!(r < 1e-8);
    // -κ must align the negated spectrum with the plane
    let a = alg("C3");
    let b = bipartition(&a.rs);
    let plane = coxeter_plane(&a.rs, &b, 1e-9).unwrap();
    let c: Vec<Complex64> = default_coeffs(&a).iter().map(|x| -x).collect();
    let sr = ad_spectrum(&build_e_plus(&a, &c).unwrap(), 6, 1e-7);
    let pts: Vec<Complex64> = plane.coords.iter().map(|z| -k1 * z).collect();
    assert!(coxstokes::linalg::multiset_distance(&pts, &sr.nonzero) < 1e-8);
}

#[test]
fn general_coefficients_match_up_to_scale() {
    let a = alg("A3");
    let b = bipartition(&a.rs);
    let plane = coxeter_plane(&a.rs, &b, 1e-9).unwrap();
    let c: Vec<Complex64> = [1.0, 3.0, 0.2, 1.0].iter().map(|&x| Complex64::new(x, 0.0)).collect();
    let sr = ad_spectrum(&build_e_plus(&a, &c).unwrap(), 4, 1e-7);
    assert!(match_plane(&sr, &plane, pi2_anchor(&a, &b), 1e-6).unwrap().max_residual < 1e-8);
}

#[test]
fn mismatch_is_reported() {
    let a = alg("A3");
    let b = bipartition(&a.rs);
    let mut plane = coxeter_plane(&a.rs, &b, 1e-9).unwrap();
    plane.coords[0] *= Complex64::new(1.01, 0.0);
    let sr = ad_spectrum(&build_e_plus(&a, &default_coeffs(&a)).unwrap(), 4, 1e-7);
    assert!(matches!(match_plane(&sr, &plane, pi2_anchor(&a, &b), 1e-6), Err(Error::Mismatch { .. })));
}

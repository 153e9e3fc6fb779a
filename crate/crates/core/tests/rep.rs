use coxstokes::chevalley::ChevalleyAlgebra;
use coxstokes::rep::Representation;
use coxstokes::RootSystem;
use num_complex::Complex64;

fn alg(s: &str) -> ChevalleyAlgebra {
    ChevalleyAlgebra::new(RootSystem::from_str_type(s).unwrap()).unwrap()
}

#[test]
fn registered_dimensions() {
    for (t, d) in [("A2", 3), ("A4", 5), ("B3", 7), ("C3", 6), ("D4", 8), ("D5", 10), ("G2", 7), ("F4", 26), ("E6", 27)] {
        let a = alg(t);
        let r = Representation::standard(&a).unwrap();
        assert_eq!(r.dim, d, "{t}");
        r.check_homomorphism(&a).unwrap();
    }
    assert!(Representation::standard(&alg("E7")).is_err());
}

#[test]
fn other_fundamentals_are_homomorphisms() {
    for (t, k, d) in [("A3", 2, 6), ("B3", 3, 8), ("C3", 2, 14), ("G2", 2, 14), ("D4", 4, 8)] {
        let a = alg(t);
        let r = Representation::by_name(&a, &format!("omega{k}")).unwrap();
        assert_eq!(r.dim, d, "{t} omega{k}");
        r.check_homomorphism(&a).unwrap();
    }
}

#[test]
fn adjoint_is_a_homomorphism() {
    let a = alg("G2");
    let r = Representation::adjoint(&a);
    assert_eq!(r.dim, 14);
    r.check_homomorphism(&a).unwrap();
}

#[test]
fn sl_n_standard_matches_matrix_units() {
    // e_{α_i} = E_{i-1,i}, H_{α_i} = E_{i-1,i-1} - E_{i,i}
    for n in 2..6usize {
        let a = alg(&format!("A{n}"));
        let r = Representation::standard(&a).unwrap();
        for i in 0..n {
            let e = r.basis_matrix(a.e_index(&a.rs.simple_root(i).coords).unwrap());
            let h = r.basis_matrix(i);
            for p in 0..=n {
                for q in 0..=n {
                    let want_e = if p == i && q == i + 1 { 1.0 } else { 0.0 };
                    let want_h = if p == q && p == i {
                        1.0
                    } else if p == q && p == i + 1 {
                        -1.0
                    } else {
                        0.0
                    };
                    assert!((e[(p, q)] - Complex64::new(want_e, 0.0)).norm() < 1e-15);
                    assert!((h[(p, q)] - Complex64::new(want_h, 0.0)).norm() < 1e-15);
                }
            }
        }
        for b in 0..a.dim() {
            assert!(r.basis_matrix(b).trace().norm() < 1e-14);
        }
    }
}

#[test]
fn principal_element_power_is_central() {
    for n in 2..6usize {
        let a = alg(&format!("A{n}"));
        let r = Representation::standard(&a).unwrap();
        let s = n + 1;
        let p0 = r.principal_element(s);
        // diagonal e^{(n-2k)πi/s}
        for k in 0..=n {
            let want = Complex64::from_polar(1.0, (n as f64 - 2.0 * k as f64) * std::f64::consts::PI / s as f64);
            assert!((p0[(k, k)] - want).norm() < 1e-14);
        }
        let mut pw = p0.clone();
        for _ in 1..s {
            pw = &pw * &p0;
        }
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        let id = nalgebra::DMatrix::<Complex64>::identity(n + 1, n + 1) * Complex64::new(sign, 0.0);
        assert!((pw - id).norm() < 1e-12);
    }
}

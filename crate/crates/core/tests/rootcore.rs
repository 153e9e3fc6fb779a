use coxstokes::{AlgebraType, Family, RootSystem};
use num_rational::Rational64;
use proptest::prelude::*;

/// Exponents from the height distribution of positive roots: the number of
/// exponents ≥ k equals ... read off as the dual partition of the counts.
fn exponents_from_heights(rs: &RootSystem) -> Vec<usize> {
    let hmax = rs.coxeter_number - 1;
    let mut count = vec![0usize; hmax + 2];
    for r in rs.positive_roots() {
        count[r.height() as usize] += 1;
    }
    let mut ex = Vec::new();
    for k in 1..=hmax {
        for _ in count[k + 1]..count[k] {
            ex.push(k);
        }
    }
    ex.sort_unstable();
    ex
}

#[test]
fn e8_counts() {
    let rs = RootSystem::from_str_type("E8").unwrap();
    assert_eq!(rs.num_roots(), 240);
    assert_eq!(rs.coxeter_number, 30);
    assert_eq!(rs.exponents, vec![1, 7, 11, 13, 17, 19, 23, 29]);
}

#[test]
fn exponents_agree_with_height_partition() {
    for ty in AlgebraType::standard_list() {
        let rs = RootSystem::new(ty).unwrap();
        assert_eq!(rs.exponents, exponents_from_heights(&rs), "{ty}");
    }
}

#[test]
fn rank_one_is_rejected() {
    assert!(AlgebraType::new(Family::A, 1).is_err());
    assert!(AlgebraType::new(Family::B, 1).is_err());
    assert!(RootSystem::from_str_type("a1").is_err());
}

#[test]
fn x0_evaluates_to_heights() {
    for ty in AlgebraType::standard_list() {
        let rs = RootSystem::new(ty).unwrap();
        let d = rs.dual_data();
        for i in 0..rs.rank {
            assert_eq!(rs.eval(&rs.simple_root(i).coords, &d.x0), Rational64::from_integer(1));
            for j in 0..rs.rank {
                let want = if i == j { 1 } else { 0 };
                assert_eq!(rs.eval(&rs.simple_root(i).coords, &d.epsilon[j]), Rational64::from_integer(want));
            }
        }
        assert_eq!(rs.eval(&rs.psi.coords, &d.x0), Rational64::from_integer(rs.coxeter_number as i64 - 1));
    }
}

#[test]
fn a_n_x0_in_standard_coordinates() {
    // x_0 = Σ r_i H_{α_i}, H_{α_i} = E_ii - E_{i+1,i+1}: diagonal entry k is r_k - r_{k-1}
    for n in 2..7usize {
        let rs = RootSystem::new(AlgebraType::new(Family::A, n).unwrap()).unwrap();
        let r = &rs.r_coeffs;
        for k in 0..=n {
            let a = if k < n { r[k] } else { Rational64::from_integer(0) };
            let b = if k > 0 { r[k - 1] } else { Rational64::from_integer(0) };
            assert_eq!(a - b, Rational64::new(n as i64 - 2 * k as i64, 2));
        }
    }
}

#[test]
fn nu_symmetry_of_r() {
    for t in ["A5", "D5", "E6"] {
        let rs = RootSystem::from_str_type(t).unwrap();
        let alg = coxstokes::chevalley::ChevalleyAlgebra::new(rs.clone()).unwrap();
        let nu = alg.sigma_nu().nu;
        for i in 0..rs.rank {
            assert_eq!(rs.r_coeffs[i], rs.r_coeffs[nu[i + 1] - 1]);
        }
    }
}

fn any_type() -> impl Strategy<Value = AlgebraType> {
    proptest::sample::select(AlgebraType::standard_list())
}

proptest! {
    #[test]
    fn structural_invariants(ty in any_type()) {
        let rs = RootSystem::new(ty).unwrap();
        let s = rs.coxeter_number;
        prop_assert_eq!(rs.num_roots(), rs.rank * s);
        prop_assert_eq!(s as i64, rs.marks.iter().sum::<i64>());
        prop_assert_eq!(rs.psi.height(), s as i64 - 1);
        prop_assert_eq!(rs.norm2(&rs.psi), Rational64::from_integer(2));
        let l = rs.rank;
        prop_assert_eq!(rs.exponents[0], 1);
        prop_assert_eq!(rs.exponents[l - 1], s - 1);
        for i in 0..l {
            prop_assert_eq!(rs.exponents[i] + rs.exponents[l - 1 - i], s);
        }
        for r in &rs.roots {
            prop_assert!(rs.is_root(&r.neg().coords));
            prop_assert!(r.coords.iter().all(|&c| c >= 0) || r.coords.iter().all(|&c| c <= 0));
        }
        for i in 0..l {
            for j in 0..l {
                let a = Rational64::from_integer(2) * rs.form[i][j] / rs.form[i][i];
                prop_assert_eq!(a, Rational64::from_integer(rs.cartan[i][j]));
            }
        }
    }
}

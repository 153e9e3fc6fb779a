//! Acceptance run. Prints one line per criterion and exits non-zero if any
//! criterion fails.
//!
//! Reference values are recomputed here from scratch where possible: ray
//! angles are clustered directly from plane coordinates, characters of
//! `SL_n` come from Newton's identities on traces of powers, alcove
//! inequalities are evaluated from the sampled `α`-values.

use coxstokes::chevalley::ChevalleyAlgebra;
use coxstokes::coxeter::{bipartition, coxeter_element, coxeter_plane, inversion_set, kostant_chain, singular_directions};
use coxstokes::linalg::{char_poly, eigenvalues, max_abs, multiset_distance};
use coxstokes::oracle::monodromy::{default_tolerances, integrate_loop};
use coxstokes::oracle::{build_system, formal_solution, numerical_monodromy, MeromorphicSystem};
use coxstokes::rep::Representation;
use coxstokes::spectrum::{ad_spectrum, build_e_plus, default_coeffs, match_plane, pi2_anchor};
use coxstokes::steinberg::characters::DIMENSION_CAP;
use coxstokes::steinberg::{alcove_map, gamma_order, section_word, word_matrix, StokesContext};
use coxstokes::RootSystem;
use nalgebra::DMatrix;
use num_complex::Complex64;
use num_rational::Rational64;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use std::collections::BTreeSet;
use std::f64::consts::PI;
use std::time::Instant;

const TYPES: [&str; 16] =
    ["A2", "A3", "A4", "A5", "A6", "B2", "B3", "B4", "C3", "D4", "D5", "G2", "F4", "E6", "E7", "E8"];

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: String) -> Outcome {
    Outcome { passed, detail }
}

fn rs(ty: &str) -> RootSystem {
    RootSystem::from_str_type(ty).unwrap()
}

/// Cluster angles in `[0, 2π)` that lie within `tol` of each other (cyclically).
fn cluster_angles(mut a: Vec<f64>, tol: f64) -> Vec<f64> {
    a.sort_by(f64::total_cmp);
    let mut reps: Vec<f64> = Vec::new();
    for x in a {
        if reps.last().is_none_or(|&r| x - r > tol) {
            reps.push(x);
        }
    }
    if reps.len() > 1 && reps[0] + 2.0 * PI - reps[reps.len() - 1] <= tol {
        reps.pop();
    }
    reps
}

fn arg01(z: Complex64) -> f64 {
    z.arg().rem_euclid(2.0 * PI)
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut worst_gap = 0.0f64;
    let mut bad = Vec::new();
    for ty in TYPES {
        let r = rs(ty);
        let s = r.coxeter_number;
        let plane = match coxeter_plane(&r, &bipartition(&r), 1e-9) {
            Ok(p) => p,
            Err(e) => {
                bad.push(format!("{ty}: {e}"));
                continue;
            }
        };
        let rays = cluster_angles(plane.coords.iter().map(|&z| arg01(z)).collect(), 1e-9);
        if rays.len() != 2 * s || plane.num_rays() != 2 * s {
            bad.push(format!("{ty}: {} rays, expected {}", rays.len(), 2 * s));
            continue;
        }
        for i in 0..rays.len() {
            let next = if i + 1 < rays.len() { rays[i + 1] } else { rays[0] + 2.0 * PI };
            worst_gap = worst_gap.max((next - rays[i] - PI / s as f64).abs());
        }
    }
    let secs = start.elapsed().as_secs_f64();
    let passed = bad.is_empty() && worst_gap <= 1e-9 && secs < 10.0;
    let mut detail = format!("16 types, max |gap - π/s| = {worst_gap:.1e}, {secs:.2} s");
    if !bad.is_empty() {
        detail += &format!("; {}", bad.join("; "));
    }
    outcome(passed, detail)
}

fn criterion_2() -> Outcome {
    let mut bad = Vec::new();
    for ty in TYPES {
        let r = rs(ty);
        let s = r.coxeter_number;
        let bip = bipartition(&r);
        let plane = coxeter_plane(&r, &bip, 1e-9).unwrap();
        let report = singular_directions(&r, &bip, &plane);
        if !report.passed() {
            bad.push(format!("{ty}: {}", report.failures.join(", ")));
        }
        // rays rebuilt from raw angles, counterclockwise from the Π₂ ray
        let anchor = arg01(plane.coords[pi2_anchor(&ChevalleyAlgebra::new(r.clone()).unwrap(), &bip)]);
        let mut rays: Vec<BTreeSet<Vec<i64>>> = vec![BTreeSet::new(); 2 * s];
        for (k, z) in plane.coords.iter().enumerate() {
            let steps = ((arg01(*z) - anchor).rem_euclid(2.0 * PI) / (PI / s as f64)).round() as usize % (2 * s);
            rays[steps].insert(r.roots[k].coords.clone());
        }
        let pi2: BTreeSet<Vec<i64>> = bip.i2.iter().map(|&i| r.simple_root(i).coords).collect();
        let pi1: BTreeSet<Vec<i64>> = bip.i1.iter().map(|&i| r.simple_root(i).coords).collect();
        // d_i runs clockwise, so d_s sits s-1 steps clockwise of d_1
        if rays[0] != pi2 || rays[(s + 1) % (2 * s)] != pi1 {
            bad.push(format!("{ty}: head/tail differs from raw clustering"));
        }
        let orth = rays.iter().all(|ray| {
            ray.iter().all(|a| ray.iter().all(|b| a == b || r.inner(a, b).is_zero()))
        });
        if !orth {
            bad.push(format!("{ty}: roots on a ray are not orthogonal"));
        }
    }
    outcome(bad.is_empty(), if bad.is_empty() { "16 types, all rays match the γ-orbit formulas".into() } else { bad.join("; ") })
}

fn criterion_3() -> Outcome {
    let mut bad = Vec::new();
    let mut checked = 0;
    for ty in TYPES {
        let r = rs(ty);
        let bip = bipartition(&r);
        for n in 1..=r.coxeter_number {
            match kostant_chain(&r, &bip, n) {
                Ok(blocks) => {
                    let expected: usize =
                        (1..=n).map(|j| if j % 2 == 1 { bip.i1.len() } else { bip.i2.len() }).sum();
                    let total: usize = blocks.iter().map(|b| b.len()).sum();
                    if total != expected {
                        bad.push(format!("{ty} n={n}: {total} roots, reduced length {expected}"));
                    }
                    checked += 1;
                }
                Err(e) => bad.push(format!("{ty} n={n}: {e}")),
            }
        }
        let g = coxeter_element(&r, &bip);
        if inversion_set(&r, &g.word).len() != r.rank {
            bad.push(format!("{ty}: |Λ(γ)| != l"));
        }
    }
    outcome(bad.is_empty(), if bad.is_empty() { format!("{checked} chains, |Λ(γ)| = l for 16 types") } else { bad.join("; ") })
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let a = ChevalleyAlgebra::new(rs("E8")).unwrap();
    let bip = bipartition(&a.rs);
    let plane = coxeter_plane(&a.rs, &bip, 1e-9).unwrap();
    let spokes = cluster_angles(plane.coords.iter().map(|&z| arg01(z)).collect(), 1e-9).len();
    let mut radii: Vec<f64> = plane.coords.iter().map(|z| z.norm()).collect();
    radii.sort_by(f64::total_cmp);
    radii.dedup_by(|x, y| (*x - *y).abs() <= 1e-9 * y.abs().max(1.0));
    let wheels = radii.len();
    let ep = build_e_plus(&a, &default_coeffs(&a)).unwrap();
    let sr = ad_spectrum(&ep, 30, 1e-7);
    let secs = start.elapsed().as_secs_f64();
    let passed = spokes == 60 && wheels == 8 && plane.wheels.len() == 8 && sr.clustered && sr.rays.len() == 60 && secs < 60.0;
    outcome(
        passed,
        format!(
            "{spokes} spokes, {wheels} wheels, 248-dim spectrum on {} rays (zero multiplicity {}), {secs:.2} s",
            sr.rays.len(),
            sr.zero_multiplicity
        ),
    )
}

fn criterion_5() -> Outcome {
    let mut worst = 0.0f64;
    let mut bad = Vec::new();
    let mut count = 0;
    for ty in TYPES {
        let a = ChevalleyAlgebra::new(rs(ty)).unwrap();
        if a.dim() > 52 {
            continue;
        }
        count += 1;
        let bip = bipartition(&a.rs);
        let plane = coxeter_plane(&a.rs, &bip, 1e-9).unwrap();
        let sr = ad_spectrum(&build_e_plus(&a, &default_coeffs(&a)).unwrap(), a.rs.coxeter_number, 1e-7);
        match match_plane(&sr, &plane, pi2_anchor(&a, &bip), 1e-6) {
            Ok(m) => {
                // check the matching independently as a multiset distance
                let scaled: Vec<Complex64> = plane.coords.iter().map(|z| m.kappa * z).collect();
                let d = multiset_distance(&scaled, &sr.nonzero);
                worst = worst.max(m.max_residual).max(d);
            }
            Err(e) => bad.push(format!("{ty}: {e}")),
        }
    }
    let passed = bad.is_empty() && worst < 1e-6;
    outcome(passed, format!("{count} types with dim ≤ 52, max residual {worst:.1e}{}", if bad.is_empty() { String::new() } else { format!("; {}", bad.join("; ")) }))
}

/// Elementary symmetric functions of the eigenvalues, which are the traces
/// on exterior powers, via Newton's identities.
fn exterior_traces(m: &DMatrix<Complex64>) -> Vec<Complex64> {
    let n = m.nrows();
    let mut p = Vec::with_capacity(n);
    let mut power = m.clone();
    for _ in 0..n {
        p.push(power.trace());
        power = &power * m;
    }
    let mut e = vec![Complex64::one()];
    for k in 1..=n {
        let mut acc = Complex64::zero();
        for i in 1..=k {
            let sign = if i % 2 == 1 { 1.0 } else { -1.0 };
            acc += e[k - i] * p[i - 1] * sign;
        }
        e.push(acc / k as f64);
    }
    e
}

fn criterion_6() -> Outcome {
    let mut rng = rand::rngs::StdRng::seed_from_u64(6);
    let mut worst = 0.0f64;
    for ty in ["A2", "A3"] {
        let a = ChevalleyAlgebra::new(rs(ty)).unwrap();
        let std = Representation::standard(&a).unwrap();
        let (gamma, _) = gamma_order(&bipartition(&a.rs));
        for _ in 0..50 {
            let t: Vec<Complex64> =
                (0..a.rank()).map(|_| Complex64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0))).collect();
            let c = word_matrix(&a, &std, &section_word(&a, &gamma, &t));
            let e = exterior_traces(&c);
            for (i, &node) in gamma.iter().enumerate() {
                worst = worst.max((e[node + 1] - t[i]).norm());
            }
        }
    }
    outcome(worst < 1e-10, format!("SL3 and SL4, 50 random t each, max |χ - t| = {worst:.1e}"))
}

fn criterion_7() -> Outcome {
    let a = ChevalleyAlgebra::new(rs("A2")).unwrap();
    let std = Representation::standard(&a).unwrap();
    let ctx = StokesContext::new(&a, DIMENSION_CAP).unwrap();
    let sd = match ctx.stokes_from_asymptotics(&std, &[Rational64::zero(), Rational64::zero()]) {
        Ok(sd) => sd,
        Err(e) => return outcome(false, format!("pipeline failed: {e}")),
    };
    // both fundamental characters at e^{2πi x₀/3} are sums of the three cube roots of unity
    let cube_sum: Complex64 = (0..3).map(|k| Complex64::from_polar(1.0, 2.0 * PI * k as f64 / 3.0)).sum();
    let t_err = sd.solve.t.iter().map(|t| (t - cube_sum).norm()).fold(0.0, f64::max);
    let x0 = a.rs.x0();
    let predicted: Vec<Complex64> = std
        .weights
        .iter()
        .map(|mu| {
            let v = a.rs.eval_rat(mu, &x0) / Rational64::from_integer(3);
            Complex64::from_polar(1.0, 2.0 * PI * (*v.numer() as f64) / (*v.denom() as f64))
        })
        .collect();
    let ev_err = multiset_distance(&eigenvalues(&sd.m0), &predicted);
    outcome(t_err < 1e-9 && ev_err < 1e-9, format!("|t| = {t_err:.1e}, eigenvalue distance {ev_err:.1e}"))
}

fn diagram_nu(ty: &str, l: usize) -> Vec<usize> {
    match ty {
        t if t.starts_with('A') => (0..l).rev().collect(),
        "D5" => vec![0, 1, 2, 4, 3],
        "E6" => vec![5, 1, 4, 3, 2, 0],
        _ => (0..l).collect(),
    }
}

fn criterion_8() -> Outcome {
    let mut rng = rand::rngs::StdRng::seed_from_u64(8);
    let mut bad = Vec::new();
    let (mut inside, mut outside) = (0, 0);
    let one = Rational64::one();
    for ty in ["A2", "A3", "A4", "A5", "A6", "B2", "B3", "B4", "C3", "D4"] {
        let r = rs(ty);
        let s = Rational64::from_integer(r.coxeter_number as i64);
        for _ in 0..100 {
            let d = rng.gen_range(1..10);
            let a: Vec<Rational64> =
                (0..r.rank).map(|_| Rational64::new(rng.gen_range(-13 * d / 10..=d * 4 / 5), d)).collect();
            let m = coxstokes::steinberg::alcove::from_simple_values(&r, &a);
            let psi_m: Rational64 = r.marks[1..].iter().zip(&a).map(|(q, v)| v * *q).sum();
            let admissible = a.iter().all(|v| *v >= -one) && -psi_m >= -one;
            let psi_y: Rational64 = r.marks[1..].iter().zip(&a).map(|(q, v)| (v + one) * *q).sum::<Rational64>() / s;
            let in_alcove = a.iter().all(|v| (v + one) / s >= Rational64::zero()) && one - psi_y >= Rational64::zero();
            let p = alcove_map(&r, &m);
            if admissible != in_alcove || p.admissible != admissible || p.in_alcove != in_alcove {
                bad.push(format!("{ty} α(m)={a:?}"));
            }
            if in_alcove {
                inside += 1
            } else {
                outside += 1
            }
        }
    }
    let mut sigma_checked = 0;
    for ty in ["A2", "A3", "A4", "A5", "A6", "D5", "E6"] {
        let r = rs(ty);
        let nu = diagram_nu(ty, r.rank);
        for trial in 0..100 {
            let mut a: Vec<Rational64> = (0..r.rank).map(|_| Rational64::new(rng.gen_range(-1..=3), 7)).collect();
            if trial % 2 == 0 {
                for i in 0..r.rank {
                    a[nu[i]] = a[i].min(a[nu[i]]);
                    a[i] = a[nu[i]];
                }
            }
            let symmetric = (0..r.rank).all(|i| a[i] == a[nu[i]]);
            let p = alcove_map(&r, &coxstokes::steinberg::alcove::from_simple_values(&r, &a));
            if p.sigma_fixed != symmetric || p.in_sigma_alcove() != (p.in_alcove && symmetric) {
                bad.push(format!("{ty} σ filter at α(m)={a:?}"));
            }
            sigma_checked += 1;
        }
    }
    let covered = inside > 0 && outside > 0;
    outcome(
        bad.is_empty() && covered,
        format!("1000 samples ({inside} in, {outside} out), {sigma_checked} σ samples{}", if bad.is_empty() { String::new() } else { format!("; {} mismatches: {}", bad.len(), bad[0]) }),
    )
}

fn ks(v: &[i64]) -> Vec<Rational64> {
    v.iter().map(|&x| Rational64::from_integer(x)).collect()
}

fn system(rank: usize, k: &[i64], z: f64) -> MeromorphicSystem {
    build_system(rank, &vec![1.0; rank + 1], &ks(k), z).unwrap()
}

/// Residual of the truncated formal solution substituted into the equation.
fn substitution_residual(sys: &MeromorphicSystem, order: usize) -> (f64, f64) {
    let fs = formal_solution(sys, order).unwrap();
    let p = &fs.p;
    let pinv = p.clone().try_inverse().unwrap();
    let n = sys.size;
    let mut worst = 0.0f64;
    for j in 0..order {
        let mut r = DMatrix::<Complex64>::zeros(n, n);
        if j >= 1 {
            r += p * &fs.y[j - 1] * Complex64::new(j as f64 - 1.0, 0.0);
            r -= &sys.a_m1 * p * &fs.y[j - 1];
        }
        for a in 0..=j {
            if j - a < fs.lambda.len() {
                r += p * &fs.y[a] * &fs.lambda[j - a];
            }
        }
        r -= &sys.a_m2 * p * &fs.y[j];
        worst = worst.max(max_abs(&(&pinv * r)));
    }
    (worst, max_abs(fs.lambda0()))
}

fn criterion_9() -> Outcome {
    let mut res = 0.0f64;
    let mut lam0 = 0.0f64;
    for k in [[0, 0, 0], [0, 1, 1]] {
        let (r, l) = substitution_residual(&system(2, &k, 1.0), 5);
        res = res.max(r);
        lam0 = lam0.max(l);
    }
    outcome(res < 1e-9 && lam0 < 1e-12, format!("sl3 K = 5, residual {res:.1e}, |Λ₀| = {lam0:.1e}"))
}

fn poly_distance(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

fn criterion_10() -> Outcome {
    let start = Instant::now();
    let mut worst = 0.0f64;
    let mut bad = Vec::new();
    for (rank, k) in [(2, vec![0, 0, 0]), (2, vec![0, 1, 1]), (3, vec![1, 2, 0, 2])] {
        match numerical_monodromy(&system(rank, &k, 1.0), 1.0, 1e-6) {
            Ok(rep) => {
                worst = worst.max(poly_distance(&rep.numerical_charpoly, &rep.predicted_charpoly));
                if !rep.passed {
                    bad.push(format!("k={k:?}"));
                }
            }
            Err(e) => bad.push(format!("k={k:?}: {e}")),
        }
    }
    let mut drift = 0.0f64;
    let mut reference = None;
    for z in [0.5, 1.0, 2.0] {
        for radius in [0.7, 1.3] {
            let sys = system(2, &[0, 1, 1], z);
            let cp = char_poly(&integrate_loop(&sys, radius, default_tolerances()).unwrap().0);
            match &reference {
                None => reference = Some(cp),
                Some(r0) => drift = drift.max(poly_distance(&cp, r0)),
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    let passed = bad.is_empty() && worst < 1e-6 && drift < 1e-6 && secs < 120.0;
    outcome(
        passed,
        format!(
            "max char-poly residual {worst:.1e}, z/R drift {drift:.1e}, {secs:.1} s{}",
            if bad.is_empty() { String::new() } else { format!("; failed: {}", bad.join(", ")) }
        ),
    )
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("singular-direction count", criterion_1),
        ("head and tail", criterion_2),
        ("Kostant chain", criterion_3),
        ("E8 spokes and wheels", criterion_4),
        ("apposition matching", criterion_5),
        ("cross-section identity", criterion_6),
        ("A2 desk numbers", criterion_7),
        ("alcove equivalence", criterion_8),
        ("formal solution", criterion_9),
        ("numerical monodromy", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        if !o.passed {
            failed += 1;
        }
        println!("criterion {:>2} {} {name}: {}", i + 1, if o.passed { "PASS" } else { "FAIL" }, o.detail);
    }
    println!("acceptance: {}/10 passed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}

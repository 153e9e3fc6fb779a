//! Bipartite Coxeter element, inversion sets, Kostant's chain, and the
//! Coxeter plane with its 2s singular directions.
//!
//! Rays are labelled clockwise: `d_i` sits at angle `-(i-1)π/s`, so `d_1`
//! is the positive real axis and carries `Π₂`, and applying `γ` moves the
//! roots on `d_i` to `d_{i+2}`.

use crate::error::{Error, Result};
use crate::rootcore::{Root, RootSystem};
use nalgebra::DMatrix;
use num_complex::Complex64;
use num_traits::Zero;
use serde::Serialize;
use std::collections::BTreeSet;
use std::f64::consts::PI;

/// A 2-colouring `{1..l} = I1 ⊔ I2` of the Dynkin diagram (0-based indices).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bipartition {
    pub i1: Vec<usize>,
    pub i2: Vec<usize>,
}

impl Bipartition {
    pub fn swapped(&self) -> Bipartition {
        Bipartition { i1: self.i2.clone(), i2: self.i1.clone() }
    }

    /// Whether both classes consist of mutually orthogonal simple roots.
    pub fn is_valid(&self, rs: &RootSystem) -> bool {
        let mut all: Vec<usize> = self.i1.iter().chain(&self.i2).copied().collect();
        all.sort_unstable();
        if all != (0..rs.rank).collect::<Vec<_>>() {
            return false;
        }
        [&self.i1, &self.i2]
            .iter()
            .all(|cls| cls.iter().all(|&a| cls.iter().all(|&b| a == b || rs.cartan[a][b] == 0)))
    }

    pub fn pi1(&self, rs: &RootSystem) -> Vec<Root> {
        self.i1.iter().map(|&i| rs.simple_root(i)).collect()
    }

    pub fn pi2(&self, rs: &RootSystem) -> Vec<Root> {
        self.i2.iter().map(|&i| rs.simple_root(i)).collect()
    }
}

/// Proper 2-colouring; the class containing node 1 is `I1`.
pub fn bipartition(rs: &RootSystem) -> Bipartition {
    let l = rs.rank;
    let mut color = vec![usize::MAX; l];
    color[0] = 0;
    let mut stack = vec![0];
    while let Some(v) = stack.pop() {
        for w in 0..l {
            if w != v && rs.cartan[v][w] != 0 && color[w] == usize::MAX {
                color[w] = 1 - color[v];
                stack.push(w);
            }
        }
    }
    Bipartition {
        i1: (0..l).filter(|&i| color[i] == 0).collect(),
        i2: (0..l).filter(|&i| color[i] == 1).collect(),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CoxeterElement {
    /// `Π₂` reflections then `Π₁` reflections; applied right to left.
    pub word: Vec<usize>,
    /// Matrix on root coordinates; column `j` is `γ(α_j)`.
    pub matrix: Vec<Vec<i64>>,
}

pub fn coxeter_element(rs: &RootSystem, bip: &Bipartition) -> CoxeterElement {
    let word: Vec<usize> = bip.i2.iter().chain(&bip.i1).copied().collect();
    let l = rs.rank;
    let mut matrix = vec![vec![0; l]; l];
    for j in 0..l {
        let col = rs.apply_word(&word, &rs.simple_root(j).coords);
        for k in 0..l {
            matrix[k][j] = col[k];
        }
    }
    CoxeterElement { word, matrix }
}

impl CoxeterElement {
    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        let l = v.len();
        (0..l).map(|k| (0..l).map(|j| self.matrix[k][j] * v[j]).sum()).collect()
    }

    /// `γ^k v` for any integer `k`.
    pub fn apply_power(&self, rs: &RootSystem, k: i64, v: &[i64]) -> Vec<i64> {
        let s = rs.coxeter_number as i64;
        let k = k.rem_euclid(s);
        (0..k).fold(v.to_vec(), |acc, _| self.apply(&acc))
    }

    /// Order of the element, by repeated multiplication.
    pub fn order(&self, rs: &RootSystem) -> usize {
        let l = rs.rank;
        let mut k = 1;
        let mut cur: Vec<Vec<i64>> = (0..l).map(|j| rs.simple_root(j).coords).collect();
        loop {
            cur = cur.iter().map(|v| self.apply(v)).collect();
            if cur.iter().enumerate().all(|(j, v)| *v == rs.simple_root(j).coords) {
                return k;
            }
            k += 1;
        }
    }
}

/// `Λ(t) = {α > 0 : tα < 0}` for `t` the product of the word (applied right to left).
pub fn inversion_set(rs: &RootSystem, word: &[usize]) -> Vec<Root> {
    rs.positive_roots()
        .filter(|r| !Root::new(rs.apply_word(word, &r.coords)).is_positive())
        .cloned()
        .collect()
}

/// `τ^{(n)} = τ_n ⋯ τ_1` as a reflection word.
pub fn tau_word(bip: &Bipartition, n: usize) -> Vec<usize> {
    let mut word = Vec::new();
    for j in (1..=n).rev() {
        word.extend(if j % 2 == 1 { &bip.i1 } else { &bip.i2 });
    }
    word
}

/// The blocks `τ^{(0)}Π_1, …, τ^{(-(n-1))}Π_n`, checked against `Λ(τ^{(n)})`.
pub fn kostant_chain(rs: &RootSystem, bip: &Bipartition, n: usize) -> Result<Vec<Vec<Root>>> {
    let s = rs.coxeter_number;
    if n == 0 || n > s {
        return Err(Error::InvalidArgument(format!("chain length {n} outside 1..={s}")));
    }
    let mut blocks = Vec::with_capacity(n);
    for j in 0..n {
        // τ^{(-j)} = τ_1 τ_2 ⋯ τ_j, applied right to left
        let mut word = Vec::new();
        for i in 1..=j {
            word.extend(if i % 2 == 1 { &bip.i1 } else { &bip.i2 });
        }
        let pi = if (j + 1) % 2 == 1 { bip.pi1(rs) } else { bip.pi2(rs) };
        let mut block: Vec<Root> = pi.iter().map(|r| Root::new(rs.apply_word(&word, &r.coords))).collect();
        block.sort();
        blocks.push(block);
    }
    let mut union: Vec<Root> = blocks.iter().flatten().cloned().collect();
    union.sort();
    let total = union.len();
    union.dedup();
    let mut lambda = inversion_set(rs, &tau_word(bip, n));
    lambda.sort();
    if union.len() != total || union != lambda {
        return Err(Error::InvariantViolation(format!("Kostant chain mismatch at n = {n}")));
    }
    Ok(blocks)
}

/// Partition of `Δ` into `γ`-orbits (root indices).
pub fn gamma_orbits(rs: &RootSystem, gamma: &CoxeterElement) -> Vec<Vec<usize>> {
    let mut seen = vec![false; rs.num_roots()];
    let mut orbits = Vec::new();
    for start in 0..rs.num_roots() {
        if seen[start] {
            continue;
        }
        let mut orbit = Vec::new();
        let mut cur = rs.roots[start].coords.clone();
        loop {
            let k = rs.index_of(&cur).expect("γ preserves Δ");
            if seen[k] {
                break;
            }
            seen[k] = true;
            orbit.push(k);
            cur = gamma.apply(&cur);
        }
        orbits.push(orbit);
    }
    orbits
}

#[derive(Debug, Clone, Serialize)]
pub struct CoxeterPlaneDiagram {
    pub s: usize,
    /// Complex coordinate of each root, indexed like `rs.roots`.
    pub coords: Vec<Complex64>,
    /// `ray_angles[i]` is the angle of `d_{i+1}`.
    pub ray_angles: Vec<f64>,
    /// Root indices on each ray, `assignment[i]` for `d_{i+1}`.
    pub assignment: Vec<Vec<usize>>,
    /// Distinct radii, ascending, normalised so the largest is 1.
    pub wheels: Vec<f64>,
    /// Largest distance of a root argument from its ray.
    pub max_angle_residual: f64,
    /// Rotation of the labels: `d_1` is shifted by this many steps.
    pub sector_offset: usize,
}

impl CoxeterPlaneDiagram {
    pub fn num_rays(&self) -> usize {
        self.assignment.iter().filter(|r| !r.is_empty()).count()
    }

    /// Relabel rays so `d_1` becomes the ray previously called `d_{1+k}`.
    pub fn with_offset(&self, k: usize) -> CoxeterPlaneDiagram {
        let n = self.assignment.len();
        let mut out = self.clone();
        for i in 0..n {
            out.assignment[i] = self.assignment[(i + k) % n].clone();
        }
        out.sector_offset = (self.sector_offset + k) % n;
        out
    }
}

/// Build the Coxeter plane with tolerance `tol` on angles and radii.
pub fn coxeter_plane(rs: &RootSystem, bip: &Bipartition, tol: f64) -> Result<CoxeterPlaneDiagram> {
    let l = rs.rank;
    if l < 2 {
        return Err(Error::UnsupportedType(rs.ty.to_string()));
    }
    let s = rs.coxeter_number;
    let gamma = coxeter_element(rs, bip);
    let omega = Complex64::from_polar(1.0, 2.0 * PI / s as f64);
    let m = DMatrix::from_fn(l, l, |i, j| Complex64::new(gamma.matrix[i][j] as f64, 0.0))
        - DMatrix::<Complex64>::identity(l, l) * omega;
    let svd = m.svd(false, true);
    let v_t = svd.v_t.ok_or_else(|| Error::NumericFailure("SVD did not return V".into()))?;
    let (kmin, smin) = svd
        .singular_values
        .iter()
        .enumerate()
        .fold((0, f64::INFINITY), |acc, (k, &x)| if x < acc.1 { (k, x) } else { acc });
    if smin > 1e-9 {
        return Err(Error::NumericFailure(format!("no eigenvector for e^(2πi/s): smallest singular value {smin:e}")));
    }
    let u: Vec<Complex64> = (0..l).map(|j| v_t[(kmin, j)].conj()).collect();
    // G u, so that coord(α) = αᵀ G u
    let gu: Vec<Complex64> = (0..l)
        .map(|i| {
            (0..l).fold(Complex64::zero(), |acc, j| acc + u[j] * crate::linalg::rat_to_f64(rs.form[i][j]))
        })
        .collect();
    let raw: Vec<Complex64> = rs
        .roots
        .iter()
        .map(|r| r.coords.iter().zip(&gu).fold(Complex64::zero(), |acc, (&c, g)| acc + g * c as f64))
        .collect();

    let pi2 = bip.pi2(rs);
    let first = rs.index_of(&pi2[0].coords).unwrap();
    let rmax = raw.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let phase = Complex64::from_polar(1.0 / rmax, -raw[first].arg());
    let coords: Vec<Complex64> = raw.iter().map(|z| z * phase).collect();
    for r in &pi2 {
        let z = coords[rs.index_of(&r.coords).unwrap()];
        if z.arg().abs() > tol {
            return Err(Error::InvariantViolation(format!("Π₂ root {r} off the first ray by {:e}", z.arg())));
        }
    }

    let nrays = 2 * s;
    let step = PI / s as f64;
    let mut assignment = vec![Vec::new(); nrays];
    let mut max_res: f64 = 0.0;
    for (k, z) in coords.iter().enumerate() {
        let t = -z.arg() / step;
        let kr = t.round();
        let res = (t - kr).abs() * step;
        max_res = max_res.max(res);
        if res > tol {
            return Err(Error::NumericFailure(format!("root {} at residual {res:e} from nearest ray", rs.roots[k])));
        }
        assignment[(kr as i64).rem_euclid(nrays as i64) as usize].push(k);
    }
    let ray_angles = (0..nrays).map(|i| -(i as f64) * step).collect();

    let mut radii: Vec<f64> = coords.iter().map(|z| z.norm()).collect();
    radii.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mut wheels: Vec<f64> = Vec::new();
    for r in radii {
        if wheels.last().is_none_or(|&w| r - w > tol) {
            wheels.push(r);
        }
    }

    Ok(CoxeterPlaneDiagram {
        s,
        coords,
        ray_angles,
        assignment,
        wheels,
        max_angle_residual: max_res,
        sector_offset: 0,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct SingularDirectionReport {
    /// Root indices predicted on each ray by the γ-orbit formulas.
    pub predicted: Vec<Vec<usize>>,
    pub rays_match: Vec<bool>,
    pub ray_count_ok: bool,
    pub head_is_pi2: bool,
    pub tail_is_pi1: bool,
    pub d2_is_gamma_minus_pi1: bool,
    pub d_s_minus_1_is_gamma_inv_minus_pi2: bool,
    pub positive_sector_is_positive_roots: bool,
    pub orthogonal_within_rays: bool,
    pub fundamental_domain: bool,
    pub lambda_gamma_agrees: bool,
    pub failures: Vec<String>,
}

impl SingularDirectionReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn index_set(rs: &RootSystem, roots: &[Vec<i64>]) -> BTreeSet<usize> {
    roots.iter().map(|r| rs.index_of(r).expect("root")).collect()
}

/// Compare the plane clustering with the γ-orbit formulas for `R(d_i)`.
pub fn singular_directions(
    rs: &RootSystem,
    bip: &Bipartition,
    plane: &CoxeterPlaneDiagram,
) -> SingularDirectionReport {
    let s = rs.coxeter_number;
    let gamma = coxeter_element(rs, bip);
    let pi1: Vec<Vec<i64>> = bip.pi1(rs).into_iter().map(|r| r.coords).collect();
    let pi2: Vec<Vec<i64>> = bip.pi2(rs).into_iter().map(|r| r.coords).collect();
    let neg_pi1: Vec<Vec<i64>> = bip.pi1(rs).into_iter().map(|r| r.neg().coords).collect();
    let neg_pi2: Vec<Vec<i64>> = bip.pi2(rs).into_iter().map(|r| r.neg().coords).collect();
    let map = |k: i64, set: &[Vec<i64>]| -> Vec<Vec<i64>> { set.iter().map(|v| gamma.apply_power(rs, k, v)).collect() };

    let mut predicted = Vec::with_capacity(2 * s);
    for i in 0..2 * s {
        let k = (i / 2) as i64;
        let set = if i % 2 == 0 { map(k, &pi2) } else { map(k + 1, &neg_pi1) };
        predicted.push(index_set(rs, &set));
    }
    let actual: Vec<BTreeSet<usize>> = plane.assignment.iter().map(|a| a.iter().copied().collect()).collect();
    let rays_match: Vec<bool> = predicted.iter().zip(&actual).map(|(p, a)| p == a).collect();

    let mut failures = Vec::new();
    let ray_count_ok = plane.num_rays() == 2 * s && plane.assignment.len() == 2 * s;
    if !ray_count_ok {
        failures.push(format!("expected {} rays, found {}", 2 * s, plane.num_rays()));
    }
    for (i, ok) in rays_match.iter().enumerate() {
        if !ok {
            failures.push(format!("R(d{}) differs from the γ-orbit formula", i + 1));
        }
    }
    let head_is_pi2 = actual[0] == index_set(rs, &pi2);
    let tail_is_pi1 = actual[s - 1] == index_set(rs, &pi1);
    let d2_is_gamma_minus_pi1 = actual[1] == index_set(rs, &map(1, &neg_pi1));
    let d_s_minus_1_is_gamma_inv_minus_pi2 = actual[s - 2] == index_set(rs, &map(-1, &neg_pi2));
    for (ok, what) in [
        (head_is_pi2, "R(d1) = Π₂"),
        (tail_is_pi1, "R(ds) = Π₁"),
        (d2_is_gamma_minus_pi1, "R(d2) = γ(-Π₁)"),
        (d_s_minus_1_is_gamma_inv_minus_pi2, "R(d(s-1)) = γ⁻¹(-Π₂)"),
    ] {
        if !ok {
            failures.push(format!("{what} fails"));
        }
    }

    let sector: BTreeSet<usize> = actual[..s].iter().flatten().copied().collect();
    let sector_size: usize = actual[..s].iter().map(|a| a.len()).sum();
    let positive: BTreeSet<usize> = (0..rs.num_roots()).filter(|&k| rs.roots[k].is_positive()).collect();
    let positive_sector_is_positive_roots = sector == positive && sector_size == positive.len();
    if !positive_sector_is_positive_roots {
        failures.push("positive sector is not Δ₊".into());
    }

    let orthogonal_within_rays = actual.iter().all(|ray| {
        ray.iter().all(|&a| {
            ray.iter().all(|&b| a == b || rs.inner(&rs.roots[a].coords, &rs.roots[b].coords).is_zero())
        })
    });
    if !orthogonal_within_rays {
        failures.push("roots on a ray are not mutually orthogonal".into());
    }

    let orbits = gamma_orbits(rs, &gamma);
    let fd: BTreeSet<usize> = actual[0].union(&actual[1]).copied().collect();
    let fundamental_domain = fd.len() == rs.rank
        && orbits.len() == rs.rank
        && orbits.iter().all(|o| o.len() == s && o.iter().filter(|k| fd.contains(k)).count() == 1);
    if !fundamental_domain {
        failures.push("R(d1) ∪ R(d2) is not a fundamental domain for γ".into());
    }

    let lam = index_set(rs, &inversion_set(rs, &gamma.word).into_iter().map(|r| r.coords).collect::<Vec<_>>());
    let chain = kostant_chain(rs, bip, 2)
        .map(|b| index_set(rs, &b.into_iter().flatten().map(|r| r.coords).collect::<Vec<_>>()))
        .ok();
    let from_plane: BTreeSet<usize> = actual[s - 2].union(&actual[s - 1]).copied().collect();
    let lambda_gamma_agrees = lam.len() == rs.rank && chain.as_ref() == Some(&lam) && from_plane == lam;
    if !lambda_gamma_agrees {
        failures.push("Λ(γ) differs between inversion set, Kostant chain and plane".into());
    }

    SingularDirectionReport {
        predicted: predicted.into_iter().map(|p| p.into_iter().collect()).collect(),
        rays_match,
        ray_count_ok,
        head_is_pi2,
        tail_is_pi1,
        d2_is_gamma_minus_pi1,
        d_s_minus_1_is_gamma_inv_minus_pi2,
        positive_sector_is_positive_roots,
        orthogonal_within_rays,
        fundamental_domain,
        lambda_gamma_agrees,
        failures,
    }
}

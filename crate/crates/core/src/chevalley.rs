//! Chevalley-type basis `{H_{α_i}, e_α}` with `B(e_α, e_{-α}) = 1`.
//!
//! Integer Chevalley constants are fixed by the extraspecial-pair rule over
//! the canonical root order and then rescaled by `e_α = √((α,α)/2) X_α`.
//! The rescaled constants lie in Q(√2) or Q(√3) for non-simply-laced types.

use crate::error::{Error, Result};
use crate::rootcore::{Family, Root, RootSystem};
use crate::surd::Surd;
use nalgebra::DMatrix;
use num_complex::Complex64;
use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::Serialize;
use std::collections::HashMap;
use std::f64::consts::PI;
use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Scalars the algebra can be evaluated over.
pub trait Coeff:
    Copy
    + Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn from_surd(s: Surd) -> Self;
    fn magnitude(&self) -> f64;
}

impl Coeff for Surd {
    fn from_surd(s: Surd) -> Self {
        s
    }
    fn magnitude(&self) -> f64 {
        self.to_f64().abs()
    }
}

impl Coeff for f64 {
    fn from_surd(s: Surd) -> Self {
        s.to_f64()
    }
    fn magnitude(&self) -> f64 {
        self.abs()
    }
}

impl Coeff for Complex64 {
    fn from_surd(s: Surd) -> Self {
        Complex64::new(s.to_f64(), 0.0)
    }
    fn magnitude(&self) -> f64 {
        self.norm()
    }
}

/// A sparse linear combination of basis elements.
pub type Sparse = Vec<(usize, Surd)>;

#[derive(Debug, Clone)]
pub struct ChevalleyAlgebra {
    pub rs: RootSystem,
    /// `table[i][j]` is `[b_i, b_j]`.
    table: Vec<Vec<Sparse>>,
    /// Integer Chevalley constants before rescaling, keyed by root indices.
    chevalley_n: HashMap<(usize, usize), i64>,
}

#[derive(Debug, Clone)]
pub struct PrincipalTriple<T> {
    pub x0: Vec<T>,
    pub e0: Vec<T>,
    pub f0: Vec<T>,
    pub a: Vec<T>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SigmaData {
    /// `nu[i]` for `i = 0..=l`, with `nu[0] = 0` for the affine node.
    pub nu: Vec<usize>,
    /// Matrix of σ on 𝔥 in the H-basis.
    pub sigma_on_h: Vec<Vec<i64>>,
    /// `σ(e_{α_i}) = sign · e_{α_{ν(i)}}`, and likewise on `e_{±ψ}`.
    pub simple_sign: i64,
    pub psi_sign: i64,
}

#[derive(Debug, Clone, Serialize)]
pub struct StructureConstant {
    pub alpha: Vec<i64>,
    pub beta: Vec<i64>,
    pub value: String,
    pub approx: f64,
}

/// The diagram involution `ν` on simple roots (0-based); the identity
/// except for A_l, D_odd and E6.
pub fn diagram_involution(rs: &RootSystem) -> Vec<usize> {
    let l = rs.rank;
    match rs.ty.family {
        Family::A => (0..l).map(|i| l - 1 - i).collect(),
        Family::D if l % 2 == 1 => {
            let mut p: Vec<usize> = (0..l).collect();
            p.swap(l - 2, l - 1);
            p
        }
        Family::E if l == 6 => vec![5, 1, 4, 3, 2, 0],
        _ => (0..l).collect(),
    }
}

impl ChevalleyAlgebra {
    pub fn new(rs: RootSystem) -> Result<Self> {
        let chevalley_n = integer_constants(&rs)?;
        let mut alg = ChevalleyAlgebra { rs, table: Vec::new(), chevalley_n };
        alg.table = alg.build_table();
        alg.check_invariants()?;
        Ok(alg)
    }

    pub fn rank(&self) -> usize {
        self.rs.rank
    }

    pub fn dim(&self) -> usize {
        self.rs.rank + self.rs.num_roots()
    }

    /// Basis index of `e_α`.
    pub fn e_index(&self, alpha: &[i64]) -> Option<usize> {
        self.rs.index_of(alpha).map(|k| self.rs.rank + k)
    }

    /// Basis index of `e_{α_i}` for `i = 0..=l`, where `α_0 = -ψ`.
    pub fn affine_simple_index(&self, i: usize) -> usize {
        if i == 0 {
            self.e_index(&self.rs.psi.neg().coords).unwrap()
        } else {
            self.e_index(&self.rs.simple_root(i - 1).coords).unwrap()
        }
    }

    /// Basis index of `e_{-α_i}` for `i = 0..=l`.
    pub fn affine_negative_index(&self, i: usize) -> usize {
        if i == 0 {
            self.e_index(&self.rs.psi.coords).unwrap()
        } else {
            self.e_index(&self.rs.simple_root(i - 1).neg().coords).unwrap()
        }
    }

    /// The root of a basis index, `None` for Cartan elements.
    pub fn root_of(&self, idx: usize) -> Option<&Root> {
        idx.checked_sub(self.rs.rank).map(|k| &self.rs.roots[k])
    }

    /// `N_{α,β}` in the rescaled basis.
    pub fn n(&self, alpha: &[i64], beta: &[i64]) -> Surd {
        let (Some(a), Some(b)) = (self.rs.index_of(alpha), self.rs.index_of(beta)) else {
            return Surd::zero();
        };
        match self.chevalley_n.get(&(a, b)) {
            Some(&n) => {
                let g = self.rs.roots[a].add(&self.rs.roots[b]);
                Surd::from_int(n) * scale(&self.rs, alpha) * scale(&self.rs, beta) / scale(&self.rs, &g.coords)
            }
            None => Surd::zero(),
        }
    }

    /// `N_{α,β}` in the integral Chevalley normalisation `[X_α, X_{-α}] = H_α^∨`.
    pub fn n_integral(&self, alpha: &[i64], beta: &[i64]) -> i64 {
        match (self.rs.index_of(alpha), self.rs.index_of(beta)) {
            (Some(a), Some(b)) => self.chevalley_n.get(&(a, b)).copied().unwrap_or(0),
            _ => 0,
        }
    }

    /// `e_α = c_α X_α` with `c_α = √((α,α)/2)`.
    pub fn root_scale(&self, alpha: &[i64]) -> Surd {
        scale(&self.rs, alpha)
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> &Sparse {
        &self.table[i][j]
    }

    pub fn bracket<T: Coeff>(&self, x: &[T], y: &[T]) -> Vec<T> {
        let d = self.dim();
        let mut out = vec![T::zero(); d];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let w = *xi * *yj;
                for &(k, c) in &self.table[i][j] {
                    out[k] = out[k] + w * T::from_surd(c);
                }
            }
        }
        out
    }

    /// Matrix of `ad x`; column `j` is `[x, b_j]`.
    pub fn ad<T: Coeff + nalgebra::Scalar>(&self, x: &[T]) -> DMatrix<T> {
        let d = self.dim();
        let mut m = DMatrix::from_element(d, d, T::zero());
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..d {
                for &(k, c) in &self.table[i][j] {
                    m[(k, j)] = m[(k, j)] + *xi * T::from_surd(c);
                }
            }
        }
        m
    }

    /// Exact adjoint matrix of a single basis element.
    pub fn ad_basis_exact(&self, i: usize) -> Vec<Vec<Surd>> {
        let d = self.dim();
        let mut m = vec![vec![Surd::zero(); d]; d];
        for j in 0..d {
            for &(k, c) in &self.table[i][j] {
                m[k][j] += c;
            }
        }
        m
    }

    /// The normalised invariant form on basis pairs.
    pub fn form(&self, i: usize, j: usize) -> Rational64 {
        let l = self.rank();
        match (i < l, j < l) {
            (true, true) => self.rs.form[i][j],
            (false, false) => {
                let a = &self.rs.roots[i - l];
                let b = &self.rs.roots[j - l];
                if a.add(b).coords.iter().all(|&c| c == 0) {
                    Rational64::one()
                } else {
                    Rational64::zero()
                }
            }
            _ => Rational64::zero(),
        }
    }

    /// `tr(ad b_i ∘ ad b_j)`, exactly.
    pub fn killing(&self, i: usize, j: usize) -> Surd {
        let d = self.dim();
        let mut tr = Surd::zero();
        for k in 0..d {
            for &(m, c) in &self.table[j][k] {
                for &(n, c2) in &self.table[i][m] {
                    if n == k {
                        tr += c * c2;
                    }
                }
            }
        }
        tr
    }

    pub fn zero<T: Coeff>(&self) -> Vec<T> {
        vec![T::zero(); self.dim()]
    }

    /// Unit vector of a basis element.
    pub fn basis<T: Coeff>(&self, i: usize) -> Vec<T> {
        let mut v = self.zero();
        v[i] = T::one();
        v
    }

    /// Cartan element `Σ h_i H_{α_i}`.
    pub fn cartan_element<T: Coeff>(&self, h: &[T]) -> Vec<T> {
        let mut v = self.zero();
        v[..self.rank()].copy_from_slice(h);
        v
    }

    /// Principal TDS with `e₀ = Σ a_i e_{α_i}`, `f₀ = Σ (r_i/a_i) e_{-α_i}`.
    pub fn principal_tds<T: Coeff>(&self, a: &[T]) -> Result<PrincipalTriple<T>> {
        let l = self.rank();
        if a.len() != l {
            return Err(Error::InvalidArgument(format!("expected {l} coefficients")));
        }
        if a.iter().any(|x| x.magnitude() == 0.0) {
            return Err(Error::InvalidArgument("principal TDS coefficient must be nonzero".into()));
        }
        let r: Vec<T> = self.rs.r_coeffs.iter().map(|&x| T::from_surd(Surd::from_rational(x))).collect();
        let x0 = self.cartan_element(&r);
        let mut e0 = self.zero();
        let mut f0 = self.zero();
        for i in 0..l {
            e0[self.affine_simple_index(i + 1)] = a[i];
            f0[self.affine_negative_index(i + 1)] = r[i] / a[i];
        }
        Ok(PrincipalTriple { x0, e0, f0, a: a.to_vec() })
    }

    /// Residual of the TDS relations in max norm.
    pub fn tds_residual<T: Coeff>(&self, t: &PrincipalTriple<T>) -> f64 {
        let diff = |a: &[T], b: &[T]| a.iter().zip(b).map(|(x, y)| (*x - *y).magnitude()).fold(0.0, f64::max);
        let r1 = diff(&self.bracket(&t.x0, &t.e0), &t.e0);
        let mf0: Vec<T> = t.f0.iter().map(|x| -*x).collect();
        let r2 = diff(&self.bracket(&t.x0, &t.f0), &mf0);
        let r3 = diff(&self.bracket(&t.e0, &t.f0), &t.x0);
        r1.max(r2).max(r3)
    }

    /// Eigenvalue of `τ = Ad P₀` on a basis element.
    pub fn tau_phase(&self, idx: usize) -> Complex64 {
        match self.root_of(idx) {
            None => Complex64::one(),
            Some(r) => {
                let s = self.rs.coxeter_number as f64;
                Complex64::from_polar(1.0, 2.0 * PI * r.height() as f64 / s)
            }
        }
    }

    /// `τ = Ad P₀` applied to an element.
    pub fn tau(&self, x: &[Complex64]) -> Vec<Complex64> {
        x.iter().enumerate().map(|(i, &c)| c * self.tau_phase(i)).collect()
    }

    pub fn sigma_nu(&self) -> SigmaData {
        let l = self.rank();
        let perm = diagram_involution(&self.rs);
        let mut nu = vec![0];
        nu.extend(perm.iter().map(|p| p + 1));
        let mut sigma_on_h = vec![vec![0; l]; l];
        for i in 0..l {
            sigma_on_h[perm[i]][i] = 1;
        }
        SigmaData { nu, sigma_on_h, simple_sign: -1, psi_sign: -1 }
    }

    /// σ on the elements it is defined on: 𝔥, `e_{±α_i}`, `e_{±ψ}`.
    /// Returns `None` if `x` has components elsewhere.
    pub fn sigma<T: Coeff>(&self, x: &[T]) -> Option<Vec<T>> {
        let l = self.rank();
        let sd = self.sigma_nu();
        let mut out = self.zero();
        for (i, &c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if i < l {
                out[sd.nu[i + 1] - 1] = out[sd.nu[i + 1] - 1] + c;
                continue;
            }
            let target = (0..=l).find_map(|k| {
                if self.affine_simple_index(k) == i {
                    Some(self.affine_simple_index(sd.nu[k]))
                } else if self.affine_negative_index(k) == i {
                    Some(self.affine_negative_index(sd.nu[k]))
                } else {
                    None
                }
            });
            let t = target?;
            out[t] = out[t] - c;
        }
        Some(out)
    }

    /// Residual of `[Ad(e^w)E₋, Ad(e^{-w})E₊] = -Σ c⁻_i c⁺_i e^{-2α_i(w)} H_{α_i}`.
    /// `w` is in the H-basis; `c_minus`, `c_plus` are indexed `0..=l`.
    pub fn toda_bracket_identity(&self, w: &[f64], c_minus: &[f64], c_plus: &[f64]) -> f64 {
        let l = self.rank();
        let mut em = self.zero::<f64>();
        let mut ep = self.zero::<f64>();
        for i in 0..=l {
            em[self.affine_negative_index(i)] = c_minus[i];
            ep[self.affine_simple_index(i)] = c_plus[i];
        }
        let adw = self.ad(&self.cartan_element(w));
        let em_w = (adw.clone()).exp() * DMatrix::from_column_slice(self.dim(), 1, &em);
        let ep_w = (-adw).exp() * DMatrix::from_column_slice(self.dim(), 1, &ep);
        let lhs = self.bracket(em_w.as_slice(), ep_w.as_slice());
        let mut rhs = vec![0.0; self.dim()];
        for i in 0..=l {
            let alpha: Vec<f64> = if i == 0 {
                self.rs.psi.coords.iter().map(|&c| -(c as f64)).collect()
            } else {
                self.rs.simple_root(i - 1).coords.iter().map(|&c| c as f64).collect()
            };
            let aw = self.rs.eval_f64(&alpha, w);
            let f = c_minus[i] * c_plus[i] * (-2.0 * aw).exp();
            for k in 0..l {
                rhs[k] -= f * alpha[k];
            }
        }
        lhs.iter().zip(&rhs).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max)
    }

    /// Structure-constant table keyed by root coordinates.
    pub fn structure_constants(&self) -> Vec<StructureConstant> {
        let mut out = Vec::new();
        for a in &self.rs.roots {
            for b in &self.rs.roots {
                let n = self.n(&a.coords, &b.coords);
                if !n.is_zero() {
                    out.push(StructureConstant {
                        alpha: a.coords.clone(),
                        beta: b.coords.clone(),
                        value: n.to_string(),
                        approx: n.to_f64(),
                    });
                }
            }
        }
        out
    }

    fn build_table(&self) -> Vec<Vec<Sparse>> {
        let l = self.rank();
        let d = self.dim();
        let mut t = vec![vec![Vec::new(); d]; d];
        for i in 0..d {
            for j in 0..d {
                t[i][j] = self.compute_bracket(i, j, l);
            }
        }
        t
    }

    fn compute_bracket(&self, i: usize, j: usize, l: usize) -> Sparse {
        match (i < l, j < l) {
            (true, true) => Vec::new(),
            (true, false) => {
                let r = &self.rs.roots[j - l];
                let v = self.rs.inner(&r.coords, &self.rs.simple_root(i).coords);
                if v.is_zero() {
                    Vec::new()
                } else {
                    vec![(j, Surd::from_rational(v))]
                }
            }
            (false, true) => self.compute_bracket(j, i, l).into_iter().map(|(k, c)| (k, -c)).collect(),
            (false, false) => {
                let a = &self.rs.roots[i - l];
                let b = &self.rs.roots[j - l];
                let g = a.add(b);
                if g.coords.iter().all(|&c| c == 0) {
                    a.coords
                        .iter()
                        .enumerate()
                        .filter(|(_, &c)| c != 0)
                        .map(|(k, &c)| (k, Surd::from_int(c)))
                        .collect()
                } else if let Some(k) = self.e_index(&g.coords) {
                    vec![(k, self.n(&a.coords, &b.coords))]
                } else {
                    Vec::new()
                }
            }
        }
    }

    fn check_invariants(&self) -> Result<()> {
        let d = self.dim();
        let l = self.rank();
        // N_{-α,-β} = -N_{α,β}
        for (&(a, b), &n) in &self.chevalley_n {
            let na = self.rs.roots[a].neg();
            let nb = self.rs.roots[b].neg();
            if self.n_integral(&na.coords, &nb.coords) != -n {
                return Err(Error::InvariantViolation(format!(
                    "N sign symmetry fails for {} {}",
                    self.rs.roots[a], self.rs.roots[b]
                )));
            }
        }
        // Jacobi on all unordered triples.
        for i in 0..d {
            for j in i + 1..d {
                for k in j + 1..d {
                    if !self.jacobi_vanishes(i, j, k) {
                        return Err(Error::InvariantViolation(format!("Jacobi identity fails on ({i},{j},{k})")));
                    }
                }
            }
        }
        let _ = l;
        Ok(())
    }

    fn jacobi_vanishes(&self, i: usize, j: usize, k: usize) -> bool {
        let mut acc: Vec<(usize, Surd)> = Vec::new();
        let mut push = |x: usize, y: usize, z: usize| {
            for &(m, c) in &self.table[y][z] {
                for &(n, c2) in &self.table[x][m] {
                    acc.push((n, c * c2));
                }
            }
        };
        push(i, j, k);
        push(j, k, i);
        push(k, i, j);
        if acc.is_empty() {
            return true;
        }
        acc.sort_by_key(|p| p.0);
        let mut idx = 0;
        while idx < acc.len() {
            let key = acc[idx].0;
            let mut sum = Surd::zero();
            while idx < acc.len() && acc[idx].0 == key {
                sum += acc[idx].1;
                idx += 1;
            }
            if !sum.is_zero() {
                return false;
            }
        }
        true
    }
}

fn scale(rs: &RootSystem, alpha: &[i64]) -> Surd {
    let half = rs.inner(alpha, alpha) / Rational64::from_integer(2);
    Surd::sqrt_rational(half).expect("positive length")
}

/// Integer Chevalley constants `N_{α,β}` for `[X_α, X_β] = N_{α,β} X_{α+β}`,
/// normalised by `N = +(p+1)` on extraspecial pairs.
fn integer_constants(rs: &RootSystem) -> Result<HashMap<(usize, usize), i64>> {
    let roots = &rs.roots;
    let npos: Vec<usize> = (0..roots.len()).filter(|&k| roots[k].is_positive()).collect();
    let len = |k: usize| rs.norm2(&roots[k]);
    let p_of = |a: usize, b: usize| -> i64 {
        // largest p with β - pα a root
        let mut p = 0;
        let mut v = roots[b].coords.clone();
        loop {
            for (x, y) in v.iter_mut().zip(&roots[a].coords) {
                *x -= y;
            }
            if rs.is_root(&v) {
                p += 1;
            } else {
                return p;
            }
        }
    };

    // positive pairs (a, b) with a + b a root, grouped by the sum, in order
    // of increasing height of the sum (canonical order is height-first).
    let mut pos: HashMap<(usize, usize), i64> = HashMap::new();
    for &xi in &npos {
        let mut special: Vec<(usize, usize)> = Vec::new();
        for &a in &npos {
            if a >= xi {
                break;
            }
            let diff: Vec<i64> = roots[xi].coords.iter().zip(&roots[a].coords).map(|(x, y)| x - y).collect();
            if let Some(b) = rs.index_of(&diff) {
                if roots[b].is_positive() && a < b {
                    special.push((a, b));
                }
            }
        }
        let Some(&(g, dl)) = special.first() else { continue };
        let n_gd = p_of(g, dl) + 1;
        pos.insert((g, dl), n_gd);
        pos.insert((dl, g), -n_gd);
        for &(a, b) in &special[1..] {
            // Four-root identity on (α, β, -γ, -δ).
            let mixed = |x: usize, y: usize, pos: &HashMap<(usize, usize), i64>| -> Rational64 {
                // N_{x,-y} for positive x, y with x - y a root (or zero if not)
                let diff: Vec<i64> = roots[x].coords.iter().zip(&roots[y].coords).map(|(u, v)| u - v).collect();
                let Some(c) = rs.index_of(&diff) else { return Rational64::zero() };
                if roots[c].is_positive() {
                    // N_{x,-y} = (c,c)/(x,x) · N_{c,y}
                    len(c) / len(x) * Rational64::from_integer(pos[&(c, y)])
                } else {
                    // N_{x,-y} = (c,c)/(-y,-y) · N_{-c,x}
                    let mc = rs.index_of(&roots[c].neg().coords).unwrap();
                    len(c) / len(y) * Rational64::from_integer(pos[&(mc, x)])
                }
            };
            let term = |x: usize, y: usize, z: usize, w: usize, pos: &HashMap<(usize, usize), i64>| {
                // N_{x,-y} N_{z,-w} / (x-y, x-y)
                let diff: Vec<i64> = roots[x].coords.iter().zip(&roots[y].coords).map(|(u, v)| u - v).collect();
                match rs.index_of(&diff) {
                    Some(c) => mixed(x, y, pos) * mixed(z, w, pos) / len(c),
                    None => Rational64::zero(),
                }
            };
            // N_{α,β}N_{-γ,-δ}/(ξ,ξ) + N_{β,-γ}N_{α,-δ}/(β-γ,β-γ) + N_{-γ,α}N_{β,-δ}/(α-γ,α-γ) = 0
            // with N_{-γ,-δ} = -N_{γ,δ} and N_{-γ,α} = -N_{α,-γ}.
            let t2 = term(b, g, a, dl, &pos);
            let t3 = {
                let diff: Vec<i64> = roots[a].coords.iter().zip(&roots[g].coords).map(|(u, v)| u - v).collect();
                match rs.index_of(&diff) {
                    Some(c) => -mixed(a, g, &pos) * mixed(b, dl, &pos) / len(c),
                    None => Rational64::zero(),
                }
            };
            let n = len(xi) / Rational64::from_integer(n_gd) * (t2 + t3);
            if !n.is_integer() || n.is_zero() {
                return Err(Error::InvariantViolation(format!(
                    "non-integral structure constant {n} for {} + {}",
                    roots[a], roots[b]
                )));
            }
            let n = n.to_integer();
            pos.insert((a, b), n);
            pos.insert((b, a), -n);
        }
    }

    let mut all = HashMap::new();
    for a in 0..roots.len() {
        for b in 0..roots.len() {
            let sum = roots[a].add(&roots[b]);
            let Some(c) = rs.index_of(&sum.coords) else { continue };
            let ra = roots[a].is_positive();
            let rb = roots[b].is_positive();
            let n = match (ra, rb) {
                (true, true) => pos[&(a, b)],
                (false, false) => {
                    let na = rs.index_of(&roots[a].neg().coords).unwrap();
                    let nb = rs.index_of(&roots[b].neg().coords).unwrap();
                    -pos[&(na, nb)]
                }
                _ => {
                    // a + b + (-c) = 0: N_{a,b}/(c,c) = N_{b,-c}/(a,a) = N_{-c,a}/(b,b)
                    let (x, y, flip) = if ra { (a, b, 1) } else { (b, a, -1) };
                    let my = rs.index_of(&roots[y].neg().coords).unwrap();
                    let v = if roots[c].is_positive() {
                        len(c) / len(x) * Rational64::from_integer(pos[&(c, my)])
                    } else {
                        let mc = rs.index_of(&roots[c].neg().coords).unwrap();
                        len(c) / len(my) * Rational64::from_integer(pos[&(mc, x)])
                    };
                    assert!(v.is_integer());
                    flip * v.to_integer()
                }
            };
            all.insert((a, b), n);
        }
    }
    Ok(all)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(s: &str) -> ChevalleyAlgebra {
        ChevalleyAlgebra::new(RootSystem::from_str_type(s).unwrap()).unwrap()
    }

    #[test]
    fn builds_small_types() {
        for t in ["A2", "A3", "B2", "C3", "G2", "D4"] {
            let a = alg(t);
            assert_eq!(a.dim(), a.rs.ty.dimension());
        }
    }

    #[test]
    fn e_alpha_e_minus_alpha_is_h_alpha() {
        let a = alg("B3");
        for r in &a.rs.roots {
            let x = a.basis::<Surd>(a.e_index(&r.coords).unwrap());
            let y = a.basis::<Surd>(a.e_index(&r.neg().coords).unwrap());
            let b = a.bracket(&x, &y);
            for k in 0..a.rank() {
                assert_eq!(b[k], Surd::from_int(r.coords[k]));
            }
        }
    }

    #[test]
    fn e_psi_commutes_with_simple() {
        let a = alg("F4");
        let psi = a.basis::<Surd>(a.e_index(&a.rs.psi.coords).unwrap());
        for i in 1..=4 {
            let e = a.basis::<Surd>(a.affine_simple_index(i));
            assert!(a.bracket(&psi, &e).iter().all(|c| c.is_zero()));
        }
    }

    #[test]
    fn principal_triple_exact() {
        let a = alg("A2");
        let t = a.principal_tds(&[Surd::one(), Surd::one()]).unwrap();
        assert_eq!(a.tds_residual(&t), 0.0);
        assert!(a.principal_tds(&[Surd::one(), Surd::zero()]).is_err());
    }

    #[test]
    fn sigma_on_h_is_involution() {
        for t in ["A4", "D5", "E6", "B3"] {
            let a = alg(t);
            let sd = a.sigma_nu();
            for i in 0..=a.rank() {
                assert_eq!(sd.nu[sd.nu[i]], i);
            }
        }
    }
}

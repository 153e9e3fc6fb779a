//! Assembly of `M⁰ = K₁ K₂ A_γ` from asymptotic data.

use super::alcove::{alcove_map, AlcovePoint};
use super::characters::{fundamental_characters, torus_character_values, CharacterTable};
use super::section::{coxeter_word, e_factor, gamma_order, section_word, word_matrix, Factor, SectionEvaluator};
use crate::chevalley::ChevalleyAlgebra;
use crate::coxeter::{bipartition, coxeter_element, Bipartition};
use crate::error::{Error, Result};
use crate::linalg::{char_poly, eigenvalues, log_unipotent, max_abs, multiset_distance};
use crate::rep::Representation;
use crate::rootcore::Root;
use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use num_rational::Rational64;

/// Tolerance on `‖M⁰ − K₁K₂A_γ‖`.
pub const FACTORIZATION_TOL: f64 = 1e-8;

/// Shared data for repeated pipeline runs on one type.
pub struct StokesContext<'a> {
    pub alg: &'a ChevalleyAlgebra,
    pub bip: Bipartition,
    pub gamma: Vec<usize>,
    /// Size of the Π₂ block at the front of `gamma`.
    pub k: usize,
    pub tables: Vec<CharacterTable>,
    pub fundamental: Vec<Representation>,
    evaluators: Vec<SectionEvaluator>,
}

#[derive(Debug, Clone)]
pub struct SectionSolve {
    /// Section parameters, indexed along Γ.
    pub t: Vec<Complex64>,
    pub iterations: usize,
    pub residual: f64,
}

#[derive(Debug, Clone)]
pub struct StokesData {
    pub rep_name: String,
    pub gamma: Vec<usize>,
    pub k: usize,
    pub m: Vec<Rational64>,
    pub alcove: AlcovePoint,
    /// `χ_j(e^{2πi y})`, indexed by node.
    pub characters: Vec<Complex64>,
    pub solve: SectionSolve,
    pub m0: DMatrix<Complex64>,
    pub k1: DMatrix<Complex64>,
    pub k2: DMatrix<Complex64>,
    /// `A_γ = n_1 ⋯ n_l`.
    pub coxeter_rep: DMatrix<Complex64>,
    /// `P₀ = exp(2πi x₀/s)` in the same representation.
    pub p0: DMatrix<Complex64>,
    pub factorization_residual: f64,
    /// Spectral distance between `A_γ` and `P₀`; they are conjugate.
    pub coxeter_p0_distance: f64,
    pub k1_support: Vec<Root>,
    pub k2_support: Vec<Root>,
    pub k2_allowed: Vec<Root>,
    /// Largest coefficient of `log K₁`, `log K₂` outside the allowed root spaces.
    pub support_leak: f64,
}

impl<'a> StokesContext<'a> {
    pub fn new(alg: &'a ChevalleyAlgebra, cap: u128) -> Result<Self> {
        let bip = bipartition(&alg.rs);
        Self::with_bipartition(alg, bip, cap)
    }

    pub fn with_bipartition(alg: &'a ChevalleyAlgebra, bip: Bipartition, cap: u128) -> Result<Self> {
        let (gamma, k) = gamma_order(&bip);
        let tables = fundamental_characters(&alg.rs, cap)?;
        let fundamental = (1..=alg.rank())
            .map(|i| Representation::by_name(alg, &format!("omega{i}")))
            .collect::<Result<Vec<_>>>()?;
        let evaluators = fundamental.iter().map(|r| SectionEvaluator::new(alg, r, &gamma)).collect();
        Ok(StokesContext { alg, bip, gamma, k, tables, fundamental, evaluators })
    }

    /// `χ_j(C^Γ(t))` for every node `j`.
    pub fn section_characters(&self, t: &[Complex64]) -> Vec<Complex64> {
        self.evaluators.iter().map(|e| e.trace(t)).collect()
    }

    /// Find `t` with `χ(C^Γ(t)) = target`: Newton from a linearized
    /// guess, falling back to continuation from `t = 0`.
    pub fn solve_section(&self, target: &[Complex64], tol: f64) -> Result<SectionSolve> {
        let l = self.alg.rank();
        let base = self.section_characters(&vec![Complex64::new(0.0, 0.0); l]);
        // along Γ, t_i is paired with the fundamental weight of node γ_i
        let guess: Vec<Complex64> = self.gamma.iter().map(|&j| target[j] - base[j]).collect();
        let mut iterations = 0;
        let t = match self.newton(&guess, target, tol, 40) {
            Some((t, it)) => {
                iterations += it;
                t
            }
            None => {
                let mut t = vec![Complex64::new(0.0, 0.0); l];
                let mut theta: f64 = 0.0;
                let mut step: f64 = 0.25;
                while theta < 1.0 {
                    let next = (theta + step).min(1.0);
                    let goal: Vec<Complex64> = base.iter().zip(target).map(|(b, g)| b + (g - b) * next).collect();
                    match self.newton(&t, &goal, tol, 40) {
                        Some((tn, it)) => {
                            iterations += it;
                            t = tn;
                            theta = next;
                            step = (step * 2.0).min(0.5);
                        }
                        None => {
                            step /= 2.0;
                            if step < 1e-4 {
                                return Err(Error::NumericFailure("cross-section inversion did not converge".into()));
                            }
                        }
                    }
                }
                t
            }
        };
        let residual = sup_dist(&self.section_characters(&t), target);
        Ok(SectionSolve { t, iterations, residual })
    }

    fn jacobian(&self, t: &[Complex64], f: &[Complex64]) -> DMatrix<Complex64> {
        let l = t.len();
        let h = 1e-7 * (1.0 + t.iter().map(|z| z.norm()).fold(0.0, f64::max));
        let mut jac = DMatrix::<Complex64>::zeros(l, l);
        for j in 0..l {
            let mut tp = t.to_vec();
            tp[j] += h;
            let fp = self.section_characters(&tp);
            for i in 0..l {
                jac[(i, j)] = (fp[i] - f[i]) / h;
            }
        }
        jac
    }

    /// Newton with Broyden updates of a finite-difference Jacobian.
    fn newton(&self, start: &[Complex64], goal: &[Complex64], tol: f64, max_iter: usize) -> Option<(Vec<Complex64>, usize)> {
        let mut t = start.to_vec();
        let mut f = self.section_characters(&t);
        let mut r = DVector::from_iterator(t.len(), f.iter().zip(goal).map(|(a, b)| a - b));
        let mut jac: Option<DMatrix<Complex64>> = None;
        let mut fresh = true;
        for it in 0..max_iter {
            let err = r.iter().map(|z| z.norm()).fold(0.0, f64::max);
            if err < tol {
                return Some((t, it));
            }
            let jac = jac.get_or_insert_with(|| self.jacobian(&t, &f));
            let delta = jac.clone().lu().solve(&r)?;
            let tn: Vec<Complex64> = t.iter().zip(delta.iter()).map(|(a, d)| a - d).collect();
            let fnew = self.section_characters(&tn);
            if fnew.iter().any(|z| !z.is_finite()) {
                return None;
            }
            let rn = DVector::from_iterator(t.len(), fnew.iter().zip(goal).map(|(a, b)| a - b));
            let errn = rn.iter().map(|z| z.norm()).fold(0.0, f64::max);
            if errn > err && !fresh {
                *jac = self.jacobian(&t, &f);
                fresh = true;
                continue;
            }
            // Broyden: J += (Δr − J s) sᴴ / (sᴴ s), with s = −delta
            let s = -delta;
            let y = &rn - &r;
            let denom = s.dotc(&s);
            if denom.norm() > 0.0 {
                let u = (y - &*jac * &s) / denom;
                *jac += &u * s.adjoint();
            }
            fresh = false;
            t = tn;
            f = fnew;
            r = rn;
        }
        let err = r.iter().map(|z| z.norm()).fold(0.0, f64::max);
        (err < tol).then_some((t, max_iter))
    }

    /// Run the pipeline for `m` in the H-basis.
    pub fn stokes_from_asymptotics(&self, rep: &Representation, m: &[Rational64]) -> Result<StokesData> {
        let alg = self.alg;
        let rs = &alg.rs;
        let l = rs.rank;
        if m.len() != l {
            return Err(Error::InvalidArgument(format!("m has length {}, expected {l}", m.len())));
        }
        let alcove = alcove_map(rs, m);
        if !alcove.admissible {
            let sl: Vec<String> = alcove.slacks.iter().map(|s| s.to_string()).collect();
            return Err(Error::Inadmissible(format!("alcove slacks [{}]", sl.join(", "))));
        }
        let y: Vec<Complex64> = alcove.y_f64().into_iter().map(|v| Complex64::new(v, 0.0)).collect();
        let characters = torus_character_values(rs, &self.tables, &y);
        let solve = self.solve_section(&characters, 1e-11)?;
        let t = &solve.t;

        let m0 = word_matrix(alg, rep, &section_word(alg, &self.gamma, t));
        let cox_front = coxeter_word(alg, &self.gamma[..self.k]);
        let coxeter_rep = word_matrix(alg, rep, &coxeter_word(alg, &self.gamma));
        let k1_word: Vec<Factor> = (0..self.k).map(|i| e_factor(alg, self.gamma[i], t[i])).collect();
        let k1 = word_matrix(alg, rep, &k1_word);
        let tail: Vec<Factor> = (self.k..l).map(|i| e_factor(alg, self.gamma[i], t[i])).collect();
        let n_front = word_matrix(alg, rep, &cox_front);
        let n_front_inv = n_front
            .clone()
            .try_inverse()
            .ok_or_else(|| Error::NumericFailure("Weyl representative is singular".into()))?;
        let k2 = &n_front * word_matrix(alg, rep, &tail) * n_front_inv;
        let factorization_residual = max_abs(&(&m0 - &k1 * &k2 * &coxeter_rep));
        if factorization_residual > FACTORIZATION_TOL {
            return Err(Error::Consistency(format!("‖M0 − K1 K2 A_γ‖ = {factorization_residual:e}")));
        }

        let p0 = rep.principal_element(rs.coxeter_number);
        let coxeter_p0_distance = multiset_distance(&eigenvalues(&coxeter_rep), &eigenvalues(&p0));

        let gam = coxeter_element(rs, &self.bip);
        let k1_allowed: Vec<Root> = self.gamma[..self.k].iter().map(|&i| rs.simple_root(i)).collect();
        let k2_allowed: Vec<Root> =
            self.gamma[self.k..].iter().map(|&i| Root::new(gam.apply(&rs.simple_root(i).neg().coords))).collect();
        let (k1_support, leak1) = root_support(alg, rep, &log_unipotent(&k1), &k1_allowed)?;
        let (k2_support, leak2) = root_support(alg, rep, &log_unipotent(&k2), &k2_allowed)?;

        Ok(StokesData {
            rep_name: rep.name.clone(),
            gamma: self.gamma.clone(),
            k: self.k,
            m: m.to_vec(),
            alcove,
            characters,
            solve,
            m0,
            k1,
            k2,
            coxeter_rep,
            p0,
            factorization_residual,
            coxeter_p0_distance,
            k1_support,
            k2_support,
            k2_allowed,
            support_leak: leak1.max(leak2),
        })
    }
}

fn sup_dist(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

/// Expand `x = Σ c_b ρ(b)` over the algebra basis by least squares and
/// return the roots carrying nonzero coefficients and the largest
/// coefficient (or fit residual) outside `allowed`.
pub fn root_support(
    alg: &ChevalleyAlgebra,
    rep: &Representation,
    x: &DMatrix<Complex64>,
    allowed: &[Root],
) -> Result<(Vec<Root>, f64)> {
    let n = rep.dim;
    let d = alg.dim();
    let mut b = DMatrix::<Complex64>::zeros(n * n, d);
    for (k, mat) in rep.matrices.iter().enumerate() {
        for (&(r, c), v) in &mat.entries {
            b[(r * n + c, k)] = Complex64::new(v.to_f64(), 0.0);
        }
    }
    let rhs = DVector::from_iterator(n * n, (0..n * n).map(|i| x[(i / n, i % n)]));
    let svd = b.clone().svd(true, true);
    let coeffs = svd.solve(&rhs, 1e-12).map_err(|e| Error::NumericFailure(e.to_string()))?;
    let fit = (&b * &coeffs - &rhs).iter().map(|z| z.norm()).fold(0.0, f64::max);
    let scale = coeffs.iter().map(|z| z.norm()).fold(0.0, f64::max).max(1.0);
    let mut support = Vec::new();
    let mut leak = fit;
    for (k, c) in coeffs.iter().enumerate() {
        if c.norm() <= 1e-9 * scale {
            continue;
        }
        match alg.root_of(k) {
            Some(r) if allowed.contains(r) => support.push(r.clone()),
            Some(r) => {
                support.push(r.clone());
                leak = leak.max(c.norm());
            }
            None => leak = leak.max(c.norm()),
        }
    }
    Ok((support, leak))
}

#[derive(Debug, Clone)]
pub struct SemisimpleReport {
    /// Predicted eigenvalues `e^{2πi μ(y)}` are pairwise distinct.
    pub regular: bool,
    pub eigenvalue_distance: Option<f64>,
    pub charpoly_residual: f64,
    pub tol: f64,
    pub passed: bool,
}

/// Compare the spectrum of `M⁰` with `{e^{2πi μ(y)}}` over the weights of `rep`.
pub fn semisimple_spectrum_check(sd: &StokesData, rep: &Representation, rs: &crate::RootSystem, tol: f64) -> SemisimpleReport {
    let y = sd.alcove.y_f64();
    let predicted: Vec<Complex64> = rep
        .weights
        .iter()
        .map(|mu| {
            let mu: Vec<f64> = mu.iter().map(|&r| crate::linalg::rat_to_f64(r)).collect();
            Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * rs.eval_f64(&mu, &y))
        })
        .collect();
    let mut min_gap = f64::INFINITY;
    for i in 0..predicted.len() {
        for j in i + 1..predicted.len() {
            min_gap = min_gap.min((predicted[i] - predicted[j]).norm());
        }
    }
    let regular = min_gap > 1e-6;
    let cp_m0 = char_poly(&sd.m0);
    let cp_pred = poly_from_roots(&predicted);
    let charpoly_residual = cp_m0.iter().zip(&cp_pred).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
    let eigenvalue_distance = regular.then(|| multiset_distance(&eigenvalues(&sd.m0), &predicted));
    let passed = match eigenvalue_distance {
        Some(d) => d < tol,
        None => charpoly_residual < tol,
    };
    SemisimpleReport { regular, eigenvalue_distance, charpoly_residual, tol, passed }
}

/// Monic polynomial with the given roots, lowest degree first.
pub fn poly_from_roots(roots: &[Complex64]) -> Vec<Complex64> {
    let mut p = vec![Complex64::new(1.0, 0.0)];
    for r in roots {
        let mut q = vec![Complex64::new(0.0, 0.0); p.len() + 1];
        for (k, c) in p.iter().enumerate() {
            q[k + 1] += c;
            q[k] -= c * r;
        }
        p = q;
    }
    p
}

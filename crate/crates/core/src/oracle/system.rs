use crate::chevalley::ChevalleyAlgebra;
use crate::error::{Error, Result};
use crate::rep::{Representation, SparseMatrix};
use crate::rootcore::{AlgebraType, Family, RootSystem};
use crate::steinberg::alcove::AsymptoticData;
use crate::surd::Surd;
use nalgebra::DMatrix;
use num_complex::Complex64;
use num_rational::Rational64;
use num_traits::{One, Zero};

/// The defining representation of `sl_{rank+1}` by matrix units:
/// `H_{α_i} = E_{ii} − E_{i+1,i+1}`, `e_{α_i} = E_{i,i+1}`, `e_{−α_i} = E_{i+1,i}`,
/// and `e_{x_i − x_j} = ±E_{ij}` with the sign forced by the structure
/// constants. The result is checked exactly against them.
pub fn standard_rep_sl(rank: usize) -> Result<(ChevalleyAlgebra, Representation)> {
    let ty = AlgebraType::new(Family::A, rank)?;
    let alg = ChevalleyAlgebra::new(RootSystem::new(ty)?)?;
    let n = rank + 1;
    let root = |i: usize, j: usize| -> Vec<i64> {
        // x_i − x_j = ±(α_a + ⋯ + α_{b−1})
        let (a, b, sign) = if i < j { (i, j, 1) } else { (j, i, -1) };
        (0..rank).map(|k| if (a..b).contains(&k) { sign } else { 0 }).collect()
    };
    // sign[i][j] with e_{x_i − x_j} = sign · E_{ij}, by increasing |i − j|
    let mut sign = vec![vec![0i64; n]; n];
    for d in 1..n {
        for i in 0..n - d {
            let j = i + d;
            if d == 1 {
                sign[i][j] = 1;
                sign[j][i] = 1;
                continue;
            }
            // e_{x_i−x_j} = [e_{α_i}, e_{x_{i+1}−x_j}] / N, and [E_{i,i+1}, E_{i+1,j}] = E_{ij}
            let np = alg.n_integral(&root(i, i + 1), &root(i + 1, j));
            sign[i][j] = sign[i + 1][j] * np;
            // e_{x_j−x_i} = [e_{−α_i}, e_{x_j−x_{i+1}}] / N, and [E_{i+1,i}, E_{j,i+1}] = −E_{ji}
            let nm = alg.n_integral(&root(i + 1, i), &root(j, i + 1));
            sign[j][i] = -sign[j][i + 1] * nm;
        }
    }
    let mut matrices = vec![SparseMatrix::zeros(n); alg.dim()];
    for (i, h) in matrices.iter_mut().enumerate().take(rank) {
        h.add_entry(i, i, Surd::one());
        h.add_entry(i + 1, i + 1, -Surd::one());
    }
    for i in 0..n {
        for j in 0..n {
            if i != j {
                let idx = alg.e_index(&root(i, j)).expect("x_i − x_j is a root");
                matrices[idx].add_entry(i, j, Surd::from_int(sign[i][j]));
            }
        }
    }
    // weight of basis vector j is x_j = ω_1 − α_1 − ⋯ − α_j
    let omega1 = crate::rep::fundamental_weight(&alg.rs, 0);
    let weights = (0..n)
        .map(|j| (0..rank).map(|k| omega1[k] - if k < j { Rational64::one() } else { Rational64::zero() }).collect())
        .collect();
    let mut hw = vec![0; rank];
    hw[0] = 1;
    let rep = Representation { name: format!("sl{n}-standard"), highest_weight: hw, dim: n, weights, matrices };
    rep.check_homomorphism(&alg)?;
    Ok((alg, rep))
}

/// `dΦ/dλ = A(λ)Φ` with `A(λ) = −(s/N)(z/λ²)η₊ + m/λ`, `η₊ = Σ p_i e_{α_i}`,
/// `p_i = c_i z^{k_i}`.
#[derive(Debug, Clone)]
pub struct MeromorphicSystem {
    pub rank: usize,
    pub size: usize,
    pub s: usize,
    pub n_big: Rational64,
    pub z: f64,
    pub c: Vec<f64>,
    pub k: Vec<Rational64>,
    pub p: Vec<f64>,
    pub data: AsymptoticData,
    pub eta_plus: DMatrix<Complex64>,
    /// Coefficient of `λ^{-2}`.
    pub a_m2: DMatrix<Complex64>,
    /// Coefficient of `λ^{-1}`, i.e. `m`.
    pub a_m1: DMatrix<Complex64>,
    pub alg: ChevalleyAlgebra,
    pub rep: Representation,
}

impl MeromorphicSystem {
    pub fn coefficient(&self, lambda: Complex64) -> DMatrix<Complex64> {
        let inv = Complex64::one() / lambda;
        &self.a_m2 * (inv * inv) + &self.a_m1 * inv
    }

    /// `‖P₀ η₊ P₀⁻¹ − e^{2πi/s} η₊‖`.
    pub fn cyclic_symmetry_residual(&self) -> f64 {
        let p0 = self.rep.principal_element(self.s);
        let p0i = p0.clone().try_inverse().expect("P0 is invertible");
        let w = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / self.s as f64);
        crate::linalg::max_abs(&(&p0 * &self.eta_plus * p0i - &self.eta_plus * w))
    }
}

pub fn build_system(rank: usize, c: &[f64], k: &[Rational64], z: f64) -> Result<MeromorphicSystem> {
    let (alg, rep) = standard_rep_sl(rank)?;
    let rs = &alg.rs;
    let l = rank;
    if c.len() != l + 1 || k.len() != l + 1 {
        return Err(Error::InvalidArgument(format!("c and k need {} entries", l + 1)));
    }
    if !(z > 0.0 && z.is_finite()) {
        return Err(Error::InvalidArgument(format!("z = {z} must be positive")));
    }
    if c.iter().any(|&v| !(v > 0.0 && v.is_finite())) {
        return Err(Error::InvalidArgument("c_i must be positive".into()));
    }
    if k.iter().any(|&v| v < -Rational64::one()) {
        return Err(Error::InvalidArgument("k_i must be at least -1".into()));
    }
    let nu = alg.sigma_nu().nu;
    if let Some(i) = (0..=l).find(|&i| k[i] != k[nu[i]]) {
        return Err(Error::InvalidArgument(format!("k_{i} = {} differs from k_{} = {}", k[i], nu[i], k[nu[i]])));
    }
    let (data, n_big) = AsymptoticData::from_k(rs, k)?;
    let s = rs.coxeter_number;
    let p: Vec<f64> = c.iter().zip(k).map(|(&ci, &ki)| ci * z.powf(crate::linalg::rat_to_f64(ki))).collect();
    let mut eta = vec![Complex64::zero(); alg.dim()];
    for (i, &pi) in p.iter().enumerate() {
        eta[alg.affine_simple_index(i)] = Complex64::new(pi, 0.0);
    }
    crate::spectrum::build_e_plus(&alg, &p.iter().map(|&v| Complex64::new(v, 0.0)).collect::<Vec<_>>())?;
    let eta_plus = rep.matrix(&eta);
    let scale = -(s as f64) / crate::linalg::rat_to_f64(n_big) * z;
    let a_m2 = &eta_plus * Complex64::new(scale, 0.0);
    let mut mvec = vec![Complex64::zero(); alg.dim()];
    for (i, v) in data.m.iter().enumerate() {
        mvec[i] = Complex64::new(crate::linalg::rat_to_f64(*v), 0.0);
    }
    let a_m1 = rep.matrix(&mvec);
    Ok(MeromorphicSystem {
        rank,
        size: rank + 1,
        s,
        n_big,
        z,
        c: c.to_vec(),
        k: k.to_vec(),
        p,
        data,
        eta_plus,
        a_m2,
        a_m1,
        alg,
        rep,
    })
}

//! Spectrum of `ad(E₊)` for `E₊ = Σ_{i=0}^l c_i e_{α_i}` and its comparison
//! with the Coxeter plane.

use crate::chevalley::ChevalleyAlgebra;
use crate::coxeter::{Bipartition, CoxeterPlaneDiagram};
use crate::error::{Error, Result};
use crate::linalg::hungarian;
use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::Serialize;
use std::f64::consts::PI;

/// Largest algebra dimension the dense eigensolver is used for.
pub const DIMENSION_CAP: usize = 250;

#[derive(Debug, Clone)]
pub struct EPlusElement {
    /// `c_0, …, c_l`.
    pub coeffs: Vec<Complex64>,
    pub element: Vec<Complex64>,
    pub ad: DMatrix<Complex64>,
    pub kernel_dim: usize,
}

/// `√q_i`, the default coefficients.
pub fn default_coeffs(alg: &ChevalleyAlgebra) -> Vec<Complex64> {
    alg.rs.marks.iter().map(|&q| Complex64::new((q as f64).sqrt(), 0.0)).collect()
}

pub fn build_e_plus(alg: &ChevalleyAlgebra, coeffs: &[Complex64]) -> Result<EPlusElement> {
    let l = alg.rank();
    if coeffs.len() != l + 1 {
        return Err(Error::InvalidArgument(format!("expected {} coefficients", l + 1)));
    }
    if coeffs.iter().any(|c| c.norm() == 0.0) {
        return Err(Error::InvalidArgument("E+ coefficient must be nonzero".into()));
    }
    if alg.dim() > DIMENSION_CAP {
        return Err(Error::InvalidArgument(format!("dimension {} above cap {DIMENSION_CAP}", alg.dim())));
    }
    let mut element = alg.zero::<Complex64>();
    for (i, &c) in coeffs.iter().enumerate() {
        element[alg.affine_simple_index(i)] = c;
    }
    let ad = alg.ad(&element);
    let sv = ad.clone().svd(false, false).singular_values;
    let smax = sv.iter().copied().fold(0.0, f64::max);
    let kernel_dim = sv.iter().filter(|&&x| x <= 1e-8 * smax.max(1.0)).count();
    if kernel_dim != l {
        return Err(Error::Regularity { found: kernel_dim, expected: l });
    }
    Ok(EPlusElement { coeffs: coeffs.to_vec(), element, ad, kernel_dim })
}

#[derive(Debug, Clone, Serialize)]
pub struct RayCluster {
    pub angle: f64,
    pub count: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct SpectrumReport {
    pub s: usize,
    /// All eigenvalues, sorted by (|λ| rounded, arg).
    pub eigenvalues: Vec<Complex64>,
    pub zero_multiplicity: usize,
    /// Ray index (0-based, counterclockwise from `base_angle`) per nonzero eigenvalue,
    /// in the order of `nonzero`.
    pub nonzero: Vec<Complex64>,
    pub ray_index: Vec<usize>,
    pub base_angle: f64,
    pub rays: Vec<RayCluster>,
    pub max_angle_residual: f64,
    /// Multiset distance between the spectrum and its rotation by `e^{2πi/s}`.
    pub rotation_residual: f64,
    pub clustered: bool,
}

pub fn ad_spectrum(ep: &EPlusElement, s: usize, tol: f64) -> SpectrumReport {
    let mut eig = crate::linalg::eigenvalues(&ep.ad);
    let scale = eig.iter().map(|z| z.norm()).fold(0.0, f64::max).max(1.0);
    eig.sort_by(|a, b| {
        let ka = ((a.norm() / scale * 1e6).round(), a.arg());
        let kb = ((b.norm() / scale * 1e6).round(), b.arg());
        ka.partial_cmp(&kb).unwrap()
    });
    let zero_tol = 1e-7 * scale;
    let zero_multiplicity = eig.iter().filter(|z| z.norm() <= zero_tol).count();
    let nonzero: Vec<Complex64> = eig.iter().copied().filter(|z| z.norm() > zero_tol).collect();

    let step = PI / s as f64;
    let nrays = 2 * s;
    // Base angle modulo π/s from the circular mean of 2s·arg.
    let mean = nonzero.iter().fold(Complex64::new(0.0, 0.0), |acc, z| {
        acc + Complex64::from_polar(1.0, nrays as f64 * z.arg())
    });
    let base_angle = mean.arg() / nrays as f64;
    let mut ray_index = Vec::with_capacity(nonzero.len());
    let mut counts = vec![0usize; nrays];
    let mut max_res: f64 = 0.0;
    for z in &nonzero {
        let x = (z.arg() - base_angle) / step;
        let k = x.round();
        max_res = max_res.max((x - k).abs() * step);
        let idx = (k as i64).rem_euclid(nrays as i64) as usize;
        counts[idx] += 1;
        ray_index.push(idx);
    }
    let rays: Vec<RayCluster> =
        (0..nrays).map(|k| RayCluster { angle: base_angle + k as f64 * step, count: counts[k] }).collect();
    let clustered = max_res <= tol && counts.iter().all(|&c| c > 0) && zero_multiplicity == ep.kernel_dim;

    let w = Complex64::from_polar(1.0, 2.0 * PI / s as f64);
    let rotated: Vec<Complex64> = nonzero.iter().map(|z| z * w).collect();
    let rotation_residual = crate::linalg::multiset_distance(&nonzero, &rotated) / scale;

    SpectrumReport {
        s,
        eigenvalues: eig,
        zero_multiplicity,
        nonzero,
        ray_index,
        base_angle,
        rays,
        max_angle_residual: max_res,
        rotation_residual,
        clustered,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PlaneAlignment {
    pub kappa: Complex64,
    pub max_residual: f64,
    /// `matched[root index] = index into SpectrumReport::nonzero`.
    pub matched: Vec<usize>,
    /// Whether each plane ray carries as many eigenvalues as roots.
    pub ray_counts_match: bool,
}

/// Find `κ` with `{κ·coord(α)}` equal to the nonzero spectrum.
pub fn match_plane(
    sr: &SpectrumReport,
    plane: &CoxeterPlaneDiagram,
    rs_pi2_first: usize,
    tol: f64,
) -> Result<PlaneAlignment> {
    let n = plane.coords.len();
    if sr.nonzero.len() != n {
        return Err(Error::Mismatch { residual: f64::INFINITY });
    }
    let anchor = plane.coords[rs_pi2_first];
    let greedy = |kappa: Complex64| -> f64 {
        plane
            .coords
            .iter()
            .map(|c| sr.nonzero.iter().map(|z| (kappa * c - z).norm()).fold(f64::INFINITY, f64::min))
            .fold(0.0, f64::max)
    };
    let mut best = (f64::INFINITY, Complex64::new(0.0, 0.0));
    for z in &sr.nonzero {
        let kappa = z / anchor;
        let r = greedy(kappa);
        if r < best.0 {
            best = (r, kappa);
        }
    }
    let kappa = best.1;
    let cost: Vec<Vec<f64>> =
        plane.coords.iter().map(|c| sr.nonzero.iter().map(|z| (kappa * c - z).norm()).collect()).collect();
    let matched = hungarian(&cost);
    let max_residual = matched.iter().enumerate().map(|(i, &j)| cost[i][j]).fold(0.0, f64::max);
    if max_residual > tol {
        return Err(Error::Mismatch { residual: max_residual });
    }
    let ray_counts_match = plane.assignment.iter().all(|ray| {
        let mut eig_rays: Vec<usize> = ray.iter().map(|&k| sr.ray_index[matched[k]]).collect();
        eig_rays.dedup();
        eig_rays.len() <= 1
            && eig_rays.first().is_none_or(|&r| sr.rays[r].count == ray.len())
    });
    Ok(PlaneAlignment { kappa, max_residual, matched, ray_counts_match })
}

/// Index of the first `Π₂` root, the anchor used by [`match_plane`].
pub fn pi2_anchor(alg: &ChevalleyAlgebra, bip: &Bipartition) -> usize {
    alg.rs.index_of(&alg.rs.simple_root(bip.i2[0]).coords).unwrap()
}

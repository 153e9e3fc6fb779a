//! Monodromy around `|λ| = R` against `P₀^{-s} (M⁰)^s`.

use super::dopri::{integrate, IntegratorStats, Tolerances};
use super::system::MeromorphicSystem;
use crate::error::Result;
use crate::linalg::char_poly;
use crate::steinberg::characters::DIMENSION_CAP;
use crate::steinberg::StokesContext;
use nalgebra::DMatrix;
use num_complex::Complex64;
use std::f64::consts::PI;

#[derive(Debug, Clone)]
pub struct MonodromyReport {
    pub radius: f64,
    pub numerical: DMatrix<Complex64>,
    pub numerical_charpoly: Vec<Complex64>,
    /// `P₀^{-s} (M⁰)^s`.
    pub predicted: DMatrix<Complex64>,
    pub predicted_charpoly: Vec<Complex64>,
    /// The scalar `P₀^{-s}` in the standard representation.
    pub central_factor: Complex64,
    pub residual: f64,
    pub tol: f64,
    pub passed: bool,
    pub stats: IntegratorStats,
}

pub fn default_tolerances() -> Tolerances {
    Tolerances { rtol: 1e-12, atol: 1e-12, max_step: 2.0 * PI / 256.0, max_steps: 2_000_000 }
}

/// `Φ(2π)` for `dΦ/dθ = iλ A(λ) Φ`, `λ = R e^{iθ}`, `Φ(0) = I`.
pub fn integrate_loop(sys: &MeromorphicSystem, radius: f64, tol: Tolerances) -> Result<(DMatrix<Complex64>, IntegratorStats)> {
    let f = |theta: f64, phi: &DMatrix<Complex64>| {
        let lambda = Complex64::from_polar(radius, theta);
        sys.coefficient(lambda) * phi * (Complex64::i() * lambda)
    };
    integrate(f, 0.0, 2.0 * PI, DMatrix::identity(sys.size, sys.size), tol)
}

/// `P₀^{-s} (M⁰)^s` from the Stokes-data pipeline for the same `m`.
pub fn predicted_monodromy(sys: &MeromorphicSystem) -> Result<(DMatrix<Complex64>, Complex64)> {
    let ctx = StokesContext::new(&sys.alg, DIMENSION_CAP)?;
    let sd = ctx.stokes_from_asymptotics(&sys.rep, &sys.data.m)?;
    let s = sys.s;
    let mut ms = DMatrix::identity(sys.size, sys.size);
    for _ in 0..s {
        ms = &ms * &sd.m0;
    }
    let mut p0s = DMatrix::identity(sys.size, sys.size);
    for _ in 0..s {
        p0s = &p0s * &sd.p0;
    }
    let central = Complex64::new(1.0, 0.0) / p0s[(0, 0)];
    Ok((ms * central, central))
}

pub fn numerical_monodromy(sys: &MeromorphicSystem, radius: f64, tol: f64) -> Result<MonodromyReport> {
    let (numerical, stats) = integrate_loop(sys, radius, default_tolerances())?;
    let (predicted, central_factor) = predicted_monodromy(sys)?;
    let numerical_charpoly = char_poly(&numerical);
    let predicted_charpoly = char_poly(&predicted);
    let residual = numerical_charpoly
        .iter()
        .zip(&predicted_charpoly)
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max);
    Ok(MonodromyReport {
        radius,
        numerical,
        numerical_charpoly,
        predicted,
        predicted_charpoly,
        central_factor,
        residual,
        tol,
        passed: residual < tol,
        stats,
    })
}

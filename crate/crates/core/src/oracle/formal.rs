//! Formal solution `Ψ_f = P (Σ Y_k λ^k) exp Υ(λ)` at the double pole.

use super::system::MeromorphicSystem;
use crate::error::{Error, Result};
use crate::linalg::{eigenvalues, max_abs};
use nalgebra::DMatrix;
use num_complex::Complex64;

pub const MAX_ORDER: usize = 30;

#[derive(Debug, Clone)]
pub struct FormalSolution {
    pub order: usize,
    /// Diagonalizes the leading coefficient.
    pub p: DMatrix<Complex64>,
    /// `Λ_{-1}, Λ_0, …, Λ_{K-1}` (diagonal).
    pub lambda: Vec<DMatrix<Complex64>>,
    /// `Y_0 = I, Y_1, …, Y_K` (off-diagonal for `k ≥ 1`).
    pub y: Vec<DMatrix<Complex64>>,
    /// Largest entry of the substituted equation at `λ^{j-2}`, `j = 0..=K`.
    pub residuals: Vec<f64>,
}

impl FormalSolution {
    pub fn lambda0(&self) -> &DMatrix<Complex64> {
        &self.lambda[1]
    }

    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().copied().fold(0.0, f64::max)
    }
}

fn diag_part(m: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    DMatrix::from_diagonal(&m.diagonal())
}

/// Eigenvector basis of a matrix with distinct eigenvalues.
fn diagonalize(a: &DMatrix<Complex64>) -> Result<DMatrix<Complex64>> {
    let n = a.nrows();
    let ev = eigenvalues(a);
    let scale = max_abs(a).max(1.0);
    for i in 0..n {
        for j in i + 1..n {
            if (ev[i] - ev[j]).norm() < 1e-8 * scale {
                return Err(Error::NumericFailure("leading coefficient is not regular".into()));
            }
        }
    }
    let mut p = DMatrix::zeros(n, n);
    for (j, &l) in ev.iter().enumerate() {
        let shifted = a - DMatrix::identity(n, n) * l;
        let svd = shifted.svd(false, true);
        let vt = svd.v_t.ok_or_else(|| Error::NumericFailure("SVD failed".into()))?;
        let k = svd.singular_values.imin();
        for i in 0..n {
            p[(i, j)] = vt[(k, i)].conj();
        }
    }
    Ok(p)
}

/// Solve `Λ_{k-1} + [Y_k, Λ_{-1}] = F_{k-1}` order by order.
pub fn formal_solution(sys: &MeromorphicSystem, order: usize) -> Result<FormalSolution> {
    if order > MAX_ORDER {
        return Err(Error::InvalidArgument(format!("order {order} above {MAX_ORDER}")));
    }
    let n = sys.size;
    let p = diagonalize(&sys.a_m2)?;
    let pinv = p.clone().try_inverse().ok_or_else(|| Error::NumericFailure("eigenvector basis is singular".into()))?;
    // B_j = P⁻¹ A_j P for j = -1, 0
    let b = [&pinv * &sys.a_m2 * &p, &pinv * &sys.a_m1 * &p];
    let d: Vec<Complex64> = b[0].diagonal().iter().copied().collect();
    let bcoef = |j: i64| -> Option<&DMatrix<Complex64>> {
        match j {
            -1 => Some(&b[0]),
            0 => Some(&b[1]),
            _ => None,
        }
    };
    let mut lambda = vec![diag_part(&b[0])];
    let mut y = vec![DMatrix::identity(n, n)];
    for k in 1..=order {
        let km = k as i64;
        let mut f = bcoef(km - 1).cloned().unwrap_or_else(|| DMatrix::zeros(n, n));
        for nn in 1..k {
            if let Some(bj) = bcoef(km - 1 - nn as i64) {
                f += bj * &y[nn];
            }
            // lambda[j + 1] holds Λ_j
            f -= &y[nn] * &lambda[k - nn];
        }
        if k >= 2 {
            f -= &y[k - 1] * Complex64::new((k - 1) as f64, 0.0);
        }
        lambda.push(diag_part(&f));
        let mut yk = DMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    yk[(i, j)] = f[(i, j)] / (d[j] - d[i]);
                }
            }
        }
        y.push(yk);
    }
    let residuals = substitution_residuals(&b, &lambda, &y);
    Ok(FormalSolution { order, p, lambda, y, residuals })
}

/// Coefficients of `Y' + Y Υ' − B Y` at `λ^{j-2}` for `j = 0..=K`, where
/// `Υ' = Σ_{i ≥ -1} Λ_i λ^{i-1}`.
fn substitution_residuals(
    b: &[DMatrix<Complex64>; 2],
    lambda: &[DMatrix<Complex64>],
    y: &[DMatrix<Complex64>],
) -> Vec<f64> {
    let order = y.len() - 1;
    let n = y[0].nrows();
    (0..=order)
        .map(|j| {
            let mut r = DMatrix::<Complex64>::zeros(n, n);
            if j >= 1 {
                r += &y[j - 1] * Complex64::new(j as f64 - 1.0, 0.0);
            }
            // Y_a Λ_{c} with a + c + 1 = j
            for a in 0..=j {
                let c = j as i64 - a as i64 - 1;
                if let Some(l) = lambda.get((c + 1) as usize) {
                    r += &y[a] * l;
                }
            }
            r -= &b[0] * &y[j];
            if j >= 1 {
                r -= &b[1] * &y[j - 1];
            }
            max_abs(&r)
        })
        .collect()
}

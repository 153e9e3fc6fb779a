//! Dormand–Prince 5(4) for complex matrix-valued ODEs.

use crate::error::{Error, Result};
use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::Serialize;

#[derive(Debug, Clone, Copy, Default, Serialize)]
pub struct IntegratorStats {
    pub accepted: usize,
    pub rejected: usize,
    pub evaluations: usize,
}

#[derive(Debug, Clone, Copy)]
pub struct Tolerances {
    pub rtol: f64,
    pub atol: f64,
    pub max_step: f64,
    pub max_steps: usize,
}

const C: [f64; 7] = [0.0, 1.0 / 5.0, 3.0 / 10.0, 4.0 / 5.0, 8.0 / 9.0, 1.0, 1.0];
const A: [[f64; 6]; 7] = [
    [0.0; 6],
    [1.0 / 5.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [3.0 / 40.0, 9.0 / 40.0, 0.0, 0.0, 0.0, 0.0],
    [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0, 0.0, 0.0, 0.0],
    [19372.0 / 6561.0, -25360.0 / 2187.0, 64448.0 / 6561.0, -212.0 / 729.0, 0.0, 0.0],
    [9017.0 / 3168.0, -355.0 / 33.0, 46732.0 / 5247.0, 49.0 / 176.0, -5103.0 / 18656.0, 0.0],
    [35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0],
];
const B5: [f64; 7] = [35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0, 0.0];
const B4: [f64; 7] = [
    5179.0 / 57600.0,
    0.0,
    7571.0 / 16695.0,
    393.0 / 640.0,
    -92097.0 / 339200.0,
    187.0 / 2100.0,
    1.0 / 40.0,
];

/// Integrate `dY/dt = f(t, Y)` from `t0` to `t1`.
pub fn integrate<F>(f: F, t0: f64, t1: f64, y0: DMatrix<Complex64>, tol: Tolerances) -> Result<(DMatrix<Complex64>, IntegratorStats)>
where
    F: Fn(f64, &DMatrix<Complex64>) -> DMatrix<Complex64>,
{
    let mut stats = IntegratorStats::default();
    let mut t = t0;
    let mut y = y0;
    let mut h = tol.max_step.min(t1 - t0);
    let mut k1 = f(t, &y);
    stats.evaluations += 1;
    while t < t1 {
        if stats.accepted + stats.rejected >= tol.max_steps {
            return Err(Error::Integrator(format!(
                "step budget exhausted at t = {t} ({} accepted, {} rejected)",
                stats.accepted, stats.rejected
            )));
        }
        h = h.min(t1 - t);
        let mut k: Vec<DMatrix<Complex64>> = vec![k1.clone()];
        for s in 1..7 {
            let mut ys = y.clone();
            for (j, kj) in k.iter().enumerate() {
                if A[s][j] != 0.0 {
                    ys += kj * Complex64::new(h * A[s][j], 0.0);
                }
            }
            k.push(f(t + C[s] * h, &ys));
        }
        stats.evaluations += 6;
        let mut y5 = y.clone();
        let mut err = DMatrix::<Complex64>::zeros(y.nrows(), y.ncols());
        for s in 0..7 {
            if B5[s] != 0.0 {
                y5 += &k[s] * Complex64::new(h * B5[s], 0.0);
            }
            err += &k[s] * Complex64::new(h * (B5[s] - B4[s]), 0.0);
        }
        let mut en: f64 = 0.0;
        for ((e, a), b) in err.iter().zip(y.iter()).zip(y5.iter()) {
            let sc = tol.atol + tol.rtol * a.norm().max(b.norm());
            en = en.max(e.norm() / sc);
        }
        if !en.is_finite() {
            return Err(Error::Integrator(format!("non-finite state at t = {t}")));
        }
        if en <= 1.0 {
            t += h;
            y = y5;
            // first-same-as-last
            k1 = k.pop().unwrap();
            stats.accepted += 1;
        } else {
            stats.rejected += 1;
        }
        let fac = if en == 0.0 { 5.0 } else { (0.9 * en.powf(-0.2)).clamp(0.2, 5.0) };
        h = (h * fac).min(tol.max_step);
        if h < 1e-14 * (t1 - t0).abs() {
            return Err(Error::Integrator(format!("step size underflow at t = {t}")));
        }
    }
    Ok((y, stats))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponential() {
        let a = DMatrix::from_row_slice(2, 2, &[Complex64::new(0.0, 1.0), Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0), Complex64::new(-0.5, 0.0)]);
        let tol = Tolerances { rtol: 1e-12, atol: 1e-14, max_step: 0.1, max_steps: 100_000 };
        let (y, _) = integrate(|_, y| &a * y, 0.0, 2.0, DMatrix::identity(2, 2), tol).unwrap();
        let exact = (a * Complex64::new(2.0, 0.0)).exp();
        assert!((y - exact).iter().all(|z| z.norm() < 1e-10));
    }
}

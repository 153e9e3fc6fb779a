//! Small dense linear-algebra helpers that nalgebra does not cover directly:
//! exact rational elimination, characteristic polynomials, assignment, and
//! exp/log of nilpotent and unipotent matrices.

use nalgebra::DMatrix;
use num_complex::Complex64;
use num_rational::Rational64;
use num_traits::{One, Zero};

pub type RatMatrix = Vec<Vec<Rational64>>;

/// Inverse of a square rational matrix, `None` if singular.
pub fn rat_inverse(a: &RatMatrix) -> Option<RatMatrix> {
    let n = a.len();
    let mut m: RatMatrix = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational64::one() } else { Rational64::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        let p = m[col][col];
        for x in m[col].iter_mut() {
            *x /= p;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col];
                for c in 0..2 * n {
                    let v = m[col][c];
                    m[r][c] -= f * v;
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn rat_mat_vec(a: &RatMatrix, v: &[Rational64]) -> Vec<Rational64> {
    a.iter()
        .map(|row| row.iter().zip(v).fold(Rational64::zero(), |acc, (x, y)| acc + x * y))
        .collect()
}

pub fn rat_dot(a: &[Rational64], b: &[Rational64]) -> Rational64 {
    a.iter().zip(b).fold(Rational64::zero(), |acc, (x, y)| acc + x * y)
}

pub fn rat_to_f64(r: Rational64) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// Characteristic polynomial `det(x I - A)` by Berkowitz's division-free
/// algorithm. Coefficients are returned lowest degree first, so the result
/// has length `n + 1` and ends with 1.
pub fn char_poly(a: &DMatrix<Complex64>) -> Vec<Complex64> {
    let n = a.nrows();
    assert_eq!(n, a.ncols());
    if n == 0 {
        return vec![Complex64::one()];
    }
    // Berkowitz builds the coefficient vector of det(xI - A_r) for leading
    // principal submatrices A_r, highest degree first.
    let mut c: Vec<Complex64> = vec![Complex64::one(), -a[(0, 0)]];
    for r in 1..n {
        // A_{r+1} = [[A_r, col], [row, a_rr]]
        let ar = a.view((0, 0), (r, r)).into_owned();
        let col = a.view((0, r), (r, 1)).into_owned();
        let row = a.view((r, 0), (1, r)).into_owned();
        let arr = a[(r, r)];
        // Toeplitz column: 1, -a_rr, -row·col, -row·A·col, ...
        let mut t = vec![Complex64::one(), -arr];
        let mut v = col.clone();
        for _ in 0..r {
            let s = (&row * &v)[(0, 0)];
            t.push(-s);
            v = &ar * v;
        }
        // new c = T * c, T lower-triangular Toeplitz of size (r+2)x(r+1)
        let mut nc = vec![Complex64::zero(); r + 2];
        for (i, slot) in nc.iter_mut().enumerate() {
            for (j, cj) in c.iter().enumerate() {
                if i >= j && i - j < t.len() {
                    *slot += t[i - j] * cj;
                }
            }
        }
        c = nc;
    }
    c.reverse();
    c
}

/// `tr Λ^k A` as the sum of all `k x k` principal minors.
pub fn principal_minor_sum(a: &DMatrix<Complex64>, k: usize) -> Complex64 {
    let n = a.nrows();
    let mut total = Complex64::zero();
    let mut idx: Vec<usize> = (0..k).collect();
    if k == 0 {
        return Complex64::one();
    }
    if k > n {
        return total;
    }
    loop {
        let sub = DMatrix::from_fn(k, k, |i, j| a[(idx[i], idx[j])]);
        total += sub.determinant();
        // next combination
        let mut i = k;
        loop {
            if i == 0 {
                return total;
            }
            i -= 1;
            if idx[i] < n - k + i {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// `exp(A)` for nilpotent `A`, summed until the power vanishes.
pub fn exp_nilpotent(a: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    let n = a.nrows();
    let mut result = DMatrix::<Complex64>::identity(n, n);
    let mut term = DMatrix::<Complex64>::identity(n, n);
    for k in 1..=n {
        term = &term * a / Complex64::new(k as f64, 0.0);
        if term.iter().all(|z| z.norm() == 0.0) {
            break;
        }
        result += &term;
    }
    result
}

/// `log(U)` for unipotent `U`, via the finite series in `U - I`.
pub fn log_unipotent(u: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    let n = u.nrows();
    let x = u - DMatrix::<Complex64>::identity(n, n);
    let mut result = DMatrix::<Complex64>::zeros(n, n);
    let mut power = x.clone();
    for k in 1..=n {
        let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
        result += &power * Complex64::new(sign / k as f64, 0.0);
        power = &power * &x;
    }
    result
}

/// Minimum-cost perfect assignment on a square cost matrix (Kuhn–Munkres,
/// O(n³) potentials form). Returns `assign[row] = col`.
pub fn hungarian(cost: &[Vec<f64>]) -> Vec<usize> {
    let n = cost.len();
    let inf = f64::INFINITY;
    let mut u = vec![0.0; n + 1];
    let mut v = vec![0.0; n + 1];
    let mut p = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];
    for i in 1..=n {
        p[0] = i;
        let mut j0 = 0usize;
        let mut minv = vec![inf; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = p[j0];
            let mut delta = inf;
            let mut j1 = 0usize;
            for j in 1..=n {
                if !used[j] {
                    let cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                    if cur < minv[j] {
                        minv[j] = cur;
                        way[j] = j0;
                    }
                    if minv[j] < delta {
                        delta = minv[j];
                        j1 = j;
                    }
                }
            }
            for j in 0..=n {
                if used[j] {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
            if p[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    let mut assign = vec![0usize; n];
    for j in 1..=n {
        if p[j] > 0 {
            assign[p[j] - 1] = j - 1;
        }
    }
    assign
}

/// Match two equal-length complex multisets by minimal total distance and
/// return the largest pointwise distance of that matching.
pub fn multiset_distance(a: &[Complex64], b: &[Complex64]) -> f64 {
    assert_eq!(a.len(), b.len());
    if a.is_empty() {
        return 0.0;
    }
    let cost: Vec<Vec<f64>> = a.iter().map(|x| b.iter().map(|y| (x - y).norm()).collect()).collect();
    let assign = hungarian(&cost);
    assign.iter().enumerate().map(|(i, &j)| cost[i][j]).fold(0.0, f64::max)
}

/// Eigenvalues of a complex matrix from its Schur form.
///
/// The plain QR iteration stalls on matrices whose eigenvalues share a
/// modulus (cyclic permutations, for instance), so on failure the matrix is
/// shifted by a generic complex multiple of the identity and retried.
pub fn eigenvalues(a: &DMatrix<Complex64>) -> Vec<Complex64> {
    let n = a.nrows();
    let scale = max_abs(a).max(1.0);
    let mut shift = Complex64::new(0.0, 0.0);
    for attempt in 0..8 {
        let m = a + DMatrix::identity(n, n) * shift;
        if let Some(schur) = nalgebra::linalg::Schur::try_new(m, f64::EPSILON, 5000) {
            let t = schur.unpack().1;
            return (0..n).map(|i| t[(i, i)] - shift).collect();
        }
        shift = Complex64::new(0.3719 + 0.1 * attempt as f64, 0.6127) * scale;
    }
    panic!("Schur decomposition did not converge");
}

pub fn max_abs(m: &DMatrix<Complex64>) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn rational_inverse_round_trip() {
        let q = |n, d| Rational64::new(n, d);
        let a = vec![vec![q(2, 1), q(-1, 1)], vec![q(-1, 1), q(2, 3)]];
        let inv = rat_inverse(&a).unwrap();
        for i in 0..2 {
            let col: Vec<_> = (0..2).map(|k| inv[k][i]).collect();
            let e = rat_mat_vec(&a, &col);
            for (k, x) in e.iter().enumerate() {
                assert_eq!(*x, if k == i { q(1, 1) } else { q(0, 1) });
            }
        }
        assert!(rat_inverse(&vec![vec![q(1, 1), q(2, 1)], vec![q(2, 1), q(4, 1)]]).is_none());
    }

    #[test]
    fn char_poly_of_companion() {
        // companion of x^3 - 2x^2 + 3x - 5
        let a = DMatrix::from_row_slice(3, 3, &[c(0.), c(0.), c(5.), c(1.), c(0.), c(-3.), c(0.), c(1.), c(2.)]);
        let p = char_poly(&a);
        let want = [-5.0, 3.0, -2.0, 1.0];
        for (x, w) in p.iter().zip(want) {
            assert!((x - c(w)).norm() < 1e-12, "{p:?}");
        }
    }

    #[test]
    fn minors_match_char_poly() {
        let a = DMatrix::from_fn(4, 4, |i, j| Complex64::new((i * 3 + j) as f64 * 0.1 - 0.4, (i as f64 - j as f64) * 0.2));
        let p = char_poly(&a);
        for k in 0..=4 {
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            let want = p[4 - k] * sign;
            assert!((principal_minor_sum(&a, k) - want).norm() < 1e-12);
        }
    }

    #[test]
    fn exp_log_inverse_on_strictly_upper() {
        let a = DMatrix::from_fn(4, 4, |i, j| if j > i { Complex64::new((i + 2 * j) as f64, 1.0) } else { c(0.) });
        let back = log_unipotent(&exp_nilpotent(&a));
        assert!(max_abs(&(back - a)) < 1e-10);
    }

    #[test]
    fn hungarian_finds_permutation() {
        let cost = vec![vec![4.0, 1.0, 3.0], vec![2.0, 0.0, 5.0], vec![3.0, 2.0, 2.0]];
        let a = hungarian(&cost);
        let total: f64 = a.iter().enumerate().map(|(i, &j)| cost[i][j]).sum();
        assert_eq!(total, 5.0);
    }
}

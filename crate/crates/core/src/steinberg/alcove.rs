//! Asymptotic data `m` and the alcove point `y = (m + x₀)/s`.

use crate::error::{Error, Result};
use crate::rootcore::RootSystem;
use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::Serialize;

/// `m` in the H-basis together with the affine values `α_i(m)`, `i = 0..=l`.
#[derive(Debug, Clone, Serialize)]
pub struct AsymptoticData {
    pub m: Vec<Rational64>,
    pub affine_values: Vec<Rational64>,
}

impl AsymptoticData {
    pub fn from_m(rs: &RootSystem, m: Vec<Rational64>) -> Self {
        let affine_values = affine_values(rs, &m);
        AsymptoticData { m, affine_values }
    }

    /// From exponents `k_0..k_l` via `α_i(m) = (s/N)(k_i + 1) − 1`,
    /// `N = s + Σ q_i k_i`. Returns the data and `N`.
    pub fn from_k(rs: &RootSystem, k: &[Rational64]) -> Result<(Self, Rational64)> {
        let l = rs.rank;
        if k.len() != l + 1 {
            return Err(Error::InvalidArgument(format!("expected {} exponents k_0..k_{l}, got {}", l + 1, k.len())));
        }
        let s = Rational64::from_integer(rs.coxeter_number as i64);
        let n = s + rs.marks.iter().zip(k).map(|(q, k)| k * *q).sum::<Rational64>();
        if n <= Rational64::zero() {
            return Err(Error::InvalidArgument(format!("N = {n} must be positive")));
        }
        let a: Vec<Rational64> = (1..=l).map(|i| s * (k[i] + Rational64::one()) / n - Rational64::one()).collect();
        let m = from_simple_values(rs, &a);
        Ok((AsymptoticData::from_m(rs, m), n))
    }

    /// Integer convenience form of [`from_k`](Self::from_k).
    pub fn from_k_int(rs: &RootSystem, k: &[i64]) -> Result<(Self, Rational64)> {
        let k: Vec<Rational64> = k.iter().map(|&v| Rational64::from_integer(v)).collect();
        Self::from_k(rs, &k)
    }

    pub fn is_admissible(&self) -> bool {
        self.affine_values.iter().all(|v| *v >= -Rational64::one())
    }
}

/// `h` in the H-basis with `α_i(h) = a_i`.
pub fn from_simple_values(rs: &RootSystem, a: &[Rational64]) -> Vec<Rational64> {
    let l = rs.rank;
    let eps = &rs.form_inverse;
    (0..l).map(|k| (0..l).fold(Rational64::zero(), |acc, j| acc + a[j] * eps[k][j])).collect()
}

/// `(α_0(h), α_1(h), …, α_l(h))` with `α_0 = −ψ`.
pub fn affine_values(rs: &RootSystem, h: &[Rational64]) -> Vec<Rational64> {
    let mut out = vec![-rs.eval(&rs.psi.coords, h)];
    out.extend((0..rs.rank).map(|i| rs.eval(&rs.simple_root(i).coords, h)));
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct AlcovePoint {
    pub y: Vec<Rational64>,
    /// `1 − ψ(y)` followed by `α_1(y), …, α_l(y)`.
    pub slacks: Vec<Rational64>,
    pub in_alcove: bool,
    /// `α_i(m) ≥ −1` for `i = 0..=l`, evaluated on `m` directly.
    pub admissible: bool,
    pub sigma_fixed: bool,
}

impl AlcovePoint {
    pub fn y_f64(&self) -> Vec<f64> {
        self.y.iter().map(|&r| crate::linalg::rat_to_f64(r)).collect()
    }

    /// Point of the σ-fixed alcove.
    pub fn in_sigma_alcove(&self) -> bool {
        self.in_alcove && self.sigma_fixed
    }
}

pub fn alcove_map(rs: &RootSystem, m: &[Rational64]) -> AlcovePoint {
    let s = Rational64::from_integer(rs.coxeter_number as i64);
    let x0 = rs.x0();
    let y: Vec<Rational64> = m.iter().zip(&x0).map(|(a, b)| (a + b) / s).collect();
    let mut slacks = affine_values(rs, &y);
    slacks[0] += Rational64::one();
    let in_alcove = slacks.iter().all(|v| *v >= Rational64::zero());
    let admissible = affine_values(rs, m).iter().all(|v| *v >= -Rational64::one());
    AlcovePoint { sigma_fixed: is_sigma_fixed(rs, &y), y, slacks, in_alcove, admissible }
}

/// `σ(y) = y` for `y` in the H-basis.
pub fn is_sigma_fixed(rs: &RootSystem, y: &[Rational64]) -> bool {
    let nu = crate::chevalley::diagram_involution(rs);
    (0..rs.rank).all(|i| y[i] == y[nu[i]])
}

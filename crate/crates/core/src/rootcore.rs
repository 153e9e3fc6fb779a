//! Root systems of the simple Lie algebras, with Bourbaki numbering.
//!
//! Everything here is exact. Roots are integer vectors in the simple-root
//! basis, the invariant form is rational and normalised so that long roots
//! have squared length 2. Elements of the Cartan subalgebra are written in
//! the basis `H_{α_1}, …, H_{α_l}`; under the form, `H_α` is identified with
//! `α`, so `β(Σ c_i H_{α_i}) = Σ_{i,j} β_j (α_j, α_i) c_i`.

use crate::error::{Error, Result};
use crate::linalg::{rat_inverse, rat_mat_vec, RatMatrix};
use nalgebra::DMatrix;
use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

/// A (family, rank) pair that names a simple Lie algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AlgebraType {
    pub family: Family,
    pub rank: usize,
}

impl AlgebraType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 2,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(AlgebraType { family, rank })
        } else {
            Err(Error::UnsupportedType(format!("{family:?}{rank}")))
        }
    }

    pub fn is_simply_laced(&self) -> bool {
        matches!(self.family, Family::A | Family::D | Family::E)
    }

    /// Dimension of the Lie algebra.
    pub fn dimension(&self) -> usize {
        let l = self.rank;
        match self.family {
            Family::A => l * (l + 2),
            Family::B | Family::C => l * (2 * l + 1),
            Family::D => l * (2 * l - 1),
            Family::E => [78, 133, 248][l - 6],
            Family::F => 52,
            Family::G => 14,
        }
    }

    /// The types exercised by the batch verifications.
    pub fn standard_list() -> Vec<AlgebraType> {
        use Family::*;
        [
            (A, 2),
            (A, 3),
            (A, 4),
            (A, 5),
            (A, 6),
            (B, 2),
            (B, 3),
            (B, 4),
            (C, 3),
            (D, 4),
            (D, 5),
            (G, 2),
            (F, 4),
            (E, 6),
            (E, 7),
            (E, 8),
        ]
        .into_iter()
        .map(|(f, r)| AlgebraType { family: f, rank: r })
        .collect()
    }
}

impl fmt::Display for AlgebraType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl FromStr for AlgebraType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let fam = chars.next().ok_or_else(|| Error::UnsupportedType(s.to_string()))?;
        let family = match fam.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return Err(Error::UnsupportedType(s.to_string())),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| Error::UnsupportedType(s.to_string()))?;
        AlgebraType::new(family, rank)
    }
}

/// A root, as integer coefficients in the simple-root basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Root {
    pub coords: Vec<i64>,
}

impl Root {
    pub fn new(coords: Vec<i64>) -> Self {
        Root { coords }
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut c = vec![0; rank];
        c[i] = 1;
        Root { coords: c }
    }

    pub fn height(&self) -> i64 {
        self.coords.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0) && self.coords.iter().any(|&c| c > 0)
    }

    pub fn neg(&self) -> Root {
        Root { coords: self.coords.iter().map(|c| -c).collect() }
    }

    pub fn add(&self, other: &Root) -> Root {
        Root { coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect() }
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// The dual data attached to the Cartan subalgebra.
#[derive(Debug, Clone, Serialize)]
pub struct DualData {
    /// `H_{α_i}` in the H-basis (the identity vectors), kept for symmetry.
    pub h_vectors: Vec<Vec<Rational64>>,
    /// `ε_j` in the H-basis, with `α_i(ε_j) = δ_ij`.
    pub epsilon: Vec<Vec<Rational64>>,
    /// `r_i` with `x₀ = Σ r_i H_{α_i}`.
    pub r_coeffs: Vec<Rational64>,
    pub x0: Vec<Rational64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RootSystem {
    pub ty: AlgebraType,
    pub rank: usize,
    /// `cartan[i][j] = ⟨α_j, α_i^∨⟩`.
    pub cartan: Vec<Vec<i64>>,
    /// Gram matrix `(α_i, α_j)`.
    pub form: RatMatrix,
    pub form_inverse: RatMatrix,
    /// All roots in canonical order: lexicographic on (height, coords).
    pub roots: Vec<Root>,
    pub psi: Root,
    /// `q_0 = 1, q_1, …, q_l`.
    pub marks: Vec<i64>,
    pub coxeter_number: usize,
    pub exponents: Vec<usize>,
    pub r_coeffs: Vec<Rational64>,
    #[serde(skip)]
    index: HashMap<Vec<i64>, usize>,
}

fn q(n: i64, d: i64) -> Rational64 {
    Rational64::new(n, d)
}

/// Squared lengths of the simple roots and the Dynkin edges (0-based).
fn diagram(ty: AlgebraType) -> (Vec<Rational64>, Vec<(usize, usize)>) {
    let l = ty.rank;
    let path = |n: usize| (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect::<Vec<_>>();
    match ty.family {
        Family::A => (vec![q(2, 1); l], path(l)),
        Family::B => {
            let mut len = vec![q(2, 1); l];
            len[l - 1] = q(1, 1);
            (len, path(l))
        }
        Family::C => {
            let mut len = vec![q(1, 1); l];
            len[l - 1] = q(2, 1);
            (len, path(l))
        }
        Family::D => {
            let mut e = path(l - 1);
            e.push((l - 3, l - 1));
            (vec![q(2, 1); l], e)
        }
        Family::E => {
            let mut e = vec![(0, 2), (1, 3)];
            e.extend((2..l - 1).map(|i| (i, i + 1)));
            (vec![q(2, 1); l], e)
        }
        Family::F => (vec![q(2, 1), q(2, 1), q(1, 1), q(1, 1)], path(4)),
        Family::G => (vec![q(2, 3), q(2, 1)], path(2)),
    }
}

impl RootSystem {
    pub fn new(ty: AlgebraType) -> Result<Self> {
        let ty = AlgebraType::new(ty.family, ty.rank)?;
        let l = ty.rank;
        let (len, edges) = diagram(ty);
        let mut form = vec![vec![Rational64::zero(); l]; l];
        for i in 0..l {
            form[i][i] = len[i];
        }
        for &(i, j) in &edges {
            let m = if len[i] > len[j] { len[i] } else { len[j] };
            form[i][j] = -m / q(2, 1);
            form[j][i] = form[i][j];
        }
        let cartan: Vec<Vec<i64>> = (0..l)
            .map(|i| {
                (0..l)
                    .map(|j| {
                        let a = q(2, 1) * form[i][j] / form[i][i];
                        assert!(a.is_integer());
                        a.to_integer()
                    })
                    .collect()
            })
            .collect();
        let form_inverse =
            rat_inverse(&form).ok_or_else(|| Error::InvariantViolation("singular Gram matrix".into()))?;

        // Reflection closure.
        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        for i in 0..l {
            let r = Root::simple(l, i).coords;
            seen.insert(r.clone());
            queue.push_back(r);
        }
        while let Some(v) = queue.pop_front() {
            for i in 0..l {
                let w = reflect_coords(&cartan, i, &v);
                if seen.insert(w.clone()) {
                    queue.push_back(w);
                }
            }
        }
        let mut roots: Vec<Root> = seen.into_iter().map(Root::new).collect();
        roots.sort_by(|a, b| (a.height(), &a.coords).cmp(&(b.height(), &b.coords)));
        let index = roots.iter().enumerate().map(|(k, r)| (r.coords.clone(), k)).collect();

        let psi = roots.last().cloned().expect("nonempty root system");
        let mut marks = vec![1i64];
        marks.extend(psi.coords.iter().copied());
        let s = 1 + psi.coords.iter().sum::<i64>() as usize;
        if roots.len() != l * s {
            return Err(Error::InvariantViolation(format!(
                "reflection closure produced {} roots, expected {}",
                roots.len(),
                l * s
            )));
        }

        let r_coeffs: Vec<Rational64> =
            (0..l).map(|k| (0..l).fold(Rational64::zero(), |acc, j| acc + form_inverse[j][k])).collect();

        let mut rs = RootSystem {
            ty,
            rank: l,
            cartan,
            form,
            form_inverse,
            roots,
            psi,
            marks,
            coxeter_number: s,
            exponents: Vec::new(),
            r_coeffs,
            index,
        };
        rs.exponents = rs.coxeter_exponents()?;
        Ok(rs)
    }

    pub fn from_str_type(s: &str) -> Result<Self> {
        RootSystem::new(s.parse()?)
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn index_of(&self, coords: &[i64]) -> Option<usize> {
        self.index.get(coords).copied()
    }

    pub fn is_root(&self, coords: &[i64]) -> bool {
        self.index.contains_key(coords)
    }

    pub fn positive_roots(&self) -> impl Iterator<Item = &Root> {
        self.roots.iter().filter(|r| r.is_positive())
    }

    pub fn simple_root(&self, i: usize) -> Root {
        Root::simple(self.rank, i)
    }

    /// `(a, b)` for vectors in root coordinates.
    pub fn inner(&self, a: &[i64], b: &[i64]) -> Rational64 {
        let mut acc = Rational64::zero();
        for i in 0..self.rank {
            if a[i] == 0 {
                continue;
            }
            for j in 0..self.rank {
                if b[j] != 0 {
                    acc += self.form[i][j] * (a[i] * b[j]);
                }
            }
        }
        acc
    }

    pub fn norm2(&self, a: &Root) -> Rational64 {
        self.inner(&a.coords, &a.coords)
    }

    /// `⟨a, b^∨⟩ = 2(a,b)/(b,b)`.
    pub fn pairing(&self, a: &Root, b: &Root) -> i64 {
        let v = q(2, 1) * self.inner(&a.coords, &b.coords) / self.norm2(b);
        assert!(v.is_integer());
        v.to_integer()
    }

    /// Simple reflection `s_i` on root coordinates.
    pub fn reflect(&self, i: usize, v: &[i64]) -> Vec<i64> {
        reflect_coords(&self.cartan, i, v)
    }

    /// Apply a word of simple reflections, rightmost first: `R_{w0} ∘ … ∘ R_{wk}`.
    pub fn apply_word(&self, word: &[usize], v: &[i64]) -> Vec<i64> {
        word.iter().rev().fold(v.to_vec(), |acc, &i| self.reflect(i, &acc))
    }

    /// Matrix of `s_i` on root coordinates (column `j` is `s_i(α_j)`).
    pub fn reflection_matrix(&self, i: usize) -> Vec<Vec<i64>> {
        let l = self.rank;
        let mut m = vec![vec![0; l]; l];
        for j in 0..l {
            let col = self.reflect(i, &Root::simple(l, j).coords);
            for k in 0..l {
                m[k][j] = col[k];
            }
        }
        m
    }

    /// `β(h)` for `h` in the H-basis.
    pub fn eval(&self, beta: &[i64], h: &[Rational64]) -> Rational64 {
        let gh = rat_mat_vec(&self.form, h);
        beta.iter().zip(&gh).fold(Rational64::zero(), |acc, (b, x)| acc + *x * *b)
    }

    /// Same as [`eval`](Self::eval) with rational weight coordinates.
    pub fn eval_rat(&self, mu: &[Rational64], h: &[Rational64]) -> Rational64 {
        let gh = rat_mat_vec(&self.form, h);
        mu.iter().zip(&gh).fold(Rational64::zero(), |acc, (b, x)| acc + *x * *b)
    }

    pub fn eval_f64(&self, beta: &[f64], h: &[f64]) -> f64 {
        let l = self.rank;
        let mut acc = 0.0;
        for i in 0..l {
            for j in 0..l {
                acc += beta[i] * crate::linalg::rat_to_f64(self.form[i][j]) * h[j];
            }
        }
        acc
    }

    pub fn highest_root_marks(&self) -> (Root, Vec<i64>, usize) {
        (self.psi.clone(), self.marks.clone(), self.coxeter_number)
    }

    pub fn dual_data(&self) -> DualData {
        let l = self.rank;
        let h_vectors = (0..l)
            .map(|i| (0..l).map(|j| if i == j { Rational64::one() } else { Rational64::zero() }).collect())
            .collect();
        let epsilon = (0..l).map(|j| (0..l).map(|k| self.form_inverse[j][k]).collect()).collect();
        DualData { h_vectors, epsilon, r_coeffs: self.r_coeffs.clone(), x0: self.r_coeffs.clone() }
    }

    /// `x₀` in the H-basis.
    pub fn x0(&self) -> Vec<Rational64> {
        self.r_coeffs.clone()
    }

    /// Exponents from the eigenvalue angles of the Coxeter element
    /// `s_1 s_2 ⋯ s_l`.
    fn coxeter_exponents(&self) -> Result<Vec<usize>> {
        let l = self.rank;
        let s = self.coxeter_number as f64;
        let word: Vec<usize> = (0..l).collect();
        let mut m = DMatrix::<f64>::zeros(l, l);
        for j in 0..l {
            let col = self.apply_word(&word, &Root::simple(l, j).coords);
            for k in 0..l {
                m[(k, j)] = col[k] as f64;
            }
        }
        let eig = m.complex_eigenvalues();
        let mut ex = Vec::with_capacity(l);
        for z in eig.iter() {
            let mut a = z.arg() * s / (2.0 * std::f64::consts::PI);
            if a < 0.0 {
                a += s;
            }
            let k = a.round();
            if (a - k).abs() > 1e-6 || (z.norm() - 1.0).abs() > 1e-6 {
                return Err(Error::NumericFailure(format!("Coxeter eigenvalue {z} is not an s-th root of unity")));
            }
            ex.push(k as usize);
        }
        ex.sort_unstable();
        Ok(ex)
    }
}

fn reflect_coords(cartan: &[Vec<i64>], i: usize, v: &[i64]) -> Vec<i64> {
    let p: i64 = v.iter().zip(&cartan[i]).map(|(a, b)| a * b).sum();
    let mut w = v.to_vec();
    w[i] -= p;
    w
}

//! Exact finite-dimensional representations of the Chevalley algebra.
//!
//! Irreducible highest-weight modules are built level by level from the
//! highest weight vector: a candidate `f_i w` is identified by its images
//! under all `e_j`, which is injective below the top in an irreducible
//! module. Matrices are exact over Q(√d).

use crate::chevalley::ChevalleyAlgebra;
use crate::error::{Error, Result};
use crate::linalg::rat_inverse;
use crate::rootcore::{Family, RootSystem};
use crate::surd::Surd;
use nalgebra::DMatrix;
use num_complex::Complex64;
use num_rational::Rational64;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, HashMap};

/// Sparse square matrix as (row, col, value) triples.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct SparseMatrix {
    pub n: usize,
    pub entries: BTreeMap<(usize, usize), Surd>,
}

impl SparseMatrix {
    pub fn zeros(n: usize) -> Self {
        SparseMatrix { n, entries: BTreeMap::new() }
    }

    pub fn add_entry(&mut self, r: usize, c: usize, v: Surd) {
        let e = self.entries.entry((r, c)).or_insert_with(Surd::zero);
        *e += v;
        if e.is_zero() {
            self.entries.remove(&(r, c));
        }
    }

    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        let mut by_row: HashMap<usize, Vec<(usize, Surd)>> = HashMap::new();
        for (&(r, c), &v) in &other.entries {
            by_row.entry(r).or_default().push((c, v));
        }
        let mut out = SparseMatrix::zeros(self.n);
        for (&(r, k), &v) in &self.entries {
            if let Some(row) = by_row.get(&k) {
                for &(c, w) in row {
                    out.add_entry(r, c, v * w);
                }
            }
        }
        out
    }

    pub fn commutator(&self, other: &SparseMatrix) -> SparseMatrix {
        let mut a = self.mul(other);
        for (&(r, c), &v) in &other.mul(self).entries {
            a.add_entry(r, c, -v);
        }
        a
    }

    pub fn scaled(&self, s: Surd) -> SparseMatrix {
        let mut out = SparseMatrix::zeros(self.n);
        for (&(r, c), &v) in &self.entries {
            out.add_entry(r, c, v * s);
        }
        out
    }

    pub fn add(&self, other: &SparseMatrix) -> SparseMatrix {
        let mut out = self.clone();
        for (&(r, c), &v) in &other.entries {
            out.add_entry(r, c, v);
        }
        out
    }

    pub fn to_complex(&self) -> DMatrix<Complex64> {
        let mut m = DMatrix::zeros(self.n, self.n);
        for (&(r, c), v) in &self.entries {
            m[(r, c)] = Complex64::new(v.to_f64(), 0.0);
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }
}

/// A representation with one matrix per algebra basis element.
#[derive(Debug, Clone)]
pub struct Representation {
    pub name: String,
    /// Highest weight in Dynkin labels.
    pub highest_weight: Vec<i64>,
    pub dim: usize,
    /// Weight of each basis vector, in simple-root coordinates.
    pub weights: Vec<Vec<Rational64>>,
    /// `matrices[b]` represents basis element `b` of the algebra.
    pub matrices: Vec<SparseMatrix>,
}

impl Representation {
    /// `ρ(x)` for an element given in the algebra basis.
    pub fn matrix(&self, x: &[Complex64]) -> DMatrix<Complex64> {
        let mut m = DMatrix::zeros(self.dim, self.dim);
        for (b, &c) in x.iter().enumerate() {
            if c.norm() == 0.0 {
                continue;
            }
            for (&(r, col), v) in &self.matrices[b].entries {
                m[(r, col)] += c * v.to_f64();
            }
        }
        m
    }

    pub fn basis_matrix(&self, b: usize) -> DMatrix<Complex64> {
        self.matrices[b].to_complex()
    }

    /// Check `ρ([b_i, b_j]) = [ρ(b_i), ρ(b_j)]` on all basis pairs, exactly.
    pub fn check_homomorphism(&self, alg: &ChevalleyAlgebra) -> Result<()> {
        let d = alg.dim();
        for i in 0..d {
            for j in i + 1..d {
                let lhs = self.matrices[i].commutator(&self.matrices[j]);
                let mut rhs = SparseMatrix::zeros(self.dim);
                for &(k, c) in alg.basis_bracket(i, j) {
                    rhs = rhs.add(&self.matrices[k].scaled(c));
                }
                if lhs != rhs {
                    return Err(Error::InvariantViolation(format!(
                        "{}: representation fails on basis pair ({i},{j})",
                        self.name
                    )));
                }
            }
        }
        Ok(())
    }

    /// `P₀ = exp(2πi x₀/s)`: diagonal, `e^{2πi ht(μ)/s}` on weight `μ`.
    pub fn principal_element(&self, s: usize) -> DMatrix<Complex64> {
        let mut m = DMatrix::zeros(self.dim, self.dim);
        for (k, w) in self.weights.iter().enumerate() {
            let h: Rational64 = w.iter().sum();
            let x = crate::linalg::rat_to_f64(h) / s as f64;
            m[(k, k)] = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * x);
        }
        m
    }
}

struct Vector {
    dynkin: Vec<i64>,
    depth: Vec<i64>,
}

/// Build the irreducible module of highest weight `dynkin` (Dynkin labels),
/// returning weights and the Chevalley generators `X_{±α_i}` with
/// `[X_{α_i}, X_{-α_i}] = H_{α_i}^∨`.
fn highest_weight_module(
    rs: &RootSystem,
    dynkin: &[i64],
    cap: usize,
) -> Result<(Vec<Vector>, Vec<SparseMatrix>, Vec<SparseMatrix>)> {
    let l = rs.rank;
    let mut vectors = vec![Vector { dynkin: dynkin.to_vec(), depth: vec![0; l] }];
    // e[j][v] / f[i][w]: sparse images as lists (target, coeff)
    let mut e: Vec<HashMap<usize, Vec<(usize, Rational64)>>> = vec![HashMap::new(); l];
    let mut f: Vec<HashMap<usize, Vec<(usize, Rational64)>>> = vec![HashMap::new(); l];
    let mut prev: Vec<usize> = vec![0];
    while !prev.is_empty() {
        // candidates grouped by depth vector (which fixes the weight)
        let mut groups: BTreeMap<Vec<i64>, Vec<(usize, usize, BTreeMap<(usize, usize), Rational64>)>> =
            BTreeMap::new();
        for &w in &prev {
            for i in 0..l {
                let mut img: BTreeMap<(usize, usize), Rational64> = BTreeMap::new();
                for j in 0..l {
                    // f_i (e_j w)
                    if let Some(ew) = e[j].get(&w) {
                        for &(u, a) in ew {
                            if let Some(fu) = f[i].get(&u) {
                                for &(v, b) in fu {
                                    *img.entry((j, v)).or_insert_with(Rational64::zero) += a * b;
                                }
                            }
                        }
                    }
                }
                let hw = vectors[w].dynkin[i];
                if hw != 0 {
                    *img.entry((i, w)).or_insert_with(Rational64::zero) += Rational64::from_integer(hw);
                }
                img.retain(|_, v| !v.is_zero());
                if img.is_empty() {
                    continue;
                }
                let mut depth = vectors[w].depth.clone();
                depth[i] += 1;
                groups.entry(depth).or_default().push((i, w, img));
            }
        }
        let mut next = Vec::new();
        for (depth, cands) in groups {
            // reduced rows: (pivot, row, combination over new basis vectors)
            let mut reduced: Vec<((usize, usize), BTreeMap<(usize, usize), Rational64>, BTreeMap<usize, Rational64>)> =
                Vec::new();
            for (i, w, img) in cands {
                let mut x = img.clone();
                let mut comb: BTreeMap<usize, Rational64> = BTreeMap::new();
                for (piv, row, rc) in &reduced {
                    if let Some(&xv) = x.get(piv) {
                        let fct = xv / row[piv];
                        for (k, &rv) in row {
                            let t = x.entry(*k).or_insert_with(Rational64::zero);
                            *t -= fct * rv;
                        }
                        x.retain(|_, v| !v.is_zero());
                        for (&b, &cv) in rc {
                            *comb.entry(b).or_insert_with(Rational64::zero) += fct * cv;
                        }
                    }
                }
                comb.retain(|_, v| !v.is_zero());
                if x.is_empty() {
                    f[i].entry(w).or_default().extend(comb.into_iter());
                } else {
                    let idx = vectors.len();
                    if idx >= cap {
                        return Err(Error::OutOfDeskScale { dim: idx as u128 + 1, cap: cap as u128 });
                    }
                    let mut dk = vectors[w].dynkin.clone();
                    for (k, d) in dk.iter_mut().enumerate() {
                        *d -= rs.cartan[k][i];
                    }
                    vectors.push(Vector { dynkin: dk, depth: depth.clone() });
                    for (&(j, v), &c) in &img {
                        e[j].entry(idx).or_default().push((v, c));
                    }
                    f[i].entry(w).or_default().push((idx, Rational64::one()));
                    let mut rc: BTreeMap<usize, Rational64> = comb.iter().map(|(&b, &c)| (b, -c)).collect();
                    rc.insert(idx, Rational64::one());
                    let piv = *x.keys().next().unwrap();
                    reduced.push((piv, x, rc));
                    next.push(idx);
                }
            }
        }
        prev = next;
    }
    let n = vectors.len();
    let to_mat = |m: &HashMap<usize, Vec<(usize, Rational64)>>| {
        let mut s = SparseMatrix::zeros(n);
        for (&col, list) in m {
            for &(row, v) in list {
                s.add_entry(row, col, Surd::from_rational(v));
            }
        }
        s
    };
    let em = e.iter().map(to_mat).collect();
    let fm = f.iter().map(to_mat).collect();
    Ok((vectors, em, fm))
}

/// Fundamental weight `ω_i` (0-based) in simple-root coordinates.
pub fn fundamental_weight(rs: &RootSystem, i: usize) -> Vec<Rational64> {
    let a: Vec<Vec<Rational64>> =
        rs.cartan.iter().map(|r| r.iter().map(|&x| Rational64::from_integer(x)).collect()).collect();
    let inv = rat_inverse(&a).expect("Cartan matrix is invertible");
    (0..rs.rank).map(|k| inv[k][i]).collect()
}

/// Dynkin labels → simple-root coordinates.
pub fn dynkin_to_root_coords(rs: &RootSystem, dynkin: &[i64]) -> Vec<Rational64> {
    let l = rs.rank;
    let mut out = vec![Rational64::zero(); l];
    for (i, &d) in dynkin.iter().enumerate() {
        if d != 0 {
            for (k, w) in fundamental_weight(rs, i).into_iter().enumerate() {
                out[k] += w * d;
            }
        }
    }
    out
}

impl Representation {
    /// Irreducible module of the given highest weight.
    pub fn highest_weight(alg: &ChevalleyAlgebra, dynkin: &[i64], name: &str) -> Result<Self> {
        let rs = &alg.rs;
        let l = rs.rank;
        let (vectors, em, fm) = highest_weight_module(rs, dynkin, 4096)?;
        let n = vectors.len();
        let top = dynkin_to_root_coords(rs, dynkin);
        let weights: Vec<Vec<Rational64>> = vectors
            .iter()
            .map(|v| top.iter().zip(&v.depth).map(|(t, &d)| *t - Rational64::from_integer(d)).collect())
            .collect();
        let mut matrices = vec![SparseMatrix::zeros(n); alg.dim()];
        for i in 0..l {
            let a = rs.simple_root(i);
            let c = alg.root_scale(&a.coords);
            matrices[alg.e_index(&a.coords).unwrap()] = em[i].scaled(c);
            matrices[alg.e_index(&a.neg().coords).unwrap()] = fm[i].scaled(c);
        }
        for i in 0..l {
            let a = rs.simple_root(i);
            matrices[i] =
                matrices[alg.e_index(&a.coords).unwrap()].commutator(&matrices[alg.e_index(&a.neg().coords).unwrap()]);
        }
        // remaining root vectors by height: e_β = [e_{α_i}, e_{β-α_i}] / N_{α_i, β-α_i}
        for sign in [1i64, -1] {
            for r in rs.roots.iter().filter(|r| r.is_positive() && r.height() > 1) {
                let beta: Vec<i64> = r.coords.iter().map(|&c| c * sign).collect();
                let (ai, rest) = (0..l)
                    .find_map(|i| {
                        let mut rest = beta.clone();
                        rest[i] -= sign;
                        rs.is_root(&rest).then_some((i, rest))
                    })
                    .expect("non-simple root has a simple predecessor");
                let mut a = vec![0; l];
                a[ai] = sign;
                let nab = alg.n(&a, &rest);
                let m = matrices[alg.e_index(&a).unwrap()]
                    .commutator(&matrices[alg.e_index(&rest).unwrap()])
                    .scaled(Surd::one() / nab);
                matrices[alg.e_index(&beta).unwrap()] = m;
            }
        }
        Ok(Representation { name: name.to_string(), highest_weight: dynkin.to_vec(), dim: n, weights, matrices })
    }

    /// Adjoint representation from the structure constants.
    pub fn adjoint(alg: &ChevalleyAlgebra) -> Self {
        let d = alg.dim();
        let rs = &alg.rs;
        let l = rs.rank;
        let matrices = (0..d)
            .map(|b| {
                let mut m = SparseMatrix::zeros(d);
                for j in 0..d {
                    for &(k, c) in alg.basis_bracket(b, j) {
                        m.add_entry(k, j, c);
                    }
                }
                m
            })
            .collect();
        let weights = (0..d)
            .map(|b| match alg.root_of(b) {
                None => vec![Rational64::zero(); l],
                Some(r) => r.coords.iter().map(|&c| Rational64::from_integer(c)).collect(),
            })
            .collect();
        let mut hw = vec![0; l];
        for (i, h) in hw.iter_mut().enumerate() {
            *h = rs.pairing(&rs.psi, &rs.simple_root(i));
        }
        Representation { name: "adjoint".into(), highest_weight: hw, dim: d, weights, matrices }
    }

    /// The registered representation used by the group-level pipeline:
    /// the defining representation for classical types, 7 for G2, 26 for F4,
    /// 27 for E6. E7 and E8 are not registered.
    pub fn standard(alg: &ChevalleyAlgebra) -> Result<Self> {
        let rs = &alg.rs;
        let l = rs.rank;
        let node = match rs.ty.family {
            Family::A | Family::B | Family::C | Family::D | Family::G => 0,
            Family::F => 3,
            Family::E if l == 6 => 0,
            Family::E => {
                return Err(Error::UnsupportedType(format!("{} has no registered group-level representation", rs.ty)))
            }
        };
        let mut hw = vec![0; l];
        hw[node] = 1;
        Representation::highest_weight(alg, &hw, &format!("{}-omega{}", rs.ty, node + 1))
    }

    /// Look up a representation by name: `standard`, `adjoint`, or
    /// `omegaK` for the K-th fundamental representation.
    pub fn by_name(alg: &ChevalleyAlgebra, name: &str) -> Result<Self> {
        let lower = name.to_ascii_lowercase();
        match lower.as_str() {
            "standard" | "std" => Representation::standard(alg),
            "adjoint" | "adj" => Ok(Representation::adjoint(alg)),
            _ => {
                let k: usize = lower
                    .strip_prefix("omega")
                    .and_then(|s| s.parse().ok())
                    .filter(|&k| (1..=alg.rank()).contains(&k))
                    .ok_or_else(|| Error::InvalidArgument(format!("unknown representation '{name}'")))?;
                let mut hw = vec![0; alg.rank()];
                hw[k - 1] = 1;
                Representation::highest_weight(alg, &hw, &format!("{}-omega{k}", alg.rs.ty))
            }
        }
    }
}

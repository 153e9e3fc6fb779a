//! The Steinberg cross-section `C^Γ(t) = E_1(t_1)n_1 ⋯ E_l(t_l)n_l`.

use crate::chevalley::ChevalleyAlgebra;
use crate::coxeter::Bipartition;
use crate::rep::Representation;
use nalgebra::DMatrix;
use num_complex::Complex64;
use num_traits::{One, Zero};

/// One factor of a group element written as a word.
#[derive(Debug, Clone, PartialEq)]
pub enum Factor {
    /// `exp(coeff · b)` for a root-vector basis element `b`.
    Exp { basis: usize, coeff: Complex64 },
    /// `exp(2πi h)` with `h` in the H-basis.
    Torus(Vec<Complex64>),
}

pub type Word = Vec<Factor>;

/// Γ ordering: Π₂ ascending, then Π₁ ascending. Returns node indices and
/// the size `k` of the Π₂ block.
pub fn gamma_order(bip: &Bipartition) -> (Vec<usize>, usize) {
    let mut g = bip.i2.clone();
    g.sort_unstable();
    let k = g.len();
    let mut rest = bip.i1.clone();
    rest.sort_unstable();
    g.extend(rest);
    (g, k)
}

fn simple_index(alg: &ChevalleyAlgebra, node: usize, sign: i64) -> usize {
    let mut c = vec![0; alg.rank()];
    c[node] = sign;
    alg.e_index(&c).unwrap()
}

/// `E_i(t) = exp(t e_{α_node})`.
pub fn e_factor(alg: &ChevalleyAlgebra, node: usize, t: Complex64) -> Factor {
    Factor::Exp { basis: simple_index(alg, node, 1), coeff: t }
}

/// `n = exp(−X) exp(Y) exp(−X)` with Chevalley-normalized `X = e_α / c_α`, `Y = e_{−α} / c_α`.
pub fn weyl_representative(alg: &ChevalleyAlgebra, node: usize) -> Word {
    let a = alg.rs.simple_root(node);
    let c = alg.root_scale(&a.coords).to_f64();
    let x = simple_index(alg, node, 1);
    let y = simple_index(alg, node, -1);
    let m = Complex64::new(-1.0 / c, 0.0);
    let p = Complex64::new(1.0 / c, 0.0);
    vec![Factor::Exp { basis: x, coeff: m }, Factor::Exp { basis: y, coeff: p }, Factor::Exp { basis: x, coeff: m }]
}

/// The word `E_1(t_1)n_1 ⋯ E_l(t_l)n_l` along `gamma`.
pub fn section_word(alg: &ChevalleyAlgebra, gamma: &[usize], t: &[Complex64]) -> Word {
    let mut w = Vec::new();
    for (&node, &ti) in gamma.iter().zip(t) {
        w.push(e_factor(alg, node, ti));
        w.extend(weyl_representative(alg, node));
    }
    w
}

/// `A_γ = n_1 ⋯ n_l`.
pub fn coxeter_word(alg: &ChevalleyAlgebra, gamma: &[usize]) -> Word {
    gamma.iter().flat_map(|&n| weyl_representative(alg, n)).collect()
}

/// Row-sparse complex matrix.
#[derive(Debug, Clone)]
pub struct RowSparse {
    pub n: usize,
    pub rows: Vec<Vec<(usize, Complex64)>>,
}

impl RowSparse {
    pub fn identity(n: usize) -> Self {
        RowSparse { n, rows: (0..n).map(|i| vec![(i, Complex64::one())]).collect() }
    }

    pub fn mul(&self, other: &RowSparse) -> RowSparse {
        let mut rows = Vec::with_capacity(self.n);
        let mut acc = vec![Complex64::zero(); self.n];
        let mut touched = Vec::new();
        for row in &self.rows {
            for &(k, v) in row {
                for &(c, w) in &other.rows[k] {
                    if acc[c] == Complex64::zero() {
                        touched.push(c);
                    }
                    acc[c] += v * w;
                }
            }
            touched.sort_unstable();
            touched.dedup();
            let mut out = Vec::new();
            for &c in &touched {
                if acc[c] != Complex64::zero() {
                    out.push((c, acc[c]));
                }
                acc[c] = Complex64::zero();
            }
            touched.clear();
            rows.push(out);
        }
        RowSparse { n: self.n, rows }
    }

    fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.is_empty())
    }

    pub fn add_scaled(&mut self, other: &RowSparse, s: Complex64) {
        for (r, row) in other.rows.iter().enumerate() {
            for &(c, v) in row {
                match self.rows[r].iter_mut().find(|(cc, _)| *cc == c) {
                    Some(e) => e.1 += s * v,
                    None => self.rows[r].push((c, s * v)),
                }
            }
        }
    }

    /// `self · d` for a dense matrix `d`.
    pub fn mul_dense(&self, d: &DMatrix<Complex64>) -> DMatrix<Complex64> {
        let mut out = DMatrix::zeros(self.n, d.ncols());
        self.mul_dense_into(d, &mut out);
        out
    }

    pub fn mul_dense_into(&self, d: &DMatrix<Complex64>, out: &mut DMatrix<Complex64>) {
        for j in 0..d.ncols() {
            let col = d.column(j);
            let mut o = out.column_mut(j);
            for (r, row) in self.rows.iter().enumerate() {
                let mut acc = Complex64::zero();
                for &(c, v) in row {
                    acc += v * col[c];
                }
                o[r] = acc;
            }
        }
    }
}

/// The sparse matrix of a factor in `rep`.
pub fn factor_matrix(alg: &ChevalleyAlgebra, rep: &Representation, f: &Factor) -> RowSparse {
    let n = rep.dim;
    match f {
        Factor::Torus(h) => {
            let l = alg.rank();
            let gh: Vec<Complex64> = (0..l)
                .map(|i| (0..l).fold(Complex64::zero(), |a, j| a + h[j] * crate::linalg::rat_to_f64(alg.rs.form[i][j])))
                .collect();
            let rows = rep
                .weights
                .iter()
                .enumerate()
                .map(|(k, mu)| {
                    let ph = mu.iter().zip(&gh).fold(Complex64::zero(), |a, (m, g)| a + g * crate::linalg::rat_to_f64(*m));
                    vec![(k, (Complex64::new(0.0, 2.0 * std::f64::consts::PI) * ph).exp())]
                })
                .collect();
            RowSparse { n, rows }
        }
        Factor::Exp { basis, coeff } => {
            let mut x = RowSparse { n, rows: vec![Vec::new(); n] };
            for (&(r, c), v) in &rep.matrices[*basis].entries {
                x.rows[r].push((c, coeff * v.to_f64()));
            }
            let mut out = RowSparse::identity(n);
            let mut term = RowSparse::identity(n);
            for k in 1.. {
                term = term.mul(&x);
                if term.is_zero() {
                    break;
                }
                for row in &mut term.rows {
                    for e in row.iter_mut() {
                        e.1 /= k as f64;
                    }
                }
                out.add_scaled(&term, Complex64::one());
            }
            out
        }
    }
}

/// Dense matrix of a word in `rep`.
pub fn word_matrix(alg: &ChevalleyAlgebra, rep: &Representation, word: &[Factor]) -> DMatrix<Complex64> {
    let mut m = DMatrix::identity(rep.dim, rep.dim);
    for f in word.iter().rev() {
        m = factor_matrix(alg, rep, f).mul_dense(&m);
    }
    m
}

/// Cached pieces of `C^Γ(t)` in one representation: the Weyl
/// representatives `n_i` and the powers `x_i^k / k!` of `ρ(e_{β_i})`.
pub struct SectionEvaluator {
    n: usize,
    reps: Vec<RowSparse>,
    powers: Vec<Vec<RowSparse>>,
}

impl SectionEvaluator {
    pub fn new(alg: &ChevalleyAlgebra, rep: &Representation, gamma: &[usize]) -> Self {
        let n = rep.dim;
        let mut reps = Vec::new();
        let mut powers = Vec::new();
        for &node in gamma {
            let mut m = RowSparse::identity(n);
            for f in weyl_representative(alg, node) {
                m = m.mul(&factor_matrix(alg, rep, &f));
            }
            reps.push(m);
            let mut x = RowSparse { n, rows: vec![Vec::new(); n] };
            for (&(r, c), v) in &rep.matrices[simple_index(alg, node, 1)].entries {
                x.rows[r].push((c, Complex64::new(v.to_f64(), 0.0)));
            }
            let mut p = Vec::new();
            let mut term = RowSparse::identity(n);
            for k in 1.. {
                term = term.mul(&x);
                if term.is_zero() {
                    break;
                }
                for row in &mut term.rows {
                    for e in row.iter_mut() {
                        e.1 /= k as f64;
                    }
                }
                p.push(term.clone());
            }
            powers.push(p);
        }
        SectionEvaluator { n, reps, powers }
    }

    fn e_matrix(&self, i: usize, t: Complex64) -> RowSparse {
        let mut out = RowSparse::identity(self.n);
        let mut tk = Complex64::one();
        for p in &self.powers[i] {
            tk *= t;
            out.add_scaled(p, tk);
        }
        out
    }

    pub fn matrix(&self, t: &[Complex64]) -> DMatrix<Complex64> {
        let mut m = DMatrix::identity(self.n, self.n);
        let mut buf = DMatrix::zeros(self.n, self.n);
        for i in (0..t.len()).rev() {
            self.reps[i].mul_dense_into(&m, &mut buf);
            self.e_matrix(i, t[i]).mul_dense_into(&buf, &mut m);
        }
        m
    }

    pub fn trace(&self, t: &[Complex64]) -> Complex64 {
        self.matrix(t).trace()
    }
}

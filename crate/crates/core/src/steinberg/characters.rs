//! Weight multiplicities by Freudenthal's formula.

use crate::error::{Error, Result};
use crate::rep::{dynkin_to_root_coords, fundamental_weight};
use crate::rootcore::RootSystem;
use num_complex::Complex64;
use num_rational::{Ratio, Rational64};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap, VecDeque};
use std::f64::consts::PI;
use std::path::PathBuf;

/// Default cap on representation dimension.
pub const DIMENSION_CAP: u128 = 1_000_000;

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct CharacterTable {
    pub highest_weight: Vec<i64>,
    pub dimension: u128,
    /// Dominant weights (Dynkin labels) and multiplicities.
    pub dominant: Vec<(Vec<i64>, u64)>,
    /// All weights in simple-root coordinates, with multiplicities.
    pub weights: Vec<(Vec<Rational64>, u64)>,
}

/// Weyl dimension formula `Π_{α>0} (λ+ρ, α)/(ρ, α)`.
pub fn weyl_dimension(rs: &RootSystem, dynkin: &[i64]) -> u128 {
    let lam = dynkin_to_root_coords(rs, dynkin);
    let rho: Vec<Rational64> = (0..rs.rank)
        .map(|k| (0..rs.rank).map(|i| fundamental_weight(rs, i)[k]).sum())
        .collect();
    let mut num = Ratio::<i128>::one();
    for a in rs.positive_roots() {
        let ac: Vec<Rational64> = a.coords.iter().map(|&c| Rational64::from_integer(c)).collect();
        let lr: Vec<Rational64> = lam.iter().zip(&rho).map(|(x, y)| x + y).collect();
        let p = inner_rat(rs, &lr, &ac);
        let q = inner_rat(rs, &rho, &ac);
        num *= Ratio::new(*p.numer() as i128, *p.denom() as i128) / Ratio::new(*q.numer() as i128, *q.denom() as i128);
    }
    assert!(num.is_integer());
    num.to_integer() as u128
}

fn inner_rat(rs: &RootSystem, a: &[Rational64], b: &[Rational64]) -> Rational64 {
    let mut acc = Rational64::zero();
    for i in 0..rs.rank {
        for j in 0..rs.rank {
            acc += a[i] * rs.form[i][j] * b[j];
        }
    }
    acc
}

/// Dominant representative of a weight given in Dynkin labels.
pub fn dominant_conjugate(rs: &RootSystem, mu: &[i64]) -> Vec<i64> {
    let mut v = mu.to_vec();
    while let Some(i) = v.iter().position(|&x| x < 0) {
        let c = v[i];
        for (j, x) in v.iter_mut().enumerate() {
            *x -= c * rs.cartan[j][i];
        }
    }
    v
}

/// Weyl orbit of a weight in Dynkin labels.
pub fn weyl_orbit(rs: &RootSystem, mu: &[i64]) -> Vec<Vec<i64>> {
    let mut seen: BTreeMap<Vec<i64>, ()> = BTreeMap::new();
    let mut q = VecDeque::from([mu.to_vec()]);
    seen.insert(mu.to_vec(), ());
    while let Some(v) = q.pop_front() {
        for i in 0..rs.rank {
            if v[i] == 0 {
                continue;
            }
            let c = v[i];
            let w: Vec<i64> = v.iter().enumerate().map(|(j, &x)| x - c * rs.cartan[j][i]).collect();
            if seen.insert(w.clone(), ()).is_none() {
                q.push_back(w);
            }
        }
    }
    seen.into_keys().collect()
}

/// Characters of the irreducible module with the given highest weight.
pub fn character_table(rs: &RootSystem, dynkin: &[i64], cap: u128) -> Result<CharacterTable> {
    let dim = weyl_dimension(rs, dynkin);
    if dim > cap {
        return Err(Error::OutOfDeskScale { dim, cap });
    }
    let l = rs.rank;
    let alpha_dynkin = |a: &[i64]| -> Vec<i64> { (0..l).map(|j| (0..l).map(|k| rs.cartan[j][k] * a[k]).sum()).collect() };
    let pos: Vec<Vec<i64>> = rs.positive_roots().map(|r| r.coords.clone()).collect();
    let pos_dyn: Vec<Vec<i64>> = pos.iter().map(|a| alpha_dynkin(a)).collect();

    // Dominant weights below λ, by depth.
    let mut depth: HashMap<Vec<i64>, i64> = HashMap::new();
    depth.insert(dynkin.to_vec(), 0);
    let mut q = VecDeque::from([dynkin.to_vec()]);
    while let Some(v) = q.pop_front() {
        for (a, ad) in pos.iter().zip(&pos_dyn) {
            let w: Vec<i64> = v.iter().zip(ad).map(|(x, y)| x - y).collect();
            if w.iter().all(|&x| x >= 0) && !depth.contains_key(&w) {
                depth.insert(w.clone(), depth[&v] + a.iter().sum::<i64>());
                q.push_back(w);
            }
        }
    }
    let mut dom: Vec<(Vec<i64>, i64)> = depth.into_iter().collect();
    dom.sort_by(|a, b| (a.1, &a.0).cmp(&(b.1, &b.0)));

    let to_root = |d: &[i64]| dynkin_to_root_coords(rs, d);
    let rho_d = vec![1i64; l];
    let norm_plus_rho = |d: &[i64]| {
        let v: Vec<i64> = d.iter().zip(&rho_d).map(|(x, y)| x + y).collect();
        let r = to_root(&v);
        inner_rat(rs, &r, &r)
    };
    let top = norm_plus_rho(dynkin);
    let mut mult: HashMap<Vec<i64>, u64> = HashMap::new();
    for (mu, _) in &dom {
        if mu == dynkin {
            mult.insert(mu.clone(), 1);
            continue;
        }
        let mut acc = Rational64::zero();
        for (a, ad) in pos.iter().zip(&pos_dyn) {
            let ac: Vec<Rational64> = a.iter().map(|&c| Rational64::from_integer(c)).collect();
            let mut k = 1;
            loop {
                let nu: Vec<i64> = mu.iter().zip(ad).map(|(x, y)| x + k * y).collect();
                let dc = dominant_conjugate(rs, &nu);
                let Some(&m) = mult.get(&dc) else { break };
                acc += Rational64::from_integer(m as i64) * inner_rat(rs, &to_root(&nu), &ac);
                k += 1;
            }
        }
        let denom = top - norm_plus_rho(mu);
        let m = Rational64::from_integer(2) * acc / denom;
        if !m.is_integer() || m < Rational64::zero() {
            return Err(Error::InvariantViolation(format!("Freudenthal produced {m} at {mu:?}")));
        }
        if !m.is_zero() {
            mult.insert(mu.clone(), m.to_integer() as u64);
        }
    }
    let dominant: Vec<(Vec<i64>, u64)> =
        dom.iter().filter_map(|(mu, _)| mult.get(mu).map(|&m| (mu.clone(), m))).collect();
    let mut weights = Vec::new();
    let mut total: u128 = 0;
    for (mu, m) in &dominant {
        for w in weyl_orbit(rs, mu) {
            weights.push((to_root(&w), *m));
            total += *m as u128;
        }
    }
    if total != dim {
        return Err(Error::InvariantViolation(format!("character has dimension {total}, Weyl formula gives {dim}")));
    }
    Ok(CharacterTable { highest_weight: dynkin.to_vec(), dimension: dim, dominant, weights })
}

fn cache_path(rs: &RootSystem, dynkin: &[i64]) -> Option<PathBuf> {
    let dir = std::env::var_os("COXSTOKES_CACHE")?;
    let tag: Vec<String> = dynkin.iter().map(|d| d.to_string()).collect();
    Some(PathBuf::from(dir).join(format!("{}-{}.json", rs.ty, tag.join("_"))))
}

/// Character of the `i`-th fundamental representation (0-based), read from
/// and written to `$COXSTOKES_CACHE` when that variable is set.
pub fn fundamental_character(rs: &RootSystem, i: usize, cap: u128) -> Result<CharacterTable> {
    let mut dynkin = vec![0; rs.rank];
    dynkin[i] = 1;
    let path = cache_path(rs, &dynkin);
    if let Some(p) = &path {
        if let Ok(bytes) = std::fs::read(p) {
            if let Ok(t) = serde_json::from_slice::<CharacterTable>(&bytes) {
                return Ok(t);
            }
        }
    }
    let table = character_table(rs, &dynkin, cap)?;
    if let Some(p) = &path {
        if let Some(parent) = p.parent() {
            let _ = std::fs::create_dir_all(parent);
        }
        if let Ok(s) = serde_json::to_vec(&table) {
            let _ = std::fs::write(p, s);
        }
    }
    Ok(table)
}

pub fn fundamental_characters(rs: &RootSystem, cap: u128) -> Result<Vec<CharacterTable>> {
    (0..rs.rank).map(|i| fundamental_character(rs, i, cap)).collect()
}

/// `χ(e^{2πi y}) = Σ mult(μ) e^{2πi μ(y)}`, with `y` complex in the H-basis.
pub fn torus_character(rs: &RootSystem, table: &CharacterTable, y: &[Complex64]) -> Complex64 {
    let l = rs.rank;
    let gy: Vec<Complex64> = (0..l)
        .map(|i| (0..l).fold(Complex64::zero(), |acc, j| acc + y[j] * crate::linalg::rat_to_f64(rs.form[i][j])))
        .collect();
    table.weights.iter().fold(Complex64::zero(), |acc, (mu, m)| {
        let phase = mu.iter().zip(&gy).fold(Complex64::zero(), |a, (c, g)| a + g * crate::linalg::rat_to_f64(*c));
        acc + (Complex64::new(0.0, 2.0 * PI) * phase).exp() * (*m as f64)
    })
}

/// `t_i = χ_i(e^{2πi y})` for all fundamental characters.
pub fn torus_character_values(rs: &RootSystem, tables: &[CharacterTable], y: &[Complex64]) -> Vec<Complex64> {
    tables.iter().map(|t| torus_character(rs, t, y)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a2_standard() {
        let rs = RootSystem::from_str_type("A2").unwrap();
        let t = fundamental_character(&rs, 0, DIMENSION_CAP).unwrap();
        assert_eq!(t.dimension, 3);
        assert_eq!(t.weights.len(), 3);
        assert!(t.weights.iter().all(|(_, m)| *m == 1));
    }

    #[test]
    fn e8_is_out_of_scale() {
        let rs = RootSystem::from_str_type("E8").unwrap();
        assert!(matches!(fundamental_characters(&rs, DIMENSION_CAP), Err(Error::OutOfDeskScale { .. })));
    }
}

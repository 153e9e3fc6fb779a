//! JSON encoding helpers shared by the commands.

use coxstokes::Root;
use nalgebra::DMatrix;
use num_complex::Complex64;
use num_rational::Rational64;
use serde_json::{json, Value};
use std::path::Path;

pub const SCHEMA_VERSION: u32 = 1;

/// Round to the nearest multiple of 1e-15, without negative zero.
pub fn round15(x: f64) -> f64 {
    let r = (x * 1e15).round() / 1e15;
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

pub fn complex(z: Complex64) -> Value {
    json!([round15(z.re), round15(z.im)])
}

pub fn complexes(v: &[Complex64]) -> Value {
    Value::Array(v.iter().map(|&z| complex(z)).collect())
}

/// Row-major nested array of `[re, im]` pairs.
pub fn matrix(m: &DMatrix<Complex64>) -> Value {
    Value::Array((0..m.nrows()).map(|i| Value::Array((0..m.ncols()).map(|j| complex(m[(i, j)])).collect())).collect())
}

pub fn rational(r: Rational64) -> Value {
    Value::String(r.to_string())
}

pub fn rationals(v: &[Rational64]) -> Value {
    Value::Array(v.iter().map(|&r| rational(r)).collect())
}

pub fn roots(v: &[Root]) -> Value {
    Value::Array(v.iter().map(|r| json!(r.coords)).collect())
}

/// 1-based node labels.
pub fn nodes(v: &[usize]) -> Value {
    json!(v.iter().map(|i| i + 1).collect::<Vec<_>>())
}

pub fn emit(report: &Value, path: Option<&Path>) -> std::io::Result<()> {
    let mut text = serde_json::to_string_pretty(report).expect("report serialises");
    text.push('\n');
    match path {
        Some(p) => std::fs::write(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

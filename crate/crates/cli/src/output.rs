//! Component lists for the output document. Indices are 1-based; only
//! nonzero components appear, in lexicographic index order.

use lieherm::poly::TPolyTensor;
use lieherm::{format_rational, Rational, Tensor3, Tensor4};
use serde_json::{json, Value};

fn component(idx: &[usize], value: &Rational) -> Value {
    let mut m = serde_json::Map::new();
    for (key, i) in ["a", "b", "c", "d"].iter().zip(idx) {
        m.insert((*key).to_string(), json!(i + 1));
    }
    m.insert("value".into(), json!(format_rational(value)));
    Value::Object(m)
}

/// Components of a form antisymmetric in its first two slots, `a < b`.
pub fn two_form(t: &Tensor3) -> Value {
    Value::Array(
        t.nonzero()
            .filter(|((a, b, _), _)| a < b)
            .map(|((a, b, c), v)| component(&[a, b, c], v))
            .collect(),
    )
}

/// Components of a totally antisymmetric 3-form, `a < b < c`.
pub fn three_form(t: &Tensor3) -> Value {
    Value::Array(
        t.nonzero()
            .filter(|((a, b, c), _)| a < b && b < c)
            .map(|((a, b, c), v)| component(&[a, b, c], v))
            .collect(),
    )
}

/// Every nonzero component of a rank-3 array.
pub fn full3(t: &Tensor3) -> Value {
    Value::Array(t.nonzero().map(|((a, b, c), v)| component(&[a, b, c], v)).collect())
}

/// Every nonzero component of a rank-4 array.
pub fn full4(t: &Tensor4) -> Value {
    Value::Array(
        t.nonzero()
            .map(|((a, b, c, d), v)| component(&[a, b, c, d], v))
            .collect(),
    )
}

pub fn rationals(vs: &[Rational]) -> Value {
    Value::Array(vs.iter().map(|v| json!(format_rational(v))).collect())
}

/// Nonzero polynomial entries as `c0 + c1 t + c2 t^2` coefficient triples.
pub fn polynomials(p: &TPolyTensor) -> Value {
    Value::Array(
        p.nonzero()
            .map(|(idx, poly)| {
                let mut m = serde_json::Map::new();
                for (key, i) in ["a", "b", "c", "d"].iter().zip(&idx) {
                    m.insert((*key).to_string(), json!(i + 1));
                }
                let coefficients: Vec<Rational> = poly.coefficients().into_iter().cloned().collect();
                m.insert("coefficients".into(), rationals(&coefficients));
                Value::Object(m)
            })
            .collect(),
    )
}

pub fn witness(w: Option<Vec<usize>>) -> Value {
    match w {
        Some(idx) => json!(idx),
        None => Value::Null,
    }
}

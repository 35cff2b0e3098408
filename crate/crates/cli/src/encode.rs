//! Scalar and matrix encoding for problem files and result documents.
//!
//! Rationals are strings `"p/q"` (integers are also accepted on input);
//! complex floats are `[re, im]` float pairs; Gaussian rationals are
//! `["p/q", "r/s"]` string pairs.

use ncr_core::{ComplexFloat, GaussianRational, Matrix, Rational, Scalar};
use toml::Value;

pub trait Entry: Scalar {
    /// Field tag used in documents.
    const FIELD: &'static str;

    fn encode(&self) -> Value;

    fn decode(value: &Value) -> Result<Self, String>;
}

fn decode_rational(value: &Value) -> Result<Rational, String> {
    match value {
        Value::String(s) => s.parse::<Rational>().map_err(|e| e.to_string()),
        Value::Integer(n) => Ok(Rational::from(*n)),
        other => Err(format!("expected a rational as a \"p/q\" string, found {}", other.type_str())),
    }
}

fn decode_float(value: &Value) -> Result<f64, String> {
    match value {
        Value::Float(x) if x.is_finite() => Ok(*x),
        Value::Float(_) => Err("non-finite float".into()),
        Value::Integer(n) => Ok(*n as f64),
        other => Err(format!("expected a number, found {}", other.type_str())),
    }
}

fn as_pair(value: &Value) -> Option<(&Value, &Value)> {
    match value {
        Value::Array(items) if items.len() == 2 => Some((&items[0], &items[1])),
        _ => None,
    }
}

impl Entry for Rational {
    const FIELD: &'static str = "rational";

    fn encode(&self) -> Value {
        Value::String(self.to_string())
    }

    fn decode(value: &Value) -> Result<Self, String> {
        decode_rational(value)
    }
}

impl Entry for ComplexFloat {
    const FIELD: &'static str = "complex-float";

    fn encode(&self) -> Value {
        Value::Array(vec![Value::Float(self.re()), Value::Float(self.im())])
    }

    fn decode(value: &Value) -> Result<Self, String> {
        match as_pair(value) {
            Some((re, im)) => Ok(ComplexFloat::new(decode_float(re)?, decode_float(im)?)),
            None if matches!(value, Value::Array(_)) => Err("expected a [re, im] pair".into()),
            None => Ok(ComplexFloat::new(decode_float(value)?, 0.0)),
        }
    }
}

impl Entry for GaussianRational {
    const FIELD: &'static str = "gaussian-rational";

    fn encode(&self) -> Value {
        Value::Array(vec![self.re().encode(), self.im().encode()])
    }

    fn decode(value: &Value) -> Result<Self, String> {
        match as_pair(value) {
            Some((re, im)) => Ok(GaussianRational::new(decode_rational(re)?, decode_rational(im)?)),
            None if matches!(value, Value::Array(_)) => Err("expected a [re, im] pair".into()),
            None => Ok(GaussianRational::new(decode_rational(value)?, Rational::zero())),
        }
    }
}

/// Row-major array of rows.
pub fn encode_matrix<S: Entry>(m: &Matrix<S>) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array(m.row(i).iter().map(Entry::encode).collect()))
            .collect(),
    )
}

pub fn decode_matrix<S: Entry>(value: &Value) -> Result<Matrix<S>, String> {
    let rows = value.as_array().ok_or("expected an array of rows")?;
    let rows: Vec<Vec<S>> = rows
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| "expected a row array".to_string())?
                .iter()
                .map(S::decode)
                .collect()
        })
        .collect::<Result<_, _>>()?;
    Matrix::from_rows(&rows).map_err(|e| e.to_string())
}

/// Basis vectors as a list of vectors, the same shape as problem-file input.
pub fn encode_vectors<S: Entry>(vectors: &[Vec<S>]) -> Value {
    Value::Array(
        vectors
            .iter()
            .map(|v| Value::Array(v.iter().map(Entry::encode).collect()))
            .collect(),
    )
}

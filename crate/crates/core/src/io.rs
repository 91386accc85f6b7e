//! JSON ingestion and emission. Rationals travel as "p/q" strings so no
//! value is corrupted through floats; complex entries are plain numbers
//! (real) or [re, im] pairs.
//!
//! Schemas:
//!   algebra   {"dim": d, "labels": [...], "structure_constants": [[[..]]],
//!              "unit": [...], "scalar": "rational"|"complex"}
//!   map       {"domain": algebra, "codomain": algebra, "matrix": [[..]], "n": k}
//!   covering  {"X": [...], "Y": [...], "h": {x: y}, "t": {y: {x: mult}}, "n": k}
//!   interval  {"n": k, "partitions": [[["a"], ["b", "c"]], ...]}
//!   transfer  {"domain": algebra, "codomain": algebra, "f": [[..]],
//!              "tau": [[..]], "n": k}
//!   polynomial {"coefficients": [low, ..., high], "samples": [[re, im], ...]}

use serde_json::{json, Map, Value};

use crate::algebra::{AlgebraRef, CommutativeAlgebra, LinearMap};
use crate::coverings::FiniteCovering;
use crate::error::{Error, Result};
use crate::multiset::Multiset;
use crate::poly::Polynomial;
use crate::scalar::{Backend, Scalar, DEFAULT_EPS};

fn parse_err(context: &str) -> Error {
    Error::Parse(format!("malformed input: {context}"))
}

pub fn scalar_to_json(s: &Scalar) -> Value {
    match s {
        Scalar::Rational(_) => Value::String(s.to_string()),
        Scalar::Complex { value, .. } => {
            if value.im == 0.0 {
                json!(value.re)
            } else {
                json!([value.re, value.im])
            }
        }
    }
}

pub fn scalar_from_json(v: &Value, backend: Backend, eps: f64) -> Result<Scalar> {
    match v {
        Value::String(s) => Scalar::parse(s, backend, eps),
        Value::Number(n) => {
            if let (Backend::Rational, Some(i)) = (backend, n.as_i64()) {
                return Ok(Scalar::from_int(i));
            }
            match backend {
                Backend::Rational => Err(parse_err(&format!(
                    "non-integer number {n} on the rational backend; use \"p/q\""
                ))),
                Backend::Complex => Ok(Scalar::complex(
                    n.as_f64().ok_or_else(|| parse_err("bad number"))?,
                    0.0,
                    eps,
                )),
            }
        }
        Value::Array(pair) if pair.len() == 2 && backend == Backend::Complex => {
            let re = pair[0].as_f64().ok_or_else(|| parse_err("bad complex pair"))?;
            let im = pair[1].as_f64().ok_or_else(|| parse_err("bad complex pair"))?;
            Ok(Scalar::complex(re, im, eps))
        }
        other => Err(parse_err(&format!("expected a scalar, found {other}"))),
    }
}

pub fn algebra_to_json(a: &AlgebraRef) -> Value {
    let d = a.dim();
    let sc: Vec<Value> = (0..d)
        .map(|i| {
            Value::Array(
                (0..d)
                    .map(|j| {
                        Value::Array(
                            (0..d)
                                .map(|k| {
                                    scalar_to_json(&a.structure_constants()[(i * d + j) * d + k])
                                })
                                .collect(),
                        )
                    })
                    .collect(),
            )
        })
        .collect();
    json!({
        "dim": d,
        "labels": a.labels(),
        "structure_constants": sc,
        "unit": a.unit_coords().iter().map(scalar_to_json).collect::<Vec<_>>(),
        "scalar": match a.backend() { Backend::Rational => "rational", Backend::Complex => "complex" },
    })
}

pub fn algebra_from_json(v: &Value, eps: f64) -> Result<AlgebraRef> {
    let obj = v.as_object().ok_or_else(|| parse_err("algebra must be an object"))?;
    let backend = match obj.get("scalar").and_then(Value::as_str) {
        Some("rational") | None => Backend::Rational,
        Some("complex") => Backend::Complex,
        Some(other) => return Err(parse_err(&format!("unknown scalar backend `{other}`"))),
    };
    let labels: Vec<String> = obj
        .get("labels")
        .and_then(Value::as_array)
        .ok_or_else(|| parse_err("algebra.labels missing"))?
        .iter()
        .map(|l| l.as_str().map(String::from).ok_or_else(|| parse_err("label must be a string")))
        .collect::<Result<_>>()?;
    let d = labels.len();
    if let Some(dim) = obj.get("dim").and_then(Value::as_u64) {
        if dim as usize != d {
            return Err(parse_err(&format!("dim {dim} does not match {d} labels")));
        }
    }
    let sc = obj
        .get("structure_constants")
        .and_then(Value::as_array)
        .ok_or_else(|| parse_err("algebra.structure_constants missing"))?;
    let mut structure = Vec::with_capacity(d * d * d);
    if sc.len() != d {
        return Err(parse_err("structure_constants outer length != dim"));
    }
    for row in sc {
        let row = row.as_array().ok_or_else(|| parse_err("structure row must be an array"))?;
        if row.len() != d {
            return Err(parse_err("structure row length != dim"));
        }
        for cell in row {
            let cell = cell.as_array().ok_or_else(|| parse_err("structure cell must be an array"))?;
            if cell.len() != d {
                return Err(parse_err("structure cell length != dim"));
            }
            for entry in cell {
                structure.push(scalar_from_json(entry, backend, eps)?);
            }
        }
    }
    let unit = obj
        .get("unit")
        .and_then(Value::as_array)
        .ok_or_else(|| parse_err("algebra.unit missing"))?
        .iter()
        .map(|e| scalar_from_json(e, backend, eps))
        .collect::<Result<Vec<_>>>()?;
    CommutativeAlgebra::new(labels, structure, unit)
}

pub fn matrix_from_json(v: &Value, backend: Backend, eps: f64) -> Result<Vec<Vec<Scalar>>> {
    v.as_array()
        .ok_or_else(|| parse_err("matrix must be an array of rows"))?
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| parse_err("matrix row must be an array"))?
                .iter()
                .map(|e| scalar_from_json(e, backend, eps))
                .collect()
        })
        .collect()
}

/// Reads {"domain", "codomain", "matrix"} into a LinearMap; the claimed n,
/// if any, is returned alongside.
pub fn linear_map_from_json(v: &Value, eps: f64) -> Result<(LinearMap, Option<usize>)> {
    let obj = v.as_object().ok_or_else(|| parse_err("map input must be an object"))?;
    let domain = algebra_from_json(obj.get("domain").ok_or_else(|| parse_err("domain missing"))?, eps)?;
    let codomain =
        algebra_from_json(obj.get("codomain").ok_or_else(|| parse_err("codomain missing"))?, eps)?;
    let matrix = matrix_from_json(
        obj.get("matrix").ok_or_else(|| parse_err("matrix missing"))?,
        domain.backend(),
        eps,
    )?;
    let n = obj.get("n").and_then(Value::as_u64).map(|n| n as usize);
    Ok((LinearMap::new(domain, codomain, matrix)?, n))
}

pub fn covering_to_json(c: &FiniteCovering) -> Value {
    let h: Map<String, Value> = c
        .x_labels()
        .iter()
        .enumerate()
        .map(|(i, x)| (x.clone(), Value::String(c.y_labels()[c.h()[i]].clone())))
        .collect();
    let t: Map<String, Value> = c
        .y_labels()
        .iter()
        .enumerate()
        .map(|(j, y)| {
            let fiber: Map<String, Value> = c.t()[j]
                .iter()
                .map(|(x, m)| (x.to_string(), json!(m)))
                .collect();
            (y.clone(), Value::Object(fiber))
        })
        .collect();
    json!({
        "X": c.x_labels(),
        "Y": c.y_labels(),
        "h": h,
        "t": t,
        "n": c.n(),
    })
}

pub fn covering_from_json(v: &Value) -> Result<FiniteCovering> {
    let obj = v.as_object().ok_or_else(|| parse_err("covering must be an object"))?;
    let labels = |key: &str| -> Result<Vec<String>> {
        obj.get(key)
            .and_then(Value::as_array)
            .ok_or_else(|| parse_err(&format!("covering.{key} missing")))?
            .iter()
            .map(|l| l.as_str().map(String::from).ok_or_else(|| parse_err("label must be a string")))
            .collect()
    };
    let x = labels("X")?;
    let y = labels("Y")?;
    let h_obj = obj
        .get("h")
        .and_then(Value::as_object)
        .ok_or_else(|| parse_err("covering.h missing"))?;
    let h: Vec<usize> = x
        .iter()
        .map(|xl| {
            let target = h_obj
                .get(xl)
                .and_then(Value::as_str)
                .ok_or_else(|| parse_err(&format!("h({xl}) missing")))?;
            y.iter()
                .position(|yl| yl == target)
                .ok_or_else(|| parse_err(&format!("h({xl}) = {target} is not in Y")))
        })
        .collect::<Result<_>>()?;
    let t_obj = obj
        .get("t")
        .and_then(Value::as_object)
        .ok_or_else(|| parse_err("covering.t missing"))?;
    let t: Vec<Multiset> = y
        .iter()
        .map(|yl| {
            let fiber = t_obj
                .get(yl)
                .and_then(Value::as_object)
                .ok_or_else(|| parse_err(&format!("t({yl}) missing")))?;
            let mut ms = Multiset::new();
            for (xl, m) in fiber {
                let m = m
                    .as_u64()
                    .ok_or_else(|| parse_err(&format!("t({yl})({xl}) must be a nonnegative integer")))?;
                ms.insert(xl.clone(), m as usize);
            }
            Ok(ms)
        })
        .collect::<Result<_>>()?;
    let n = obj
        .get("n")
        .and_then(Value::as_u64)
        .ok_or_else(|| parse_err("covering.n missing"))? as usize;
    FiniteCovering::new(x, y, h, t, n)
}

/// Reads {"coefficients": [...], ...} into a polynomial on the chosen
/// backend, low degree first.
pub fn polynomial_from_json(v: &Value, backend: Backend, eps: f64) -> Result<Polynomial> {
    let obj = v.as_object().ok_or_else(|| parse_err("polynomial input must be an object"))?;
    let coeffs = obj
        .get("coefficients")
        .and_then(Value::as_array)
        .ok_or_else(|| parse_err("polynomial.coefficients missing"))?
        .iter()
        .map(|c| scalar_from_json(c, backend, eps))
        .collect::<Result<Vec<_>>>()?;
    if coeffs.is_empty() {
        return Err(parse_err("polynomial needs at least one coefficient"));
    }
    Ok(Polynomial::new(coeffs))
}

pub fn complex_samples_from_json(v: &Value) -> Result<Vec<num_complex::Complex64>> {
    v.as_array()
        .ok_or_else(|| parse_err("samples must be an array"))?
        .iter()
        .map(|s| match s {
            Value::Number(n) => Ok(num_complex::Complex64::new(
                n.as_f64().ok_or_else(|| parse_err("bad sample"))?,
                0.0,
            )),
            Value::Array(pair) if pair.len() == 2 => Ok(num_complex::Complex64::new(
                pair[0].as_f64().ok_or_else(|| parse_err("bad sample"))?,
                pair[1].as_f64().ok_or_else(|| parse_err("bad sample"))?,
            )),
            other => Err(parse_err(&format!("expected a sample number or pair, found {other}"))),
        })
        .collect()
}

/// Default eps when the input does not carry one.
pub fn default_eps() -> f64 {
    DEFAULT_EPS
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraOps;

    #[test]
    fn algebra_json_round_trip() {
        let a = CommutativeAlgebra::truncated_polynomial_algebra(3, Backend::Rational, 0.0).unwrap();
        let v = algebra_to_json(&a);
        let back = algebra_from_json(&v, 0.0).unwrap();
        assert_eq!(back.labels(), a.labels());
        assert_eq!(back.structure_constants(), a.structure_constants());
        assert_eq!(back.unit_coords(), a.unit_coords());
    }

    #[test]
    fn covering_json_round_trip() {
        let c = FiniteCovering::new(
            ["a", "b"].map(String::from).to_vec(),
            vec!["pt".into()],
            vec![0, 0],
            vec![Multiset::from_pairs([("a", 1), ("b", 1)])],
            2,
        )
        .unwrap();
        let v = covering_to_json(&c);
        let back = covering_from_json(&v).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn rationals_travel_as_strings() {
        let v = scalar_to_json(&Scalar::ratio(-7, 3));
        assert_eq!(v, Value::String("-7/3".into()));
        assert_eq!(scalar_from_json(&v, Backend::Rational, 0.0).unwrap(), Scalar::ratio(-7, 3));
        // bare floats are rejected on the rational backend
        assert!(scalar_from_json(&json!(0.5), Backend::Rational, 0.0).is_err());
    }

    #[test]
    fn malformed_inputs_are_parse_errors() {
        assert!(matches!(covering_from_json(&json!([1, 2])), Err(Error::Parse(_))));
        assert!(matches!(
            algebra_from_json(&json!({"labels": ["x"]}), 0.0),
            Err(Error::Parse(_))
        ));
    }

    #[test]
    fn map_json_parses() {
        let a = CommutativeAlgebra::function_algebra(["x1", "x2"], Backend::Rational, 0.0).unwrap();
        let v = json!({
            "domain": algebra_to_json(&a),
            "codomain": algebra_to_json(&a),
            "matrix": [["1", "0"], ["0", "1"]],
            "n": 1,
        });
        let (map, n) = linear_map_from_json(&v, 0.0).unwrap();
        assert_eq!(n, Some(1));
        let u = map.domain().element_from_ints(&[3, 4]);
        assert_eq!(map.apply(&u).unwrap().coords(), u.coords());
    }
}

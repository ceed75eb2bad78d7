//! Input files.
//!
//! Matrix groups are JSON objects `{"group": "SL" | "Sp", "dim": d,
//! "generators": [[[..row..], ..], ..]}`. Polynomials are either JSON
//! `{"poly": [c0, c1, ..], "target": "Sn" | "hyperoctahedral"}` (constant
//! term first, `target` optional) or plain text holding the coefficients
//! separated by whitespace. Integers may be JSON numbers or decimal strings.

use num_bigint::BigInt;
use serde_json::Value;
use std::fmt;
use std::path::{Path, PathBuf};
use thiserror::Error;
use zariski_core::linalg::validate_rows;
use zariski_core::{GeneratorSet, GroupKind, IntPolynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyTarget {
    Sn,
    Hyperoctahedral,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Input {
    Group(GeneratorSet),
    Polynomial {
        poly: IntPolynomial,
        target: Option<PolyTarget>,
    },
}

/// Location of a value inside a JSON document, such as `generators[1][0][2]`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FieldPath(String);

impl FieldPath {
    fn key(&self, k: &str) -> FieldPath {
        if self.0.is_empty() {
            FieldPath(k.to_string())
        } else {
            FieldPath(format!("{}.{k}", self.0))
        }
    }

    fn index(&self, i: usize) -> FieldPath {
        FieldPath(format!("{}[{i}]", self.0))
    }
}

impl fmt::Display for FieldPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            f.write_str("<root>")
        } else {
            f.write_str(&self.0)
        }
    }
}

#[derive(Debug, Error)]
pub enum InputError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("field `{field}`: {message}")]
    Field { field: FieldPath, message: String },
    #[error("line {line}: `{token}` is not an integer")]
    Token { line: usize, token: String },
    #[error("input is empty")]
    Empty,
    #[error("invalid input: {0}")]
    Invalid(#[from] zariski_core::Error),
}

fn field(path: &FieldPath, message: impl Into<String>) -> InputError {
    InputError::Field {
        field: path.clone(),
        message: message.into(),
    }
}

pub fn parse_input(path: &Path) -> Result<Input, InputError> {
    let text = std::fs::read_to_string(path).map_err(|source| InputError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_str(&text)
}

pub fn parse_str(text: &str) -> Result<Input, InputError> {
    let trimmed = text.trim_start();
    if trimmed.is_empty() {
        return Err(InputError::Empty);
    }
    if trimmed.starts_with('{') {
        let value: Value = serde_json::from_str(text).map_err(|e| InputError::Syntax {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        parse_json(&value)
    } else {
        parse_coefficients(text)
    }
}

fn parse_coefficients(text: &str) -> Result<Input, InputError> {
    let mut coeffs = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("");
        for token in line.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
            let c = token.parse::<BigInt>().map_err(|_| InputError::Token {
                line: i + 1,
                token: token.to_string(),
            })?;
            coeffs.push(c);
        }
    }
    if coeffs.is_empty() {
        return Err(InputError::Empty);
    }
    Ok(Input::Polynomial {
        poly: IntPolynomial::new(coeffs),
        target: None,
    })
}

fn parse_json(value: &Value) -> Result<Input, InputError> {
    let root = FieldPath::default();
    let obj = value.as_object().ok_or_else(|| field(&root, "expected an object"))?;
    match (obj.get("poly"), obj.get("generators")) {
        (Some(_), Some(_)) => Err(field(&root, "has both `poly` and `generators`")),
        (Some(p), None) => {
            let path = root.key("poly");
            let coeffs = integers(p, &path)?;
            if coeffs.is_empty() {
                return Err(field(&path, "no coefficients"));
            }
            let target = match obj.get("target") {
                None => None,
                Some(t) => Some(match t.as_str() {
                    Some("Sn") | Some("sn") => PolyTarget::Sn,
                    Some("hyperoctahedral") => PolyTarget::Hyperoctahedral,
                    _ => return Err(field(&root.key("target"), "expected \"Sn\" or \"hyperoctahedral\"")),
                }),
            };
            Ok(Input::Polynomial {
                poly: IntPolynomial::new(coeffs),
                target,
            })
        }
        (None, Some(g)) => {
            let kind = match obj.get("group").and_then(Value::as_str) {
                Some("SL") => GroupKind::SpecialLinear,
                Some("Sp") => GroupKind::Symplectic,
                _ => return Err(field(&root.key("group"), "expected \"SL\" or \"Sp\"")),
            };
            let dim_path = root.key("dim");
            let dim = obj
                .get("dim")
                .and_then(Value::as_u64)
                .ok_or_else(|| field(&dim_path, "expected a positive integer"))?;
            let dim = usize::try_from(dim).map_err(|_| field(&dim_path, "too large"))?;
            let gens_path = root.key("generators");
            let list = g.as_array().ok_or_else(|| field(&gens_path, "expected an array of matrices"))?;
            let mut generators = Vec::with_capacity(list.len());
            for (i, m) in list.iter().enumerate() {
                let mpath = gens_path.index(i);
                let rows = m.as_array().ok_or_else(|| field(&mpath, "expected an array of rows"))?;
                let rows = rows
                    .iter()
                    .enumerate()
                    .map(|(r, row)| integers(row, &mpath.index(r)))
                    .collect::<Result<Vec<_>, _>>()?;
                generators.push(rows);
            }
            Ok(Input::Group(validate_rows(kind, dim, generators)?))
        }
        (None, None) => Err(field(&root, "expected `generators` or `poly`")),
    }
}

fn integers(value: &Value, path: &FieldPath) -> Result<Vec<BigInt>, InputError> {
    let arr = value.as_array().ok_or_else(|| field(path, "expected an array of integers"))?;
    arr.iter().enumerate().map(|(i, v)| integer(v, &path.index(i))).collect()
}

fn integer(value: &Value, path: &FieldPath) -> Result<BigInt, InputError> {
    match value {
        Value::Number(n) => {
            if let Some(v) = n.as_i64() {
                Ok(BigInt::from(v))
            } else if let Some(v) = n.as_u64() {
                Ok(BigInt::from(v))
            } else {
                Err(field(path, format!("`{n}` is not an integer")))
            }
        }
        Value::String(s) => s
            .trim()
            .parse::<BigInt>()
            .map_err(|_| field(path, format!("`{s}` is not an integer"))),
        _ => Err(field(path, "expected an integer")),
    }
}

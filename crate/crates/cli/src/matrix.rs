//! Corner matrices as JSON: `{"n": N, "entries": [{"row": r, "col": c,
//! "value": "<element>"}]}` with entries in `S_{N-1}`. Each listed value is
//! the full entry; unlisted entries are those of the identity.

use serde_json::{json, Value};
use snk1_core::QCornerMatrix;

use crate::parse::{parse_element, ReadError};

#[derive(Clone, PartialEq, Debug)]
pub enum MatrixError {
    Json(String),
    Schema(String),
    Entry { row: usize, col: usize, error: ReadError },
}

impl std::fmt::Display for MatrixError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MatrixError::Json(e) => write!(f, "invalid JSON: {e}"),
            MatrixError::Schema(e) => write!(f, "invalid matrix: {e}"),
            MatrixError::Entry { row, col, error } => write!(f, "entry ({row},{col}): {error}"),
        }
    }
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value, MatrixError> {
    v.get(key).ok_or_else(|| MatrixError::Schema(format!("missing \"{key}\"")))
}

fn index(v: &Value, key: &str) -> Result<usize, MatrixError> {
    field(v, key)?
        .as_u64()
        .map(|k| k as usize)
        .ok_or_else(|| MatrixError::Schema(format!("\"{key}\" must be a nonnegative integer")))
}

pub fn parse_matrix(text: &str) -> Result<QCornerMatrix, MatrixError> {
    let v: Value = serde_json::from_str(text).map_err(|e| MatrixError::Json(e.to_string()))?;
    let n = index(&v, "n")?;
    if n < 2 {
        return Err(MatrixError::Schema("\"n\" must be at least 2".into()));
    }
    let entries = field(&v, "entries")?
        .as_array()
        .ok_or_else(|| MatrixError::Schema("\"entries\" must be an array".into()))?;
    let mut m = QCornerMatrix::identity(n);
    for e in entries {
        let (row, col) = (index(e, "row")?, index(e, "col")?);
        let text = field(e, "value")?
            .as_str()
            .ok_or_else(|| MatrixError::Schema("\"value\" must be a string".into()))?;
        let value = parse_element(text, Some(n - 1)).map_err(|error| MatrixError::Entry { row, col, error })?;
        m.set(row, col, value)
            .map_err(|e| MatrixError::Entry { row, col, error: ReadError::Core(e) })?;
    }
    Ok(m)
}

pub fn matrix_to_json(m: &QCornerMatrix) -> Value {
    let entries: Vec<Value> = m
        .entries()
        .iter()
        .map(|(&(row, col), v)| json!({"row": row, "col": col, "value": v.to_string()}))
        .collect();
    json!({"n": m.n(), "entries": entries})
}

#[cfg(test)]
mod tests {
    use super::*;
    use snk1_core::QElement;

    #[test]
    fn round_trip() {
        let x1 = QElement::x(2, 1).unwrap();
        let m = QCornerMatrix::elementary(3, 0, 1, x1).unwrap();
        let text = matrix_to_json(&m).to_string();
        assert_eq!(parse_matrix(&text).unwrap(), m);
    }

    #[test]
    fn defaults_and_errors() {
        let m = parse_matrix(r#"{"n": 2, "entries": [{"row": 0, "col": 0, "value": "1"}]}"#).unwrap();
        assert!(m.is_identity());
        assert!(matches!(parse_matrix("{"), Err(MatrixError::Json(_))));
        assert!(matches!(parse_matrix(r#"{"n": 2}"#), Err(MatrixError::Schema(_))));
        let bad = r#"{"n": 2, "entries": [{"row": 0, "col": 1, "value": "x2"}]}"#;
        assert!(matches!(parse_matrix(bad), Err(MatrixError::Entry { .. })));
    }
}

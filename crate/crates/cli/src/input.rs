//! Input documents.
//!
//! ```json
//! {"p": 2, "n": 2, "kind": "code", "matrix": [["D1", "D2"]]}
//! {"p": 2, "n": 2, "kind": "complex", "matrices": [[["D1", "D2"]], [["D2"], ["D1"]]]}
//! ```
//!
//! Matrices are lists of rows; entries are polynomial strings.

use mdcc::field::{is_prime, MAX_MODULUS};
use mdcc::parse::parse_poly;
use mdcc::{PolyMatrix, PrimeField, Ring};
use serde_json::{Map, Value};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Code,
    Complex,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Code => "code",
            Kind::Complex => "complex",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InputDocument {
    pub ring: Ring,
    pub kind: Kind,
    /// One generator matrix for a code, `G_1, ..., G_l` for a complex.
    pub matrices: Vec<PolyMatrix>,
}

fn err(path: &str, message: impl Into<String>) -> CliError {
    CliError::Input {
        path: path.to_string(),
        column: None,
        message: message.into(),
    }
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str) -> Result<&'a Value, CliError> {
    obj.get(key)
        .ok_or_else(|| err("$", format!("missing field \"{key}\"")))
}

fn natural(obj: &Map<String, Value>, key: &str) -> Result<u64, CliError> {
    field(obj, key)?
        .as_u64()
        .ok_or_else(|| err(&format!("$.{key}"), "expected a non-negative integer"))
}

fn parse_matrix(value: &Value, path: &str, ring: &Ring) -> Result<PolyMatrix, CliError> {
    let rows = value
        .as_array()
        .ok_or_else(|| err(path, "expected a list of rows"))?;
    if rows.is_empty() {
        return Err(err(path, "matrix has no rows"));
    }
    let mut parsed = Vec::with_capacity(rows.len());
    let mut width = None;
    for (i, row) in rows.iter().enumerate() {
        let rpath = format!("{path}[{i}]");
        let entries = row
            .as_array()
            .ok_or_else(|| err(&rpath, "expected a list of entries"))?;
        match width {
            None if entries.is_empty() => return Err(err(&rpath, "matrix has no columns")),
            None => width = Some(entries.len()),
            Some(w) if w != entries.len() => {
                return Err(err(
                    &rpath,
                    format!(
                        "dimension mismatch: row has {} entries, expected {w}",
                        entries.len()
                    ),
                ))
            }
            _ => {}
        }
        let mut out = Vec::with_capacity(entries.len());
        for (j, e) in entries.iter().enumerate() {
            let epath = format!("{rpath}[{j}]");
            let text = e
                .as_str()
                .ok_or_else(|| err(&epath, "expected a polynomial string"))?;
            out.push(parse_poly(text, ring).map_err(|e| match e {
                mdcc::Error::Parse { column, message } => CliError::Input {
                    path: epath.clone(),
                    column: Some(column),
                    message,
                },
                other => err(&epath, other.to_string()),
            })?);
        }
        parsed.push(out);
    }
    let m = PolyMatrix::from_rows(*ring, parsed).map_err(|e| err(path, e.to_string()))?;
    if let Some(j) = m.zero_column() {
        return Err(err(path, format!("zero column {j}")));
    }
    Ok(m)
}

pub fn parse_input(text: &str) -> Result<InputDocument, CliError> {
    let value: Value = serde_json::from_str(text).map_err(|e| CliError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let obj = value
        .as_object()
        .ok_or_else(|| err("$", "expected an object"))?;
    for key in obj.keys() {
        if !["p", "n", "kind", "matrix", "matrices"].contains(&key.as_str()) {
            return Err(err(&format!("$.{key}"), "unknown field"));
        }
    }
    let p = natural(obj, "p")?;
    if !is_prime(p) || p >= MAX_MODULUS {
        return Err(err(
            "$.p",
            format!("p must be prime and below 2^31, got {p}"),
        ));
    }
    let n = natural(obj, "n")?;
    if n == 0 || n > 64 {
        return Err(err("$.n", format!("n must be between 1 and 64, got {n}")));
    }
    let ring = Ring::affine(
        PrimeField::new(p).map_err(|e| err("$.p", e.to_string()))?,
        n as usize,
    );
    let kind = match field(obj, "kind")?.as_str() {
        Some("code") => Kind::Code,
        Some("complex") => Kind::Complex,
        _ => return Err(err("$.kind", "kind must be \"code\" or \"complex\"")),
    };
    let matrices = match kind {
        Kind::Code => {
            if obj.contains_key("matrices") {
                return Err(err("$.matrices", "a code takes a single \"matrix\""));
            }
            vec![parse_matrix(field(obj, "matrix")?, "$.matrix", &ring)?]
        }
        Kind::Complex => {
            if obj.contains_key("matrix") {
                return Err(err("$.matrix", "a complex takes \"matrices\""));
            }
            let list = field(obj, "matrices")?
                .as_array()
                .ok_or_else(|| err("$.matrices", "expected a list of matrices"))?;
            if list.is_empty() {
                return Err(err("$.matrices", "a complex needs at least one matrix"));
            }
            let ms = list
                .iter()
                .enumerate()
                .map(|(k, m)| parse_matrix(m, &format!("$.matrices[{k}]"), &ring))
                .collect::<Result<Vec<_>, _>>()?;
            for k in 1..ms.len() {
                if ms[k - 1].cols() != ms[k].rows() {
                    return Err(err(
                        &format!("$.matrices[{k}]"),
                        format!(
                            "dimension mismatch: {} rows, previous matrix has {} columns",
                            ms[k].rows(),
                            ms[k - 1].cols()
                        ),
                    ));
                }
            }
            ms
        }
    };
    Ok(InputDocument {
        ring,
        kind,
        matrices,
    })
}

/// Serializes a matrix as rows of polynomial strings.
pub fn matrix_json(m: &PolyMatrix) -> Value {
    Value::Array(
        m.to_rows()
            .iter()
            .map(|row| Value::Array(row.iter().map(|e| Value::String(e.to_string())).collect()))
            .collect(),
    )
}

/// A document that [`parse_input`] reads back to the same complex.
pub fn complex_document(ring: &Ring, matrices: &[PolyMatrix]) -> Value {
    serde_json::json!({
        "p": ring.field.modulus(),
        "n": ring.n,
        "kind": "complex",
        "matrices": matrices.iter().map(matrix_json).collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn input_error(text: &str) -> (String, Option<usize>, String) {
        match parse_input(text) {
            Err(CliError::Input {
                path,
                column,
                message,
            }) => (path, column, message),
            other => panic!("expected an input error, got {other:?}"),
        }
    }

    #[test]
    fn reads_a_code() {
        let doc = parse_input(r#"{"p":2,"n":2,"kind":"code","matrix":[["D1","D2"]]}"#).unwrap();
        assert_eq!(doc.kind, Kind::Code);
        assert_eq!((doc.matrices[0].rows(), doc.matrices[0].cols()), (1, 2));
        assert_eq!(doc.matrices[0].get(0, 1).to_string(), "D2");
    }

    #[test]
    fn reduces_coefficients() {
        let doc = parse_input(r#"{"p":5,"n":1,"kind":"code","matrix":[["7*D1 + 12"]]}"#).unwrap();
        assert_eq!(doc.matrices[0].get(0, 0).to_string(), "2*D1 + 2");
    }

    #[test]
    fn rejects_bad_documents() {
        assert!(
            input_error(r#"{"p":4,"n":1,"kind":"code","matrix":[["D1"]]}"#)
                .2
                .contains("p must be prime")
        );
        assert!(
            input_error(r#"{"p":2,"n":1,"kind":"code","matrix":[["D1","0"]]}"#)
                .2
                .contains("zero column")
        );
        let (path, column, message) =
            input_error(r#"{"p":2,"n":2,"kind":"code","matrix":[["D1","D1 + D3"]]}"#);
        assert_eq!((path.as_str(), column), ("$.matrix[0][1]", Some(6)));
        assert!(message.contains("D3"));
        let (path, ..) =
            input_error(r#"{"p":2,"n":1,"kind":"complex","matrices":[[["D1","D1"]],[["1"]]]}"#);
        assert_eq!(path, "$.matrices[1]");
        assert!(
            input_error(r#"{"p":2,"n":1,"kind":"code","matrix":[["D1"],["D1","1"]]}"#)
                .2
                .contains("dimension mismatch")
        );
        assert!(matches!(
            parse_input("{\"p\":2,\n \"n\": }"),
            Err(CliError::Syntax { line: 2, .. })
        ));
    }

    #[test]
    fn complex_documents_round_trip() {
        let doc = parse_input(
            r#"{"p":3,"n":2,"kind":"complex","matrices":[[["D1","D2"]],[["D2"],["2*D1"]]]}"#,
        )
        .unwrap();
        let text = complex_document(&doc.ring, &doc.matrices).to_string();
        assert_eq!(parse_input(&text).unwrap(), doc);
    }
}

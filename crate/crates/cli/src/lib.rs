//! Command implementations behind the `mdcc` binary. Every command turns an
//! input document into a JSON report; nothing here prints.

pub mod input;

use mdcc::complexes::{
    check_minimal, minimal_resolution, minimality_witness, pd_defect, reducedness_defect,
    resolution_defect, validate_complex, CodePresentation, ExactnessDefect, PolyComplex,
};
use mdcc::invariants::{code_invariants, forney_table, hilbert_formula};
use mdcc::observability::{is_observable, prop3_spot_check};
use mdcc::oracle::{hilbert_oracle_range, memory_recovery_check, truncated_exactness};
use mdcc::{ModElem, TwistFunction};
use serde_json::{json, Value};
use thiserror::Error;

use input::{complex_document, matrix_json};
pub use input::{parse_input, InputDocument, Kind};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}{}: {message}", column.map(|c| format!(", column {c}")).unwrap_or_default())]
    Input {
        path: String,
        column: Option<usize>,
        message: String,
    },
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Compute(#[from] mdcc::Error),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckKind {
    Pd,
    Reduced,
    Minimal,
    Resolution,
}

impl CheckKind {
    fn name(self) -> &'static str {
        match self {
            CheckKind::Pd => "pd",
            CheckKind::Reduced => "reduced",
            CheckKind::Minimal => "minimal",
            CheckKind::Resolution => "resolution",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Resolve { hilbert_max: Option<u32> },
    Hilbert { max_d: u32, oracle: bool },
    Check(CheckKind),
    Observable { prop3_bound: Option<usize> },
    OracleVerify { max_d: u32 },
}

/// A report and, for property commands, the property's truth value.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub body: Value,
    pub property: Option<bool>,
}

impl Report {
    /// Pretty JSON with a trailing newline.
    pub fn render(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.body).expect("JSON values serialize");
        s.push('\n');
        s
    }
}

fn require(doc: &InputDocument, kind: Kind, command: &str) -> Result<(), CliError> {
    if doc.kind != kind {
        return Err(CliError::Usage(format!(
            "{command} expects kind \"{}\", got \"{}\"",
            kind.as_str(),
            doc.kind.as_str()
        )));
    }
    Ok(())
}

fn code_of(doc: &InputDocument) -> Result<CodePresentation, CliError> {
    Ok(CodePresentation::new(doc.matrices[0].clone())?)
}

fn complex_of(doc: &InputDocument) -> Result<PolyComplex, CliError> {
    validate_complex(doc.matrices.clone()).map_err(|e| CliError::Input {
        path: "$.matrices".into(),
        column: None,
        message: e.to_string(),
    })
}

fn twist_json(t: &TwistFunction) -> Value {
    json!(t.values())
}

fn elem_json(v: &ModElem) -> Value {
    Value::Array(
        v.components()
            .iter()
            .map(|c| Value::String(c.to_string()))
            .collect(),
    )
}

fn defect_fields(body: &mut Value, defect: &Option<ExactnessDefect>) {
    if let Some(d) = defect {
        body["witness_column"] = elem_json(&d.witness);
        body["witness_stage"] = json!(d.stage);
    }
}

pub fn run_command(command: &Command, doc: &InputDocument) -> Result<Report, CliError> {
    match command {
        Command::Resolve { hilbert_max } => resolve(doc, *hilbert_max),
        Command::Hilbert { max_d, oracle } => hilbert(doc, *max_d, *oracle),
        Command::Check(kind) => check(doc, *kind),
        Command::Observable { prop3_bound } => observable(doc, *prop3_bound),
        Command::OracleVerify { max_d } => oracle_verify(doc, *max_d),
    }
}

fn resolve(doc: &InputDocument, hilbert_max: Option<u32>) -> Result<Report, CliError> {
    require(doc, Kind::Code, "resolve")?;
    let rep = minimal_resolution(&code_of(doc)?)?;
    let inv = code_invariants(&rep, hilbert_max.map_or(-1, i64::from))?;
    let c = &rep.complex;
    let mut body = json!({
        "command": "resolve",
        "p": doc.ring.field.modulus(),
        "n": doc.ring.n,
        "sizes": {"q": c.q(), "p": c.sizes()},
        "homological_dimension": inv.homological_dimension,
        "rate": {"numerators": inv.rate.numerators, "q": inv.rate.q, "text": inv.rate.to_string()},
        "memory": inv.memory,
        "degree_table": {
            "raw": rep.degree_table.levels().iter().map(twist_json).collect::<Vec<_>>(),
            "forney": forney_table(&rep).levels().iter().map(twist_json).collect::<Vec<_>>(),
        },
        "matrices": c.matrices().iter().map(matrix_json).collect::<Vec<_>>(),
        "complex": complex_document(&doc.ring, c.matrices()),
        "checks": {
            "resolution": rep.is_resolution,
            "reduced": rep.is_reduced,
            "pd": rep.is_pd,
            "minimal": rep.is_minimal,
        },
    });
    if let Some(max_d) = hilbert_max {
        body["hilbert"] =
            json!({"max_d": max_d, "values": inv.hilbert_values.values().collect::<Vec<_>>()});
    }
    Ok(Report {
        body,
        property: None,
    })
}

fn hilbert(doc: &InputDocument, max_d: u32, with_oracle: bool) -> Result<Report, CliError> {
    require(doc, Kind::Code, "hilbert")?;
    let code = code_of(doc)?;
    let rep = minimal_resolution(&code)?;
    let values = (0..=i64::from(max_d))
        .map(|d| hilbert_formula(&rep.degree_table, doc.ring.n, d))
        .collect::<mdcc::Result<Vec<_>>>()?;
    let mut body = json!({"command": "hilbert", "max_d": max_d, "values": values});
    let mut property = None;
    if with_oracle {
        let (oracle, stabilized) = hilbert_oracle_range(&code, i64::from(max_d))?;
        let agrees = oracle == values;
        body["oracle"] = json!({"values": oracle, "agrees": agrees, "stabilized": stabilized});
        property = Some(agrees);
    }
    Ok(Report { body, property })
}

fn check(doc: &InputDocument, kind: CheckKind) -> Result<Report, CliError> {
    require(doc, Kind::Complex, "check")?;
    let g = complex_of(doc)?;
    let name = kind.name();
    let (holds, mut body) = match kind {
        CheckKind::Resolution | CheckKind::Reduced | CheckKind::Pd => {
            let defect = match kind {
                CheckKind::Resolution => resolution_defect(&g)?,
                CheckKind::Reduced => reducedness_defect(&g)?,
                _ => pd_defect(&g)?,
            };
            let mut body = json!({ name: defect.is_none() });
            defect_fields(&mut body, &defect);
            (defect.is_none(), body)
        }
        CheckKind::Minimal => {
            let witness = minimality_witness(&g)?;
            let mut body = json!({ name: witness.is_none() });
            if let Some(w) = &witness {
                body["witness_entry"] =
                    json!({"level": w.level, "row": w.row, "col": w.col, "value": w.value});
            }
            debug_assert_eq!(witness.is_none(), check_minimal(&g)?);
            (witness.is_none(), body)
        }
    };
    body["command"] = json!("check");
    Ok(Report {
        body,
        property: Some(holds),
    })
}

fn observable(doc: &InputDocument, prop3_bound: Option<usize>) -> Result<Report, CliError> {
    require(doc, Kind::Code, "observable")?;
    let code = code_of(doc)?;
    let rep = is_observable(&code)?;
    let mut body = json!({"command": "observable", "observable": rep.observable});
    if let Some(h) = &rep.parity_check {
        body["parity_check"] =
            json!({"rows": h.rows(), "cols": h.cols(), "matrix": matrix_json(h)});
    }
    if let Some(w) = &rep.witness {
        body["witness"] =
            json!({"element": elem_json(&w.element), "multiplier": w.multiplier.to_string()});
    }
    if let Some(bound) = prop3_bound {
        let res = minimal_resolution(&code)?;
        let holds = prop3_spot_check(&res.complex, bound)?;
        body["prop3"] = json!({"degree_bound": bound, "exact_for_all": holds, "agrees": holds == rep.observable});
    }
    Ok(Report {
        body,
        property: Some(rep.observable),
    })
}

fn oracle_verify(doc: &InputDocument, max_d: u32) -> Result<Report, CliError> {
    let max_d = i64::from(max_d);
    match doc.kind {
        Kind::Code => {
            let code = code_of(doc)?;
            let rep = minimal_resolution(&code)?;
            let formula = (0..=max_d)
                .map(|d| hilbert_formula(&rep.degree_table, doc.ring.n, d))
                .collect::<mdcc::Result<Vec<_>>>()?;
            let (oracle, stabilized) = hilbert_oracle_range(&code, max_d)?;
            let exact = (0..=max_d)
                .map(|d| truncated_exactness(&rep.complex, d))
                .collect::<mdcc::Result<Vec<_>>>()?;
            let m = code_invariants(&rep, -1)?.memory;
            let recovery = memory_recovery_check(&code, m, max_d.max(m + 1))?;
            let verified = formula == oracle && exact.iter().all(|&b| b) && recovery;
            let body = json!({
                "command": "oracle-verify",
                "kind": "code",
                "max_d": max_d,
                "hilbert": {"formula": formula, "oracle": oracle, "agrees": formula == oracle, "stabilized": stabilized},
                "truncated_exactness": exact,
                "memory": m,
                "memory_recovery": recovery,
                "verified": verified,
            });
            Ok(Report {
                body,
                property: Some(verified),
            })
        }
        Kind::Complex => {
            let g = complex_of(doc)?;
            let exact = (0..=max_d)
                .map(|d| truncated_exactness(&g, d))
                .collect::<mdcc::Result<Vec<_>>>()?;
            let pd = pd_defect(&g)?.is_none();
            let agrees = exact.iter().all(|&b| b) == pd;
            let body = json!({
                "command": "oracle-verify",
                "kind": "complex",
                "max_d": max_d,
                "truncated_exactness": exact,
                "pd": pd,
                "agrees": agrees,
            });
            Ok(Report {
                body,
                property: Some(agrees),
            })
        }
    }
}

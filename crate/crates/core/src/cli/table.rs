use std::str::FromStr;

use serde_json::{json, Map, Number, Value};

use super::text::QMode;
use crate::algebra::QPoly;
use crate::error::{Error, Result};
use crate::triangles::{FamilySpec, Triangle};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

#[derive(Clone, Debug)]
pub struct TableArgs {
    pub spec: FamilySpec,
    pub n_max: usize,
    pub q: QMode,
    pub format: OutputFormat,
}

fn int(v: impl ToString) -> Value {
    Value::Number(Number::from_str(&v.to_string()).expect("integer literal"))
}

fn cell_text(v: &QPoly, q: &QMode) -> String {
    match q {
        QMode::Symbolic => v.to_string(),
        QMode::Numeric(q0) => v.eval(q0).to_string(),
    }
}

fn cell_json(v: &QPoly, q: &QMode) -> Value {
    match q {
        QMode::Symbolic => json!({ "coeffs": v.coeffs().iter().map(int).collect::<Vec<_>>() }),
        QMode::Numeric(q0) => json!({ "value": v.eval(q0).to_string() }),
    }
}

/// Rows `n = r..=n_max` of the requested triangle, each holding `k = r..=n`.
///
/// CSV: one line per row, cells are polynomial strings (`2+q`) or rationals.
/// JSON: `{"rows": [[cell, ...], ...], "spec": {...}}` with keys sorted and
/// cells `{"coeffs": [...]}` (ascending powers of q) or `{"value": "a/b"}`.
pub fn cmd_table(args: &TableArgs) -> Result<String> {
    let mut tri = Triangle::new(args.spec.clone());
    let r = args.spec.r;
    if args.n_max < r {
        return Err(Error::RowBelowR { n: args.n_max, r });
    }
    let rows = (r..=args.n_max)
        .map(|n| tri.row(n))
        .collect::<Result<Vec<_>>>()?;
    Ok(match args.format {
        OutputFormat::Csv => {
            let mut out = String::new();
            for row in &rows {
                let cells: Vec<String> = row.iter().map(|v| cell_text(v, &args.q)).collect();
                out.push_str(&cells.join(","));
                out.push('\n');
            }
            out
        }
        OutputFormat::Json => {
            let spec = &args.spec;
            let mut s = Map::new();
            s.insert("kind".into(), Value::String(spec.kind.name().into()));
            s.insert("p".into(), Value::Array(spec.p.coeffs().iter().map(int).collect()));
            s.insert("q".into(), Value::String(args.q.to_string()));
            s.insert("qtype".into(), int(spec.q_type.number()));
            s.insert("r".into(), int(spec.r));
            let rows: Vec<Value> = rows
                .iter()
                .map(|row| Value::Array(row.iter().map(|v| cell_json(v, &args.q)).collect()))
                .collect();
            let doc = json!({ "rows": rows, "spec": Value::Object(s) });
            let mut text = serde_json::to_string(&doc).expect("json values serialize");
            text.push('\n');
            text
        }
    })
}

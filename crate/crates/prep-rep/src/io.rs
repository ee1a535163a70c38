//! Module files.
//!
//! ```toml
//! dim = [1, 1]
//!
//! [maps]
//! x = [[1]]
//! y = [[0]]
//! "x*" = [[0]]
//! "y*" = [["1/2"]]
//! ```
//!
//! One matrix per arrow of the doubled quiver, keyed by its label; entries
//! are integers or rational strings. Missing maps are zero.

use quiver_core::linalg::Mat;
use quiver_core::{BigRational, DimVector, Quiver};
use toml::Value;

use crate::{PiRep, RepError};

fn perr(message: impl Into<String>) -> RepError {
    RepError::Parse { line: 0, message: message.into() }
}

fn entry(v: &Value) -> Result<BigRational, RepError> {
    match v {
        Value::Integer(n) => Ok(BigRational::from_integer((*n).into())),
        Value::String(s) => s.trim().parse().map_err(|_| perr(format!("bad rational `{s}`"))),
        other => Err(perr(format!("bad matrix entry {other}"))),
    }
}

pub fn parse_rep(q: &Quiver, text: &str) -> Result<PiRep, RepError> {
    let table: toml::Table = text.parse().map_err(|e: toml::de::Error| {
        let line = e.span().map_or(0, |s| text[..s.start.min(text.len())].matches('\n').count() + 1);
        RepError::Parse { line, message: e.message().to_string() }
    })?;
    let dim: Vec<i64> = table
        .get("dim")
        .and_then(Value::as_array)
        .ok_or_else(|| perr("missing `dim`"))?
        .iter()
        .map(|v| v.as_integer().filter(|&d| d >= 0).ok_or_else(|| perr("`dim` entries must be nonnegative integers")))
        .collect::<Result<_, _>>()?;
    if dim.len() != q.num_vertices() {
        return Err(perr(format!("`dim` has {} entries, the quiver has {} vertices", dim.len(), q.num_vertices())));
    }
    let dim = DimVector(dim);
    let empty = toml::Table::new();
    let maps = match table.get("maps") {
        Some(Value::Table(t)) => t,
        None => &empty,
        Some(_) => return Err(perr("`maps` must be a table")),
    };
    let arrows = q.doubled_arrows();
    let labels: Vec<String> = arrows.iter().map(|e| q.label(*e)).collect();
    if let Some(k) = maps.keys().find(|k| !labels.contains(k)) {
        return Err(perr(format!("unknown arrow `{k}`")));
    }
    let mut mats = vec![];
    for (e, label) in arrows.iter().zip(&labels) {
        let (r, c) = (dim[q.target(*e)] as usize, dim[q.source(*e)] as usize);
        let Some(v) = maps.get(label) else {
            mats.push(Mat::zeros(r, c));
            continue;
        };
        let rows = v.as_array().ok_or_else(|| perr(format!("map `{label}` must be an array of rows")))?;
        let rows: Vec<Vec<BigRational>> = rows
            .iter()
            .map(|row| row.as_array().ok_or_else(|| perr(format!("map `{label}`: rows must be arrays")))?.iter().map(entry).collect())
            .collect::<Result<_, _>>()?;
        if rows.len() != r || rows.iter().any(|row| row.len() != c) {
            return Err(RepError::Shape { arrow: label.clone(), expected: (r, c), got: (rows.len(), rows.first().map_or(0, Vec::len)) });
        }
        mats.push(Mat::from_rows_shape(rows, c));
    }
    PiRep::new(q, dim, mats)
}

pub fn write_rep(m: &PiRep) -> String {
    let q = m.quiver();
    let dims: Vec<String> = m.dim().iter().map(|d| d.to_string()).collect();
    let mut out = format!("dim = [{}]\n\n[maps]\n", dims.join(", "));
    for e in q.doubled_arrows() {
        let x = m.map(e);
        if x.rows() == 0 || x.cols() == 0 {
            continue;
        }
        let rows: Vec<String> = (0..x.rows())
            .map(|r| {
                let cells: Vec<String> = x.row(r).iter().map(|v| if v.is_integer() { v.to_string() } else { format!("\"{v}\"") }).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        out.push_str(&format!("\"{}\" = [{}]\n", q.label(e), rows.join(", ")));
    }
    out
}

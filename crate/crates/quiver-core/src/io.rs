//! Quiver description files.
//!
//! ```toml
//! type = "A1~"            # optional tag
//! vertices = 2
//! arrows = [[1, 0], [1, 0]]
//! labels = ["x", "y"]     # optional, one per arrow
//! ```
//!
//! Vertex 0 is the affine vertex for affine quivers.

use serde::Deserialize;
use toml::Spanned;

use crate::{Arrow, Quiver, QuiverError};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct QuiverFile {
    #[serde(rename = "type")]
    kind: Option<String>,
    vertices: Spanned<usize>,
    arrows: Spanned<Vec<Spanned<Vec<i64>>>>,
    labels: Option<Spanned<Vec<String>>>,
}

fn line_of(text: &str, offset: usize) -> usize {
    text[..offset.min(text.len())].matches('\n').count() + 1
}

fn toml_error(text: &str, e: toml::de::Error) -> QuiverError {
    let line = e.span().map_or(0, |s| line_of(text, s.start));
    let msg = e.message().to_string();
    let field = msg
        .split('`')
        .nth(1)
        .filter(|_| msg.contains("field"))
        .unwrap_or("document")
        .to_string();
    QuiverError::Parse { line, field, message: msg }
}

/// Parses a quiver description.
pub fn parse_quiver(text: &str) -> Result<Quiver, QuiverError> {
    let file: QuiverFile = toml::from_str(text).map_err(|e| toml_error(text, e))?;
    let n = *file.vertices.get_ref();
    let labels = file.labels.as_ref().map(|l| l.get_ref().clone());
    if let Some(l) = &file.labels {
        if l.get_ref().len() != file.arrows.get_ref().len() {
            return Err(QuiverError::Parse {
                line: line_of(text, l.span().start),
                field: "labels".into(),
                message: "one label per arrow required".into(),
            });
        }
    }
    let mut arrows = Vec::new();
    for (k, a) in file.arrows.get_ref().iter().enumerate() {
        let bad = |message: String| QuiverError::Parse {
            line: line_of(text, a.span().start),
            field: format!("arrows[{k}]"),
            message,
        };
        let pair = a.get_ref();
        if pair.len() != 2 {
            return Err(bad("expected [source, target]".into()));
        }
        let (s, t) = (pair[0], pair[1]);
        if s < 0 || t < 0 || s as usize >= n || t as usize >= n {
            return Err(bad(format!("vertex out of range 0..{n}")));
        }
        if s == t {
            return Err(bad("edge loops are not allowed".into()));
        }
        let label = labels.as_ref().map_or_else(|| format!("a{k}"), |l| l[k].clone());
        arrows.push(Arrow { source: s as usize, target: t as usize, label });
    }
    let q = Quiver::with_arrows(n, arrows)?;
    Ok(match file.kind {
        Some(k) => q.with_kind(k),
        None => q,
    })
}

/// Serializes a quiver in the same format.
pub fn write_quiver(q: &Quiver) -> String {
    let mut out = String::new();
    if let Some(k) = q.kind() {
        out.push_str(&format!("type = \"{k}\"\n"));
    }
    out.push_str(&format!("vertices = {}\n", q.num_vertices()));
    let arrows: Vec<String> = q.arrows().iter().map(|a| format!("[{}, {}]", a.source, a.target)).collect();
    out.push_str(&format!("arrows = [{}]\n", arrows.join(", ")));
    let labels: Vec<String> = q.arrows().iter().map(|a| format!("\"{}\"", a.label)).collect();
    out.push_str(&format!("labels = [{}]\n", labels.join(", ")));
    out
}

use std::collections::BTreeSet;

use serde_json::Value;

use super::render::pretty;
use super::{Document, Format};
use crate::error::{Error, Result};
use crate::fock::{GradedMatrix, MatrixEntry};

/// Result of comparing output with a golden file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GoldenOutcome {
    Match,
    /// A human-readable description of the differences.
    Mismatch(String),
}

/// Reads every matrix in a JSON, CSV or LaTeX document.
pub fn matrices_from_document(text: &str, format: Format) -> Result<Vec<GradedMatrix>> {
    match format {
        Format::Json => {
            let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
            match &v {
                Value::Array(items) => items.iter().map(GradedMatrix::from_json_value).collect(),
                _ => Ok(vec![GradedMatrix::from_json_value(&v)?]),
            }
        }
        Format::Csv => sections(text, |l| l.starts_with("# block"))
            .iter()
            .filter(|s| {
                s.lines()
                    .any(|l| !l.trim().is_empty() && !l.starts_with('#'))
            })
            .map(|s| GradedMatrix::from_csv(s))
            .collect(),
        Format::Latex => text
            .split("\\end{array}")
            .filter(|chunk| chunk.contains("\\begin{array}"))
            .map(GradedMatrix::from_latex)
            .collect(),
        Format::Text => Err(Error::Unsupported(
            "matrices cannot be read back from text output".into(),
        )),
    }
}

fn sections(text: &str, starts: impl Fn(&str) -> bool) -> Vec<String> {
    let mut out = vec![String::new()];
    for line in text.lines() {
        if starts(line) && !out.last().expect("nonempty").trim().is_empty() {
            out.push(String::new());
        }
        let cur = out.last_mut().expect("nonempty");
        cur.push_str(line);
        cur.push('\n');
    }
    out
}

fn triples(ms: &[GradedMatrix]) -> BTreeSet<MatrixEntry> {
    ms.iter().flat_map(|m| m.triples()).collect()
}

fn describe(missing: &BTreeSet<&MatrixEntry>, extra: &BTreeSet<&MatrixEntry>) -> String {
    let mut out = String::new();
    for (sign, set) in [("-", missing), ("+", extra)] {
        for t in set.iter().take(50) {
            out.push_str(&format!("{sign} {} {} {}\n", t.row, t.col, t.value));
        }
    }
    out
}

pub(super) fn compare(
    doc: &Document,
    rendered: &str,
    expected: &str,
    format: Format,
) -> Result<GoldenOutcome> {
    if let Document::Matrices(ms) = doc {
        if format != Format::Text {
            let ours = triples(&ms.iter().map(|m| m.matrix.clone()).collect::<Vec<_>>());
            let theirs = triples(&matrices_from_document(expected, format)?);
            if ours == theirs {
                return Ok(GoldenOutcome::Match);
            }
            let missing = theirs.difference(&ours).collect();
            let extra = ours.difference(&theirs).collect();
            return Ok(GoldenOutcome::Mismatch(describe(&missing, &extra)));
        }
    }
    let same = if format == Format::Json {
        let theirs: Value =
            serde_json::from_str(expected).map_err(|e| Error::Parse(e.to_string()))?;
        let ours: Value =
            serde_json::from_str(rendered).map_err(|e| Error::Parse(e.to_string()))?;
        pretty(&ours) == pretty(&theirs)
    } else {
        rendered == expected
    };
    Ok(if same {
        GoldenOutcome::Match
    } else {
        GoldenOutcome::Mismatch("documents differ\n".into())
    })
}

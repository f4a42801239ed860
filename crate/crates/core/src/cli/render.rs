use serde_json::{json, Value};

use super::{BlockMatrix, Document, Format};
use crate::error::{Error, Result};
use crate::oracle::CheckReport;

fn matrix_json(m: &BlockMatrix) -> Value {
    let mut v = m.matrix.to_json_value();
    let obj = v.as_object_mut().expect("matrix json is an object");
    obj.insert("beta".into(), json!(m.block.beta));
    obj.insert("defect".into(), json!(m.block.defect));
    obj.insert("regime".into(), json!(m.regime.label()));
    obj.insert(
        "conjectural".into(),
        json!(m.regime == crate::combinatorics::Regime::Conjectural),
    );
    v
}

fn header(m: &BlockMatrix) -> String {
    format!(
        "block {} defect {} ({})",
        m.block.beta,
        m.block.defect,
        m.regime.label()
    )
}

fn text_table(m: &BlockMatrix) -> String {
    let mat = &m.matrix;
    let mut grid: Vec<Vec<String>> = Vec::new();
    let mut head = vec![String::new()];
    head.extend(mat.cols().iter().map(|c| c.to_string()));
    grid.push(head);
    for (i, r) in mat.rows().iter().enumerate() {
        let mut row = vec![r.to_string()];
        for j in 0..mat.cols().len() {
            let v = mat.entry(i, j);
            row.push(if v.is_zero() {
                ".".into()
            } else {
                v.to_string()
            });
        }
        grid.push(row);
    }
    let widths: Vec<usize> = (0..grid[0].len())
        .map(|j| {
            grid.iter()
                .map(|row| row[j].chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in grid {
        let cells: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}", w = *w))
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

fn report_text(r: &CheckReport, depth: usize, out: &mut String) {
    let status = if r.passed { "PASS" } else { "FAIL" };
    let mut line = format!("{}{status} {}", "  ".repeat(depth), r.name);
    if let Some(b) = &r.scope.block {
        line.push_str(&format!(" [{b}]"));
    }
    if let Some(c) = &r.counterexample {
        if r.checks.is_empty() {
            line.push_str(&format!(" {c}"));
        }
    }
    out.push_str(&line);
    out.push('\n');
    for c in &r.checks {
        report_text(c, depth + 1, out);
    }
}

pub(super) fn render(doc: &Document, format: Format) -> Result<String> {
    let unavailable = |what: &str| {
        Err(Error::Unsupported(format!(
            "{what} output is only available for matrix commands"
        )))
    };
    match (doc, format) {
        (Document::Matrices(ms), Format::Json) => {
            let v = if ms.len() == 1 {
                matrix_json(&ms[0])
            } else {
                Value::Array(ms.iter().map(matrix_json).collect())
            };
            Ok(pretty(&v))
        }
        (Document::Matrices(ms), Format::Csv) => Ok(ms
            .iter()
            .map(|m| format!("# {}\n{}", header(m), m.matrix.to_csv()))
            .collect::<Vec<_>>()
            .join("\n")),
        (Document::Matrices(ms), Format::Latex) => Ok(ms
            .iter()
            .map(|m| format!("% {}\n{}", header(m), m.matrix.to_latex()))
            .collect::<Vec<_>>()
            .join("\n")),
        (Document::Matrices(ms), Format::Text) => Ok(ms
            .iter()
            .map(|m| format!("{}\n{}", header(m), text_table(m)))
            .collect::<Vec<_>>()
            .join("\n")),
        (Document::Value { json, .. }, Format::Json) => Ok(pretty(json)),
        (Document::Value { text, .. }, Format::Text) => Ok(text.clone()),
        (Document::Report(r), Format::Json) => Ok(pretty(&r.to_json())),
        (Document::Report(r), Format::Text) => {
            let mut out = String::new();
            report_text(r, 0, &mut out);
            Ok(out)
        }
        (_, Format::Csv) => unavailable("CSV"),
        (_, Format::Latex) => unavailable("LaTeX"),
    }
}

pub(super) fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json renders");
    s.push('\n');
    s
}

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::combinatorics::Multipartition;
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

/// A dense matrix of Laurent polynomials with multipartition labels.
///
/// Decomposition matrices list rows and columns from the bottom of the
/// total order upwards, which makes them lower unitriangular.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedMatrix {
    rows: Vec<Multipartition>,
    cols: Vec<Multipartition>,
    entries: Vec<Vec<LaurentPoly>>,
    row_index: BTreeMap<Multipartition, usize>,
    col_index: BTreeMap<Multipartition, usize>,
}

/// One nonzero entry, rendered as text; matrices compare as sets of these.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct MatrixEntry {
    pub row: String,
    pub col: String,
    pub value: String,
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    rows: Vec<String>,
    cols: Vec<String>,
    entries: Vec<Vec<String>>,
}

fn index(labels: &[Multipartition]) -> BTreeMap<Multipartition, usize> {
    labels
        .iter()
        .enumerate()
        .map(|(i, l)| (l.clone(), i))
        .collect()
}

impl GradedMatrix {
    pub fn zeros(rows: Vec<Multipartition>, cols: Vec<Multipartition>) -> Self {
        let entries = vec![vec![LaurentPoly::zero(); cols.len()]; rows.len()];
        Self {
            row_index: index(&rows),
            col_index: index(&cols),
            rows,
            cols,
            entries,
        }
    }

    pub fn from_fn<F>(rows: Vec<Multipartition>, cols: Vec<Multipartition>, mut f: F) -> Self
    where
        F: FnMut(&Multipartition, &Multipartition) -> LaurentPoly,
    {
        let mut m = Self::zeros(rows, cols);
        for i in 0..m.rows.len() {
            for j in 0..m.cols.len() {
                m.entries[i][j] = f(&m.rows[i], &m.cols[j]);
            }
        }
        m
    }

    pub fn identity(labels: Vec<Multipartition>) -> Self {
        Self::from_fn(labels.clone(), labels, |a, b| {
            if a == b {
                LaurentPoly::one()
            } else {
                LaurentPoly::zero()
            }
        })
    }

    pub fn rows(&self) -> &[Multipartition] {
        &self.rows
    }

    pub fn cols(&self) -> &[Multipartition] {
        &self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i][j]
    }

    /// The entry in row `lambda`, column `mu`; zero for unknown labels.
    pub fn get(&self, lambda: &Multipartition, mu: &Multipartition) -> LaurentPoly {
        match (self.row_index.get(lambda), self.col_index.get(mu)) {
            (Some(&i), Some(&j)) => self.entries[i][j].clone(),
            _ => LaurentPoly::zero(),
        }
    }

    pub fn set(
        &mut self,
        lambda: &Multipartition,
        mu: &Multipartition,
        value: LaurentPoly,
    ) -> Result<()> {
        let i = *self
            .row_index
            .get(lambda)
            .ok_or_else(|| Error::InvalidMultipartition(format!("no row {lambda}")))?;
        let j = *self
            .col_index
            .get(mu)
            .ok_or_else(|| Error::InvalidMultipartition(format!("no column {mu}")))?;
        self.entries[i][j] = value;
        Ok(())
    }

    pub fn row_position(&self, lambda: &Multipartition) -> Option<usize> {
        self.row_index.get(lambda).copied()
    }

    pub fn col_position(&self, mu: &Multipartition) -> Option<usize> {
        self.col_index.get(mu).copied()
    }

    /// Keeps the columns accepted by `keep`, in their current order.
    pub fn select_columns<F: FnMut(&Multipartition) -> bool>(&self, mut keep: F) -> Self {
        let picked: Vec<usize> = (0..self.cols.len())
            .filter(|&j| keep(&self.cols[j]))
            .collect();
        let cols = picked.iter().map(|&j| self.cols[j].clone()).collect();
        let mut out = Self::zeros(self.rows.clone(), cols);
        for i in 0..self.rows.len() {
            for (jj, &j) in picked.iter().enumerate() {
                out.entries[i][jj] = self.entries[i][j].clone();
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols.clone(), self.rows.clone(), |a, b| self.get(b, a))
    }

    /// Nonzero entries as `(row, col, value)` text triples.
    pub fn triples(&self) -> BTreeSet<MatrixEntry> {
        let mut out = BTreeSet::new();
        for (i, r) in self.rows.iter().enumerate() {
            for (j, c) in self.cols.iter().enumerate() {
                let v = &self.entries[i][j];
                if !v.is_zero() {
                    out.insert(MatrixEntry {
                        row: r.to_string(),
                        col: c.to_string(),
                        value: v.to_string(),
                    });
                }
            }
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows.len())
                .all(|i| (0..i).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    /// Locates the first entry violating "diagonal 1, and nonzero only when
    /// the row label dominates the column label".
    pub fn unitriangularity_violation(&self) -> Option<(Multipartition, Multipartition, String)> {
        for (i, r) in self.rows.iter().enumerate() {
            for (j, c) in self.cols.iter().enumerate() {
                let v = &self.entries[i][j];
                if r == c {
                    if !v.is_one() {
                        return Some((r.clone(), c.clone(), format!("diagonal entry is {v}")));
                    }
                } else if !v.is_zero() && !r.dominates_unchecked(c) {
                    return Some((
                        r.clone(),
                        c.clone(),
                        format!("nonzero entry {v} but row does not dominate column"),
                    ));
                }
            }
        }
        None
    }

    fn is_blank_above_diagonal(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows.len())
                .all(|i| (i + 1..self.cols.len()).all(|j| self.entries[i][j].is_zero()))
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let js = MatrixJson {
            rows: self.rows.iter().map(|r| r.to_string()).collect(),
            cols: self.cols.iter().map(|c| c.to_string()).collect(),
            entries: self
                .entries
                .iter()
                .map(|row| row.iter().map(|v| v.to_string()).collect())
                .collect(),
        };
        serde_json::to_value(js).expect("matrix serializes")
    }

    pub fn from_json_value(value: &serde_json::Value) -> Result<Self> {
        let js: MatrixJson =
            serde_json::from_value(value.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let rows = js
            .rows
            .iter()
            .map(|r| r.parse())
            .collect::<Result<Vec<Multipartition>>>()?;
        let cols = js
            .cols
            .iter()
            .map(|c| c.parse())
            .collect::<Result<Vec<Multipartition>>>()?;
        if js.entries.len() != rows.len() || js.entries.iter().any(|r| r.len() != cols.len()) {
            return Err(Error::Parse(
                "matrix entries do not match its labels".into(),
            ));
        }
        let mut m = Self::zeros(rows, cols);
        for (i, row) in js.entries.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                m.entries[i][j] = v.parse()?;
            }
        }
        Ok(m)
    }

    /// CSV with a header of column labels; the top-left cell is empty.
    pub fn to_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new()
            .quote_style(csv::QuoteStyle::Necessary)
            .from_writer(Vec::new());
        let mut header = vec![String::new()];
        header.extend(self.cols.iter().map(|c| c.to_string()));
        w.write_record(&header).expect("in-memory write");
        for (i, r) in self.rows.iter().enumerate() {
            let mut rec = vec![r.to_string()];
            rec.extend(self.entries[i].iter().map(|v| v.to_string()));
            w.write_record(&rec).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        let mut rdr = csv::ReaderBuilder::new()
            .has_headers(false)
            .comment(Some(b'#'))
            .from_reader(text.as_bytes());
        let mut records = rdr.records();
        let parse_err = |e: csv::Error| Error::Parse(e.to_string());
        let header = records
            .next()
            .ok_or_else(|| Error::Parse("empty CSV".into()))?
            .map_err(parse_err)?;
        let cols = header
            .iter()
            .skip(1)
            .map(|c| c.parse())
            .collect::<Result<Vec<Multipartition>>>()?;
        let mut rows = Vec::new();
        let mut values = Vec::new();
        for rec in records {
            let rec = rec.map_err(parse_err)?;
            rows.push(rec.get(0).unwrap_or_default().parse::<Multipartition>()?);
            let vals = rec
                .iter()
                .skip(1)
                .map(|v| v.parse())
                .collect::<Result<Vec<LaurentPoly>>>()?;
            if vals.len() != cols.len() {
                return Err(Error::Parse("ragged CSV row".into()));
            }
            values.push(vals);
        }
        let mut m = Self::zeros(rows, cols);
        m.entries = values;
        Ok(m)
    }

    /// A LaTeX `array` in the layout of the published tables: one label
    /// column per component, zero shown as `.`, and for lower-triangular
    /// square matrices the upper triangle left blank.
    pub fn to_latex(&self) -> String {
        let level = self
            .rows
            .first()
            .or(self.cols.first())
            .map_or(1, |m| m.level());
        let label_spec = if level == 1 {
            "l".to_string()
        } else {
            format!("r{}@{{|}}l", "@{|}c".repeat(level - 2))
        };
        let blank_upper = self.is_blank_above_diagonal();
        let mut out = String::new();
        if self.rows != self.cols {
            let cols: Vec<String> = self.cols.iter().map(|c| c.to_string()).collect();
            out.push_str(&format!("% columns: {}\n", cols.join(" ; ")));
        }
        out.push_str(&format!(
            "\\begin{{array}}{{{label_spec}|*{{{}}}{{c}}}}\n",
            self.cols.len()
        ));
        for (i, r) in self.rows.iter().enumerate() {
            let mut cells = vec![format!("({})", r.latex_components().join("&"))];
            for j in 0..self.cols.len() {
                let v = &self.entries[i][j];
                cells.push(if blank_upper && j > i {
                    String::new()
                } else if v.is_zero() {
                    ".".to_string()
                } else {
                    v.to_latex()
                });
            }
            out.push_str(&cells.join("&"));
            out.push_str("\\\\\n");
        }
        out.push_str("\\end{array}\n");
        out
    }

    /// Reads a LaTeX array in the layout written by [`GradedMatrix::to_latex`].
    /// Blank cells and `.` are zero; surplus trailing blank cells are
    /// ignored. Without a `% columns:` line the column labels are the row
    /// labels.
    pub fn from_latex(text: &str) -> Result<Self> {
        let mut level = None;
        let mut cols: Option<Vec<Multipartition>> = None;
        let mut rows = Vec::new();
        let mut cells_per_row = Vec::new();
        for line in text.lines() {
            let line = line.trim().trim_start_matches('$');
            if let Some(spec) = line.strip_prefix("% columns:") {
                cols = Some(
                    spec.split(" ; ")
                        .map(|c| c.trim().parse())
                        .collect::<Result<Vec<Multipartition>>>()?,
                );
                continue;
            }
            if line.starts_with("\\begin{array}") {
                level = Some(line.matches("@{|}").count() + 1);
                continue;
            }
            if line.is_empty() || line.starts_with('%') || line.starts_with("\\end") {
                continue;
            }
            let body = line.trim_end_matches("\\\\").trim_end();
            let level = level.ok_or_else(|| Error::Parse("missing \\begin{array} line".into()))?;
            let cells: Vec<&str> = body.split('&').collect();
            if cells.len() < level {
                return Err(Error::Parse(format!("short LaTeX row {line:?}")));
            }
            let label = cells[..level].join("|");
            rows.push(label.parse::<Multipartition>()?);
            cells_per_row.push(
                cells[level..]
                    .iter()
                    .map(|c| c.trim().to_string())
                    .collect::<Vec<_>>(),
            );
        }
        let cols = cols.unwrap_or_else(|| rows.clone());
        let mut m = Self::zeros(rows, cols);
        for (i, cells) in cells_per_row.iter().enumerate() {
            for (j, cell) in cells.iter().enumerate() {
                if j >= m.cols.len() {
                    if cell.is_empty() {
                        continue;
                    }
                    return Err(Error::Parse(format!(
                        "extra cell {cell:?} in row {}",
                        i + 1
                    )));
                }
                m.entries[i][j] = LaurentPoly::from_latex(cell)?;
            }
        }
        Ok(m)
    }
}

/// `C = D^T D`: `C[lambda][mu] = sum_nu D[nu][lambda] D[nu][mu]`.
pub fn cartan_matrix(d: &GradedMatrix) -> GradedMatrix {
    let cols = d.cols().to_vec();
    let mut c = GradedMatrix::zeros(cols.clone(), cols);
    let n = d.cols().len();
    for a in 0..n {
        for b in a..n {
            let mut sum = LaurentPoly::zero();
            for nu in 0..d.rows().len() {
                let x = d.entry(nu, a);
                let y = d.entry(nu, b);
                if !x.is_zero() && !y.is_zero() {
                    sum += &(x * y);
                }
            }
            c.entries[b][a] = sum.clone();
            c.entries[a][b] = sum;
        }
    }
    c
}

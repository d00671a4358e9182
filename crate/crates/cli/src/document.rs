use std::fmt::Write as _;

use jw_core::exactlin::{Int, QuotientStructure};
use num_bigint::BigInt;
use serde_json::{json, Map, Value};

/// Largest magnitude written as a JSON number; larger integers become strings.
const JSON_SAFE: i64 = 1 << 53;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

/// One table cell: an exact integer or a label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cell {
    Int(BigInt),
    Text(String),
}

impl Cell {
    fn render(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Text(s) => s.clone(),
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Cell::Int(v) => int_json(v),
            Cell::Text(s) => Value::String(s.clone()),
        }
    }
}

fn int_json(v: &BigInt) -> Value {
    match i64::try_from(v) {
        Ok(x) if x.abs() <= JSON_SAFE => json!(x),
        _ => Value::String(v.to_string()),
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(BigInt::from(v))
    }
}

impl From<i64> for Cell {
    fn from(v: i64) -> Self {
        Cell::Int(BigInt::from(v))
    }
}

impl From<&Int> for Cell {
    fn from(v: &Int) -> Self {
        Cell::Int(v.to_bigint())
    }
}

impl From<BigInt> for Cell {
    fn from(v: BigInt) -> Self {
        Cell::Int(v)
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Text(if v { "yes" } else { "no" }.to_string())
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Text(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_string())
    }
}

/// A rectangular table of exact values with a title and a provenance note.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableDocument {
    pub title: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
    pub provenance: String,
    /// Set for single-group outputs; rendered as `free_rank` and `torsion`.
    pub structure: Option<QuotientStructure>,
}

impl TableDocument {
    pub fn new(title: impl Into<String>, columns: &[&str], provenance: impl Into<String>) -> Self {
        TableDocument {
            title: title.into(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
            provenance: provenance.into(),
            structure: None,
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        assert_eq!(row.len(), self.columns.len(), "row width differs from header in `{}`", self.title);
        self.rows.push(row);
    }

    pub fn with_structure(mut self, s: QuotientStructure) -> Self {
        self.structure = Some(s);
        self
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.to_text(),
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(),
        }
    }

    fn to_text(&self) -> String {
        let cells: Vec<Vec<String>> = self.rows.iter().map(|r| r.iter().map(Cell::render).collect()).collect();
        let widths: Vec<usize> = (0..self.columns.len())
            .map(|c| cells.iter().map(|r| r[c].len()).chain([self.columns[c].len()]).max().unwrap_or(0))
            .collect();
        let line = |vals: &[String]| {
            let padded: Vec<String> = vals.iter().zip(&widths).map(|(v, w)| format!("{v:>w$}")).collect();
            padded.join("  ").trim_end().to_string()
        };
        let mut out = String::new();
        writeln!(out, "# {}", self.title).unwrap();
        writeln!(out, "{}", line(&self.columns)).unwrap();
        for r in &cells {
            writeln!(out, "{}", line(r)).unwrap();
        }
        if let Some(s) = &self.structure {
            writeln!(out, "structure: {s}").unwrap();
        }
        writeln!(out, "# {}", self.provenance).unwrap();
        out
    }

    fn to_csv(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{}", self.columns.iter().map(|c| csv_field(c)).collect::<Vec<_>>().join(",")).unwrap();
        for r in &self.rows {
            writeln!(out, "{}", r.iter().map(|c| csv_field(&c.render())).collect::<Vec<_>>().join(",")).unwrap();
        }
        out
    }

    fn to_json(&self) -> String {
        let mut doc = Map::new();
        doc.insert("title".into(), json!(self.title));
        doc.insert("columns".into(), json!(self.columns));
        let rows: Vec<Value> = self.rows.iter().map(|r| Value::Array(r.iter().map(Cell::to_json).collect())).collect();
        doc.insert("rows".into(), Value::Array(rows));
        doc.insert("provenance".into(), json!(self.provenance));
        if let Some(s) = &self.structure {
            doc.insert("free_rank".into(), json!(s.free_rank));
            let torsion: Vec<Value> = s.torsion.iter().map(|t| int_json(&t.to_bigint())).collect();
            doc.insert("torsion".into(), Value::Array(torsion));
        }
        let mut s = serde_json::to_string_pretty(&Value::Object(doc)).expect("serializable");
        s.push('\n');
        s
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Torsion coefficients as `a;b;c` (empty when torsion-free).
pub fn torsion_cell(s: &QuotientStructure) -> Cell {
    Cell::Text(s.torsion.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(";"))
}

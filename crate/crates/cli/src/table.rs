use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use serde_json::{Map, Value};

use crate::args::Format;
use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Cell {
    Int(usize),
    Float(f64),
}

impl Cell {
    fn csv(self) -> String {
        match self {
            Cell::Int(i) => i.to_string(),
            // 17 significant digits
            Cell::Float(v) => format!("{v:.16e}"),
        }
    }

    fn json(self) -> Value {
        match self {
            Cell::Int(i) => Value::from(i),
            Cell::Float(v) => Value::from(v),
        }
    }
}

/// Named columns of equal length.
#[derive(Debug, Default)]
pub struct Table {
    header: Vec<String>,
    rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new<S: Into<String>>(header: impl IntoIterator<Item = S>) -> Self {
        Self {
            header: header.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    /// A table whose first column is the row index `n`.
    pub fn indexed(names: Vec<String>, columns: &[&[f64]]) -> Self {
        let mut t = Table::new(std::iter::once("n".to_string()).chain(names));
        let len = columns.first().map_or(0, |c| c.len());
        for n in 0..len {
            let mut row = vec![Cell::Int(n)];
            row.extend(columns.iter().map(|c| Cell::Float(c[n])));
            t.push(row);
        }
        t
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    fn write_csv(&self, w: &mut impl Write) -> io::Result<()> {
        writeln!(w, "{}", self.header.join(","))?;
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|c| c.csv()).collect();
            writeln!(w, "{}", cells.join(","))?;
        }
        Ok(())
    }

    fn to_json(&self) -> Value {
        Value::Array(
            self.rows
                .iter()
                .map(|row| {
                    let obj: Map<String, Value> = self
                        .header
                        .iter()
                        .cloned()
                        .zip(row.iter().map(|c| c.json()))
                        .collect();
                    Value::Object(obj)
                })
                .collect(),
        )
    }
}

/// Data to emit: a record table or a bare numeric matrix.
pub enum Output {
    Table(Table),
    Matrix(Vec<Vec<f64>>),
}

fn write_to(out: &Output, format: Format, w: &mut impl Write) -> io::Result<()> {
    match (out, format) {
        (Output::Table(t), Format::Csv) => t.write_csv(w)?,
        (Output::Table(t), Format::Json) => {
            serde_json::to_writer_pretty(&mut *w, &t.to_json())?;
            writeln!(w)?;
        }
        (Output::Matrix(m), Format::Csv) => {
            for row in m {
                let cells: Vec<String> = row.iter().map(|v| Cell::Float(*v).csv()).collect();
                writeln!(w, "{}", cells.join(","))?;
            }
        }
        (Output::Matrix(m), Format::Json) => {
            serde_json::to_writer(&mut *w, m)?;
            writeln!(w)?;
        }
    }
    w.flush()
}

pub fn emit(out: &Output, format: Format, path: Option<&Path>) -> Result<(), CliError> {
    let result = match path {
        Some(p) => File::create(p).and_then(|f| write_to(out, format, &mut BufWriter::new(f))),
        None => write_to(out, format, &mut BufWriter::new(io::stdout().lock())),
    };
    result.map_err(|e| {
        let target = path.map_or("stdout".to_string(), |p| p.display().to_string());
        CliError::Io(format!("{target}: {e}"))
    })
}

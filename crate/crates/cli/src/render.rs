//! Aligned text tables, CSV, and matrix input.

use std::io::{self, Write};

use dopekit::{DopeMatrix, Error, Result};

pub struct Table {
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: impl IntoIterator<Item = String>) -> Self {
        Table { header: header.into_iter().collect(), rows: Vec::new() }
    }

    pub fn row(&mut self, cells: impl IntoIterator<Item = String>) {
        self.rows.push(cells.into_iter().collect());
    }

    pub fn write(&self, out: &mut dyn Write, csv: bool) -> io::Result<()> {
        if csv {
            for r in std::iter::once(&self.header).chain(&self.rows) {
                let cells: Vec<String> = r.iter().map(|c| csv_cell(c)).collect();
                writeln!(out, "{}", cells.join(","))?;
            }
            return Ok(());
        }
        let mut widths = vec![0; self.header.len()];
        for r in std::iter::once(&self.header).chain(&self.rows) {
            for (w, c) in widths.iter_mut().zip(r) {
                *w = (*w).max(c.chars().count());
            }
        }
        for r in std::iter::once(&self.header).chain(&self.rows) {
            let cells: Vec<String> = r.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
            writeln!(out, "{}", cells.join("  ").trim_end())?;
        }
        Ok(())
    }
}

fn csv_cell(c: &str) -> String {
    if c.contains([',', '"', '\n']) {
        format!("\"{}\"", c.replace('"', "\"\""))
    } else {
        c.to_string()
    }
}

/// `"0101/0010"` style rows, or `{"rows": ["0101", "0010"]}`.
pub fn parse_matrix(text: &str) -> Result<DopeMatrix> {
    if text.trim_start().starts_with('{') {
        return serde_json::from_str(text).map_err(|e| Error::Parse(format!("matrix: {e}")));
    }
    DopeMatrix::parse(text)
}

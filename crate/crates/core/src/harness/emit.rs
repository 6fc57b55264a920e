//! CSV and JSON emission of computed tables.

use std::path::Path;
use std::str::FromStr;

use serde_json::json;

use super::tables::Table;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(Error::domain(format!("unknown format {other:?}; expected csv or json"))),
        }
    }
}

/// Five significant digits in scientific notation, e.g. `2.2761e-04`.
/// Non-finite values become an empty cell.
pub fn format_sci(v: f64) -> String {
    if !v.is_finite() {
        return String::new();
    }
    let s = format!("{v:.4e}");
    let (mantissa, exp) = s.split_once('e').expect("scientific format has an exponent");
    let exp: i32 = exp.parse().expect("exponent is an integer");
    let sign = if exp < 0 { '-' } else { '+' };
    format!("{mantissa}e{sign}{:02}", exp.abs())
}

impl Table {
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.columns).expect("writing to memory");
        for row in &self.rows {
            let record = std::iter::once(row.n.to_string()).chain(row.values.iter().map(|&v| format_sci(v)));
            w.write_record(record).expect("writing to memory");
        }
        String::from_utf8(w.into_inner().expect("flushing to memory")).expect("csv output is UTF-8")
    }

    /// Full-precision values; non-finite cells become `null`.
    pub fn to_json(&self) -> String {
        let rows: Vec<_> = self
            .rows
            .iter()
            .map(|row| {
                let mut obj = serde_json::Map::new();
                obj.insert(self.columns[0].clone(), json!(row.n));
                for (name, &v) in self.columns[1..].iter().zip(&row.values) {
                    obj.insert(name.clone(), json!(v));
                }
                obj
            })
            .collect();
        let doc = json!({
            "title": self.title,
            "columns": self.columns,
            "metadata": self.metadata,
            "rows": rows,
        });
        let mut text = serde_json::to_string_pretty(&doc).expect("table serializes");
        text.push('\n');
        text
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(),
        }
    }
}

/// Writes `table` to `path` in the given format.
pub fn emit(table: &Table, format: Format, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    std::fs::write(path, table.render(format)).map_err(|source| Error::Io {
        path: path.to_owned(),
        source,
    })
}

//! Flat tabular output rendered as CSV or JSON, and parsed back.

use std::fmt;
use std::str::FromStr;

use serde_json::{Map, Value};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(Error::InvalidInput(format!("unknown format {other:?}, expected csv or json"))),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Csv => "csv",
            Format::Json => "json",
        })
    }
}

/// Rows of string values under a fixed list of column names.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<S: Into<String>>(columns: impl IntoIterator<Item = S>) -> Self {
        Table { columns: columns.into_iter().map(Into::into).collect(), rows: Vec::new() }
    }

    /// A table built from key/value records sharing the same keys.
    pub fn from_records(records: Vec<Vec<(&str, String)>>) -> Result<Self> {
        let Some(first) = records.first() else {
            return Ok(Table::default());
        };
        let mut table = Table::new(first.iter().map(|(k, _)| *k));
        for record in records {
            let (keys, values): (Vec<&str>, Vec<String>) = record.into_iter().unzip();
            if keys != table.columns {
                return Err(Error::Internal("records with different keys in one table".into()));
            }
            table.rows.push(values);
        }
        Ok(table)
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    /// Value of `column` in row `i`.
    pub fn get(&self, i: usize, column: &str) -> Option<&str> {
        let j = self.columns.iter().position(|c| c == column)?;
        self.rows.get(i).map(|r| r[j].as_str())
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(),
        }
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
        let io = |e: csv::Error| Error::Internal(e.to_string());
        w.write_record(&self.columns).map_err(io)?;
        for row in &self.rows {
            w.write_record(row).map_err(io)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Internal(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Error::Internal(e.to_string()))
    }

    /// A JSON array holding one object per row, one row per line.
    pub fn to_json(&self) -> Result<String> {
        let mut out = String::from("[");
        for (i, row) in self.rows.iter().enumerate() {
            let object: Map<String, Value> =
                self.columns.iter().cloned().zip(row.iter().map(|v| Value::String(v.clone()))).collect();
            out.push_str(if i == 0 { "\n" } else { ",\n" });
            out.push_str(&serde_json::to_string(&object).map_err(|e| Error::Internal(e.to_string()))?);
        }
        out.push_str(if self.rows.is_empty() { "]\n" } else { "\n]\n" });
        Ok(out)
    }

    pub fn parse(text: &str, format: Format) -> Result<Self> {
        match format {
            Format::Csv => Self::parse_csv(text),
            Format::Json => Self::parse_json(text),
        }
    }

    pub fn parse_csv(text: &str) -> Result<Self> {
        let bad = |e: csv::Error| Error::InvalidInput(e.to_string());
        let mut r = csv::ReaderBuilder::new().from_reader(text.as_bytes());
        let mut table = Table::new(r.headers().map_err(bad)?.iter());
        for record in r.records() {
            table.rows.push(record.map_err(bad)?.iter().map(str::to_string).collect());
        }
        Ok(table)
    }

    /// Parses JSON output; an empty array yields a table without columns.
    pub fn parse_json(text: &str) -> Result<Self> {
        let bad = |what: &str| Error::InvalidInput(format!("malformed JSON table: {what}"));
        let value: Value = serde_json::from_str(text).map_err(|e| bad(&e.to_string()))?;
        let rows = value.as_array().ok_or_else(|| bad("not an array"))?;
        let mut table = Table::default();
        for (i, row) in rows.iter().enumerate() {
            let object = row.as_object().ok_or_else(|| bad("row is not an object"))?;
            if i == 0 {
                table.columns = object.keys().cloned().collect();
            }
            let values = object
                .iter()
                .map(|(_, v)| v.as_str().map(str::to_string).ok_or_else(|| bad("value is not a string")))
                .collect::<Result<Vec<_>>>()?;
            table.rows.push(values);
        }
        Ok(table)
    }
}

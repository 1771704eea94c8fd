//! Report rendering: pretty JSON (or JSON lines for listings) and CSV.

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

impl std::str::FromStr for Format {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> anyhow::Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => anyhow::bail!("unknown format {s:?} (expected json or csv)"),
        }
    }
}

/// How a run ended, mapped onto the process exit code.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Complete,
    /// A cap or budget cut the computation short.
    Incomplete,
    /// An internal consistency check failed.
    Violation,
}

impl Status {
    pub fn code(self) -> i32 {
        match self {
            Status::Complete => 0,
            Status::Incomplete => 2,
            Status::Violation => 3,
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct Table {
    pub headers: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(headers: &[&'static str]) -> Self {
        Table {
            headers: headers.to_vec(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }

    pub fn render(&self) -> anyhow::Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.headers)?;
        for row in &self.rows {
            w.write_record(row)?;
        }
        Ok(String::from_utf8(w.into_inner()?)?)
    }
}

pub struct Output {
    pub json: String,
    pub table: Table,
    pub status: Status,
}

impl Output {
    pub fn document<T: Serialize>(value: &T, table: Table, status: Status) -> anyhow::Result<Self> {
        let mut json = serde_json::to_string_pretty(value)?;
        json.push('\n');
        Ok(Output { json, table, status })
    }

    /// One compact JSON object per line.
    pub fn lines<T: Serialize>(values: &[T], table: Table, status: Status) -> anyhow::Result<Self> {
        let mut json = String::new();
        for v in values {
            json.push_str(&serde_json::to_string(v)?);
            json.push('\n');
        }
        Ok(Output { json, table, status })
    }

    pub fn render(&self, format: Format) -> anyhow::Result<String> {
        match format {
            Format::Json => Ok(self.json.clone()),
            Format::Csv => self.table.render(),
        }
    }
}

pub fn cell<T: ToString>(v: T) -> String {
    v.to_string()
}

pub fn opt_cell<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_quotes_cells_with_commas() {
        let mut t = Table::new(&["label", "n"]);
        t.push(vec!["[(1,0),(2,1)]".into(), cell(3)]);
        t.push(vec![opt_cell(None::<u8>), cell(true)]);
        assert_eq!(t.render().unwrap(), "label,n\n\"[(1,0),(2,1)]\",3\n,true\n");
    }

    #[test]
    fn json_lines_are_compact() {
        let out = Output::lines(&[1, 2], Table::default(), Status::Complete).unwrap();
        assert_eq!(out.render(Format::Json).unwrap(), "1\n2\n");
        assert_eq!(Status::Incomplete.code(), 2);
        assert_eq!(Status::Violation.code(), 3);
    }
}

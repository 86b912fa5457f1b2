use std::fmt::Write;

use repstab::{LiteratureRanges, StableRanges};
use serde_json::Value;

/// Rendered result of one command, in both output formats.
pub struct Output {
    pub json: Value,
    pub table: String,
}

impl Output {
    pub fn new(json: Value, table: String) -> Self {
        Output { json, table }
    }
}

/// Right-aligned columns separated by two spaces.
pub struct Table {
    headers: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<S: ToString>(headers: &[S]) -> Self {
        Table {
            headers: headers.iter().map(ToString::to_string).collect(),
            rows: Vec::new(),
        }
    }

    pub fn row<S: ToString>(&mut self, cells: &[S]) -> &mut Self {
        self.rows.push(cells.iter().map(ToString::to_string).collect());
        self
    }

    pub fn render(&self) -> String {
        let width = |i: usize| {
            std::iter::once(&self.headers)
                .chain(&self.rows)
                .filter_map(|r| r.get(i))
                .map(|c| c.chars().count())
                .max()
                .unwrap_or(0)
        };
        let widths: Vec<usize> = (0..self.headers.len()).map(width).collect();
        let mut out = String::new();
        for row in std::iter::once(&self.headers).chain(&self.rows) {
            let cells: Vec<String> = row.iter().zip(&widths).map(|(c, &w)| format!("{c:>w$}")).collect();
            writeln!(out, "{}", cells.join("  ").trim_end()).unwrap();
        }
        out
    }
}

const RANGE_HEADERS: [&str; 6] = ["t0", "t1", "A", "hmax", "delta", "M"];

pub fn ranges(r: &StableRanges) -> Output {
    let mut t = Table::new(&RANGE_HEADERS);
    t.row(&r.as_array());
    Output::new(serde_json::to_value(r).unwrap(), t.render())
}

pub fn literature(r: &LiteratureRanges) -> Output {
    let mut cells: Vec<String> = r.determined().iter().map(i64::to_string).collect();
    cells.push(r.m.map_or_else(|| "undetermined".into(), |m| m.to_string()));
    let mut t = Table::new(&RANGE_HEADERS);
    t.row(&cells);
    Output::new(serde_json::to_value(r).unwrap(), t.render())
}

pub fn scalar(key: &str, value: impl ToString + serde::Serialize) -> Output {
    let table = format!("{}\n", value.to_string());
    let mut map = serde_json::Map::new();
    map.insert(key.to_string(), serde_json::to_value(value).unwrap());
    Output::new(Value::Object(map), table)
}

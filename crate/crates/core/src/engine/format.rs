use std::fmt;
use std::str::FromStr;

use super::execute::{OutputValue, ResultSet};
use super::render::{render_degree, render_number, render_value, Locale};
use super::table::CrispValue;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Table,
    Csv,
    JsonLines,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "table" => Ok(OutputFormat::Table),
            "csv" => Ok(OutputFormat::Csv),
            "json-lines" | "jsonl" => Ok(OutputFormat::JsonLines),
            other => Err(format!("unknown format {other:?} (expected table, csv or json-lines)")),
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Table => "table",
            OutputFormat::Csv => "csv",
            OutputFormat::JsonLines => "json-lines",
        })
    }
}

/// Renders one output cell as text.
pub fn render_output(v: &OutputValue, locale: Locale) -> String {
    match v {
        OutputValue::Crisp(CrispValue::Null) => "NULL".to_string(),
        OutputValue::Crisp(CrispValue::Number(x)) => render_number(*x, locale),
        OutputValue::Crisp(CrispValue::Text(s)) => s.clone(),
        OutputValue::Fuzzy(f) => render_value(f, locale),
        OutputValue::Degree(d) => render_degree(*d, locale),
    }
}

pub fn format_result(rs: &ResultSet, format: OutputFormat, locale: Locale) -> String {
    match format {
        OutputFormat::Table => format_table(rs, locale),
        OutputFormat::Csv => format_csv(rs, locale),
        OutputFormat::JsonLines => format_json_lines(rs, locale),
    }
}

fn is_numeric(v: &OutputValue) -> bool {
    matches!(v, OutputValue::Degree(_) | OutputValue::Crisp(CrispValue::Number(_)))
}

fn format_table(rs: &ResultSet, locale: Locale) -> String {
    let mut header = vec!["ROW".to_string()];
    header.extend(rs.headers.iter().cloned());
    let mut cells: Vec<Vec<(String, bool)>> = Vec::with_capacity(rs.rows.len());
    for (i, row) in rs.rows.iter().enumerate() {
        let mut line = vec![((i + 1).to_string(), true)];
        line.extend(row.values.iter().map(|v| (render_output(v, locale), is_numeric(v))));
        cells.push(line);
    }
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for line in &cells {
        for (w, (text, _)) in widths.iter_mut().zip(line) {
            *w = (*w).max(text.chars().count());
        }
    }
    let pad = |text: &str, width: usize, right: bool| {
        let fill = " ".repeat(width - text.chars().count());
        if right {
            format!("{fill}{text}")
        } else {
            format!("{text}{fill}")
        }
    };
    let join = |parts: Vec<String>| parts.join("  ").trim_end().to_string() + "\n";
    let mut out = join(header.iter().zip(&widths).map(|(h, &w)| pad(h, w, false)).collect());
    out += &join(widths.iter().map(|&w| "-".repeat(w)).collect());
    for line in &cells {
        out += &join(line.iter().zip(&widths).map(|((t, r), &w)| pad(t, w, *r)).collect());
    }
    out
}

fn format_csv(rs: &ResultSet, locale: Locale) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    // Writing to a Vec cannot fail.
    w.write_record(&rs.headers).expect("in-memory write");
    for row in &rs.rows {
        w.write_record(row.values.iter().map(|v| render_output(v, locale)))
            .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory write")).expect("utf-8 output")
}

/// Integral values within the exact `i64` range are written without a fraction.
fn json_number(x: f64) -> serde_json::Value {
    if x.fract() == 0.0 && x.abs() < 9.007_199_254_740_992e15 {
        serde_json::json!(x as i64)
    } else {
        serde_json::json!(x)
    }
}

fn format_json_lines(rs: &ResultSet, locale: Locale) -> String {
    let mut out = String::new();
    for row in &rs.rows {
        let mut obj = serde_json::Map::new();
        for (h, v) in rs.headers.iter().zip(&row.values) {
            let value = match v {
                OutputValue::Crisp(CrispValue::Null) => serde_json::Value::Null,
                OutputValue::Crisp(CrispValue::Number(x)) => json_number(*x),
                OutputValue::Degree(d) => serde_json::json!(d.value()),
                other => serde_json::Value::String(render_output(other, locale)),
            };
            obj.insert(h.clone(), value);
        }
        out += &serde_json::Value::Object(obj).to_string();
        out.push('\n');
    }
    out
}

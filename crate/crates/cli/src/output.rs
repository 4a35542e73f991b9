//! Tabular output in three formats. Records are emitted in the order given;
//! callers sort before emitting.

use serde_json::{Map, Value};

use crate::config::Format;

#[derive(Debug, Clone, PartialEq)]
pub enum Field {
    Text(String),
    Float(f64),
    Int(i64),
    Bool(bool),
}

impl Field {
    fn machine(&self) -> String {
        match self {
            Field::Text(s) => s.clone(),
            // 17 significant digits
            Field::Float(x) => format!("{x:.16e}"),
            Field::Int(i) => i.to_string(),
            Field::Bool(b) => b.to_string(),
        }
    }

    fn pretty(&self) -> String {
        match self {
            Field::Float(x) => format!("{x:.10e}"),
            other => other.machine(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Field::Text(s) => Value::String(s.clone()),
            Field::Float(x) => serde_json::Number::from_f64(*x).map_or(Value::Null, Value::Number),
            Field::Int(i) => Value::from(*i),
            Field::Bool(b) => Value::Bool(*b),
        }
    }
}

impl From<&str> for Field {
    fn from(s: &str) -> Self {
        Field::Text(s.to_string())
    }
}
impl From<String> for Field {
    fn from(s: String) -> Self {
        Field::Text(s)
    }
}
impl From<f64> for Field {
    fn from(x: f64) -> Self {
        Field::Float(x)
    }
}
impl From<usize> for Field {
    fn from(i: usize) -> Self {
        Field::Int(i as i64)
    }
}
impl From<u32> for Field {
    fn from(i: u32) -> Self {
        Field::Int(i as i64)
    }
}
impl From<u8> for Field {
    fn from(i: u8) -> Self {
        Field::Int(i as i64)
    }
}
impl From<bool> for Field {
    fn from(b: bool) -> Self {
        Field::Bool(b)
    }
}

/// One output row: ordered `(column, value)` pairs.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Record(pub Vec<(&'static str, Field)>);

impl Record {
    pub fn new() -> Self {
        Record(Vec::new())
    }

    pub fn with(mut self, key: &'static str, value: impl Into<Field>) -> Self {
        self.0.push((key, value.into()));
        self
    }
}

fn csv_escape(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Renders records; all records are expected to share the first record's
/// columns.
pub fn render(records: &[Record], format: Format) -> String {
    let mut out = String::new();
    let Some(first) = records.first() else {
        return out;
    };
    let columns: Vec<&str> = first.0.iter().map(|(k, _)| *k).collect();
    match format {
        Format::Csv => {
            out.push_str(&columns.join(","));
            out.push('\n');
            for r in records {
                let cells: Vec<String> = r.0.iter().map(|(_, v)| csv_escape(&v.machine())).collect();
                out.push_str(&cells.join(","));
                out.push('\n');
            }
        }
        Format::Json => {
            for r in records {
                let mut map = Map::new();
                for (k, v) in &r.0 {
                    map.insert((*k).to_string(), v.json());
                }
                out.push_str(&Value::Object(map).to_string());
                out.push('\n');
            }
        }
        Format::Pretty => {
            let cells: Vec<Vec<String>> = records.iter().map(|r| r.0.iter().map(|(_, v)| v.pretty()).collect()).collect();
            let mut widths: Vec<usize> = columns.iter().map(|c| c.chars().count()).collect();
            for row in &cells {
                for (w, cell) in widths.iter_mut().zip(row) {
                    *w = (*w).max(cell.chars().count());
                }
            }
            let line = |items: &[String]| -> String {
                let padded: Vec<String> = items
                    .iter()
                    .zip(&widths)
                    .map(|(s, w)| format!("{s}{}", " ".repeat(w - s.chars().count())))
                    .collect();
                padded.join("  ").trim_end().to_string()
            };
            let header: Vec<String> = columns.iter().map(|c| c.to_string()).collect();
            out.push_str(&line(&header));
            out.push('\n');
            for row in &cells {
                out.push_str(&line(row));
                out.push('\n');
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Vec<Record> {
        vec![
            Record::new().with("id", "a,b").with("x", 0.1).with("n", 3usize),
            Record::new().with("id", "c").with("x", -2.5e-300).with("n", 4usize),
        ]
    }

    #[test]
    fn csv_and_json_carry_the_same_numbers() {
        let csv = render(&sample(), Format::Csv);
        let json = render(&sample(), Format::Json);
        let csv_x: Vec<f64> = csv.lines().skip(1).map(|l| l.rsplit(',').nth(1).unwrap().parse().unwrap()).collect();
        let json_x: Vec<f64> = json
            .lines()
            .map(|l| serde_json::from_str::<Value>(l).unwrap()["x"].as_f64().unwrap())
            .collect();
        assert_eq!(csv_x, json_x);
        assert!(csv.starts_with("id,x,n\n\"a,b\","));
    }

    #[test]
    fn pretty_aligns() {
        let p = render(&sample(), Format::Pretty);
        let lines: Vec<&str> = p.lines().collect();
        assert_eq!(lines.len(), 3);
        assert_eq!(lines[1].find("1.0000000000e-1"), lines[0].find('x'));
    }
}

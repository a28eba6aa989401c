use clap::ValueEnum;
use serde_json::{json, Map, Value};

use crate::spin_characters::{SpinCombination, SpinLabel, Variant};

pub const SCHEMA: &str = "spinfold/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone)]
enum Body {
    Raw(String),
    Table {
        headers: Option<Vec<String>>,
        rows: Vec<Vec<String>>,
    },
    Combination(SpinCombination),
}

/// A command result in a form every output format can be produced from.
#[derive(Debug, Clone)]
pub struct Report {
    body: Body,
    json: Value,
    csv_headers: Vec<String>,
    csv_rows: Vec<Vec<String>>,
}

fn variant_name(v: Variant) -> &'static str {
    match v {
        Variant::SelfAssociate => "self",
        Variant::Plain => "plain",
        Variant::Associate => "associate",
    }
}

fn label_text(l: &SpinLabel, ascii: bool) -> String {
    if ascii {
        l.ascii()
    } else {
        l.to_string()
    }
}

impl Report {
    pub fn raw(
        text: String,
        json: Value,
        csv_headers: Vec<String>,
        csv_rows: Vec<Vec<String>>,
    ) -> Self {
        Report {
            body: Body::Raw(text),
            json,
            csv_headers,
            csv_rows,
        }
    }

    pub fn table(
        headers: Option<Vec<String>>,
        rows: Vec<Vec<String>>,
        json: Value,
        csv_headers: Vec<String>,
    ) -> Self {
        let csv_rows = rows.clone();
        Report {
            body: Body::Table { headers, rows },
            json,
            csv_headers,
            csv_rows,
        }
    }

    pub fn combination(c: &SpinCombination) -> Self {
        let mut entries = Vec::new();
        let mut csv_rows = Vec::new();
        for (label, mult) in c.terms() {
            entries.push(json!({
                "lambda": label.shape().parts(),
                "variant": variant_name(label.variant()),
                "mult": mult,
            }));
            csv_rows.push(vec![
                label.shape().to_string(),
                variant_name(label.variant()).into(),
                mult.to_string(),
            ]);
        }
        for shape in c.unresolved() {
            entries.push(json!({ "lambda": shape.parts(), "variant": "unresolved", "mult": 1 }));
            csv_rows.push(vec![shape.to_string(), "unresolved".into(), "1".into()]);
        }
        Report {
            body: Body::Combination(c.clone()),
            json: json!({ "constituents": entries }),
            csv_headers: vec!["lambda".into(), "variant".into(), "mult".into()],
            csv_rows,
        }
    }

    pub fn json(&self) -> Value {
        let mut map = Map::new();
        map.insert("schema".into(), Value::String(SCHEMA.into()));
        if let Value::Object(fields) = &self.json {
            for (k, v) in fields {
                map.insert(k.clone(), v.clone());
            }
        }
        Value::Object(map)
    }

    pub fn render(&self, format: Format, ascii: bool) -> String {
        match format {
            Format::Json => format!("{}\n", self.json()),
            Format::Csv => self.csv(),
            Format::Text => self.text(ascii),
        }
    }

    fn csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.csv_headers).expect("in-memory write");
        for row in &self.csv_rows {
            w.write_record(row).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
    }

    fn text(&self, ascii: bool) -> String {
        match &self.body {
            Body::Raw(s) => s.clone(),
            Body::Table { headers, rows } => aligned(headers.as_ref(), rows),
            Body::Combination(c) => {
                let mut rows: Vec<Vec<String>> = c
                    .terms()
                    .map(|(l, m)| vec![label_text(l, ascii), format!("x{m}")])
                    .collect();
                for shape in c.unresolved() {
                    let plain = SpinLabel::of(shape.clone());
                    let either = format!(
                        "{} or {}",
                        label_text(&plain, ascii),
                        label_text(&plain.associate(), ascii)
                    );
                    rows.push(vec![either, "x1".into()]);
                }
                aligned(None, &rows)
            }
        }
    }
}

/// Left-aligned columns separated by two spaces; `(none)` when empty.
pub fn aligned(headers: Option<&Vec<String>>, rows: &[Vec<String>]) -> String {
    if rows.is_empty() {
        return "(none)\n".into();
    }
    let all: Vec<&Vec<String>> = headers.into_iter().chain(rows.iter()).collect();
    let cols = all.iter().map(|r| r.len()).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|i| {
            all.iter()
                .filter_map(|r| r.get(i))
                .map(|c| c.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in all {
        let mut line = String::new();
        for (i, cell) in row.iter().enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            line.push_str(cell);
            if i + 1 < row.len() {
                line.extend(std::iter::repeat_n(' ', widths[i] - cell.chars().count()));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::StrictPartition;

    fn label(parts: &[u32]) -> SpinLabel {
        SpinLabel::of(StrictPartition::new(parts.to_vec()).unwrap())
    }

    #[test]
    fn combination_text_and_json() {
        let mut c = SpinCombination::new();
        c.add(label(&[4, 2]), 2);
        let r = Report::combination(&c);
        assert_eq!(r.render(Format::Text, false), "⟨4,2⟩  x2\n");
        assert_eq!(r.render(Format::Text, true), "<4,2>  x2\n");
        assert_eq!(
            r.json(),
            json!({"schema": "spinfold/1", "constituents": [{"lambda": [4, 2], "variant": "self", "mult": 2}]})
        );
        assert_eq!(
            r.render(Format::Csv, false),
            "lambda,variant,mult\n\"4,2\",self,2\n"
        );
    }

    #[test]
    fn empty_renders_none() {
        let r = Report::combination(&SpinCombination::new());
        assert_eq!(r.render(Format::Text, false), "(none)\n");
        assert_eq!(r.json()["constituents"], json!([]));
    }

    #[test]
    fn unresolved_rendering() {
        let mut c = SpinCombination::new();
        c.add_unresolved(StrictPartition::new(vec![3, 2, 1]).unwrap());
        let r = Report::combination(&c);
        assert_eq!(r.render(Format::Text, true), "<3,2,1> or <3,2,1>a  x1\n");
        assert_eq!(r.json()["constituents"][0]["variant"], "unresolved");
    }

    #[test]
    fn alignment() {
        let rows = vec![
            vec!["a".to_string(), "b".into()],
            vec!["ccc".into(), "d".into()],
        ];
        assert_eq!(
            aligned(Some(&vec!["h".into(), "v".into()]), &rows),
            "h    v\na    b\nccc  d\n"
        );
    }
}

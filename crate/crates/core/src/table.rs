//! Text rendering of named integer arrays.
//!
//! Values are printed as stored and column headers are 1-based positions.
//! Three styles are supported:
//!
//! * aligned: one labelled row per array, columns right-aligned under a
//!   position header, optionally preceded by the string itself;
//! * tsv: a header row `i<TAB>name<TAB>...` then one row per position, with
//!   empty cells past the end of shorter arrays;
//! * json-lines: one `{"name": .., "values": [..]}` object per line.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::error::{FormatError, ParseError};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedArray {
    pub name: String,
    pub values: Vec<usize>,
}

impl NamedArray {
    pub fn new(name: impl Into<String>, values: impl Into<Vec<usize>>) -> Self {
        NamedArray {
            name: name.into(),
            values: values.into(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableStyle {
    Aligned,
    Tsv,
    JsonLines,
}

pub fn format_tables(arrays: &[NamedArray], style: TableStyle) -> Result<String, FormatError> {
    match style {
        TableStyle::Aligned => format_aligned(None, arrays),
        TableStyle::Tsv => Ok(format_tsv(arrays)),
        TableStyle::JsonLines => Ok(format_json_lines(arrays)),
    }
}

/// Aligned layout. The column count is fixed by `letters` when given, else by
/// the first array; a later array longer than that is an error.
pub fn format_aligned(letters: Option<(&str, &[String])>, arrays: &[NamedArray]) -> Result<String, FormatError> {
    let columns = match (letters, arrays.first()) {
        (Some((_, cells)), _) => cells.len(),
        (None, Some(first)) => first.values.len(),
        (None, None) => 0,
    };
    for a in arrays {
        if a.values.len() > columns {
            return Err(FormatError::InconsistentLength {
                name: a.name.clone(),
                len: a.values.len(),
                columns,
            });
        }
    }

    let mut rows: Vec<(String, Vec<String>)> = Vec::with_capacity(arrays.len() + 2);
    rows.push(("i".to_string(), (1..=columns).map(|i| i.to_string()).collect()));
    if let Some((label, cells)) = letters {
        rows.push((label.to_string(), cells.to_vec()));
    }
    for a in arrays {
        rows.push((a.name.clone(), a.values.iter().map(|v| v.to_string()).collect()));
    }

    let label_width = rows.iter().map(|(l, _)| l.chars().count()).max().unwrap_or(0);
    let cell_width = rows
        .iter()
        .flat_map(|(_, c)| c.iter().map(|s| s.chars().count()))
        .max()
        .unwrap_or(0);

    let mut out = String::new();
    for (label, cells) in rows {
        let _ = write!(out, "{label:>label_width$}");
        for cell in cells {
            let _ = write!(out, " {cell:>cell_width$}");
        }
        out.push('\n');
    }
    Ok(out)
}

fn format_tsv(arrays: &[NamedArray]) -> String {
    let mut out = String::from("i");
    for a in arrays {
        out.push('\t');
        out.push_str(&a.name);
    }
    out.push('\n');
    let rows = arrays.iter().map(|a| a.values.len()).max().unwrap_or(0);
    for r in 0..rows {
        let _ = write!(out, "{}", r + 1);
        for a in arrays {
            out.push('\t');
            if let Some(v) = a.values.get(r) {
                let _ = write!(out, "{v}");
            }
        }
        out.push('\n');
    }
    out
}

fn format_json_lines(arrays: &[NamedArray]) -> String {
    let mut out = String::new();
    for a in arrays {
        out.push_str(&serde_json::to_string(a).expect("plain struct serializes"));
        out.push('\n');
    }
    out
}

/// Parses the tsv or json-lines rendering back into arrays.
pub fn parse_tables(text: &str, style: TableStyle) -> Result<Vec<NamedArray>, ParseError> {
    match style {
        TableStyle::Tsv => parse_tsv(text),
        TableStyle::JsonLines => text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
            .map(|(i, l)| {
                serde_json::from_str(l).map_err(|e| ParseError::Table {
                    line: i + 1,
                    message: e.to_string(),
                })
            })
            .collect(),
        TableStyle::Aligned => Err(ParseError::Table {
            line: 0,
            message: "the aligned layout is display-only".into(),
        }),
    }
}

fn parse_tsv(text: &str) -> Result<Vec<NamedArray>, ParseError> {
    let mut lines = text.lines().enumerate();
    let Some((_, header)) = lines.next() else {
        return Ok(Vec::new());
    };
    let mut fields = header.split('\t');
    if fields.next() != Some("i") {
        return Err(ParseError::Table {
            line: 1,
            message: "header must start with column i".into(),
        });
    }
    let mut arrays: Vec<NamedArray> = fields.map(|name| NamedArray::new(name, Vec::new())).collect();
    // once an array has an empty cell it must stay empty
    let mut ended = vec![false; arrays.len()];

    for (idx, line) in lines {
        let line_no = idx + 1;
        let err = |message: String| ParseError::Table { line: line_no, message };
        let cells: Vec<&str> = line.split('\t').collect();
        if cells.len() != arrays.len() + 1 {
            return Err(err(format!(
                "expected {} cells, found {}",
                arrays.len() + 1,
                cells.len()
            )));
        }
        if cells[0] != idx.to_string() {
            return Err(err(format!("expected index {idx}, found {:?}", cells[0])));
        }
        for (k, cell) in cells[1..].iter().enumerate() {
            if cell.is_empty() {
                ended[k] = true;
            } else if ended[k] {
                return Err(err(format!("array {:?} resumes after a gap", arrays[k].name)));
            } else {
                let v = cell
                    .parse()
                    .map_err(|_| err(format!("{cell:?} is not a nonnegative integer")))?;
                arrays[k].values.push(v);
            }
        }
    }
    Ok(arrays)
}

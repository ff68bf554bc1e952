//! Text formats for Cayley tables and fuzzy subsets.
//!
//! A table file is a header line of distinct labels followed by one row per
//! label; row `i` lists `label_i · label_j` for every header label `j`.
//! A fuzzy file has one `label grade` pair per line. In both, `#` starts a
//! comment that runs to the end of the line.

use std::collections::BTreeMap;
use std::fmt;

use ag_core::fuzzy::FuzzySubset;
use ag_core::{Grade, Groupoid};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "line {}, column {}: {}",
            self.line, self.column, self.message
        )
    }
}

impl std::error::Error for ParseError {}

fn err(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        column,
        message: message.into(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token<'a> {
    pub text: &'a str,
    pub line: usize,
    pub column: usize,
}

/// Significant lines of `text` as tokens with 1-based positions.
fn significant_lines(text: &str) -> Vec<(usize, Vec<Token<'_>>)> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let mut tokens = Vec::new();
        let mut start = None;
        for (pos, ch) in line
            .char_indices()
            .chain(std::iter::once((line.len(), ' ')))
        {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(pos),
                (true, Some(s)) => {
                    tokens.push(Token {
                        text: &line[s..pos],
                        line: i + 1,
                        column: line[..s].chars().count() + 1,
                    });
                    start = None;
                }
                _ => {}
            }
        }
        if !tokens.is_empty() {
            out.push((i + 1, tokens));
        }
    }
    out
}

/// Parsed labels and rows before any groupoid invariant is checked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableDocument {
    pub labels: Vec<String>,
    pub rows: Vec<Vec<usize>>,
}

pub fn parse_table_document(text: &str) -> Result<TableDocument, ParseError> {
    let lines = significant_lines(text);
    let Some((_, header)) = lines.first() else {
        return Err(err(1, 1, "empty table: expected a header line of labels"));
    };
    let mut index = BTreeMap::new();
    for (i, tok) in header.iter().enumerate() {
        if index.insert(tok.text, i).is_some() {
            return Err(err(
                tok.line,
                tok.column,
                format!("duplicate label {:?}", tok.text),
            ));
        }
    }
    let n = header.len();
    if n > ag_core::subset::MAX_ORDER {
        return Err(err(
            header[0].line,
            1,
            format!(
                "{n} labels, at most {} supported",
                ag_core::subset::MAX_ORDER
            ),
        ));
    }
    let body = &lines[1..];
    if body.len() < n {
        let line = body.last().map_or(lines[0].0, |(l, _)| *l) + 1;
        return Err(err(
            line,
            1,
            format!("expected {n} rows, found {}", body.len()),
        ));
    }
    if let Some((line, _)) = body.get(n) {
        return Err(err(
            *line,
            1,
            format!("expected {n} rows, found {}", body.len()),
        ));
    }
    let mut rows = Vec::with_capacity(n);
    for (line, tokens) in body {
        if tokens.len() != n {
            let col = tokens.get(n).map_or(1, |t| t.column);
            return Err(err(
                *line,
                col,
                format!("expected {n} entries, found {}", tokens.len()),
            ));
        }
        let row = tokens
            .iter()
            .map(|t| {
                index
                    .get(t.text)
                    .copied()
                    .ok_or_else(|| err(t.line, t.column, format!("unknown label {:?}", t.text)))
            })
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    Ok(TableDocument {
        labels: header.iter().map(|t| t.text.to_string()).collect(),
        rows,
    })
}

pub fn parse_table(text: &str) -> Result<Groupoid, ParseError> {
    let doc = parse_table_document(text)?;
    Groupoid::new(&doc.rows, doc.labels).map_err(|e| err(1, 1, e.to_string()))
}

/// Inverse of [`parse_table`], with columns padded for reading.
pub fn serialize_table(g: &Groupoid) -> String {
    let width = g
        .labels()
        .iter()
        .map(|l| l.chars().count())
        .max()
        .unwrap_or(1);
    let line = |cells: &mut dyn Iterator<Item = &str>| {
        let v: Vec<String> = cells.map(|c| format!("{c:<width$}")).collect();
        v.join(" ").trim_end().to_string() + "\n"
    };
    let mut out = line(&mut g.labels().iter().map(String::as_str));
    for row in g.rows() {
        out += &line(&mut row.iter().map(|&j| g.label(j)));
    }
    out
}

pub fn parse_fuzzy(text: &str, g: &Groupoid) -> Result<FuzzySubset, ParseError> {
    let mut grades: Vec<Option<Grade>> = vec![None; g.order()];
    let mut last_line = 1;
    for (line, tokens) in significant_lines(text) {
        last_line = line;
        if tokens.len() != 2 {
            return Err(err(
                line,
                tokens.get(2).map_or(1, |t| t.column),
                format!("expected `label grade`, found {} tokens", tokens.len()),
            ));
        }
        let (label, value) = (&tokens[0], &tokens[1]);
        let x = g.index_of(label.text).ok_or_else(|| {
            err(
                line,
                label.column,
                format!("unknown label {:?}", label.text),
            )
        })?;
        let grade: Grade = value
            .text
            .parse()
            .map_err(|e: ag_core::Error| err(line, value.column, e.to_string()))?;
        if grades[x].replace(grade).is_some() {
            return Err(err(
                line,
                label.column,
                format!("label {:?} assigned twice", label.text),
            ));
        }
    }
    let missing: Vec<&str> = (0..g.order())
        .filter(|&x| grades[x].is_none())
        .map(|x| g.label(x))
        .collect();
    if !missing.is_empty() {
        return Err(err(
            last_line + 1,
            1,
            format!("no grade for label(s) {}", missing.join(" ")),
        ));
    }
    Ok(FuzzySubset::new(grades.into_iter().flatten().collect()))
}

pub fn serialize_fuzzy(f: &FuzzySubset, g: &Groupoid) -> String {
    (0..g.order())
        .map(|x| format!("{} {}\n", g.label(x), f.get(x)))
        .collect()
}

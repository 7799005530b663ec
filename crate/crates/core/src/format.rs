//! Plain-text graph-triple format.
//!
//! ```text
//! # optional comments
//! n 4
//! 1 0 1
//! 3 0 2
//! ```
//!
//! The header gives the vertex count; each further line `<c> <u> <v>` puts
//! the edge `{u, v}` (with `u < v`) into colour `c`. Repeated lines are
//! harmless. The writer emits the header followed by edge lines sorted by
//! colour, then `u`, then `v`, so writing is canonical.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use thiserror::Error;

use crate::graph::{Color, GraphError, GraphTriple, TripleBuilder};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("missing `n <int>` header")]
    MissingHeader,
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn malformed(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Malformed { line, message: message.into() }
}

fn parse_uint(tok: &str, line: usize, what: &str) -> Result<usize, FormatError> {
    tok.parse::<usize>().map_err(|_| malformed(line, format!("invalid {what} `{tok}`")))
}

pub fn parse_triple(text: &str) -> Result<GraphTriple, FormatError> {
    let mut builder: Option<TripleBuilder> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let toks: Vec<&str> = trimmed.split_whitespace().collect();
        let Some(b) = builder.as_mut() else {
            if toks.len() != 2 || toks[0] != "n" {
                return Err(malformed(line, "expected header `n <int>`"));
            }
            let n = parse_uint(toks[1], line, "vertex count")?;
            builder = Some(TripleBuilder::new(n).map_err(|e| malformed(line, e.to_string()))?);
            continue;
        };
        if toks.len() != 3 {
            return Err(malformed(line, "expected `<c> <u> <v>`"));
        }
        let c = parse_uint(toks[0], line, "colour")?;
        let color = Color::from_number(c).ok_or_else(|| malformed(line, format!("colour {c} not in 1..=3")))?;
        let u = parse_uint(toks[1], line, "vertex")?;
        let v = parse_uint(toks[2], line, "vertex")?;
        if u >= v {
            return Err(malformed(line, format!("need u < v, got {u} {v}")));
        }
        b.add_edge(color, u, v).map_err(|e: GraphError| malformed(line, e.to_string()))?;
    }
    builder.map(TripleBuilder::build).ok_or(FormatError::MissingHeader)
}

pub fn write_triple(t: &GraphTriple) -> String {
    let mut out = format!("n {}\n", t.order());
    for c in Color::ALL {
        for (u, v) in t.graph(c).edges() {
            let _ = writeln!(out, "{} {} {}", c.number(), u, v);
        }
    }
    out
}

pub fn read_triple_file(path: impl AsRef<Path>) -> Result<GraphTriple, FormatError> {
    parse_triple(&fs::read_to_string(path)?)
}

pub fn write_triple_file(path: impl AsRef<Path>, t: &GraphTriple) -> Result<(), FormatError> {
    fs::write(path, write_triple(t))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line_of(err: FormatError) -> usize {
        match err {
            FormatError::Malformed { line, .. } => line,
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn parses_with_comments_and_duplicates() {
        let t = parse_triple("# a triple\nn 3\n1 0 1\n\n2 1 2\n# again\n1 0 1\n3 0 2\n").unwrap();
        assert_eq!(t.order(), 3);
        assert_eq!(t.edge_counts(), [1, 1, 1]);
        assert_eq!(write_triple(&t), "n 3\n1 0 1\n2 1 2\n3 0 2\n");
    }

    #[test]
    fn writer_sorts_lines() {
        let t = parse_triple("n 4\n3 2 3\n1 1 3\n1 0 2\n3 0 1\n").unwrap();
        assert_eq!(write_triple(&t), "n 4\n1 0 2\n1 1 3\n3 0 1\n3 2 3\n");
    }

    #[test]
    fn malformed_lines_report_line_numbers() {
        assert_eq!(line_of(parse_triple("n 3\n1 0 1\n4 0 1\n").unwrap_err()), 3);
        assert_eq!(line_of(parse_triple("n 3\n1 1 0\n").unwrap_err()), 2);
        assert_eq!(line_of(parse_triple("n 3\n1 1 1\n").unwrap_err()), 2);
        assert_eq!(line_of(parse_triple("n 3\n1 0 3\n").unwrap_err()), 2);
        assert_eq!(line_of(parse_triple("# c\nm 3\n").unwrap_err()), 2);
        assert_eq!(line_of(parse_triple("n 3\n1 0\n").unwrap_err()), 2);
        assert_eq!(line_of(parse_triple("n x\n").unwrap_err()), 1);
        assert_eq!(line_of(parse_triple("n 3\n1 0 -2\n").unwrap_err()), 2);
        assert!(matches!(parse_triple("# nothing\n"), Err(FormatError::MissingHeader)));
    }

    #[test]
    fn empty_triples() {
        let t = parse_triple("n 0\n").unwrap();
        assert_eq!(t.order(), 0);
        assert_eq!(write_triple(&t), "n 0\n");
    }
}

//! Edge-list and graph6 readers and writers.
//!
//! Edge-list text: a header line `n m`, then `m` lines `u v` (0-based,
//! whitespace separated). Blank lines are ignored.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, GraphError, DEFAULT_MAX_ORDER};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Graph {
        line: usize,
        #[source]
        source: GraphError,
    },
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.into(),
    }
}

fn parse_pair(line_no: usize, text: &str, what: &str) -> Result<(usize, usize), ParseError> {
    let mut fields = text.split_whitespace();
    let mut next = || -> Result<usize, ParseError> {
        let tok = fields
            .next()
            .ok_or_else(|| syntax(line_no, format!("expected two integers ({what})")))?;
        tok.parse::<usize>()
            .map_err(|_| syntax(line_no, format!("invalid integer {tok:?}")))
    };
    let a = next()?;
    let b = next()?;
    if fields.next().is_some() {
        return Err(syntax(line_no, format!("trailing tokens after {what}")));
    }
    Ok((a, b))
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    parse_edge_list_with_limit(text, DEFAULT_MAX_ORDER)
}

pub fn parse_edge_list_with_limit(text: &str, limit: usize) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (header_line, header) = lines.next().ok_or_else(|| syntax(1, "missing header line"))?;
    let (n, m) = parse_pair(header_line, header, "header `n m`")?;
    if n > limit {
        return Err(ParseError::Graph {
            line: header_line,
            source: GraphError::OrderTooLarge { order: n, limit },
        });
    }
    let mut g = Graph::empty(n);
    let mut seen = 0;
    for (line_no, line) in lines {
        let (u, v) = parse_pair(line_no, line, "edge `u v`")?;
        if seen == m {
            return Err(syntax(line_no, format!("more than the declared {m} edges")));
        }
        let err = |source| ParseError::Graph { line: line_no, source };
        for w in [u, v] {
            if w >= n {
                return Err(err(GraphError::VertexOutOfRange { vertex: w, order: n }));
            }
        }
        if u == v {
            return Err(err(GraphError::SelfLoop(u)));
        }
        if g.has_edge(u, v) {
            return Err(err(GraphError::DuplicateEdge(u.min(v), u.max(v))));
        }
        g = g.with_edges([(u, v)]);
        seen += 1;
    }
    if seen != m {
        return Err(syntax(
            text.lines().count().max(1),
            format!("declared {m} edges but found {seen}"),
        ));
    }
    Ok(g)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", g.order(), g.size());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Decodes one graph6 record (an optional `>>graph6<<` header is accepted).
pub fn parse_graph6(record: &str) -> Result<Graph, ParseError> {
    parse_graph6_line(1, record)
}

fn parse_graph6_line(line: usize, record: &str) -> Result<Graph, ParseError> {
    let record = record.trim();
    let record = record.strip_prefix(">>graph6<<").unwrap_or(record);
    let bytes = record.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(syntax(line, format!("byte {b} outside the graph6 range")));
    }
    let sixes: Vec<u64> = bytes.iter().map(|&b| u64::from(b - 63)).collect();
    let (n, body) = match sixes.as_slice() {
        [] => return Err(syntax(line, "empty graph6 record")),
        [63, 63, rest @ ..] if rest.len() >= 6 => (rest[..6].iter().fold(0, |acc, &x| (acc << 6) | x), &rest[6..]),
        [63, rest @ ..] if rest.len() >= 3 => (rest[..3].iter().fold(0, |acc, &x| (acc << 6) | x), &rest[3..]),
        [63, ..] => return Err(syntax(line, "truncated graph6 order field")),
        [first, rest @ ..] => (*first, rest),
    };
    let n = n as usize;
    if n > DEFAULT_MAX_ORDER {
        return Err(ParseError::Graph {
            line,
            source: GraphError::OrderTooLarge {
                order: n,
                limit: DEFAULT_MAX_ORDER,
            },
        });
    }
    let bits_needed = n * n.saturating_sub(1) / 2;
    if body.len() != bits_needed.div_ceil(6) {
        return Err(syntax(
            line,
            format!(
                "expected {} data bytes for order {n}, found {}",
                bits_needed.div_ceil(6),
                body.len()
            ),
        ));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let bit = (body[k / 6] >> (5 - k % 6)) & 1;
            if bit == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges).map_err(|source| ParseError::Graph { line, source })
}

/// Decodes a file of graph6 records, one per non-blank line.
pub fn parse_graph6_file(text: &str) -> Result<Vec<Graph>, ParseError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| parse_graph6_line(i + 1, l))
        .collect()
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut sixes: Vec<u8> = Vec::new();
    if n < 63 {
        sixes.push(n as u8);
    } else if n < 258_048 {
        sixes.push(63);
        sixes.extend((0..3).rev().map(|i| ((n >> (6 * i)) & 63) as u8));
    } else {
        sixes.extend([63, 63]);
        sixes.extend((0..6).rev().map(|i| ((n >> (6 * i)) & 63) as u8));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                sixes.push(acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        sixes.push(acc << (6 - filled));
    }
    sixes.into_iter().map(|b| char::from(b + 63)).collect()
}

/// Reads either format: graph6 when the first non-blank line is not a pair
/// of integers.
pub fn parse_any(text: &str) -> Result<Vec<Graph>, ParseError> {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty()).unwrap_or("");
    let looks_like_header =
        first.split_whitespace().count() == 2 && first.split_whitespace().all(|t| t.parse::<usize>().is_ok());
    if looks_like_header {
        parse_edge_list(text).map(|g| vec![g])
    } else {
        parse_graph6_file(text)
    }
}

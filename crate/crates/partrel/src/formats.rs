//! Plain-text coloring and graph files.
//!
//! Coloring file: `<n> <lambda>` then one `<a> <b> <color>` line per pair
//! `a < b`, lexicographic, single spaces, trailing newline.
//! Graph file: `<n> <e>` then `e` lines `<a> <b>` with `a < b`.

use std::fmt::Write as _;

use partrel_core::coloring::pair_count;
use partrel_core::{Coloring, Graph};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed header: {0}")]
    Header(String),
    #[error("expected {expected} pair lines, found {found}")]
    PairCount { expected: usize, found: usize },
    #[error("line {line}: {msg}")]
    Line { line: usize, msg: String },
    #[error(transparent)]
    Core(#[from] partrel_core::Error),
}

fn numbers<const K: usize>(line: &str) -> Option<[usize; K]> {
    let mut out = [0; K];
    let mut fields = line.split_whitespace();
    for slot in &mut out {
        *slot = fields.next()?.parse().ok()?;
    }
    fields.next().is_none().then_some(out)
}

/// Non-empty body lines, with their 1-based line numbers. Blank lines are
/// only tolerated at the end of the file.
fn body(text: &str) -> Result<(&str, Vec<(usize, &str)>), FormatError> {
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| FormatError::Header("empty file".into()))?;
    let rest: Vec<(usize, &str)> = lines.enumerate().map(|(i, l)| (i + 2, l)).collect();
    let used = rest.iter().rposition(|(_, l)| !l.trim().is_empty()).map_or(0, |p| p + 1);
    if let Some(&(line, _)) = rest[..used].iter().find(|(_, l)| l.trim().is_empty()) {
        return Err(FormatError::Line { line, msg: "blank line".into() });
    }
    Ok((header, rest[..used].to_vec()))
}

pub fn read_coloring(text: &str) -> Result<Coloring, FormatError> {
    let (header, lines) = body(text)?;
    let [n, lambda] = numbers::<2>(header).ok_or_else(|| FormatError::Header(header.into()))?;
    let lambda = u32::try_from(lambda).map_err(|_| FormatError::Header(header.into()))?;
    let expected = pair_count(n);
    if lines.len() != expected {
        return Err(FormatError::PairCount { expected, found: lines.len() });
    }
    let mut entries = Vec::with_capacity(expected);
    for (line, raw) in lines {
        let [a, b, color] = numbers::<3>(raw).ok_or_else(|| FormatError::Line {
            line,
            msg: format!("expected `<a> <b> <color>`, got `{raw}`"),
        })?;
        if a >= b {
            return Err(FormatError::Line { line, msg: format!("pair ({a},{b}) not ascending") });
        }
        let color = u32::try_from(color).map_err(|_| FormatError::Line { line, msg: "color too large".into() })?;
        entries.push((a, b, color));
    }
    Ok(Coloring::new(n, lambda, &entries)?)
}

pub fn write_coloring(c: &Coloring) -> String {
    let mut out = String::with_capacity(12 * pair_count(c.n()) + 8);
    writeln!(out, "{} {}", c.n(), c.lambda()).unwrap();
    for (a, b, color) in c.pairs() {
        writeln!(out, "{a} {b} {color}").unwrap();
    }
    out
}

pub fn read_graph(text: &str) -> Result<Graph, FormatError> {
    let (header, lines) = body(text)?;
    let [n, e] = numbers::<2>(header).ok_or_else(|| FormatError::Header(header.into()))?;
    if lines.len() != e {
        return Err(FormatError::PairCount { expected: e, found: lines.len() });
    }
    let mut edges = Vec::with_capacity(e);
    for (line, raw) in lines {
        let [a, b] = numbers::<2>(raw).ok_or_else(|| FormatError::Line {
            line,
            msg: format!("expected `<a> <b>`, got `{raw}`"),
        })?;
        if a >= b || b >= n {
            return Err(FormatError::Line { line, msg: format!("bad edge ({a},{b})") });
        }
        edges.push((a, b));
    }
    Ok(Graph::new((0..n).collect(), edges)?)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.edge_count());
    for (a, b) in g.edges() {
        writeln!(out, "{a} {b}").unwrap();
    }
    out
}

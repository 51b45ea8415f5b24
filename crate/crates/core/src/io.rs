//! Text input formats. All labels are 1-based.
//!
//! * circuit list: one circuit per line, space-separated element labels. The
//!   ground set is `[m]` with `m` the largest label. Blank lines and lines
//!   starting with `#` are ignored.
//! * GF(2) matrix: a header `r n`, then `r` lines of `n` characters in `{0,1}`.
//! * graph: a header `d n`, then `n` lines `u v`; edge `k` is element `k`.

use crate::error::{Error, Result};
use crate::matroid::{BinaryMatrix, CircuitFamily, GraphInput};
use crate::subset::{GroundSet, Subset, MAX_GROUND};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Non-comment, non-blank lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_numbers(line_no: usize, line: &str) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>()
                .map_err(|_| parse_err(line_no, format!("expected a non-negative integer, found {tok:?}")))
        })
        .collect()
}

pub fn parse_circuits(text: &str, cap: usize) -> Result<CircuitFamily> {
    let mut raw = Vec::new();
    let mut max_label = 0;
    for (line_no, line) in content_lines(text) {
        let labels = parse_numbers(line_no, line)?;
        let mut circuit = Subset::EMPTY;
        for &l in &labels {
            if l == 0 {
                return Err(parse_err(line_no, "labels start at 1"));
            }
            if l > MAX_GROUND.min(cap) {
                return Err(Error::GroundSetTooLarge { n: l, cap });
            }
            if circuit.contains(l) {
                return Err(parse_err(line_no, format!("label {l} repeated")));
            }
            circuit = circuit.insert(l);
            max_label = max_label.max(l);
        }
        raw.push(circuit);
    }
    if raw.is_empty() {
        return Err(parse_err(1, "no circuits given; the ground set is undetermined"));
    }
    CircuitFamily::new(GroundSet::with_cap(max_label, cap)?, raw)
}

/// The two header numbers and the remaining numbered lines.
type Headed<'a> = (usize, usize, Vec<(usize, &'a str)>);

fn header(text: &str) -> Result<Headed<'_>> {
    let mut lines: Vec<(usize, &str)> = content_lines(text).collect();
    if lines.is_empty() {
        return Err(parse_err(1, "missing header"));
    }
    let (line_no, first) = lines.remove(0);
    match parse_numbers(line_no, first)?.as_slice() {
        [a, b] => Ok((*a, *b, lines)),
        _ => Err(parse_err(line_no, "header must contain exactly two integers")),
    }
}

pub fn parse_matrix(text: &str) -> Result<BinaryMatrix> {
    let (r, n, lines) = header(text)?;
    if lines.len() != r {
        let at = lines.last().map_or(1, |(l, _)| *l);
        return Err(parse_err(at, format!("expected {r} matrix rows, found {}", lines.len())));
    }
    let mut rows = Vec::with_capacity(r);
    for (line_no, line) in lines {
        let row: Vec<bool> = line
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(parse_err(line_no, format!("unexpected character {other:?}"))),
            })
            .collect::<Result<_>>()?;
        if row.len() != n {
            return Err(parse_err(line_no, format!("expected {n} entries, found {}", row.len())));
        }
        rows.push(row);
    }
    if r == 0 {
        return BinaryMatrix::from_columns(0, vec![0; n]);
    }
    BinaryMatrix::from_rows(&rows)
}

pub fn parse_graph(text: &str) -> Result<GraphInput> {
    let (d, n, lines) = header(text)?;
    if lines.len() != n {
        let at = lines.last().map_or(1, |(l, _)| *l);
        return Err(parse_err(at, format!("expected {n} edges, found {}", lines.len())));
    }
    let mut edges = Vec::with_capacity(n);
    for (line_no, line) in lines {
        match parse_numbers(line_no, line)?.as_slice() {
            [u, v] => edges.push((*u, *v)),
            _ => return Err(parse_err(line_no, "edge lines hold two vertex labels")),
        }
    }
    GraphInput::new(d, edges)
}

/// Circuit-list text for `family`, readable by [`parse_circuits`] when the
/// largest element lies in some circuit.
pub fn write_circuits(family: &CircuitFamily) -> String {
    family
        .circuits()
        .iter()
        .map(|c| {
            c.iter()
                .map(|l| l.to_string())
                .collect::<Vec<_>>()
                .join(" ")
                + "\n"
        })
        .collect()
}

//! Text formats: a plain edge list and graph6.
//!
//! Edge list: first line `n m`, then `m` lines `u v`. On output `u < v` and
//! edges appear in lexicographic order. graph6 follows the standard
//! encoding: `N(n)` followed by the upper triangle of the adjacency matrix
//! in column order, six bits per byte, each byte offset by 63.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

const G6_HEADER: &str = ">>graph6<<";

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

/// Parses the edge-list format. Blank lines are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (_, header) = lines.next().ok_or_else(|| parse_err("empty input"))?;
    let (n, m) = parse_pair(header).map_err(|e| parse_err(format!("line 1: {e}")))?;
    let mut edges = Vec::with_capacity(m);
    for (lineno, line) in lines {
        if edges.len() == m {
            return Err(parse_err(format!(
                "line {lineno}: more than the declared {m} edges"
            )));
        }
        let pair = parse_pair(line).map_err(|e| parse_err(format!("line {lineno}: {e}")))?;
        edges.push(pair);
    }
    if edges.len() != m {
        return Err(parse_err(format!(
            "declared {m} edges but found {}",
            edges.len()
        )));
    }
    Graph::new(n, edges).map_err(|e| parse_err(e.to_string()))
}

fn parse_pair(line: &str) -> std::result::Result<(usize, usize), String> {
    let mut it = line.split_whitespace();
    let mut next = || -> std::result::Result<usize, String> {
        let tok = it.next().ok_or("expected two integers")?;
        tok.parse::<usize>()
            .map_err(|_| format!("invalid integer {tok:?}"))
    };
    let pair = (next()?, next()?);
    if it.next().is_some() {
        return Err("expected exactly two integers".into());
    }
    Ok(pair)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

fn encode_size(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

/// Packs a bit sequence six bits per byte, zero-padding the last byte.
fn pack_bits<I: IntoIterator<Item = bool>>(bits: I, out: &mut Vec<u8>) {
    let mut acc = 0u8;
    let mut filled = 0;
    for bit in bits {
        acc = (acc << 1) | bit as u8;
        filled += 1;
        if filled == 6 {
            out.push(acc + 63);
            acc = 0;
            filled = 0;
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
}

/// graph6 encoding of `g`, without header or trailing newline.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(8 + n * n / 12);
    encode_size(n, &mut out);
    pack_bits(
        (1..n).flat_map(|j| (0..j).map(move |i| g.has_edge(i, j))),
        &mut out,
    );
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Parses one graph6 line. An optional `>>graph6<<` header is accepted.
/// Padding bits must be zero so that parse and emit are exact inverses.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let s = line.trim_end_matches(['\n', '\r']);
    let s = s.strip_prefix(G6_HEADER).unwrap_or(s).as_bytes();
    if let Some(&b) = s.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(parse_err(format!("invalid graph6 byte 0x{b:02x}")));
    }
    let (n, body) = match s {
        [] => return Err(parse_err("empty graph6 string")),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(parse_err("truncated graph6 size"));
            }
            (decode_size(&rest[..6]), &rest[6..])
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(parse_err("truncated graph6 size"));
            }
            (decode_size(&rest[..3]), &rest[3..])
        }
        [b, rest @ ..] => ((*b - 63) as usize, rest),
    };
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(parse_err(format!(
            "graph6 body has {} bytes, expected {expected} for n = {n}",
            body.len()
        )));
    }
    let bit = |k: usize| ((body[k / 6] - 63) >> (5 - k % 6)) & 1 == 1;
    if (nbits..expected * 6).any(bit) {
        return Err(parse_err("nonzero graph6 padding bits"));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::new(n, edges).map_err(|e| parse_err(e.to_string()))
}

fn decode_size(bytes: &[u8]) -> usize {
    bytes
        .iter()
        .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize)
}

/// Parses every non-blank line of a graph6 file.
pub fn parse_graph6_list(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(parse_graph6)
        .collect()
}

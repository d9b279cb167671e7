//! graph6 and DIMACS edge-list encodings.
//!
//! graph6 follows the standard format: a size field (`n + 63` for
//! `n <= 62`, otherwise `~` followed by three bytes carrying an 18-bit
//! big-endian value), then the upper triangle of the adjacency matrix in
//! column order, packed into 6-bit big-endian groups offset by 63.

use crate::error::{Error, Result};
use crate::graph::Graph;

const OFFSET: u8 = 63;
const HEADER: &str = ">>graph6<<";

/// Encodes a graph as a graph6 string (no trailing newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut bytes = Vec::new();
    if n <= 62 {
        bytes.push(OFFSET + n as u8);
    } else {
        // 63 <= n <= 512 always fits the 18-bit form
        bytes.push(126);
        bytes.push(OFFSET + ((n >> 12) & 0x3f) as u8);
        bytes.push(OFFSET + ((n >> 6) & 0x3f) as u8);
        bytes.push(OFFSET + (n & 0x3f) as u8);
    }
    let mut acc = 0u8;
    let mut nbits = 0;
    for col in 1..n {
        for row in 0..col {
            acc = (acc << 1) | g.has_edge(row, col) as u8;
            nbits += 1;
            if nbits == 6 {
                bytes.push(OFFSET + acc);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        acc <<= 6 - nbits;
        bytes.push(OFFSET + acc);
    }
    String::from_utf8(bytes).unwrap()
}

/// Decodes a graph6 string. An optional `>>graph6<<` header and trailing
/// whitespace are accepted.
pub fn from_graph6(s: &str) -> Result<Graph> {
    let s = s.trim();
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty input".into()));
    }
    let (n, body) = decode_size(bytes)?;
    let nbits = n * n.saturating_sub(1) / 2;
    let expect = nbits.div_ceil(6);
    if body.len() != expect {
        return Err(Error::Graph6(format!(
            "expected {} bit bytes for order {}, found {}",
            expect,
            n,
            body.len()
        )));
    }
    let mut edges = Vec::new();
    let mut idx = 0;
    'outer: for col in 1..n {
        for row in 0..col {
            let byte = body[idx / 6];
            if !(OFFSET..=126).contains(&byte) {
                return Err(Error::Graph6(format!("invalid byte {byte}")));
            }
            let bit = (byte - OFFSET) >> (5 - idx % 6) & 1;
            if bit == 1 {
                edges.push((row, col));
            }
            idx += 1;
            if idx == nbits {
                break 'outer;
            }
        }
    }
    // padding bits must be zero
    if nbits % 6 != 0 {
        let last = body[nbits / 6] - OFFSET;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Error::Graph6("nonzero padding bits".into()));
        }
    }
    Graph::from_edges(n, &edges)
}

fn decode_size(bytes: &[u8]) -> Result<(usize, &[u8])> {
    if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(Error::Graph6("order exceeds supported maximum".into()));
        }
        if bytes.len() < 4 {
            return Err(Error::Graph6("truncated size field".into()));
        }
        let mut n = 0usize;
        for &b in &bytes[1..4] {
            if !(OFFSET..=125).contains(&b) {
                return Err(Error::Graph6(format!("invalid size byte {b}")));
            }
            n = (n << 6) | (b - OFFSET) as usize;
        }
        Ok((n, &bytes[4..]))
    } else {
        let b = bytes[0];
        if !(OFFSET..=125).contains(&b) {
            return Err(Error::Graph6(format!("invalid size byte {b}")));
        }
        Ok(((b - OFFSET) as usize, &bytes[1..]))
    }
}

/// Writes DIMACS edge format: a `p edge n m` line followed by one
/// 1-indexed `e u v` line per edge.
pub fn to_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

/// Parses DIMACS edge format. Comment lines (`c ...`) are ignored.
pub fn from_dimacs(s: &str) -> Result<Graph> {
    let mut n = None;
    let mut edges = Vec::new();
    for (lineno, line) in s.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let mut parts = line.split_whitespace();
        match parts.next() {
            Some("p") => {
                if parts.next() != Some("edge") {
                    return Err(Error::Dimacs(format!("line {}: expected 'p edge'", lineno + 1)));
                }
                let nv: usize = parse_field(parts.next(), lineno)?;
                let _ne: usize = parse_field(parts.next(), lineno)?;
                n = Some(nv);
            }
            Some("e") => {
                let u: usize = parse_field(parts.next(), lineno)?;
                let v: usize = parse_field(parts.next(), lineno)?;
                if u == 0 || v == 0 {
                    return Err(Error::Dimacs(format!(
                        "line {}: vertices are 1-indexed",
                        lineno + 1
                    )));
                }
                edges.push((u - 1, v - 1));
            }
            _ => {
                return Err(Error::Dimacs(format!("line {}: unrecognized line", lineno + 1)));
            }
        }
    }
    let n = n.ok_or_else(|| Error::Dimacs("missing 'p edge' line".into()))?;
    Graph::from_edges(n, &edges)
}

fn parse_field(tok: Option<&str>, lineno: usize) -> Result<usize> {
    tok.and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::Dimacs(format!("line {}: malformed field", lineno + 1)))
}

/// Reads a graph from text, auto-detecting the format: anything with a
/// `p edge` line is DIMACS, otherwise the first non-empty line is parsed
/// as graph6 (graph6 strings never contain spaces, so the two cannot
/// collide).
pub fn from_text(s: &str) -> Result<Graph> {
    if s.lines().any(|l| l.trim_start().starts_with("p edge")) {
        from_dimacs(s)
    } else {
        let line = s
            .lines()
            .find(|l| !l.trim().is_empty())
            .ok_or_else(|| Error::Graph6("empty input".into()))?;
        from_graph6(line)
    }
}

//! graph6 text encoding (printable ASCII 63..=126, six bits per byte,
//! upper triangle of the adjacency matrix in column order).

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const HEADER: &str = ">>graph6<<";

const BIAS: u8 = 63;
const MAX_N: usize = 68_719_476_735; // 2^36 - 1

fn parse_error(offset: usize, reason: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        reason: reason.into(),
    }
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u8> {
    match bytes.get(offset) {
        None => Err(parse_error(offset, "unexpected end of input")),
        Some(&b) if (BIAS..=126).contains(&b) => Ok(b - BIAS),
        Some(&b) => Err(parse_error(
            offset,
            format!("byte {b:#04x} outside the graph6 range 63..=126"),
        )),
    }
}

/// Decodes the vertex count, returning `(n, bytes consumed)`.
fn parse_size(bytes: &[u8]) -> Result<(usize, usize)> {
    let first = sextet(bytes, 0)?;
    if first < 63 {
        return Ok((first as usize, 1));
    }
    let second = sextet(bytes, 1)?;
    let (start, width) = if second < 63 { (1, 3) } else { (2, 6) };
    let mut n = 0usize;
    for i in 0..width {
        n = n << 6 | sextet(bytes, start + i)? as usize;
    }
    Ok((n, start + width))
}

fn write_size(n: usize, out: &mut String) {
    if n <= 62 {
        out.push((n as u8 + BIAS) as char);
    } else if n <= 258_047 {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push(((n >> shift & 0x3f) as u8 + BIAS) as char);
        }
    } else {
        out.push_str("~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift & 0x3f) as u8 + BIAS) as char);
        }
    }
}

/// Parses one graph6 record. A leading `>>graph6<<` header and trailing
/// line terminators are tolerated; any other trailing byte is an error.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let mut base = 0;
    let mut body = text;
    if let Some(rest) = body.strip_prefix(HEADER) {
        body = rest;
        base = HEADER.len();
    }
    let body = body.trim_end_matches(['\n', '\r']);
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(parse_error(base, "empty graph6 record"));
    }
    let (n, mut pos) = parse_size(bytes).map_err(|e| shift(e, base))?;
    if n > MAX_N {
        return Err(parse_error(base, "vertex count too large"));
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let body_len = pairs.div_ceil(6);
    if bytes.len() < pos + body_len {
        return Err(parse_error(
            base + bytes.len(),
            format!(
                "truncated bit stream: expected {body_len} data bytes, found {}",
                bytes.len() - pos
            ),
        ));
    }
    if bytes.len() > pos + body_len {
        return Err(parse_error(
            base + pos + body_len,
            "trailing bytes after adjacency data",
        ));
    }

    let mut edges = Vec::new();
    let (mut i, mut j) = (0usize, 1usize);
    let mut seen = 0usize;
    for _ in 0..body_len {
        let word = sextet(bytes, pos).map_err(|e| shift(e, base))?;
        for bit in (0..6).rev() {
            if seen == pairs {
                break;
            }
            if word >> bit & 1 == 1 {
                edges.push((i, j));
            }
            seen += 1;
            i += 1;
            if i == j {
                i = 0;
                j += 1;
            }
        }
        pos += 1;
    }
    Graph::from_edges(n, edges)
}

fn shift(e: Error, base: usize) -> Error {
    match e {
        Error::Parse { offset, reason } => Error::Parse {
            offset: offset + base,
            reason,
        },
        other => other,
    }
}

/// Encodes a graph as a graph6 record without header or newline.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::new();
    write_size(n, &mut out);
    let mut word = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            word = word << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((word + BIAS) as char);
                word = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((word << (6 - filled)) + BIAS) as char);
    }
    out
}

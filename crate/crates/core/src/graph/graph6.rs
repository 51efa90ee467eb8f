//! graph6 encoding with the single-byte order header (at most 62 vertices).
//!
//! The upper triangle of the adjacency matrix is written column by column,
//! `(0,1), (0,2), (1,2), (0,3), ...`, six bits per byte, most significant bit
//! first, each byte offset by 63.

use crate::bits::bit;
use crate::error::{Error, Result};

use super::Graph;

/// Largest order representable with the one-byte header.
pub const MAX_GRAPH6_ORDER: usize = 62;

const HEADER: &str = ">>graph6<<";

fn err(offset: usize, message: impl Into<String>) -> Error {
    Error::Graph6 { offset, message: message.into() }
}

/// Decodes one graph6 string. Surrounding whitespace and the optional
/// `>>graph6<<` header are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let start = text.len() - text.trim_start().len();
    let trimmed = text.trim();
    let (body, mut offset) = match trimmed.strip_prefix(HEADER) {
        Some(rest) => (rest, start + HEADER.len()),
        None => (trimmed, start),
    };
    let bytes = body.as_bytes();
    let Some(&first) = bytes.first() else {
        return Err(err(offset, "empty input"));
    };
    if first == b'~' {
        return Err(err(offset, format!("orders above {MAX_GRAPH6_ORDER} are not supported")));
    }
    if !(63..=126).contains(&first) {
        return Err(err(offset, format!("invalid order byte {first:#04x}")));
    }
    let n = (first - 63) as usize;
    offset += 1;

    let pairs = n * n.saturating_sub(1) / 2;
    let expected = pairs.div_ceil(6);
    let data = &bytes[1..];
    if data.len() != expected {
        return Err(err(
            offset + data.len().min(expected),
            format!("expected {expected} data bytes for {n} vertices, found {}", data.len()),
        ));
    }

    let mut adj = vec![0u64; n];
    let mut k = 0usize;
    for (i, &b) in data.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(offset + i, format!("invalid data byte {b:#04x}")));
        }
        let word = b - 63;
        for shift in (0..6).rev() {
            let set = (word >> shift) & 1 == 1;
            if k < pairs {
                if set {
                    let (u, v) = pair_at(k);
                    adj[u] |= bit(v);
                    adj[v] |= bit(u);
                }
            } else if set {
                return Err(err(offset + i, "nonzero padding bits"));
            }
            k += 1;
        }
    }
    Ok(Graph::from_adjacency(adj))
}

/// Column-major position `k` of the upper triangle, as `(row, column)`.
fn pair_at(k: usize) -> (usize, usize) {
    let mut col = 1;
    let mut base = 0;
    while base + col <= k {
        base += col;
        col += 1;
    }
    (k - base, col)
}

/// Encodes a graph; orders above 62 are rejected.
pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > MAX_GRAPH6_ORDER {
        return Err(err(0, format!("orders above {MAX_GRAPH6_ORDER} are not supported")));
    }
    let mut out = String::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push((n as u8 + 63) as char);
    let mut word = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            word = (word << 1) | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push((word + 63) as char);
                word = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((word << (6 - filled)) + 63) as char);
    }
    Ok(out)
}

impl Graph {
    pub fn to_graph6(&self) -> Result<String> {
        to_graph6(self)
    }
}

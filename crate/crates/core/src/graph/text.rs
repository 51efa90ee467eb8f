//! Plain edge-list text: a header line `n m`, then `m` lines `u v` (0-based).
//! Blank lines and lines starting with `#` are ignored.

use std::fmt::Write as _;

use crate::error::{Error, Result};

use super::Graph;

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines =
        text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines.next().ok_or(Error::EdgeList { line: 1, message: "missing header".into() })?;
    let [n, m] = parse_two(hline, header)?;
    let mut pairs = Vec::with_capacity(m);
    for (line, l) in lines {
        pairs.push(parse_two(line, l).map(|[u, v]| (u, v))?);
    }
    if pairs.len() != m {
        return Err(Error::EdgeList {
            line: hline,
            message: format!("header announces {m} edges, found {}", pairs.len()),
        });
    }
    Graph::from_edge_list(n, &pairs)
}

fn parse_two(line: usize, l: &str) -> Result<[usize; 2]> {
    let fields: Vec<&str> = l.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(Error::EdgeList { line, message: format!("expected two integers, got {l:?}") });
    }
    let mut out = [0; 2];
    for (slot, f) in out.iter_mut().zip(&fields) {
        *slot =
            f.parse().map_err(|_| Error::EdgeList { line, message: format!("not a non-negative integer: {f:?}") })?;
    }
    Ok(out)
}

pub fn to_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut s = format!("{} {}\n", g.order(), edges.len());
    for e in edges {
        let (u, v) = e.endpoints();
        writeln!(s, "{u} {v}").unwrap();
    }
    s
}

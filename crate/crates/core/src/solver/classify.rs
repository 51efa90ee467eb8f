//! Recognition of connected graphs with `γ_dR` equal to 3, 4 or 5.
//!
//! - 3: some vertex is adjacent to every other vertex.
//! - 4: two nonadjacent vertices are each adjacent to all other `n - 2`
//!   vertices, i.e. the graph is `K̄_2 ∨ H` with `H` free of dominating
//!   vertices (the first case is tested first, so that condition is implied).
//! - 5: the maximum degree is `n - 2` and neither case above holds.

use crate::bits::bit;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// `Some(3 | 4 | 5)` when `γ_dR(G)` is one of those values, `None` when it is at least 6.
pub fn classify_small_gamma(g: &Graph) -> Result<Option<u32>> {
    let n = g.order();
    if n < 3 {
        return Err(Error::Precondition(format!("classifier needs at least 3 vertices, got {n}")));
    }
    if !g.is_connected() {
        return Err(Error::Precondition("classifier needs a connected graph".into()));
    }
    if g.max_degree() == n - 1 {
        return Ok(Some(3));
    }
    let all = g.vertex_mask();
    let near_full: Vec<usize> = (0..n).filter(|&v| g.degree(v) == n - 2).collect();
    for (i, &u) in near_full.iter().enumerate() {
        for &v in &near_full[i + 1..] {
            let rest = all & !bit(u) & !bit(v);
            if !g.has_edge(u, v) && g.neighbors(u) == rest && g.neighbors(v) == rest {
                return Ok(Some(4));
            }
        }
    }
    if !near_full.is_empty() {
        return Ok(Some(5));
    }
    Ok(None)
}

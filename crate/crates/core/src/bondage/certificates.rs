//! Explicit edge sets whose removal raises `γ_dR`, one per local structure.

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::graph::{Edge, EdgeSet, Graph};

fn require_edge(g: &Graph, u: usize, v: usize) -> Result<()> {
    let n = g.order();
    for x in [u, v] {
        if x >= n {
            return Err(Error::VertexOutOfRange { vertex: x, n });
        }
    }
    if !g.has_edge(u, v) {
        return Err(Error::NotAnEdge { u, v });
    }
    Ok(())
}

/// For a path `x y z`: every edge at `x`, `y` or `z`, except `yz` and the
/// edges from `y` to common neighbors of `x` and `y`.
///
/// In the remaining graph `x` is isolated and `z` hangs off `y` alone. Size is
/// `deg x + deg y + deg z - 3 - |N(x) ∩ N(y)|`.
pub fn path_deletion_set(g: &Graph, x: usize, y: usize, z: usize) -> Result<EdgeSet> {
    require_edge(g, x, y)?;
    require_edge(g, y, z)?;
    if x == z {
        return Err(Error::Precondition("path endpoints must differ".into()));
    }
    let shared = g.neighbors(x) & g.neighbors(y);
    let mut out = EdgeSet::new();
    for a in [x, y, z] {
        for b in g.neighbor_iter(a) {
            out.insert(Edge::new(a, b));
        }
    }
    out.remove(Edge::new(y, z));
    for r in Bits(shared) {
        out.remove(Edge::new(y, r));
    }
    Ok(out)
}

/// For an edge `uv`: every edge at `u` and every edge at `v`, except the
/// edges from `v` to common neighbors of `u` and `v`.
///
/// Size is `deg u + deg v - 1 - |N(u) ∩ N(v)|`.
pub fn edge_deletion_set(g: &Graph, u: usize, v: usize) -> Result<EdgeSet> {
    require_edge(g, u, v)?;
    let shared = g.neighbors(u) & g.neighbors(v);
    let mut out: EdgeSet = g.neighbor_iter(u).map(|t| Edge::new(t, u)).collect();
    for s in Bits(g.neighbors(v) & !shared) {
        out.insert(Edge::new(s, v));
    }
    Ok(out)
}

/// For a path `u w v`: every edge at `u`, and every edge at `v` except `wv`.
///
/// Size is `deg u + deg v - 1`, less one when `uv` is itself an edge.
pub fn two_path_deletion_set(g: &Graph, u: usize, w: usize, v: usize) -> Result<EdgeSet> {
    require_edge(g, u, w)?;
    require_edge(g, w, v)?;
    if u == v {
        return Err(Error::Precondition("path endpoints must differ".into()));
    }
    let mut out: EdgeSet = g.neighbor_iter(u).map(|t| Edge::new(t, u)).collect();
    for s in g.neighbor_iter(v).filter(|&s| s != w) {
        out.insert(Edge::new(s, v));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::family::FamilySpec;
    use crate::solver::{gamma_bruteforce, Alphabet};

    fn fam(s: &str) -> Graph {
        s.parse::<FamilySpec>().unwrap().generate().unwrap()
    }

    fn gamma(g: &Graph) -> u32 {
        gamma_bruteforce(g, Alphabet::Full).unwrap().value
    }

    #[test]
    fn path_set_on_p3_and_star() {
        let p3 = fam("path:3");
        let s = path_deletion_set(&p3, 0, 1, 2).unwrap();
        assert_eq!(s, EdgeSet::from_pairs([(0, 1)]));
        assert_eq!(gamma(&p3), 3);
        assert_eq!(gamma(&p3.remove_edges(&s).unwrap()), 5);

        let star = fam("star:3");
        let s = path_deletion_set(&star, 1, 0, 2).unwrap();
        assert_eq!(s, EdgeSet::from_pairs([(0, 1), (0, 3)]));
        assert_eq!(gamma(&star.remove_edges(&s).unwrap()), 7);
    }

    #[test]
    fn path_set_on_triangle() {
        let k3 = fam("complete:3");
        let s = path_deletion_set(&k3, 0, 1, 2).unwrap();
        // x = 0 loses both edges; y keeps yz
        assert_eq!(s, EdgeSet::from_pairs([(0, 1), (0, 2)]));
        assert!(gamma(&k3.remove_edges(&s).unwrap()) > gamma(&k3));
    }

    #[test]
    fn edge_set_sizes() {
        let k2 = fam("path:2");
        let s = edge_deletion_set(&k2, 0, 1).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!((gamma(&k2), gamma(&k2.remove_edges(&s).unwrap())), (3, 4));
        assert_eq!(edge_deletion_set(&fam("path:3"), 1, 0).unwrap().len(), 2);
        assert_eq!(edge_deletion_set(&fam("cycle:4"), 0, 1).unwrap().len(), 3);
    }

    #[test]
    fn two_path_set_sizes() {
        assert_eq!(two_path_deletion_set(&fam("path:3"), 0, 1, 2).unwrap().len(), 1);
        assert_eq!(two_path_deletion_set(&fam("cycle:4"), 0, 1, 2).unwrap().len(), 3);
        assert_eq!(two_path_deletion_set(&fam("star:3"), 1, 0, 2).unwrap().len(), 1);
        // in a triangle uv is shared by both halves
        assert_eq!(two_path_deletion_set(&fam("complete:3"), 0, 1, 2).unwrap().len(), 2);
    }

    #[test]
    fn rejects_non_paths() {
        let p3 = fam("path:3");
        assert_eq!(path_deletion_set(&p3, 0, 2, 1), Err(Error::NotAnEdge { u: 0, v: 2 }));
        assert!(path_deletion_set(&p3, 0, 1, 0).is_err());
        assert!(two_path_deletion_set(&p3, 0, 1, 0).is_err());
        assert!(edge_deletion_set(&p3, 0, 7).is_err());
    }
}

//! Simple undirected graphs on at most 64 vertices, stored as one neighbor
//! bitset per vertex.

mod edges;
pub mod enumerate;
pub mod family;
pub mod graph6;
pub mod text;

use std::collections::VecDeque;
use std::hash::{Hash, Hasher};

use crate::bits::{bit, low_mask, Bits};
use crate::error::{Error, Result};

pub use edges::{Edge, EdgeSet};

pub const MAX_VERTICES: usize = 64;

/// An undirected simple graph with vertex ids `0..n`.
///
/// `planar_tag` is only ever set by generators whose output is planar by
/// construction; it is never inferred from structure. Equality and hashing
/// ignore it.
#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    planar_tag: Option<bool>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl Hash for Graph {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.adj.hash(state);
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph { n, adj: vec![0; n], planar_tag: None })
    }

    /// Builds a graph from a list of vertex pairs. Duplicate pairs collapse.
    pub fn from_edge_list(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in pairs {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Wraps a raw adjacency vector. Callers guarantee symmetry and no loops.
    pub(crate) fn from_adjacency(adj: Vec<u64>) -> Self {
        let n = adj.len();
        debug_assert!(n <= MAX_VERTICES);
        debug_assert!((0..n).all(|v| adj[v] & bit(v) == 0));
        debug_assert!((0..n).all(|u| Bits(adj[u]).all(|v| v < n && adj[v] & bit(u) != 0)));
        Graph { n, adj, planar_tag: None }
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
        Ok(())
    }

    pub(crate) fn with_planar_tag(mut self) -> Self {
        self.planar_tag = Some(true);
        self
    }

    /// Number of vertices.
    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn planar_tag(&self) -> Option<bool> {
        self.planar_tag
    }

    /// Bitset of all vertices.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        low_mask(self.n)
    }

    /// Raw adjacency rows.
    #[inline]
    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    /// Open neighborhood of `v` as a bitset.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbor_iter(&self, v: usize) -> Bits {
        Bits(self.adj[v])
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Maximum degree; 0 for the null graph.
    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Minimum degree; 0 for the null graph.
    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// `|N(u) ∩ N(v)|`.
    #[inline]
    pub fn common_neighbor_count(&self, u: usize, v: usize) -> usize {
        (self.adj[u] & self.adj[v]).count_ones() as usize
    }

    /// All edges, sorted lexicographically by `(min, max)` endpoint.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.n {
            for v in Bits(self.adj[u] & !low_mask(u + 1)) {
                out.push(Edge::new(u, v));
            }
        }
        out
    }

    /// Spanning subgraph `G - S`. Every pair in `S` must be an edge.
    pub fn remove_edges(&self, s: &EdgeSet) -> Result<Graph> {
        for e in s.iter() {
            let (u, v) = e.endpoints();
            if !self.has_edge(u, v) {
                return Err(Error::NotAnEdge { u, v });
            }
        }
        Ok(self.without_edges(s.iter().copied()))
    }

    /// `G - S` without validating membership.
    pub(crate) fn without_edges(&self, s: impl IntoIterator<Item = Edge>) -> Graph {
        let mut adj = self.adj.clone();
        for e in s {
            let (u, v) = e.endpoints();
            adj[u] &= !bit(v);
            adj[v] &= !bit(u);
        }
        Graph { n: self.n, adj, planar_tag: self.planar_tag }
    }

    /// Length of a shortest cycle, or `None` for forests (infinite girth).
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        for root in 0..self.n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[root] = 0;
            parent[root] = usize::MAX;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for w in Bits(self.adj[u]) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// A proper 2-coloring (colors 0/1, least vertex of each component gets
    /// 0), or `None` when the graph has an odd cycle.
    pub fn two_coloring(&self) -> Option<Vec<u8>> {
        let mut color = vec![u8::MAX; self.n];
        for root in 0..self.n {
            if color[root] != u8::MAX {
                continue;
            }
            color[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for w in Bits(self.adj[u]) {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[u];
                        queue.push_back(w);
                    } else if color[w] == color[u] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    /// Connected component containing `v`, as a bitset.
    pub fn component_of(&self, v: usize) -> u64 {
        let mut seen = bit(v);
        let mut frontier = bit(v);
        while frontier != 0 {
            let mut next = 0;
            for u in Bits(frontier) {
                next |= self.adj[u];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    /// Component bitsets ordered by least vertex id.
    pub fn component_masks(&self) -> Vec<u64> {
        let mut out = Vec::new();
        let mut rest = self.vertex_mask();
        while rest != 0 {
            let c = self.component_of(rest.trailing_zeros() as usize);
            out.push(c);
            rest &= !c;
        }
        out
    }

    /// Components as sorted vertex lists, ordered by least vertex id.
    pub fn components(&self) -> Vec<Vec<usize>> {
        self.component_masks().into_iter().map(|m| Bits(m).collect()).collect()
    }

    /// True for connected graphs, including K_1. The null graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.component_of(0) == self.vertex_mask()
    }

    /// Subgraph induced by `mask`, with vertices renumbered in ascending order.
    /// Returns the subgraph and the original id of each new vertex.
    pub fn induced(&self, mask: u64) -> (Graph, Vec<usize>) {
        let ids: Vec<usize> = Bits(mask & self.vertex_mask()).collect();
        let mut local = [0usize; MAX_VERTICES];
        for (i, &v) in ids.iter().enumerate() {
            local[v] = i;
        }
        let adj = ids.iter().map(|&v| Bits(self.adj[v] & mask).fold(0u64, |acc, w| acc | bit(local[w]))).collect();
        (Graph::from_adjacency(adj), ids)
    }

    /// True if the graph is a tree (connected, `n - 1` edges, `n >= 1`).
    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.size() == self.n - 1 && self.is_connected()
    }

    /// Vertices adjacent to every other vertex.
    pub fn dominating_vertices(&self) -> u64 {
        let all = self.vertex_mask();
        (0..self.n).filter(|&v| self.adj[v] | bit(v) == all).fold(0, |acc, v| acc | bit(v))
    }

    /// Breadth-first distances from `root`; `usize::MAX` marks unreachable vertices.
    pub fn distances_from(&self, root: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for w in Bits(self.adj[u]) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }
}

#[cfg(test)]
mod tests {
    use super::family::FamilySpec;
    use super::*;

    fn path(n: usize) -> Graph {
        FamilySpec::Path(n).generate().unwrap()
    }

    fn cycle(n: usize) -> Graph {
        FamilySpec::Cycle(n).generate().unwrap()
    }

    #[test]
    fn edge_list_construction() {
        let p3 = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3, path(3));
        let k1 = Graph::from_edge_list(1, &[]).unwrap();
        assert_eq!(k1.order(), 1);
        assert_eq!(k1.size(), 0);
        let dup = Graph::from_edge_list(4, &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(dup.size(), 1);
        assert_eq!(dup.order(), 4);
    }

    #[test]
    fn edge_list_rejections() {
        assert_eq!(Graph::from_edge_list(3, &[(0, 3)]), Err(Error::VertexOutOfRange { vertex: 3, n: 3 }));
        assert_eq!(Graph::from_edge_list(3, &[(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(Graph::empty(65), Err(Error::TooManyVertices(65)));
        assert!(Graph::empty(64).is_ok());
    }

    #[test]
    fn removing_edges() {
        let c4 = cycle(4);
        let p4 = c4.remove_edges(&EdgeSet::from_pairs([(0, 3)])).unwrap();
        assert_eq!(p4, path(4));
        assert_eq!(c4.remove_edges(&EdgeSet::new()).unwrap(), c4);
        let k3 = FamilySpec::Complete(3).generate().unwrap();
        let all = EdgeSet::from_iter(k3.edges());
        let bare = k3.remove_edges(&all).unwrap();
        assert_eq!(bare, Graph::empty(3).unwrap());
        assert_eq!(c4.remove_edges(&EdgeSet::from_pairs([(0, 2)])), Err(Error::NotAnEdge { u: 0, v: 2 }));
    }

    #[test]
    fn girth_values() {
        assert_eq!(cycle(7).girth(), Some(7));
        assert_eq!(path(6).girth(), None);
        assert_eq!(FamilySpec::Complete(4).generate().unwrap().girth(), Some(3));
        assert_eq!(FamilySpec::Grid(3, 3).generate().unwrap().girth(), Some(4));
        for n in 3..12 {
            assert_eq!(cycle(n).girth(), Some(n));
        }
    }

    #[test]
    fn bipartiteness_and_components() {
        assert!(cycle(6).is_bipartite());
        assert!(!cycle(5).is_bipartite());
        let g = Graph::from_edge_list(4, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 1, 2], vec![3]]);
        assert!(!g.is_connected());
        assert!(path(5).is_connected());
        let h = Graph::from_edge_list(5, &[(3, 4), (0, 2)]).unwrap();
        assert_eq!(h.components(), vec![vec![0, 2], vec![1], vec![3, 4]]);
    }

    #[test]
    fn induced_subgraph_renumbers() {
        let c5 = cycle(5);
        let (h, ids) = c5.induced(0b10110);
        assert_eq!(ids, vec![1, 2, 4]);
        assert_eq!(h.edges(), vec![Edge::new(0, 1)]);
    }

    #[test]
    fn degrees_and_neighbors() {
        let w = FamilySpec::Wheel(5).generate().unwrap();
        assert_eq!(w.degree(0), 4);
        assert_eq!(w.max_degree(), 4);
        assert_eq!(w.min_degree(), 3);
        assert_eq!(w.common_neighbor_count(1, 3), 3);
        assert_eq!(w.dominating_vertices(), 1);
        assert_eq!(w.size(), 8);
    }
}

//! Upper bounds on `b_dR` from local degree structure, each evaluated with
//! its precondition and, where a construction exists, an explicit deletion
//! set that realizes it.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::graph::{Edge, EdgeSet, Graph};

use super::certificates::{edge_deletion_set, path_deletion_set, two_path_deletion_set};

/// One row of a [`BoundReport`].
///
/// `value` is the formula's value, present exactly when `applicable`. A
/// certificate, when present, is an edge set of size at most `value` whose
/// removal raises `γ_dR`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundEntry {
    pub name: &'static str,
    pub statement: &'static str,
    pub applicable: bool,
    pub value: Option<i64>,
    pub certificate: Option<EdgeSet>,
    pub parameters: BTreeMap<&'static str, usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub entries: Vec<BoundEntry>,
}

impl BoundReport {
    /// The smallest applicable bound, with the name of the entry giving it.
    pub fn best(&self) -> Option<(&'static str, i64)> {
        self.applicable().map(|e| (e.name, e.value.unwrap())).min_by_key(|&(_, v)| v)
    }

    pub fn applicable(&self) -> impl Iterator<Item = &BoundEntry> {
        self.entries.iter().filter(|e| e.applicable)
    }

    pub fn get(&self, name: &str) -> Option<&BoundEntry> {
        self.entries.iter().find(|e| e.name == name)
    }
}

pub const PATH_DEGREE_SUM: &str = "path_degree_sum";
pub const TRIANGLE_DEGREE_SUM: &str = "triangle_degree_sum";
pub const MIN_DEGREE_PLUS_TWICE_MAX: &str = "min_degree_plus_twice_max";
pub const LEAFY_SUPPORT_VERTEX: &str = "leafy_support_vertex";
pub const TREE: &str = "tree";
pub const EDGE_DEGREE_SUM: &str = "edge_degree_sum";
pub const MAX_PLUS_MIN_DEGREE: &str = "max_plus_min_degree";
pub const TWO_PATH_ENDPOINTS: &str = "two_path_endpoints";
pub const PLANAR_GIRTH: &str = "planar_girth";
pub const PLANAR_NO_DEGREE_FIVE: &str = "planar_no_degree_five";
pub const PLANAR: &str = "planar";

struct Builder {
    entries: Vec<BoundEntry>,
}

impl Builder {
    fn skip(&mut self, name: &'static str, statement: &'static str, why: &str) {
        self.entries.push(BoundEntry {
            name,
            statement,
            applicable: false,
            value: None,
            certificate: None,
            parameters: BTreeMap::new(),
            note: Some(why.to_string()),
        });
    }

    fn hit(
        &mut self,
        name: &'static str,
        statement: &'static str,
        value: i64,
        certificate: Option<EdgeSet>,
        parameters: &[(&'static str, usize)],
    ) {
        self.entries.push(BoundEntry {
            name,
            statement,
            applicable: true,
            value: Some(value),
            certificate,
            parameters: parameters.iter().copied().collect(),
            note: None,
        });
    }
}

/// `deg x + deg y + deg z - 3 - |N(x) ∩ N(y)|` for the path `x y z`.
pub fn path_degree_sum(g: &Graph, x: usize, y: usize, z: usize) -> i64 {
    (g.degree(x) + g.degree(y) + g.degree(z)) as i64 - 3 - g.common_neighbor_count(x, y) as i64
}

/// `deg u + deg v - 1 - |N(u) ∩ N(v)|` for the edge `uv`.
pub fn edge_degree_sum(g: &Graph, u: usize, v: usize) -> i64 {
    (g.degree(u) + g.degree(v)) as i64 - 1 - g.common_neighbor_count(u, v) as i64
}

/// Ordered paths `x y z` (`xy`, `yz` edges, `x != z`) in lexicographic order.
fn two_paths(g: &Graph) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
    (0..g.order()).flat_map(move |x| {
        g.neighbor_iter(x).flat_map(move |y| g.neighbor_iter(y).filter(move |&z| z != x).map(move |z| (x, y, z)))
    })
}

fn first_min<T: Copy>(items: impl Iterator<Item = T>, key: impl Fn(T) -> i64) -> Option<(T, i64)> {
    let mut best: Option<(T, i64)> = None;
    for t in items {
        let k = key(t);
        if best.is_none_or(|(_, b)| k < b) {
            best = Some((t, k));
        }
    }
    best
}

/// Evaluates every bound in the catalog, in a fixed order.
pub fn bound_catalog(g: &Graph) -> BoundReport {
    let n = g.order();
    let connected = n > 0 && g.is_connected();
    let mut b = Builder { entries: Vec::new() };

    let path_min = first_min(two_paths(g), |(x, y, z)| path_degree_sum(g, x, y, z));
    let path_cert = path_min.map(|((x, y, z), _)| path_deletion_set(g, x, y, z).expect("two_paths yields paths"));

    const S_PATH: &str = "min over paths xyz of deg x + deg y + deg z - 3 - |N(x) ∩ N(y)|";
    match path_min {
        Some(((x, y, z), v)) => b.hit(PATH_DEGREE_SUM, S_PATH, v, path_cert.clone(), &[("x", x), ("y", y), ("z", z)]),
        None => b.skip(PATH_DEGREE_SUM, S_PATH, "no path on three vertices"),
    }

    // The deletion set built for a path is one edge larger than this formula
    // when xz is an edge, so no certificate is attached.
    const S_TRI: &str = "min over triangles xyz of deg x + deg y + deg z - 4 - |N(x) ∩ N(y)|";
    let tri_min =
        first_min(two_paths(g).filter(|&(x, _, z)| g.has_edge(x, z)), |(x, y, z)| path_degree_sum(g, x, y, z) - 1);
    match tri_min {
        Some(((x, y, z), v)) => b.hit(TRIANGLE_DEGREE_SUM, S_TRI, v, None, &[("x", x), ("y", y), ("z", z)]),
        None => b.skip(TRIANGLE_DEGREE_SUM, S_TRI, "no triangle"),
    }

    const S_MIN2MAX: &str = "δ + 2Δ - 3 for connected graphs of order at least 3";
    if connected && n >= 3 {
        let v = (g.min_degree() + 2 * g.max_degree()) as i64 - 3;
        b.hit(MIN_DEGREE_PLUS_TWICE_MAX, S_MIN2MAX, v, path_cert.clone(), &[]);
    } else {
        b.skip(MIN_DEGREE_PLUS_TWICE_MAX, S_MIN2MAX, "needs a connected graph of order at least 3");
    }

    const S_LEAFY: &str = "2 if a vertex of degree at least 3 has at most one non-leaf neighbor";
    let leafy = leafy_support(g);
    match &leafy {
        Some((v, cert)) => b.hit(LEAFY_SUPPORT_VERTEX, S_LEAFY, 2, Some(cert.clone()), &[("v", *v)]),
        None => b.skip(LEAFY_SUPPORT_VERTEX, S_LEAFY, "no such support vertex"),
    }

    const S_TREE: &str = "2 for trees of order at least 3";
    if n >= 3 && g.is_tree() {
        let cert = match &leafy {
            Some((_, c)) => c.clone(),
            None => longest_path_end(g),
        };
        b.hit(TREE, S_TREE, 2, Some(cert), &[]);
    } else {
        b.skip(TREE, S_TREE, "not a tree of order at least 3");
    }

    const S_EDGE: &str = "min over edges uv of deg u + deg v - 1 - |N(u) ∩ N(v)|, connected, order at least 2";
    let ordered_edges = (0..n).flat_map(|u| g.neighbor_iter(u).map(move |v| (u, v)));
    let edge_min = first_min(ordered_edges, |(u, v)| edge_degree_sum(g, u, v));
    let edge_cert = edge_min.map(|((u, v), _)| edge_deletion_set(g, u, v).expect("adjacent pair"));
    match edge_min {
        Some(((u, v), val)) if connected => {
            b.hit(EDGE_DEGREE_SUM, S_EDGE, val, edge_cert.clone(), &[("u", u), ("v", v)])
        }
        _ => b.skip(EDGE_DEGREE_SUM, S_EDGE, "needs a connected graph of order at least 2"),
    }

    const S_MAXMIN: &str = "Δ + δ - 1 for connected graphs of order at least 2";
    if connected && n >= 2 {
        let v = (g.max_degree() + g.min_degree()) as i64 - 1;
        b.hit(MAX_PLUS_MIN_DEGREE, S_MAXMIN, v, edge_cert.clone(), &[]);
    } else {
        b.skip(MAX_PLUS_MIN_DEGREE, S_MAXMIN, "needs a connected graph of order at least 2");
    }

    const S_2PATH: &str = "min over paths uwv of deg u + deg v - 1, connected";
    let two_min = first_min(two_paths(g), |(u, _, v)| (g.degree(u) + g.degree(v)) as i64 - 1);
    match two_min {
        Some(((u, w, v), val)) if connected => {
            let cert = two_path_deletion_set(g, u, w, v).expect("two_paths yields paths");
            b.hit(TWO_PATH_ENDPOINTS, S_2PATH, val, Some(cert), &[("u", u), ("w", w), ("v", v)]);
        }
        _ => b.skip(TWO_PATH_ENDPOINTS, S_2PATH, "needs a connected graph with a path on three vertices"),
    }

    let planar_ok = g.planar_tag() == Some(true) && connected && n >= 2;
    let why_not_planar = if g.planar_tag() != Some(true) {
        "graph is not tagged planar by its generator"
    } else {
        "needs a connected graph of order at least 2"
    };

    const S_GIRTH: &str = "Δ + 2 for planar graphs of girth at least 4, Δ + 1 for girth at least 6";
    if planar_ok {
        let girth = g.girth();
        let big = |k: usize| girth.is_none_or(|x| x >= k);
        let params: Vec<(&'static str, usize)> = girth.map(|x| ("girth", x)).into_iter().collect();
        if big(6) {
            b.hit(PLANAR_GIRTH, S_GIRTH, g.max_degree() as i64 + 1, None, &params);
        } else if big(4) {
            b.hit(PLANAR_GIRTH, S_GIRTH, g.max_degree() as i64 + 2, None, &params);
        } else {
            b.skip(PLANAR_GIRTH, S_GIRTH, "girth is 3");
        }
    } else {
        b.skip(PLANAR_GIRTH, S_GIRTH, why_not_planar);
    }

    const S_NO5: &str = "7 for connected planar graphs with no vertex of degree 5";
    if planar_ok && (0..n).all(|v| g.degree(v) != 5) {
        b.hit(PLANAR_NO_DEGREE_FIVE, S_NO5, 7, None, &[]);
    } else if planar_ok {
        b.skip(PLANAR_NO_DEGREE_FIVE, S_NO5, "has a vertex of degree 5");
    } else {
        b.skip(PLANAR_NO_DEGREE_FIVE, S_NO5, why_not_planar);
    }

    const S_PLANAR: &str = "8 for connected planar graphs";
    if planar_ok {
        b.hit(PLANAR, S_PLANAR, 8, None, &[]);
    } else {
        b.skip(PLANAR, S_PLANAR, why_not_planar);
    }

    BoundReport { entries: b.entries }
}

/// The smallest applicable value of [`bound_catalog`], computed without
/// building certificates or the report.
pub fn catalog_upper_bound(g: &Graph) -> Option<i64> {
    let n = g.order();
    let connected = n > 0 && g.is_connected();
    let mut best: Option<i64> = None;
    let mut offer = |v: i64| best = Some(best.map_or(v, |b| b.min(v)));
    for (x, y, z) in two_paths(g) {
        let p = path_degree_sum(g, x, y, z);
        offer(p);
        if g.has_edge(x, z) {
            offer(p - 1);
        }
        if connected {
            offer((g.degree(x) + g.degree(z)) as i64 - 1);
        }
    }
    if connected && n >= 2 {
        offer((g.max_degree() + g.min_degree()) as i64 - 1);
        for u in 0..n {
            for v in g.neighbor_iter(u) {
                offer(edge_degree_sum(g, u, v));
            }
        }
    }
    if has_leafy_support(g) || (n >= 3 && g.is_tree()) {
        offer(2);
    }
    if g.planar_tag() == Some(true) && connected && n >= 2 {
        offer(8);
        if (0..n).all(|v| g.degree(v) != 5) {
            offer(7);
        }
        match g.girth() {
            None => offer(g.max_degree() as i64 + 1),
            Some(k) if k >= 6 => offer(g.max_degree() as i64 + 1),
            Some(k) if k >= 4 => offer(g.max_degree() as i64 + 2),
            _ => {}
        }
    }
    // δ + 2Δ - 3 never undercuts the path minimum, so it is skipped here
    best
}

fn leaf_mask(g: &Graph) -> u64 {
    (0..g.order()).filter(|&v| g.degree(v) == 1).fold(0, |m, v| m | 1 << v)
}

fn is_leafy_support(g: &Graph, leaves: u64, v: usize) -> bool {
    let d = g.degree(v);
    d >= 3 && (g.neighbors(v) & leaves).count_ones() as usize + 1 >= d
}

fn has_leafy_support(g: &Graph) -> bool {
    let leaves = leaf_mask(g);
    (0..g.order()).any(|v| is_leafy_support(g, leaves, v))
}

/// The least vertex of degree at least 3 with at most one non-leaf neighbor,
/// and its deletion set: the path through two of its leaves at degree 3, a
/// single leaf edge at higher degree.
fn leafy_support(g: &Graph) -> Option<(usize, EdgeSet)> {
    let leaves = leaf_mask(g);
    (0..g.order()).find_map(|v| {
        if !is_leafy_support(g, leaves, v) {
            return None;
        }
        let d = g.degree(v);
        let leafy = g.neighbors(v) & leaves;
        let l1 = leafy.trailing_zeros() as usize;
        let cert = if d == 3 {
            let l2 = (leafy & !(1 << l1)).trailing_zeros() as usize;
            path_deletion_set(g, l1, v, l2).expect("leaf-hub-leaf is a path")
        } else {
            EdgeSet::from_iter([Edge::new(v, l1)])
        };
        Some((v, cert))
    })
}

/// For a tree: the first two edges `v1v2`, `v2v3` of a longest path.
fn longest_path_end(t: &Graph) -> EdgeSet {
    let far = |d: &[usize]| (0..d.len()).max_by_key(|&v| (d[v], std::cmp::Reverse(v))).unwrap();
    let a = far(&t.distances_from(0));
    let da = t.distances_from(a);
    let v1 = far(&da);
    let step = |v: usize| t.neighbor_iter(v).find(|&w| da[w] + 1 == da[v]).unwrap();
    let v2 = step(v1);
    let v3 = step(v2);
    EdgeSet::from_iter([Edge::new(v1, v2), Edge::new(v2, v3)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::family::FamilySpec;

    fn fam(s: &str) -> Graph {
        s.parse::<FamilySpec>().unwrap().generate().unwrap()
    }

    fn value(r: &BoundReport, name: &str) -> Option<i64> {
        r.get(name).unwrap().value
    }

    #[test]
    fn star_path_sum() {
        let g = fam("star:3");
        assert_eq!(path_degree_sum(&g, 1, 0, 2), 2);
        let r = bound_catalog(&g);
        assert_eq!(value(&r, PATH_DEGREE_SUM), Some(2));
        assert_eq!(value(&r, LEAFY_SUPPORT_VERTEX), Some(2));
        assert_eq!(value(&r, TREE), Some(2));
        assert_eq!(value(&r, TRIANGLE_DEGREE_SUM), None);
    }

    #[test]
    fn cycle_and_complete() {
        assert_eq!(value(&bound_catalog(&fam("cycle:7")), MAX_PLUS_MIN_DEGREE), Some(3));
        let k4 = bound_catalog(&fam("complete:4"));
        assert_eq!(value(&k4, TRIANGLE_DEGREE_SUM), Some(3));
        assert!(k4.get(TRIANGLE_DEGREE_SUM).unwrap().certificate.is_none());
        assert!(!k4.get(PLANAR).unwrap().applicable);
    }

    #[test]
    fn planar_entries() {
        let r = bound_catalog(&fam("grid:3,3"));
        assert_eq!(value(&r, PLANAR_GIRTH), Some(6));
        assert_eq!(value(&r, PLANAR_NO_DEGREE_FIVE), Some(7));
        assert_eq!(value(&r, PLANAR), Some(8));
        let r = bound_catalog(&fam("cycle:6"));
        assert_eq!(value(&r, PLANAR_GIRTH), Some(3));
        let r = bound_catalog(&fam("wheel:5"));
        assert!(!r.get(PLANAR_GIRTH).unwrap().applicable);
        let r = bound_catalog(&fam("path:5"));
        assert_eq!(value(&r, PLANAR_GIRTH), Some(3));
        assert!(!r.get(PLANAR_GIRTH).unwrap().parameters.contains_key("girth"));
    }

    #[test]
    fn best_and_sizes() {
        let g = fam("path:6");
        let r = bound_catalog(&g);
        let (_, best) = r.best().unwrap();
        assert_eq!(best, 2);
        for e in r.applicable() {
            if let Some(c) = &e.certificate {
                assert!(c.len() as i64 <= e.value.unwrap(), "{}", e.name);
            }
        }
    }

    #[test]
    fn tree_without_leafy_vertex_uses_longest_path() {
        // spider with legs of length 2
        let g = Graph::from_edge_list(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        let r = bound_catalog(&g);
        assert!(!r.get(LEAFY_SUPPORT_VERTEX).unwrap().applicable);
        let cert = r.get(TREE).unwrap().certificate.clone().unwrap();
        assert_eq!(cert.len(), 2);
    }

    #[test]
    fn fast_upper_bound_matches_report() {
        for n in 1..=6 {
            for g in crate::graph::enumerate::labeled_connected(n).unwrap() {
                assert_eq!(catalog_upper_bound(&g), bound_catalog(&g).best().map(|(_, v)| v));
            }
        }
        for s in ["grid:3,4", "cycle:8", "wheel:7", "tree:0,0,0,4", "star:5", "empty:2"] {
            let g = fam(s);
            assert_eq!(catalog_upper_bound(&g), bound_catalog(&g).best().map(|(_, v)| v), "{s}");
        }
    }

    #[test]
    fn empty_graphs() {
        let r = bound_catalog(&fam("empty:3"));
        assert!(r.applicable().next().is_none());
        assert_eq!(r.best(), None);
    }
}

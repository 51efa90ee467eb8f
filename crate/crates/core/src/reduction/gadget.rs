//! The graph built from a 3-CNF formula whose bondage number is 1 exactly
//! when the formula is satisfiable.
//!
//! Variable `i` (from 1) owns eight vertices `u ū w v v' x y z` at ids
//! `8(i-1) .. 8i`, in that order. Clause `j` is vertex `c_j` at `8n + j - 1`,
//! and the frame vertices `l_1 .. l_9` take the last nine ids.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, MAX_VERTICES};

use super::cnf::{CnfFormula, Literal};

/// What a vertex of the construction stands for. Indices start at 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexRole {
    U(usize),
    UBar(usize),
    W(usize),
    V(usize),
    VPrime(usize),
    X(usize),
    Y(usize),
    Z(usize),
    Clause(usize),
    L(usize),
}

const GADGET: [fn(usize) -> VertexRole; 8] = [
    VertexRole::U,
    VertexRole::UBar,
    VertexRole::W,
    VertexRole::V,
    VertexRole::VPrime,
    VertexRole::X,
    VertexRole::Y,
    VertexRole::Z,
];

impl VertexRole {
    /// Short tag such as `u1`, `ubar2`, `vprime1`, `c3`, `l9`.
    pub fn tag(self) -> String {
        let (name, i) = match self {
            VertexRole::U(i) => ("u", i),
            VertexRole::UBar(i) => ("ubar", i),
            VertexRole::W(i) => ("w", i),
            VertexRole::V(i) => ("v", i),
            VertexRole::VPrime(i) => ("vprime", i),
            VertexRole::X(i) => ("x", i),
            VertexRole::Y(i) => ("y", i),
            VertexRole::Z(i) => ("z", i),
            VertexRole::Clause(j) => ("c", j),
            VertexRole::L(k) => ("l", k),
        };
        format!("{name}{i}")
    }

    /// The variable whose gadget holds this vertex.
    pub fn gadget(self) -> Option<usize> {
        match self {
            VertexRole::U(i)
            | VertexRole::UBar(i)
            | VertexRole::W(i)
            | VertexRole::V(i)
            | VertexRole::VPrime(i)
            | VertexRole::X(i)
            | VertexRole::Y(i)
            | VertexRole::Z(i) => Some(i),
            _ => None,
        }
    }
}

impl fmt::Display for VertexRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.tag())
    }
}

impl FromStr for VertexRole {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let split =
            s.find(|c: char| c.is_ascii_digit()).ok_or_else(|| Error::Precondition(format!("bad role {s:?}")))?;
        let (name, num) = s.split_at(split);
        let i: usize = num.parse().map_err(|_| Error::Precondition(format!("bad role {s:?}")))?;
        let make: fn(usize) -> VertexRole = match name {
            "u" => VertexRole::U,
            "ubar" => VertexRole::UBar,
            "w" => VertexRole::W,
            "v" => VertexRole::V,
            "vprime" => VertexRole::VPrime,
            "x" => VertexRole::X,
            "y" => VertexRole::Y,
            "z" => VertexRole::Z,
            "c" => VertexRole::Clause,
            "l" => VertexRole::L,
            _ => return Err(Error::Precondition(format!("bad role {s:?}"))),
        };
        Ok(make(i))
    }
}

impl Serialize for VertexRole {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for VertexRole {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionGraph {
    pub graph: Graph,
    /// Role of each vertex id.
    pub roles: Vec<VertexRole>,
    pub source: CnfFormula,
}

impl ReductionGraph {
    pub fn num_vars(&self) -> usize {
        self.source.num_vars()
    }

    pub fn num_clauses(&self) -> usize {
        self.source.num_clauses()
    }

    /// Vertex id of a role. Panics if the role is out of range for this instance.
    pub fn id(&self, role: VertexRole) -> usize {
        let n = self.num_vars();
        let m = self.num_clauses();
        let gadget = |i: usize, k: usize| {
            assert!((1..=n).contains(&i), "variable {i} out of range");
            8 * (i - 1) + k
        };
        match role {
            VertexRole::U(i) => gadget(i, 0),
            VertexRole::UBar(i) => gadget(i, 1),
            VertexRole::W(i) => gadget(i, 2),
            VertexRole::V(i) => gadget(i, 3),
            VertexRole::VPrime(i) => gadget(i, 4),
            VertexRole::X(i) => gadget(i, 5),
            VertexRole::Y(i) => gadget(i, 6),
            VertexRole::Z(i) => gadget(i, 7),
            VertexRole::Clause(j) => {
                assert!((1..=m).contains(&j), "clause {j} out of range");
                8 * n + j - 1
            }
            VertexRole::L(k) => {
                assert!((1..=9).contains(&k), "frame vertex l{k} out of range");
                8 * n + m + k - 1
            }
        }
    }

    pub fn role(&self, v: usize) -> VertexRole {
        self.roles[v]
    }

    /// The vertex standing for a literal: `u_i` or `ū_i`.
    pub fn literal_vertex(&self, lit: Literal) -> usize {
        self.id(if lit.positive { VertexRole::U(lit.var) } else { VertexRole::UBar(lit.var) })
    }

    pub fn edge(&self, a: VertexRole, b: VertexRole) -> Edge {
        Edge::new(self.id(a), self.id(b))
    }

    /// Role tags of both endpoints, e.g. `("l1", "l2")`.
    pub fn edge_tags(&self, e: Edge) -> (String, String) {
        let (a, b) = e.endpoints();
        (self.roles[a].tag(), self.roles[b].tag())
    }
}

/// The twelve edges of a variable gadget.
pub(crate) fn gadget_edges(i: usize) -> [(VertexRole, VertexRole); 12] {
    use VertexRole::*;
    [
        (U(i), Z(i)),
        (U(i), V(i)),
        (V(i), W(i)),
        (UBar(i), Z(i)),
        (UBar(i), VPrime(i)),
        (VPrime(i), W(i)),
        (W(i), Z(i)),
        (Y(i), V(i)),
        (Y(i), VPrime(i)),
        (Y(i), Z(i)),
        (X(i), V(i)),
        (X(i), VPrime(i)),
    ]
}

/// Builds the graph for `f`: `8n + m + 9` vertices and `12n + 5m + 10` edges.
pub fn build_reduction(f: &CnfFormula) -> Result<ReductionGraph> {
    let n = f.num_vars();
    let m = f.num_clauses();
    let order = 8 * n + m + 9;
    if order > MAX_VERTICES {
        return Err(Error::TooManyVertices(order));
    }
    let mut roles = Vec::with_capacity(order);
    for i in 1..=n {
        roles.extend(GADGET.iter().map(|make| make(i)));
    }
    roles.extend((1..=m).map(VertexRole::Clause));
    roles.extend((1..=9).map(VertexRole::L));
    let mut r = ReductionGraph { graph: Graph::empty(order)?, roles, source: f.clone() };

    let mut pairs: Vec<(usize, usize)> = Vec::with_capacity(12 * n + 5 * m + 10);
    for i in 1..=n {
        pairs.extend(gadget_edges(i).iter().map(|&(a, b)| (r.id(a), r.id(b))));
    }
    for (j, clause) in f.clauses().iter().enumerate() {
        let c = r.id(VertexRole::Clause(j + 1));
        pairs.extend(clause.iter().map(|&lit| (c, r.literal_vertex(lit))));
        pairs.push((c, r.id(VertexRole::L(2))));
        pairs.push((c, r.id(VertexRole::L(4))));
    }
    for k in 1..=8 {
        pairs.push((r.id(VertexRole::L(k)), r.id(VertexRole::L(k % 8 + 1))));
    }
    pairs.push((r.id(VertexRole::L(9)), r.id(VertexRole::L(1))));
    pairs.push((r.id(VertexRole::L(9)), r.id(VertexRole::L(5))));
    r.graph = Graph::from_edge_list(order, &pairs)?;
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reduction::cnf::parse_dimacs_cnf;

    fn small() -> ReductionGraph {
        build_reduction(&CnfFormula::new(2, &[vec![1, 2, -1]]).unwrap()).unwrap()
    }

    #[test]
    fn counts() {
        let r = small();
        assert_eq!(r.graph.order(), 26);
        assert_eq!(r.graph.size(), 39);
        assert!(r.graph.is_bipartite());
        let fig = build_reduction(&parse_dimacs_cnf("p cnf 4 3\n1 -2 4 0\n-1 -2 4 0\n2 3 -4 0").unwrap()).unwrap();
        assert_eq!((fig.graph.order(), fig.graph.size()), (44, 73));
        assert!(fig.graph.is_bipartite());
    }

    #[test]
    fn numbering_and_roles() {
        let r = small();
        assert_eq!(r.id(VertexRole::U(1)), 0);
        assert_eq!(r.id(VertexRole::Z(2)), 15);
        assert_eq!(r.id(VertexRole::Clause(1)), 16);
        assert_eq!(r.id(VertexRole::L(1)), 17);
        assert_eq!(r.id(VertexRole::L(9)), 25);
        for v in 0..r.graph.order() {
            assert_eq!(r.id(r.role(v)), v);
            assert_eq!(r.role(v).tag().parse::<VertexRole>().unwrap(), r.role(v));
        }
        assert_eq!(VertexRole::VPrime(3).tag(), "vprime3");
        assert_eq!(VertexRole::UBar(1).tag(), "ubar1");
    }

    #[test]
    fn clause_vertices_see_literals_and_frame() {
        let r = small();
        let c = r.id(VertexRole::Clause(1));
        let mut tags: Vec<String> = r.graph.neighbor_iter(c).map(|v| r.role(v).tag()).collect();
        tags.sort();
        assert_eq!(tags, ["l2", "l4", "u1", "u2", "ubar1"]);
    }

    #[test]
    fn too_large() {
        let clauses: Vec<Vec<i64>> = (0..8).map(|_| vec![1, 2, 3]).collect();
        let f = CnfFormula::new(7, &clauses).unwrap();
        assert_eq!(build_reduction(&f), Err(Error::TooManyVertices(73)));
    }
}

//! Named graph families and their generators.
//!
//! Vertex numbering per kind:
//! - path: `0..n` along the path; cycle: `0..n` around the cycle.
//! - wheel `W_n = K_1 ∨ C_{n-1}`: hub is 0, rim is the cycle `1..n`.
//! - star `K_{1,k}`: hub is 0, leaves `1..=k`.
//! - complete multipartite: parts in ascending size order, consecutive ids.
//! - join `G ∨ H`: the vertices of `G` first, then those of `H`.
//! - grid `r x c`: vertex `(i, j)` is `i * c + j`.
//! - tree: decoded from a Prüfer sequence over `0..n`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bits::{bit, low_mask};
use crate::error::{Error, Result};

use super::{Graph, MAX_VERTICES};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Empty(usize),
    /// `W_n`, `n` counting the hub.
    Wheel(usize),
    /// `K_{1,k}` with `k` leaves.
    Star(usize),
    /// Part sizes, each at least 1, ascending.
    CompleteMultipartite(Vec<usize>),
    Join(Box<FamilySpec>, Box<FamilySpec>),
    Grid(usize, usize),
    /// A labeled tree on `sequence.len() + 2` vertices.
    Tree(Vec<usize>),
}

fn bad(msg: impl Into<String>) -> Error {
    Error::Family(msg.into())
}

impl FamilySpec {
    pub fn join(a: FamilySpec, b: FamilySpec) -> Self {
        FamilySpec::Join(Box::new(a), Box::new(b))
    }

    /// Number of vertices of the generated graph.
    pub fn order(&self) -> usize {
        match self {
            FamilySpec::Path(n)
            | FamilySpec::Cycle(n)
            | FamilySpec::Complete(n)
            | FamilySpec::Empty(n)
            | FamilySpec::Wheel(n) => *n,
            FamilySpec::Star(k) => k + 1,
            FamilySpec::CompleteMultipartite(parts) => parts.iter().sum(),
            FamilySpec::Join(a, b) => a.order() + b.order(),
            FamilySpec::Grid(r, c) => r * c,
            FamilySpec::Tree(seq) => seq.len() + 2,
        }
    }

    /// Checks the parameter constraints of the kind.
    pub fn validate(&self) -> Result<()> {
        match self {
            FamilySpec::Path(n) | FamilySpec::Complete(n) | FamilySpec::Empty(n) if *n == 0 => {
                return Err(bad(format!("{self}: order must be at least 1")))
            }
            FamilySpec::Cycle(n) if *n < 3 => return Err(bad(format!("{self}: cycles need at least 3 vertices"))),
            FamilySpec::Wheel(n) if *n < 4 => return Err(bad(format!("{self}: wheels need at least 4 vertices"))),
            FamilySpec::Star(0) => return Err(bad("star needs at least one leaf")),
            FamilySpec::CompleteMultipartite(parts) => {
                if parts.is_empty() {
                    return Err(bad("complete multipartite graph needs at least one part"));
                }
                if parts.contains(&0) {
                    return Err(bad(format!("{self}: part sizes must be at least 1")));
                }
                if parts.windows(2).any(|w| w[0] > w[1]) {
                    return Err(bad(format!("{self}: part sizes must be ascending")));
                }
            }
            FamilySpec::Join(a, b) => {
                a.validate()?;
                b.validate()?;
            }
            FamilySpec::Grid(r, c) if *r == 0 || *c == 0 => return Err(bad(format!("{self}: empty grid"))),
            FamilySpec::Tree(seq) => {
                let n = seq.len() + 2;
                if let Some(&x) = seq.iter().find(|&&x| x >= n) {
                    return Err(bad(format!("Prüfer entry {x} out of range for {n} vertices")));
                }
            }
            _ => {}
        }
        if self.order() > MAX_VERTICES {
            return Err(Error::TooManyVertices(self.order()));
        }
        Ok(())
    }

    /// Builds the graph with the documented numbering.
    pub fn generate(&self) -> Result<Graph> {
        self.validate()?;
        let n = self.order();
        let mut adj = vec![0u64; n];
        let mut link = |u: usize, v: usize| {
            adj[u] |= bit(v);
            adj[v] |= bit(u);
        };
        let planar = match self {
            FamilySpec::Path(n) => {
                (1..*n).for_each(|i| link(i - 1, i));
                true
            }
            FamilySpec::Cycle(n) => {
                (0..*n).for_each(|i| link(i, (i + 1) % n));
                true
            }
            FamilySpec::Complete(n) => {
                (0..*n).for_each(|u| (u + 1..*n).for_each(|v| link(u, v)));
                false
            }
            FamilySpec::Empty(_) => false,
            FamilySpec::Wheel(n) => {
                let rim = n - 1;
                for i in 0..rim {
                    link(0, i + 1);
                    link(i + 1, (i + 1) % rim + 1);
                }
                true
            }
            FamilySpec::Star(k) => {
                (1..=*k).for_each(|i| link(0, i));
                true
            }
            FamilySpec::CompleteMultipartite(parts) => {
                let mut start = 0;
                let mut owner = vec![0usize; n];
                for (p, &size) in parts.iter().enumerate() {
                    owner[start..start + size].iter_mut().for_each(|o| *o = p);
                    start += size;
                }
                for u in 0..n {
                    for v in u + 1..n {
                        if owner[u] != owner[v] {
                            link(u, v);
                        }
                    }
                }
                false
            }
            FamilySpec::Join(a, b) => {
                let ga = a.generate()?;
                let gb = b.generate()?;
                let off = ga.order();
                for e in ga.edges() {
                    let (u, v) = e.endpoints();
                    link(u, v);
                }
                for e in gb.edges() {
                    let (u, v) = e.endpoints();
                    link(u + off, v + off);
                }
                for u in 0..off {
                    for v in off..n {
                        link(u, v);
                    }
                }
                false
            }
            FamilySpec::Grid(r, c) => {
                for i in 0..*r {
                    for j in 0..*c {
                        let v = i * c + j;
                        if j + 1 < *c {
                            link(v, v + 1);
                        }
                        if i + 1 < *r {
                            link(v, v + c);
                        }
                    }
                }
                true
            }
            FamilySpec::Tree(seq) => {
                for (u, v) in pruefer_edges(seq) {
                    link(u, v);
                }
                true
            }
        };
        debug_assert!(adj.iter().all(|a| a & !low_mask(n) == 0));
        let g = Graph::from_adjacency(adj);
        Ok(if planar { g.with_planar_tag() } else { g })
    }
}

/// Decodes a Prüfer sequence into the edges of a labeled tree on
/// `seq.len() + 2` vertices. Entries must be `< seq.len() + 2`.
pub fn pruefer_edges(seq: &[usize]) -> Vec<(usize, usize)> {
    let n = seq.len() + 2;
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a tree always has a leaf");
        edges.push((leaf, x));
        degree[leaf] = 0;
        degree[x] -= 1;
    }
    let mut last = (0..n).filter(|&v| degree[v] == 1);
    let (a, b) = (last.next().unwrap(), last.next().unwrap());
    edges.push((a, b));
    edges
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        match self {
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::Empty(n) => write!(f, "empty:{n}"),
            FamilySpec::Wheel(n) => write!(f, "wheel:{n}"),
            FamilySpec::Star(k) => write!(f, "star:{k}"),
            FamilySpec::CompleteMultipartite(p) => write!(f, "multipartite:{}", list(p)),
            FamilySpec::Join(a, b) => write!(f, "join({a},{b})"),
            FamilySpec::Grid(r, c) => write!(f, "grid:{r},{c}"),
            FamilySpec::Tree(s) => write!(f, "tree:{}", list(s)),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Parses `kind:params`, e.g. `path:9`, `multipartite:2,2,4`, `grid:3,4`,
    /// `tree:0,0,1`, or `join(empty:2,cycle:3)`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(inner) = s.strip_prefix("join(").and_then(|r| r.strip_suffix(')')) {
            let split = top_level_comma(inner).ok_or_else(|| bad(format!("join needs two operands: {s:?}")))?;
            let a: FamilySpec = inner[..split].parse()?;
            let b: FamilySpec = inner[split + 1..].parse()?;
            let spec = FamilySpec::join(a, b);
            spec.validate()?;
            return Ok(spec);
        }
        let (kind, params) = s.split_once(':').ok_or_else(|| bad(format!("expected KIND:PARAMS, got {s:?}")))?;
        let nums: Vec<usize> = if params.trim().is_empty() {
            Vec::new()
        } else {
            params
                .split([',', 'x'])
                .map(|p| p.trim().parse().map_err(|_| bad(format!("bad parameter {p:?} in {s:?}"))))
                .collect::<Result<_>>()?
        };
        let one = || match nums.as_slice() {
            [n] => Ok(*n),
            _ => Err(bad(format!("{kind} takes exactly one parameter"))),
        };
        let spec = match kind.trim() {
            "path" => FamilySpec::Path(one()?),
            "cycle" => FamilySpec::Cycle(one()?),
            "complete" => FamilySpec::Complete(one()?),
            "empty" => FamilySpec::Empty(one()?),
            "wheel" => FamilySpec::Wheel(one()?),
            "star" => FamilySpec::Star(one()?),
            "multipartite" | "complete_multipartite" => FamilySpec::CompleteMultipartite(nums),
            "grid" => match nums.as_slice() {
                [r, c] => FamilySpec::Grid(*r, *c),
                _ => return Err(bad("grid takes two parameters")),
            },
            "tree" | "tree_from_pruefer" => FamilySpec::Tree(nums),
            other => return Err(bad(format!("unknown family kind {other:?}"))),
        };
        spec.validate()?;
        Ok(spec)
    }
}

fn top_level_comma(s: &str) -> Option<usize> {
    let mut depth = 0i32;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 && s[..i].contains(':') && !s[i + 1..].trim_start().starts_with(char::is_numeric) => {
                return Some(i)
            }
            _ => {}
        }
    }
    None
}

impl Serialize for FamilySpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FamilySpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

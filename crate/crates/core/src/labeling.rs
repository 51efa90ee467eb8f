//! Vertex labelings into `{0, 1, 2, 3}` and the double Roman domination rules.
//!
//! A labeling `f` is a double Roman dominating function (DRDF) when every
//! vertex labeled 0 has a neighbor labeled 3 or at least two neighbors labeled
//! 2, and every vertex labeled 1 has a neighbor labeled 2 or 3.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bits::{bit, Bits};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Labeling(Vec<u8>);

/// The label classes of a labeling as vertex bitsets.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LabelMasks {
    pub zeros: u64,
    pub ones: u64,
    pub twos: u64,
    pub threes: u64,
}

impl Labeling {
    pub fn new(values: Vec<u8>) -> Result<Self> {
        if let Some((v, &x)) = values.iter().enumerate().find(|(_, &x)| x > 3) {
            return Err(Error::Labeling(format!("label {x} at vertex {v} is outside 0..=3")));
        }
        Ok(Labeling(values))
    }

    pub fn zeros(n: usize) -> Self {
        Labeling(vec![0; n])
    }

    /// Builds a `{0,2,3}` labeling from its 2- and 3-classes.
    pub fn from_masks(n: usize, twos: u64, threes: u64) -> Self {
        Labeling(
            (0..n)
                .map(|v| {
                    if threes & bit(v) != 0 {
                        3
                    } else if twos & bit(v) != 0 {
                        2
                    } else {
                        0
                    }
                })
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[u8] {
        &self.0
    }

    pub fn get(&self, v: usize) -> u8 {
        self.0[v]
    }

    pub fn set(&mut self, v: usize, label: u8) {
        assert!(label <= 3);
        self.0[v] = label;
    }

    /// `f(V)`, the sum of all labels.
    pub fn weight(&self) -> u32 {
        self.0.iter().map(|&x| x as u32).sum()
    }

    pub fn has_ones(&self) -> bool {
        self.0.contains(&1)
    }

    pub fn masks(&self) -> LabelMasks {
        let mut m = LabelMasks::default();
        for (v, &x) in self.0.iter().enumerate() {
            let slot = match x {
                0 => &mut m.zeros,
                1 => &mut m.ones,
                2 => &mut m.twos,
                _ => &mut m.threes,
            };
            *slot |= bit(v);
        }
        m
    }
}

/// Validity test on raw adjacency rows and label classes.
///
/// Vertices outside all four classes are ignored.
#[inline]
pub(crate) fn valid_on(adj: &[u64], m: &LabelMasks) -> bool {
    let mut near3 = 0u64;
    for v in Bits(m.threes) {
        near3 |= adj[v];
    }
    let (mut once, mut twice) = (0u64, 0u64);
    for v in Bits(m.twos) {
        twice |= once & adj[v];
        once |= adj[v];
    }
    m.zeros & !(near3 | twice) == 0 && m.ones & !(near3 | once) == 0
}

/// True iff `f` is a double Roman dominating function of `g`.
pub fn is_valid_drdf(g: &Graph, f: &Labeling) -> Result<bool> {
    check_len(g, f)?;
    Ok(valid_on(g.adjacency(), &f.masks()))
}

fn check_len(g: &Graph, f: &Labeling) -> Result<()> {
    if f.len() != g.order() {
        return Err(Error::LengthMismatch { expected: g.order(), got: f.len() });
    }
    Ok(())
}

/// `f(V)`.
pub fn weight(f: &Labeling) -> u32 {
    f.weight()
}

/// Rewrites a valid DRDF into one that uses only `{0, 2, 3}`, without
/// increasing the weight.
///
/// Vertices labeled 1 are handled in ascending order. One with a neighbor
/// labeled 3 drops to 0. Otherwise its least neighbor labeled 2 is raised to
/// 3, and the vertex together with every other 1-labeled neighbor of the
/// raised vertex drops to 0.
pub fn normalize_no_ones(g: &Graph, f: &Labeling) -> Result<Labeling> {
    check_len(g, f)?;
    if !valid_on(g.adjacency(), &f.masks()) {
        return Err(Error::InvalidLabeling);
    }
    let mut out = f.clone();
    for v in 0..g.order() {
        if out.get(v) != 1 {
            continue;
        }
        if g.neighbor_iter(v).any(|w| out.get(w) == 3) {
            out.set(v, 0);
            continue;
        }
        let raised = g
            .neighbor_iter(v)
            .find(|&w| out.get(w) == 2)
            .expect("a 1-vertex of a valid labeling has a neighbor labeled at least 2");
        out.set(raised, 3);
        out.set(v, 0);
        for w in g.neighbor_iter(raised) {
            if out.get(w) == 1 {
                out.set(w, 0);
            }
        }
    }
    debug_assert!(valid_on(g.adjacency(), &out.masks()));
    Ok(out)
}

impl fmt::Display for Labeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl FromStr for Labeling {
    type Err = Error;

    /// Parses the comma-separated form, e.g. `0,3,0`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Labeling(Vec::new()));
        }
        let values = s
            .split(',')
            .map(|t| t.trim().parse::<u8>().map_err(|_| Error::Labeling(format!("bad label {t:?}"))))
            .collect::<Result<Vec<u8>>>()?;
        Labeling::new(values)
    }
}

impl Serialize for Labeling {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Labeling {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

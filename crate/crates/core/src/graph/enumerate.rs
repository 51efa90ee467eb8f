//! Exhaustive generators: all labeled connected graphs of a given order
//! (by ascending edge mask) and all labeled trees (by Prüfer sequence).
//!
//! Both streams can be split into disjoint index ranges for parallel
//! consumption; concatenating the ranges in order reproduces the full stream.

use std::ops::Range;

use crate::bits::{bit, low_mask};
use crate::error::{Error, Result};

use super::family::pruefer_edges;
use super::Graph;

pub const MAX_ENUMERATION_ORDER: usize = 7;
pub const MAX_TREE_ORDER: usize = 9;

/// Number of vertex pairs on `n` vertices.
pub const fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Pairs in graph6 column order: `(0,1), (0,2), (1,2), (0,3), ...`.
fn pairs(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect()
}

/// Labeled connected graphs on `n` vertices, in ascending edge-mask order.
/// Bit `k` of the mask is the `k`-th pair in graph6 column order.
#[derive(Clone, Debug)]
pub struct LabeledConnected {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
    end: u64,
}

pub fn labeled_connected(n: usize) -> Result<LabeledConnected> {
    if n > MAX_ENUMERATION_ORDER {
        return Err(Error::SizeGuard { what: "labeled graph enumeration", size: n, limit: MAX_ENUMERATION_ORDER });
    }
    if n == 0 {
        return Err(Error::Precondition("enumeration needs at least one vertex".into()));
    }
    Ok(LabeledConnected { n, pairs: pairs(n), next: 0, end: 1u64 << pair_count(n) })
}

impl LabeledConnected {
    /// Total number of edge masks (connected or not).
    pub fn mask_count(&self) -> u64 {
        1u64 << self.pairs.len()
    }

    /// Restricts the stream to edge masks in `range`.
    pub fn with_masks(mut self, range: Range<u64>) -> Self {
        let total = self.mask_count();
        self.next = range.start.min(total);
        self.end = range.end.min(total);
        self
    }

    fn build(&self, mask: u64) -> Option<Graph> {
        let mut adj = vec![0u64; self.n];
        let mut m = mask;
        while m != 0 {
            let k = m.trailing_zeros() as usize;
            m &= m - 1;
            let (u, v) = self.pairs[k];
            adj[u] |= bit(v);
            adj[v] |= bit(u);
        }
        // connectivity by bitset flooding from vertex 0
        let all = low_mask(self.n);
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        (seen == all).then(|| Graph::from_adjacency(adj))
    }
}

impl Iterator for LabeledConnected {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.next < self.end {
            let mask = self.next;
            self.next += 1;
            if let Some(g) = self.build(mask) {
                return Some(g);
            }
        }
        None
    }
}

/// Labeled trees on `n` vertices, one per Prüfer sequence, in lexicographic
/// sequence order.
#[derive(Clone, Debug)]
pub struct LabeledTrees {
    n: usize,
    next: u64,
    end: u64,
}

pub fn labeled_trees(n: usize) -> Result<LabeledTrees> {
    if !(2..=MAX_TREE_ORDER).contains(&n) {
        return Err(Error::SizeGuard { what: "labeled tree enumeration (2..=9)", size: n, limit: MAX_TREE_ORDER });
    }
    Ok(LabeledTrees { n, next: 0, end: tree_count(n) })
}

/// Cayley's count `n^(n-2)`.
pub fn tree_count(n: usize) -> u64 {
    (n as u64).pow(n.saturating_sub(2) as u32)
}

impl LabeledTrees {
    pub fn with_indices(mut self, range: Range<u64>) -> Self {
        let total = tree_count(self.n);
        self.next = range.start.min(total);
        self.end = range.end.min(total);
        self
    }

    /// Prüfer sequence of index `i`, first entry most significant.
    pub fn sequence(&self, mut i: u64) -> Vec<usize> {
        let len = self.n - 2;
        let mut seq = vec![0usize; len];
        for slot in seq.iter_mut().rev() {
            *slot = (i % self.n as u64) as usize;
            i /= self.n as u64;
        }
        seq
    }
}

impl Iterator for LabeledTrees {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next >= self.end {
            return None;
        }
        let seq = self.sequence(self.next);
        self.next += 1;
        let mut adj = vec![0u64; self.n];
        for (u, v) in pruefer_edges(&seq) {
            adj[u] |= bit(v);
            adj[v] |= bit(u);
        }
        Some(Graph::from_adjacency(adj).with_planar_tag())
    }
}

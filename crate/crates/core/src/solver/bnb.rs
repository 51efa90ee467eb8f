//! Depth-first branch and bound over `{0, 2, 3}` labelings of one vertex set.
//!
//! A node fixes some vertices to 0, 2 or 3; the rest are undecided and read
//! as 0 at a leaf. A vertex is *secured* when it is labeled 2 or 3, or has a
//! neighbor labeled 3, or has two neighbors labeled 2. A node whose vertices
//! are all secured is a leaf and its labeling is a DRDF.
//!
//! Branching: the least unsecured vertex `v`. If `v` is undecided it is
//! labeled 3, 2, then 0; if it is already fixed to 0, its least undecided
//! neighbor is branched the same way.

use std::time::Instant;

use crate::bits::{bit, Bits};

pub(crate) struct Outcome {
    /// Best leaf found strictly below the initial bound, as `(weight, twos, threes)`.
    pub best: Option<(u32, u64, u64)>,
    pub nodes: u64,
    pub timed_out: bool,
}

pub(crate) struct Search<'a> {
    adj: &'a [u64],
    all: u64,
    /// Leaves must weigh strictly less than this.
    bound: u32,
    /// Stop as soon as a leaf of at most this weight is found.
    good_enough: u32,
    best: Option<(u32, u64, u64)>,
    nodes: u64,
    deadline: Option<Instant>,
    timed_out: bool,
}

impl<'a> Search<'a> {
    /// Searches for labelings of weight `< bound`; stops early at weight `<= good_enough`.
    pub fn run(adj: &'a [u64], bound: u32, good_enough: u32, deadline: Option<Instant>) -> Outcome {
        let n = adj.len();
        let all = crate::bits::low_mask(n);
        let mut s = Search { adj, all, bound, good_enough, best: None, nodes: 0, deadline, timed_out: false };
        if n > 0 {
            s.node(0, 0, 0, 0);
        } else if bound > 0 {
            s.best = Some((0, 0, 0));
        }
        Outcome { best: s.best, nodes: s.nodes, timed_out: s.timed_out }
    }

    #[inline]
    fn finished(&self) -> bool {
        self.timed_out || self.best.is_some_and(|(w, _, _)| w <= self.good_enough)
    }

    fn node(&mut self, zeros: u64, twos: u64, threes: u64, weight: u32) {
        self.nodes += 1;
        if self.nodes & 0x3fff == 0 {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    self.timed_out = true;
                    return;
                }
            }
        }
        let adj = self.adj;
        let undecided = self.all & !(zeros | twos | threes);

        let mut near3 = 0u64;
        for v in Bits(threes) {
            near3 |= adj[v];
        }
        let (mut once, mut twice) = (0u64, 0u64);
        for v in Bits(twos) {
            twice |= once & adj[v];
            once |= adj[v];
        }
        let secured = twos | threes | near3 | twice;
        let unsecured = self.all & !secured;

        if unsecured == 0 {
            if weight < self.bound {
                self.bound = weight;
                self.best = Some((weight, twos, threes));
            }
            return;
        }
        if weight + 2 >= self.bound {
            return;
        }
        // a 0-vertex still short of protection needs an undecided neighbor
        for v in Bits(unsecured & zeros) {
            if adj[v] & undecided == 0 {
                return;
            }
        }

        if weight + lower_bound(adj, undecided, unsecured, once) >= self.bound {
            return;
        }

        let v = unsecured.trailing_zeros() as usize;
        let target = if undecided & bit(v) != 0 { v } else { (adj[v] & undecided).trailing_zeros() as usize };
        let b = bit(target);
        self.node(zeros, twos, threes | b, weight + 3);
        if self.finished() {
            return;
        }
        self.node(zeros, twos | b, threes, weight + 2);
        if self.finished() {
            return;
        }
        self.node(zeros | b, twos, threes, weight);
    }
}

/// Admissible estimate of the weight still needed to secure `unsecured`.
///
/// Two bounds are combined. First, every unsecured vertex without any
/// neighbor labeled at least 2 needs a new label of at least 2 in its closed
/// neighborhood, and one new label covers at most `c` such vertices. Second,
/// count half-units of demand: 2 for a vertex with no neighbor labeled at
/// least 2, 1 for a vertex with exactly one neighbor labeled 2. A new 3 at `w`
/// meets at most `2 |N[w] ∩ D|` half-units for cost 3; a new 2 meets at most
/// `2 + |N(w) ∩ D|` for cost 2.
#[inline]
pub(crate) fn lower_bound(adj: &[u64], undecided: u64, unsecured: u64, once: u64) -> u32 {
    let full = unsecured & !once;
    let half = unsecured & once;
    let (mut c_full, mut c_need, mut d_need) = (0u32, 0u32, 0u32);
    for w in Bits(undecided) {
        let closed = adj[w] | bit(w);
        c_full = c_full.max((closed & full).count_ones());
        c_need = c_need.max((closed & unsecured).count_ones());
        d_need = d_need.max((adj[w] & unsecured).count_ones());
    }
    if c_need == 0 {
        return u32::MAX / 2;
    }
    let mut lb = 2;
    let nf = full.count_ones();
    if nf > 0 {
        if c_full == 0 {
            return u32::MAX / 2;
        }
        lb = lb.max(2 * nf.div_ceil(c_full));
    }
    let h = 2 * nf + half.count_ones();
    // cheapest cost per half-unit: min(3 / (2 c), 2 / (2 + d))
    let units =
        if 3 * (2 + d_need) <= 4 * c_need { (3 * h).div_ceil(2 * c_need) } else { (2 * h).div_ceil(2 + d_need) };
    lb.max(units)
}

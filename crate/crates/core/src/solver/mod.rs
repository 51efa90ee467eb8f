//! Exact double Roman domination numbers.
//!
//! [`gamma_exact`] runs branch and bound on each connected component and sums
//! the results. [`gamma_bruteforce`] enumerates every labeling and serves as
//! the independent oracle. [`drdf_within`] answers "is there a DRDF of weight
//! at most `k`?" and is the workhorse of the bondage search.

mod bnb;
mod bruteforce;
mod classify;

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::bits::{bit, Bits};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::labeling::{valid_on, Labeling};

pub use bruteforce::{gamma_bruteforce, Alphabet, MAX_FULL_ORDER, MAX_NO_ONES_ORDER};
pub use classify::classify_small_gamma;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Oracle,
    BranchAndBound,
    ClosedForm,
}

/// `γ_dR` of a graph together with a witness labeling.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaResult {
    pub value: u32,
    pub witness: Labeling,
    pub method: Method,
    pub nodes_explored: u64,
}

/// Resource limits for the exact search.
#[derive(Clone, Copy, Debug, Default)]
pub struct Limits {
    pub deadline: Option<Instant>,
}

impl Limits {
    pub fn none() -> Self {
        Limits::default()
    }

    pub fn with_budget(budget: Duration) -> Self {
        Limits { deadline: Some(Instant::now() + budget) }
    }
}

/// Options for [`gamma_exact_with`].
#[derive(Clone, Debug, Default)]
pub struct GammaOptions {
    pub limits: Limits,
    /// A known DRDF used as the starting incumbent instead of the all-2 labeling.
    pub incumbent: Option<Labeling>,
}

/// `γ_dR(G)` by branch and bound.
pub fn gamma_exact(g: &Graph) -> GammaResult {
    gamma_exact_with(g, &GammaOptions::default()).expect("no limits were set")
}

/// `γ_dR(G)` by branch and bound, per connected component.
///
/// Fails only when the deadline passes or the incumbent is not a DRDF of `g`.
pub fn gamma_exact_with(g: &Graph, opts: &GammaOptions) -> Result<GammaResult> {
    let n = g.order();
    let mut labels = vec![0u8; n];
    let mut total = 0;
    let mut nodes = 0;
    let incumbent = match &opts.incumbent {
        Some(f) => {
            if f.len() != n {
                return Err(Error::LengthMismatch { expected: n, got: f.len() });
            }
            if !valid_on(g.adjacency(), &f.masks()) {
                return Err(Error::InvalidLabeling);
            }
            Some(f)
        }
        None => None,
    };
    for comp in g.component_masks() {
        let (local, ids) = local_adjacency(g, comp);
        let size = ids.len() as u32;
        // start from the cheaper of all-2 and the restricted incumbent
        let mut start = (2 * size, crate::bits::low_mask(ids.len()), 0u64);
        if let Some(f) = incumbent {
            // 1s are promoted to 2 so the seed stays in the {0,2,3} search space
            let (mut t2, mut t3) = (0u64, 0u64);
            for (i, &v) in ids.iter().enumerate() {
                match f.get(v) {
                    3 => t3 |= bit(i),
                    1 | 2 => t2 |= bit(i),
                    _ => {}
                }
            }
            let promoted = 2 * t2.count_ones() + 3 * t3.count_ones();
            if promoted < start.0 {
                start = (promoted, t2, t3);
            }
        }
        let floor = if size >= 2 { 3 } else { 2 };
        let out = bnb::Search::run(&local, start.0, floor, opts.limits.deadline);
        nodes += out.nodes;
        if out.timed_out {
            return Err(Error::BudgetExhausted);
        }
        let (w, twos, threes) = out.best.unwrap_or(start);
        total += w;
        write_back(&mut labels, &ids, twos, threes);
    }
    Ok(GammaResult {
        value: total,
        witness: Labeling::new(labels)?,
        method: Method::BranchAndBound,
        nodes_explored: nodes,
    })
}

/// A DRDF of weight at most `k`, or `None` when `γ_dR(G) > k`.
///
/// The returned labeling is minimum on every component but the last, where
/// the search stops at the first labeling that fits the remaining budget.
pub fn drdf_within(g: &Graph, k: u32, limits: Limits) -> Result<Option<Labeling>> {
    let comps = g.component_masks();
    let floors: Vec<u32> = comps.iter().map(|c| if c.count_ones() >= 2 { 3 } else { 2 }).collect();
    let mut rest: u32 = floors.iter().sum();
    if rest > k {
        return Ok(None);
    }
    let mut labels = vec![0u8; g.order()];
    let mut used = 0u32;
    let last = comps.len().saturating_sub(1);
    for (i, &comp) in comps.iter().enumerate() {
        rest -= floors[i];
        let cap = k - used - rest;
        if cap < floors[i] {
            return Ok(None);
        }
        let size = comp.count_ones();
        let (w, twos, threes, ids);
        if size == 1 {
            ids = vec![comp.trailing_zeros() as usize];
            (w, twos, threes) = (2, 1, 0);
        } else {
            let (local, local_ids) = local_adjacency(g, comp);
            ids = local_ids;
            let all_two = 2 * size;
            let good_enough = if i == last { cap } else { floors[i] };
            let (bound, fallback) = if all_two <= cap {
                (all_two, Some((all_two, crate::bits::low_mask(ids.len()), 0)))
            } else {
                (cap + 1, None)
            };
            let out = bnb::Search::run(&local, bound, good_enough, limits.deadline);
            if out.timed_out {
                return Err(Error::BudgetExhausted);
            }
            match out.best.or(fallback) {
                Some(found) => (w, twos, threes) = found,
                None => return Ok(None),
            }
        }
        used += w;
        write_back(&mut labels, &ids, twos, threes);
    }
    Ok(Some(Labeling::new(labels)?))
}

/// True iff `γ_dR(G) > k`.
pub fn gamma_exceeds(g: &Graph, k: u32, limits: Limits) -> Result<bool> {
    drdf_within(g, k, limits).map(|f| f.is_none())
}

fn local_adjacency(g: &Graph, comp: u64) -> (Vec<u64>, Vec<usize>) {
    let ids: Vec<usize> = Bits(comp).collect();
    let mut local_of = [0usize; 64];
    for (i, &v) in ids.iter().enumerate() {
        local_of[v] = i;
    }
    let adj = ids.iter().map(|&v| Bits(g.neighbors(v)).fold(0u64, |acc, w| acc | bit(local_of[w]))).collect();
    (adj, ids)
}

fn write_back(labels: &mut [u8], ids: &[usize], twos: u64, threes: u64) {
    for (i, &v) in ids.iter().enumerate() {
        labels[v] = if threes & bit(i) != 0 {
            3
        } else if twos & bit(i) != 0 {
            2
        } else {
            0
        };
    }
}

//! Exact `b_dR` by searching edge subsets in order of size.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Edge, EdgeSet, Graph};
use crate::labeling::{valid_on, LabelMasks};
use crate::solver::{drdf_within, gamma_exact_with, GammaOptions, Limits};

use super::bounds::catalog_upper_bound;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BondageResult {
    pub value: usize,
    pub witness: EdgeSet,
    pub base_gamma: u32,
    pub gamma_after: u32,
    /// Subsets examined in search order up to and including the witness.
    pub subsets_tested: u64,
    /// The smallest applicable catalog bound, if any.
    pub upper_bound: Option<i64>,
    /// Set when the minimum exceeds `upper_bound`, which would refute that bound.
    pub cap_exceeded: bool,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct BondageOptions {
    pub limits: Limits,
    /// Give up with a size-guard error instead of testing larger subsets.
    pub max_subset_size: Option<usize>,
}

/// `b_dR(G)`: the fewest edges whose removal raises `γ_dR`.
pub fn bondage_exact(g: &Graph) -> Result<BondageResult> {
    bondage_exact_with(g, &BondageOptions::default())
}

/// Subset sizes with at most this many candidates are scanned sequentially.
const SEQUENTIAL_LIMIT: u128 = 256;
/// Subsets per parallel work item.
const CHUNK: u64 = 64;
/// Work items per parallel wave; a wave finishes before the next one starts.
const WAVE: usize = 64;
/// Labelings kept for the quick "still dominated" test.
const POOL_LIMIT: usize = 32;

/// Subsets are enumerated by size, then lexicographically by sorted edge
/// index. The first subset that raises `γ_dR` is the witness, whatever the
/// thread count.
pub fn bondage_exact_with(g: &Graph, opts: &BondageOptions) -> Result<BondageResult> {
    let edges = g.edges();
    let m = edges.len();
    if m == 0 {
        return Err(Error::BondageUndefined);
    }
    let base = gamma_exact_with(g, &GammaOptions { limits: opts.limits, incumbent: None })?;
    let upper_bound = catalog_upper_bound(g);
    let ctx = Ctx { g, edges: &edges, base: base.value, limits: opts.limits };

    let mut pool = vec![pool_entry(&base.witness.masks())];
    let mut tested: u64 = 0;
    for size in 1..=m {
        if opts.max_subset_size.is_some_and(|cap| size > cap) {
            return Err(Error::SizeGuard { what: "bondage subset size", size, limit: opts.max_subset_size.unwrap() });
        }
        let total = binomial(m, size);
        let found = if total <= SEQUENTIAL_LIMIT {
            ctx.scan(&mut first_combination(size), total as u64, &mut pool)?
        } else {
            ctx.scan_parallel(size, total, &mut pool)?
        };
        match found {
            Some((rank, subset)) => {
                tested += rank + 1;
                let witness: EdgeSet = subset.iter().map(|&i| edges[i]).collect();
                let after = g.without_edges(witness.iter().copied());
                let gamma_after =
                    gamma_exact_with(&after, &GammaOptions { limits: opts.limits, incumbent: None })?.value;
                return Ok(BondageResult {
                    value: size,
                    witness,
                    base_gamma: base.value,
                    gamma_after,
                    subsets_tested: tested,
                    upper_bound,
                    cap_exceeded: upper_bound.is_some_and(|ub| size as i64 > ub),
                });
            }
            None => tested = tested.saturating_add(u64::try_from(total).unwrap_or(u64::MAX)),
        }
    }
    unreachable!("removing every edge of a graph with edges raises γ_dR")
}

/// A `{0,2,3}` labeling stored as (twos, threes); everything else is 0.
type PoolEntry = (u64, u64);

/// A chunk's first hit, if any, and the labelings it discovered.
type ChunkResult = (Option<(u64, Vec<usize>)>, Vec<PoolEntry>);

fn pool_entry(m: &LabelMasks) -> PoolEntry {
    (m.twos | m.ones, m.threes)
}

struct Ctx<'a> {
    g: &'a Graph,
    edges: &'a [Edge],
    base: u32,
    limits: Limits,
}

impl Ctx<'_> {
    /// True iff removing the edges indexed by `subset` raises `γ_dR`. A
    /// labeling found along the way is added to `pool`.
    fn raises(&self, subset: &[usize], pool: &mut Vec<PoolEntry>) -> Result<bool> {
        let mut adj = self.g.adjacency().to_vec();
        for &i in subset {
            let (u, v) = self.edges[i].endpoints();
            adj[u] &= !(1 << v);
            adj[v] &= !(1 << u);
        }
        let all = self.g.vertex_mask();
        let still_fine = pool.iter().any(|&(twos, threes)| {
            valid_on(&adj, &LabelMasks { zeros: all & !(twos | threes), ones: 0, twos, threes })
        });
        if still_fine {
            return Ok(false);
        }
        let h = Graph::from_adjacency(adj);
        match drdf_within(&h, self.base, self.limits)? {
            Some(f) => {
                if pool.len() >= POOL_LIMIT {
                    pool.remove(1);
                }
                pool.push(pool_entry(&f.masks()));
                Ok(false)
            }
            None => Ok(true),
        }
    }

    /// Tests up to `count` subsets starting at `combo`, returning the offset
    /// of the first one that raises `γ_dR`.
    fn scan(&self, combo: &mut [usize], count: u64, pool: &mut Vec<PoolEntry>) -> Result<Option<(u64, Vec<usize>)>> {
        for offset in 0..count {
            if self.raises(combo, pool)? {
                return Ok(Some((offset, combo.to_vec())));
            }
            if offset + 1 < count && !next_combination(combo, self.edges.len()) {
                break;
            }
        }
        Ok(None)
    }

    fn scan_parallel(&self, size: usize, total: u128, pool: &mut Vec<PoolEntry>) -> Result<Option<(u64, Vec<usize>)>> {
        let m = self.edges.len();
        let total = u64::try_from(total).map_err(|_| Error::SizeGuard {
            what: "bondage subsets of one size",
            size: m,
            limit: 64,
        })?;
        let chunks = total.div_ceil(CHUNK);
        let mut start_chunk = 0u64;
        while start_chunk < chunks {
            let end_chunk = (start_chunk + WAVE as u64).min(chunks);
            let snapshot = pool.clone();
            let results: Vec<Result<ChunkResult>> = (start_chunk..end_chunk)
                .into_par_iter()
                .map(|c| {
                    let lo = c * CHUNK;
                    let count = CHUNK.min(total - lo);
                    let mut combo = unrank_combination(m, size, lo);
                    let mut local = snapshot.clone();
                    let hit = self.scan(&mut combo, count, &mut local)?;
                    let fresh = local.split_off(snapshot.len().min(local.len()));
                    Ok((hit.map(|(off, s)| (lo + off, s)), fresh))
                })
                .collect();
            for r in results {
                let (hit, fresh) = r?;
                if let Some(found) = hit {
                    return Ok(Some(found));
                }
                for e in fresh {
                    if pool.len() < POOL_LIMIT && !pool.contains(&e) {
                        pool.push(e);
                    }
                }
            }
            start_chunk = end_chunk;
        }
        Ok(None)
    }
}

/// `C(n, k)`, saturating at `u128::MAX`.
pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul((n - i) as u128) {
            Some(x) => x / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

fn first_combination(k: usize) -> Vec<usize> {
    (0..k).collect()
}

/// Advances to the next `k`-subset of `0..n` in lexicographic order.
fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    for i in (0..k).rev() {
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// The `rank`-th `k`-subset of `0..n` in lexicographic order.
fn unrank_combination(n: usize, k: usize, mut rank: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(k);
    let mut next = 0;
    for slot in 0..k {
        let remaining = k - slot - 1;
        loop {
            let with_next = binomial(n - next - 1, remaining);
            if (rank as u128) < with_next {
                break;
            }
            rank -= with_next as u64;
            next += 1;
        }
        out.push(next);
        next += 1;
    }
    out
}

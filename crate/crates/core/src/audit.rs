//! Exhaustive property checks over small graphs.
//!
//! Each check sweeps a stream of graphs (all labeled connected graphs of
//! some orders, or all labeled trees), split into index chunks that run in
//! parallel and are merged in stream order, so reports do not depend on the
//! thread count.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::Serialize;

use crate::bondage::{
    bondage_exact, bound_catalog, closed_form_bondage, closed_form_gamma, dominating_vertex_bondage, edge_deletion_set,
    path_deletion_set, two_path_deletion_set,
};
use crate::error::Result;
use crate::graph::enumerate::{labeled_connected, labeled_trees, tree_count};
use crate::graph::family::FamilySpec;
use crate::graph::{EdgeSet, Graph};
use crate::labeling::is_valid_drdf;
use crate::solver::{classify_small_gamma, gamma_bruteforce, gamma_exact, Alphabet};

/// Failing cases kept per check.
pub const MAX_EXAMPLES: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub graph6: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditCheck {
    pub name: String,
    pub scope: String,
    pub cases: u64,
    pub failures: u64,
    pub examples: Vec<Failure>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub census: BTreeMap<String, u64>,
}

impl AuditCheck {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    fn new(name: &str, scope: String) -> Self {
        AuditCheck { name: name.into(), scope, cases: 0, failures: 0, examples: Vec::new(), census: BTreeMap::new() }
    }

    fn absorb(&mut self, other: AuditCheck) {
        self.cases += other.cases;
        self.failures += other.failures;
        let room = MAX_EXAMPLES.saturating_sub(self.examples.len());
        self.examples.extend(other.examples.into_iter().take(room));
        for (k, v) in other.census {
            *self.census.entry(k).or_default() += v;
        }
    }

    fn record(&mut self, g: &Graph, v: Verdict) {
        self.cases += 1;
        if !v.problems.is_empty() {
            self.failures += 1;
            if self.examples.len() < MAX_EXAMPLES {
                self.examples
                    .push(Failure { graph6: g.to_graph6().unwrap_or_default(), detail: v.problems.join("; ") });
            }
        }
        if let Some(k) = v.census {
            *self.census.entry(k).or_default() += 1;
        }
    }
}

/// Result of checking one graph.
#[derive(Debug, Default)]
pub struct Verdict {
    pub problems: Vec<String>,
    pub census: Option<String>,
}

impl Verdict {
    fn from_problems(problems: Vec<String>) -> Self {
        Verdict { problems, census: None }
    }

    fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        if !ok {
            self.problems.push(detail());
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stream {
    Connected,
    Trees,
}

const CHUNK: u64 = 4096;

/// Runs `check` on every graph of the stream for each order in `orders`.
pub fn sweep<F>(name: &str, stream: Stream, orders: RangeInclusive<usize>, check: F) -> Result<AuditCheck>
where
    F: Fn(&Graph) -> Verdict + Sync,
{
    let what = match stream {
        Stream::Connected => "labeled connected graphs",
        Stream::Trees => "labeled trees",
    };
    let mut total = AuditCheck::new(name, format!("{what}, n = {}..={}", orders.start(), orders.end()));
    for n in orders {
        let count = match stream {
            Stream::Connected => labeled_connected(n)?.mask_count(),
            Stream::Trees => {
                labeled_trees(n)?;
                tree_count(n)
            }
        };
        let parts: Vec<Result<AuditCheck>> = (0..count.div_ceil(CHUNK))
            .into_par_iter()
            .map(|c| {
                let range = c * CHUNK..(c + 1) * CHUNK;
                let mut part = AuditCheck::new(name, String::new());
                match stream {
                    Stream::Connected => labeled_connected(n)?.with_masks(range).for_each(|g| {
                        let v = check(&g);
                        part.record(&g, v);
                    }),
                    Stream::Trees => labeled_trees(n)?.with_indices(range).for_each(|g| {
                        let v = check(&g);
                        part.record(&g, v);
                    }),
                }
                Ok(part)
            })
            .collect();
        for p in parts {
            total.absorb(p?);
        }
    }
    Ok(total)
}

/// The minimum over `{0,1,2,3}` labelings equals the minimum over `{0,2,3}`.
pub fn no_ones_equivalence(orders: RangeInclusive<usize>) -> Result<AuditCheck> {
    sweep("no_ones_equivalence", Stream::Connected, orders, |g| {
        let full = gamma_bruteforce(g, Alphabet::Full);
        let lean = gamma_bruteforce(g, Alphabet::NoOnes);
        let mut v = Verdict::default();
        match (full, lean) {
            (Ok(a), Ok(b)) => {
                v.check(a.value == b.value, || format!("{{0,1,2,3}} gives {}, {{0,2,3}} gives {}", a.value, b.value))
            }
            (a, b) => v.problems.push(format!("oracle error: {:?} {:?}", a.err(), b.err())),
        }
        v
    })
}

/// Branch and bound agrees with the oracle and returns a valid 1-free witness.
pub fn oracle_equivalence(orders: RangeInclusive<usize>) -> Result<AuditCheck> {
    sweep("oracle_equivalence", Stream::Connected, orders, |g| {
        let exact = gamma_exact(g);
        let mut v = Verdict::default();
        match gamma_bruteforce(g, Alphabet::NoOnes) {
            Ok(bf) => {
                v.check(exact.value == bf.value, || format!("branch and bound {} vs oracle {}", exact.value, bf.value))
            }
            Err(e) => v.problems.push(e.to_string()),
        }
        v.check(is_valid_drdf(g, &exact.witness).unwrap_or(false), || "witness is not a DRDF".into());
        v.check(!exact.witness.has_ones(), || "witness uses label 1".into());
        v.check(exact.witness.weight() == exact.value, || "witness weight differs from value".into());
        v
    })
}

/// The small-value classifier matches `γ_dR`, and `None` means `γ_dR >= 6`.
pub fn classifier_agreement(orders: RangeInclusive<usize>) -> Result<AuditCheck> {
    sweep("classifier_agreement", Stream::Connected, orders, |g| {
        let gamma = gamma_exact(g).value;
        let mut v = Verdict::default();
        match classify_small_gamma(g) {
            Ok(Some(c)) => v.check(c == gamma, || format!("classifier says {c}, gamma is {gamma}")),
            Ok(None) => v.check(gamma >= 6, || format!("classifier says none, gamma is {gamma}")),
            Err(e) => v.problems.push(e.to_string()),
        }
        v
    })
}

/// Deleting an edge never lowers `γ_dR`; `2 <= γ_dR <= 2n` with `2n` only
/// for edgeless graphs.
pub fn gamma_sanity(orders: RangeInclusive<usize>) -> Result<AuditCheck> {
    sweep("gamma_sanity", Stream::Connected, orders, |g| {
        let gamma = gamma_exact(g).value;
        let n = g.order() as u32;
        let mut v = Verdict::default();
        v.check(gamma >= 2 && gamma <= 2 * n, || format!("gamma {gamma} outside 2..={}", 2 * n));
        v.check((gamma == 2 * n) == (g.size() == 0), || {
            format!("gamma {gamma} vs 2n {} with {} edges", 2 * n, g.size())
        });
        for e in g.edges() {
            let after = gamma_exact(&g.without_edges([e])).value;
            v.check(after >= gamma, || format!("deleting {e} lowers gamma from {gamma} to {after}"));
        }
        v
    })
}

/// `b_dR` is at most every applicable catalog bound.
pub fn bondage_within_bounds(orders: RangeInclusive<usize>) -> Result<AuditCheck> {
    sweep("bondage_within_bounds", Stream::Connected, orders, |g| {
        let mut v = Verdict::default();
        match bondage_exact(g) {
            Ok(b) => {
                for entry in bound_catalog(g).applicable() {
                    let bound = entry.value.unwrap();
                    v.check(b.value as i64 <= bound, || format!("{}: bound {bound} < b_dR {}", entry.name, b.value));
                }
                v.census = Some(format!("b_dR={}", b.value));
            }
            Err(e) => v.problems.push(e.to_string()),
        }
        v
    })
}

fn raises(g: &Graph, base: u32, set: &EdgeSet) -> std::result::Result<u32, String> {
    let h = g.remove_edges(set).map_err(|e| e.to_string())?;
    let after = gamma_exact(&h).value;
    if after > base {
        Ok(after)
    } else {
        Err(format!("removing {set} leaves gamma at {after}"))
    }
}

/// Every deletion set (for every path `xyz`, edge `uv` and path `uwv`) and
/// every catalog certificate raises `γ_dR`, and has the advertised size.
pub fn certificates_raise_gamma(orders: RangeInclusive<usize>) -> Result<AuditCheck> {
    sweep("certificates_raise_gamma", Stream::Connected, orders, |g| {
        let base = gamma_exact(g).value;
        let mut v = Verdict::default();
        let n = g.order();
        for y in 0..n {
            for x in g.neighbor_iter(y) {
                for z in g.neighbor_iter(y).filter(|&z| z != x) {
                    let Ok(s) = path_deletion_set(g, x, y, z) else { continue };
                    let formula = crate::bondage::bounds::path_degree_sum(g, x, y, z);
                    v.check(s.len() as i64 == formula, || {
                        format!("path set {x}{y}{z} has size {} not {formula}", s.len())
                    });
                    if let Err(msg) = raises(g, base, &s) {
                        v.problems.push(format!("path set {x}-{y}-{z}: {msg}"));
                    }
                    // same walk, read as u w v
                    let Ok(s) = two_path_deletion_set(g, x, y, z) else { continue };
                    let expect = g.degree(x) + g.degree(z) - 1 - usize::from(g.has_edge(x, z));
                    v.check(s.len() == expect, || format!("two-path set {x}{y}{z} has size {} not {expect}", s.len()));
                    if let Err(msg) = raises(g, base, &s) {
                        v.problems.push(format!("two-path set {x}-{y}-{z}: {msg}"));
                    }
                }
            }
            for u in g.neighbor_iter(y) {
                let Ok(s) = edge_deletion_set(g, y, u) else { continue };
                let formula = crate::bondage::bounds::edge_degree_sum(g, y, u);
                v.check(s.len() as i64 == formula, || format!("edge set {y}{u} has size {} not {formula}", s.len()));
                if let Err(msg) = raises(g, base, &s) {
                    v.problems.push(format!("edge set {y}-{u}: {msg}"));
                }
            }
        }
        for entry in bound_catalog(g).applicable() {
            if let Some(cert) = &entry.certificate {
                let bound = entry.value.unwrap();
                v.check(cert.len() as i64 <= bound, || format!("{} certificate larger than {bound}", entry.name));
                if let Err(msg) = raises(g, base, cert) {
                    v.problems.push(format!("{} certificate: {msg}", entry.name));
                }
            }
        }
        v
    })
}

/// Trees of order at least 3 have `b_dR <= 2`; the census counts each value.
pub fn tree_bondage(orders: RangeInclusive<usize>) -> Result<AuditCheck> {
    sweep("tree_bondage", Stream::Trees, orders, |t| match bondage_exact(t) {
        Ok(b) => {
            let mut v = Verdict::default();
            v.check(b.value <= 2, || format!("tree has b_dR = {}", b.value));
            v.census = Some(format!("b_dR={}", b.value));
            v
        }
        Err(e) => Verdict::from_problems(vec![e.to_string()]),
    })
}

/// A graph with exactly `k >= 1` vertices of full degree has `b_dR = ⌈k/2⌉`.
pub fn dominating_vertex_rule(orders: RangeInclusive<usize>) -> Result<AuditCheck> {
    sweep("dominating_vertex_rule", Stream::Connected, orders, |g| {
        let mut v = Verdict::default();
        let Some(expect) = dominating_vertex_bondage(g) else {
            v.census = Some("no dominating vertex".into());
            return v;
        };
        v.census = Some("has dominating vertex".into());
        match bondage_exact(g) {
            Ok(b) => v.check(b.value == expect, || format!("b_dR {} vs ⌈k/2⌉ = {expect}", b.value)),
            Err(e) => v.problems.push(e.to_string()),
        }
        v
    })
}

/// Family members on which the formulas are compared with exact search.
pub fn standard_families() -> Vec<FamilySpec> {
    let mut out = Vec::new();
    out.extend((2..=12).map(FamilySpec::Path));
    out.extend((3..=12).map(FamilySpec::Cycle));
    out.extend((3..=7).map(FamilySpec::Complete));
    out.extend((5..=8).map(FamilySpec::Wheel));
    out.extend((1..=5).map(FamilySpec::Star));
    for parts in
        [vec![1, 2], vec![2, 3], vec![2, 2, 3], vec![1, 1, 3], vec![3, 3], vec![1, 4], vec![2, 2, 4], vec![3, 4]]
    {
        out.push(FamilySpec::CompleteMultipartite(parts));
    }
    for h in ["path:4", "cycle:5", "empty:3", "complete:3", "path:3"] {
        out.push(FamilySpec::join(FamilySpec::Empty(2), h.parse().expect("valid family")));
    }
    out
}

/// Formulas against exact values on `families`; entries without a formula
/// are skipped.
pub fn family_formulas(families: &[FamilySpec]) -> Result<AuditCheck> {
    let mut total = AuditCheck::new("family_formulas", format!("{} family members", families.len()));
    let rows: Vec<Result<(Graph, Verdict)>> = families
        .par_iter()
        .map(|spec| {
            let g = spec.generate()?;
            let mut v = Verdict::default();
            if let Some(expect) = closed_form_gamma(spec) {
                let got = gamma_exact(&g).value;
                v.check(got == expect, || format!("{spec}: gamma {got}, formula {expect}"));
            }
            if let Some(expect) = closed_form_bondage(spec) {
                match bondage_exact(&g) {
                    Ok(b) => v.check(b.value == expect, || format!("{spec}: b_dR {}, formula {expect}", b.value)),
                    Err(e) => v.problems.push(format!("{spec}: {e}")),
                }
            }
            Ok((g, v))
        })
        .collect();
    for r in rows {
        let (g, v) = r?;
        total.record(&g, v);
    }
    Ok(total)
}

/// What [`run_audit`] covers.
#[derive(Clone, Debug)]
pub struct AuditScope {
    /// Largest order for the connected-graph sweeps.
    pub max_n: usize,
    /// Largest order for the certificate sweep, which is the most expensive.
    pub max_certificate_n: usize,
    /// Run the connected-graph sweeps.
    pub enumerate: bool,
    /// Largest tree order, if the tree sweep should run.
    pub trees: Option<usize>,
    pub families: bool,
}

impl Default for AuditScope {
    fn default() -> Self {
        AuditScope { max_n: 6, max_certificate_n: 5, enumerate: true, trees: Some(9), families: true }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub checks: Vec<AuditCheck>,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(AuditCheck::passed)
    }
}

pub fn run_audit(scope: &AuditScope) -> Result<AuditReport> {
    let mut checks = Vec::new();
    if scope.families {
        checks.push(family_formulas(&standard_families())?);
    }
    if scope.enumerate && scope.max_n >= 1 {
        let n = scope.max_n;
        checks.push(no_ones_equivalence(1..=n)?);
        checks.push(oracle_equivalence(1..=n)?);
        checks.push(gamma_sanity(1..=n)?);
        if n >= 3 {
            checks.push(classifier_agreement(3..=n)?);
            checks.push(bondage_within_bounds(3..=n)?);
            checks.push(dominating_vertex_rule(3..=n)?);
            checks.push(certificates_raise_gamma(3..=n.min(scope.max_certificate_n).max(3))?);
        }
    }
    if let Some(t) = scope.trees {
        if t >= 3 {
            checks.push(tree_bondage(3..=t)?);
        }
    }
    Ok(AuditReport { checks })
}

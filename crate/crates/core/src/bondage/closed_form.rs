//! Known values of `γ_dR` and `b_dR` on standard families.

use crate::graph::family::FamilySpec;
use crate::graph::Graph;
use crate::solver::classify_small_gamma;

/// `γ_dR` of a family member from its formula, or `None` when the family has
/// no formula and the graph is not recognized by the small-value classifier.
pub fn closed_form_gamma(spec: &FamilySpec) -> Option<u32> {
    spec.validate().ok()?;
    let v = match *spec {
        FamilySpec::Path(n) => path_gamma(n),
        FamilySpec::Cycle(n) => {
            if matches!(n % 6, 1 | 5) {
                n + 1
            } else {
                n
            }
        }
        FamilySpec::Complete(1) => 2,
        FamilySpec::Complete(_) | FamilySpec::Wheel(_) | FamilySpec::Star(_) => 3,
        FamilySpec::Empty(n) => 2 * n,
        FamilySpec::CompleteMultipartite(ref parts) => match (parts.len(), parts[0]) {
            (1, n1) => 2 * n1,
            (_, 1) => 3,
            (_, 2) => 4,
            _ => 6,
        },
        _ => return classified(&spec.generate().ok()?),
    };
    Some(v as u32)
}

fn path_gamma(n: usize) -> usize {
    if n.is_multiple_of(3) {
        n
    } else {
        n + 1
    }
}

fn classified(g: &Graph) -> Option<u32> {
    classify_small_gamma(g).ok().flatten()
}

/// `b_dR` of a family member from its formula, or `None` when no formula
/// applies (including edgeless graphs, where it is undefined).
pub fn closed_form_bondage(spec: &FamilySpec) -> Option<usize> {
    spec.validate().ok()?;
    match *spec {
        FamilySpec::Path(n) => (n >= 2).then_some(1),
        FamilySpec::Cycle(n) => Some(if matches!(n % 6, 2 | 4) { 1 } else { 2 }),
        FamilySpec::Complete(1) | FamilySpec::Empty(_) => None,
        FamilySpec::Complete(2) => Some(1),
        FamilySpec::Complete(n) => Some(n.div_ceil(2)),
        // W_4 is K_4
        FamilySpec::Wheel(4) => Some(2),
        FamilySpec::Wheel(_) => Some(1),
        FamilySpec::Star(_) => Some(1),
        FamilySpec::CompleteMultipartite(ref parts) => multipartite_bondage(parts),
        _ => dominating_vertex_bondage(&spec.generate().ok()?),
    }
}

/// `⌈k/2⌉` for a graph of order at least 3 with exactly `k >= 1` vertices
/// adjacent to all others.
pub fn dominating_vertex_bondage(g: &Graph) -> Option<usize> {
    let k = g.dominating_vertices().count_ones() as usize;
    (g.order() >= 3 && k >= 1).then(|| k.div_ceil(2))
}

/// `b_dR(K_{n_1, ..., n_r})` for ascending part sizes.
///
/// With `l` leading parts of size 1, or `l` leading parts of size 2 (every
/// later part then has size at least 3), the value is `⌈l/2⌉`. With all parts
/// of size 3 it is `3(r - 1) + 1`; otherwise `n_1 + ... + n_{r-1}`.
pub fn multipartite_bondage(parts: &[usize]) -> Option<usize> {
    let r = parts.len();
    if r < 2 {
        return None;
    }
    let lead = |size: usize| parts.iter().take_while(|&&p| p == size).count();
    match parts[0] {
        1 => Some(lead(1).div_ceil(2)),
        2 => Some(lead(2).div_ceil(2)),
        _ if parts.iter().all(|&p| p == 3) => Some(3 * (r - 1) + 1),
        _ => Some(parts[..r - 1].iter().sum()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(s: &str) -> FamilySpec {
        s.parse().unwrap()
    }

    #[test]
    fn gamma_formulas() {
        assert_eq!(closed_form_gamma(&spec("path:7")), Some(8));
        assert_eq!(closed_form_gamma(&spec("path:6")), Some(6));
        assert_eq!(closed_form_gamma(&spec("cycle:12")), Some(12));
        assert_eq!(closed_form_gamma(&spec("cycle:7")), Some(8));
        assert_eq!(closed_form_gamma(&spec("multipartite:2,5")), Some(4));
        assert_eq!(closed_form_gamma(&spec("multipartite:3,3")), Some(6));
        assert_eq!(closed_form_gamma(&spec("complete:1")), Some(2));
        assert_eq!(closed_form_gamma(&spec("empty:4")), Some(8));
        assert_eq!(closed_form_gamma(&spec("join(empty:2,path:3)")), Some(3));
        assert_eq!(closed_form_gamma(&spec("join(empty:2,empty:3)")), Some(4));
        assert_eq!(closed_form_gamma(&spec("grid:3,3")), None);
    }

    #[test]
    fn bondage_formulas() {
        assert_eq!(closed_form_bondage(&spec("cycle:9")), Some(2));
        assert_eq!(closed_form_bondage(&spec("cycle:10")), Some(1));
        assert_eq!(closed_form_bondage(&spec("complete:7")), Some(4));
        assert_eq!(closed_form_bondage(&spec("multipartite:2,2,4")), Some(1));
        assert_eq!(closed_form_bondage(&spec("multipartite:1,1,3")), Some(1));
        assert_eq!(closed_form_bondage(&spec("multipartite:3,3")), Some(4));
        assert_eq!(closed_form_bondage(&spec("multipartite:3,3,3")), Some(7));
        assert_eq!(closed_form_bondage(&spec("multipartite:3,4")), Some(3));
        assert_eq!(closed_form_bondage(&spec("wheel:4")), Some(2));
        assert_eq!(closed_form_bondage(&spec("wheel:6")), Some(1));
        assert_eq!(closed_form_bondage(&spec("path:1")), None);
        assert_eq!(closed_form_bondage(&spec("empty:3")), None);
        assert_eq!(closed_form_bondage(&spec("join(complete:3,cycle:5)")), Some(2));
        assert_eq!(closed_form_bondage(&spec("grid:2,3")), None);
    }
}

//! Exhaustive enumeration of labelings, the reference oracle for `γ_dR`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::labeling::{valid_on, LabelMasks, Labeling};

use super::{GammaResult, Method};

/// Largest order accepted when enumerating `{0,2,3}^n`.
pub const MAX_NO_ONES_ORDER: usize = 13;
/// Largest order accepted when enumerating `{0,1,2,3}^n`.
pub const MAX_FULL_ORDER: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Alphabet {
    /// Labels `{0, 2, 3}`. Always reaches `γ_dR`.
    NoOnes,
    /// Labels `{0, 1, 2, 3}`.
    Full,
}

impl Alphabet {
    fn symbols(self) -> &'static [u8] {
        match self {
            Alphabet::NoOnes => &[0, 2, 3],
            Alphabet::Full => &[0, 1, 2, 3],
        }
    }

    fn limit(self) -> usize {
        match self {
            Alphabet::NoOnes => MAX_NO_ONES_ORDER,
            Alphabet::Full => MAX_FULL_ORDER,
        }
    }
}

/// `γ_dR(G)` by trying every labeling over `alphabet`.
///
/// The witness is the lexicographically least labeling of minimum weight,
/// comparing label vectors by vertex 0 first with the alphabet's order.
pub fn gamma_bruteforce(g: &Graph, alphabet: Alphabet) -> Result<GammaResult> {
    let n = g.order();
    if n > alphabet.limit() {
        return Err(Error::SizeGuard { what: "brute-force oracle", size: n, limit: alphabet.limit() });
    }
    let symbols = alphabet.symbols();
    let adj = g.adjacency();
    // odometer with vertex n-1 as the fastest digit, so visiting order is lexicographic
    let mut digits = vec![0usize; n];
    let mut best: Option<(u32, Vec<u8>)> = None;
    let mut visited = 0u64;
    loop {
        visited += 1;
        let mut m = LabelMasks::default();
        let mut w = 0u32;
        for (v, &d) in digits.iter().enumerate() {
            let x = symbols[d];
            w += x as u32;
            let slot = match x {
                0 => &mut m.zeros,
                1 => &mut m.ones,
                2 => &mut m.twos,
                _ => &mut m.threes,
            };
            *slot |= 1u64 << v;
        }
        if best.as_ref().is_none_or(|(bw, _)| w < *bw) && valid_on(adj, &m) {
            best = Some((w, digits.iter().map(|&d| symbols[d]).collect()));
        }
        let mut i = n;
        loop {
            if i == 0 {
                let (value, labels) = best.unwrap_or((0, Vec::new()));
                return Ok(GammaResult {
                    value,
                    witness: Labeling::new(labels)?,
                    method: Method::Oracle,
                    nodes_explored: visited,
                });
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < symbols.len() {
                break;
            }
            digits[i] = 0;
        }
    }
}

//! 3-CNF formulas: DIMACS parsing and brute-force satisfiability.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A variable (numbered from 1) or its negation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Literal {
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn from_dimacs(x: i64) -> Option<Self> {
        (x != 0).then(|| Literal { var: x.unsigned_abs() as usize, positive: x > 0 })
    }

    pub fn to_dimacs(self) -> i64 {
        if self.positive {
            self.var as i64
        } else {
            -(self.var as i64)
        }
    }

    /// True when the literal holds under `assignment` (index 0 is variable 1).
    pub fn holds(self, assignment: &[bool]) -> bool {
        assignment[self.var - 1] == self.positive
    }

    fn sort_key(self) -> (usize, bool) {
        (self.var, !self.positive)
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_dimacs())
    }
}

impl Serialize for Literal {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_i64(self.to_dimacs())
    }
}

impl<'de> Deserialize<'de> for Literal {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let x = i64::deserialize(d)?;
        Literal::from_dimacs(x).ok_or_else(|| serde::de::Error::custom("literal 0"))
    }
}

pub type Clause = [Literal; 3];

/// A formula whose clauses each hold exactly three distinct literals, stored
/// sorted by variable with the positive literal first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CnfFormula {
    num_vars: usize,
    clauses: Vec<Clause>,
}

impl CnfFormula {
    /// Builds a formula from DIMACS-style signed literals.
    pub fn new(num_vars: usize, clauses: &[Vec<i64>]) -> Result<Self> {
        let clauses = clauses
            .iter()
            .enumerate()
            .map(|(j, c)| {
                normalize_clause(num_vars, c)
                    .map_err(|msg| Error::Dimacs { line: 0, message: format!("clause {}: {msg}", j + 1) })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CnfFormula { num_vars, clauses })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    /// Index of the first clause falsified by `assignment`, if any.
    pub fn first_unsatisfied(&self, assignment: &[bool]) -> Option<usize> {
        self.clauses.iter().position(|c| !c.iter().any(|l| l.holds(assignment)))
    }

    pub fn satisfied_by(&self, assignment: &[bool]) -> bool {
        assignment.len() == self.num_vars && self.first_unsatisfied(assignment).is_none()
    }

    /// DIMACS text for the formula.
    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.num_vars, self.clauses.len());
        for c in &self.clauses {
            out.push_str(&format!("{} {} {} 0\n", c[0], c[1], c[2]));
        }
        out
    }
}

fn normalize_clause(num_vars: usize, lits: &[i64]) -> std::result::Result<Clause, String> {
    let mut v: Vec<Literal> = Vec::with_capacity(3);
    for &x in lits {
        let lit = Literal::from_dimacs(x).ok_or("literal 0 inside a clause")?;
        if lit.var > num_vars {
            return Err(format!("variable {} exceeds the declared {num_vars}", lit.var));
        }
        if !v.contains(&lit) {
            v.push(lit);
        } else {
            return Err(format!("literal {lit} repeated; clauses need 3 distinct literals"));
        }
    }
    if v.len() != 3 {
        return Err(format!("has {} literals; exactly 3 are required", v.len()));
    }
    v.sort_by_key(|l| l.sort_key());
    Ok([v[0], v[1], v[2]])
}

/// Parses DIMACS CNF. Lines starting with `c` are comments, a `%` line ends
/// the input, and clauses may span lines.
pub fn parse_dimacs_cnf(text: &str) -> Result<CnfFormula> {
    let err = |line: usize, message: String| Error::Dimacs { line, message };
    let mut header: Option<(usize, usize)> = None;
    let mut clauses: Vec<Clause> = Vec::new();
    let mut pending: Vec<i64> = Vec::new();
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        last_line = line_no;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if line.starts_with('%') {
            break;
        }
        if line.starts_with('p') {
            if header.is_some() {
                return Err(err(line_no, "second problem line".into()));
            }
            let parts: Vec<&str> = line.split_whitespace().collect();
            let parsed = match parts.as_slice() {
                ["p", "cnf", n, m] => n.parse::<usize>().ok().zip(m.parse::<usize>().ok()),
                _ => None,
            };
            header = Some(parsed.ok_or_else(|| err(line_no, format!("bad problem line {line:?}")))?);
            continue;
        }
        let (num_vars, _) = header.ok_or_else(|| err(line_no, "clause before the problem line".into()))?;
        for tok in line.split_whitespace() {
            let x: i64 = tok.parse().map_err(|_| err(line_no, format!("bad literal {tok:?}")))?;
            if x == 0 {
                let c = normalize_clause(num_vars, &pending)
                    .map_err(|msg| err(line_no, format!("clause {}: {msg}", clauses.len() + 1)))?;
                clauses.push(c);
                pending.clear();
            } else {
                pending.push(x);
            }
        }
    }
    let (num_vars, num_clauses) = header.ok_or_else(|| err(last_line, "missing problem line".into()))?;
    if !pending.is_empty() {
        return Err(err(last_line, format!("clause {} is not terminated by 0", clauses.len() + 1)));
    }
    if clauses.len() != num_clauses {
        return Err(err(last_line, format!("problem line declares {num_clauses} clauses, found {}", clauses.len())));
    }
    Ok(CnfFormula { num_vars, clauses })
}

pub const MAX_SAT_VARS: usize = 20;

/// The lexicographically least satisfying assignment (false before true,
/// variable 1 most significant), or `None` when unsatisfiable.
pub fn sat_bruteforce(f: &CnfFormula) -> Result<Option<Vec<bool>>> {
    let n = f.num_vars();
    if n > MAX_SAT_VARS {
        return Err(Error::SizeGuard { what: "brute-force SAT variables", size: n, limit: MAX_SAT_VARS });
    }
    let mut assignment = vec![false; n];
    for code in 0u64..1 << n {
        for (i, slot) in assignment.iter_mut().enumerate() {
            *slot = code >> (n - 1 - i) & 1 == 1;
        }
        if f.first_unsatisfied(&assignment).is_none() {
            return Ok(Some(assignment));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) const FOUR_VARIABLE: &str = "p cnf 4 3\n1 -2 4 0\n-1 -2 4 0\n2 3 -4 0\n";

    #[test]
    fn parses_the_example_formula() {
        let f = parse_dimacs_cnf(FOUR_VARIABLE).unwrap();
        assert_eq!(f.num_vars(), 4);
        assert_eq!(f.num_clauses(), 3);
        assert_eq!(f.clauses()[2].map(|l| l.to_dimacs()), [2, 3, -4]);
        assert_eq!(parse_dimacs_cnf(&f.to_dimacs()).unwrap(), f);
    }

    #[test]
    fn set_semantics_and_ordering() {
        let f = parse_dimacs_cnf("p cnf 2 1\n1 -2 2 0").unwrap();
        assert_eq!(f.clauses()[0].map(|l| l.to_dimacs()), [1, 2, -2]);
        let g = parse_dimacs_cnf("c comment\np cnf 3 1\n-3 2\n1 0\n%\n0\n").unwrap();
        assert_eq!(g.clauses()[0].map(|l| l.to_dimacs()), [1, 2, -3]);
    }

    #[test]
    fn rejections() {
        let e = parse_dimacs_cnf("p cnf 2 1\n1 2 0").unwrap_err();
        assert!(e.to_string().contains("clause 1"), "{e}");
        assert!(parse_dimacs_cnf("p cnf 2 1\n1 1 2 0").is_err());
        assert!(parse_dimacs_cnf("p cnf 2 1\n1 2 3 0").is_err());
        assert!(parse_dimacs_cnf("1 2 3 0").is_err());
        assert!(parse_dimacs_cnf("p cnf 3 2\n1 2 3 0").is_err());
        assert!(parse_dimacs_cnf("p cnf 3 1\n1 2 3").is_err());
        assert!(parse_dimacs_cnf("p cnf 3 1\n1 x 3 0").is_err());
    }

    #[test]
    fn brute_force_sat() {
        let taut = CnfFormula::new(2, &[vec![1, -1, 2]]).unwrap();
        assert_eq!(sat_bruteforce(&taut).unwrap(), Some(vec![false, false]));
        let all: Vec<Vec<i64>> =
            (0..8).map(|s: i64| (1..=3).map(|v| if s >> (v - 1) & 1 == 1 { -v } else { v }).collect()).collect();
        let unsat = CnfFormula::new(3, &all).unwrap();
        assert_eq!(sat_bruteforce(&unsat).unwrap(), None);
        let fig = parse_dimacs_cnf(FOUR_VARIABLE).unwrap();
        let t = sat_bruteforce(&fig).unwrap().unwrap();
        assert!(fig.satisfied_by(&t));
        assert_eq!(t, vec![false, false, false, false]);
    }
}

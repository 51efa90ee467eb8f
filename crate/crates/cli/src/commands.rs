use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use drdom::audit::{run_audit, AuditScope};
use drdom::bondage::{bondage_exact_with, bound_catalog, closed_form_bondage, closed_form_gamma, BondageOptions};
use drdom::reduction::{build_reduction, parse_dimacs_cnf, verify_reduction, Status, VerifyOptions};
use drdom::solver::{gamma_bruteforce, gamma_exact_with, Alphabet, GammaOptions, Limits};
use serde::Serialize;
use serde_json::json;

use crate::input::{read_file, GraphInput};
use crate::report::{table, to_value, write_file, RunReport};
use crate::{Command, Failure};

pub struct Context {
    pub budget: Option<Duration>,
    pub json: Option<PathBuf>,
}

impl Context {
    fn limits(&self) -> Limits {
        self.budget.map(Limits::with_budget).unwrap_or_default()
    }

    fn emit(&self, report: &RunReport) -> Result<(), Failure> {
        report.emit(self.json.as_deref())
    }
}

pub fn dispatch(ctx: &Context, command: Command) -> Result<(), Failure> {
    let started = Instant::now();
    match command {
        Command::Gamma { input, oracle, with_ones } => gamma(ctx, &input, oracle, with_ones, started),
        Command::Bondage { input, max_subset_size, cert } => bondage(ctx, &input, max_subset_size, cert, started),
        Command::Bounds { input } => bounds(ctx, &input, started),
        Command::Reduce { cnf, emit_g6, roles, verify } => reduce(ctx, &cnf, emit_g6, roles, verify, started),
        Command::Verify { max_n, max_certificate_n, families, trees, enumerate } => {
            let everything = !families && trees.is_none() && !enumerate;
            let scope = AuditScope {
                max_n,
                max_certificate_n,
                enumerate: enumerate || everything,
                trees: if everything { AuditScope::default().trees } else { trees },
                families: families || everything,
            };
            verify(ctx, &scope, started)
        }
    }
}

fn gamma(ctx: &Context, input: &GraphInput, oracle: bool, with_ones: bool, started: Instant) -> Result<(), Failure> {
    let loaded = input.load()?;
    let g = &loaded.graph;
    let res = if oracle {
        gamma_bruteforce(g, if with_ones { Alphabet::Full } else { Alphabet::NoOnes })?
    } else {
        gamma_exact_with(g, &GammaOptions { limits: ctx.limits(), incumbent: None })?
    };
    let formula = loaded.family.as_ref().and_then(closed_form_gamma);
    table(&[
        ("gamma_dR", res.value.to_string()),
        ("witness", res.witness.to_string()),
        ("method", to_value(&res.method).as_str().unwrap_or_default().to_string()),
        ("nodes", res.nodes_explored.to_string()),
    ]);
    let results = json!({
        "value": res.value,
        "witness": res.witness,
        "method": res.method,
        "nodes_explored": res.nodes_explored,
        "closed_form": formula,
    });
    ctx.emit(&RunReport::new("gamma", Some(loaded.descriptor), results, started))?;
    match formula {
        Some(v) if v != res.value => {
            eprintln!("closed form gives {v}, search gives {}", res.value);
            Err(Failure::Check)
        }
        _ => Ok(()),
    }
}

#[derive(Serialize)]
struct BondageCertificate<'a> {
    graph: &'a str,
    removed_edges: Vec<[usize; 2]>,
    gamma_before: u32,
    gamma_after: u32,
}

fn bondage(
    ctx: &Context,
    input: &GraphInput,
    max_subset_size: usize,
    cert: Option<PathBuf>,
    started: Instant,
) -> Result<(), Failure> {
    let loaded = input.load()?;
    let g = &loaded.graph;
    let opts = BondageOptions { limits: ctx.limits(), max_subset_size: Some(max_subset_size) };
    let res = bondage_exact_with(g, &opts)?;
    let catalog = bound_catalog(g);
    let formula = loaded.family.as_ref().and_then(closed_form_bondage);
    let best = catalog.best();
    table(&[
        ("b_dR", res.value.to_string()),
        ("witness", res.witness.to_string()),
        ("gamma_dR", format!("{} -> {}", res.base_gamma, res.gamma_after)),
        ("subsets tested", res.subsets_tested.to_string()),
        ("best bound", best.map_or("none".into(), |(name, v)| format!("{v} ({name})"))),
    ]);
    if let Some(path) = &cert {
        let c = BondageCertificate {
            graph: &loaded.descriptor.graph6,
            removed_edges: res.witness.to_pairs(),
            gamma_before: res.base_gamma,
            gamma_after: res.gamma_after,
        };
        write_file(path, &(serde_json::to_string_pretty(&c).expect("certificate serializes") + "\n"))?;
    }
    let results = json!({
        "value": res.value,
        "witness": res.witness,
        "base_gamma": res.base_gamma,
        "gamma_after": res.gamma_after,
        "subsets_tested": res.subsets_tested,
        "upper_bound": res.upper_bound,
        "cap_exceeded": res.cap_exceeded,
        "closed_form": formula,
        "bounds": catalog.applicable().collect::<Vec<_>>(),
    });
    ctx.emit(&RunReport::new("bondage", Some(loaded.descriptor), results, started))?;
    let formula_mismatch = formula.is_some_and(|v| v != res.value);
    if formula_mismatch {
        eprintln!("closed form gives {}, search gives {}", formula.unwrap(), res.value);
    }
    if res.cap_exceeded {
        eprintln!("b_dR exceeds the best applicable bound");
    }
    if formula_mismatch || res.cap_exceeded {
        Err(Failure::Check)
    } else {
        Ok(())
    }
}

fn bounds(ctx: &Context, input: &GraphInput, started: Instant) -> Result<(), Failure> {
    let loaded = input.load()?;
    let report = bound_catalog(&loaded.graph);
    let rows: Vec<(&str, String)> =
        report.entries.iter().map(|e| (e.name, e.value.map_or_else(|| "n/a".into(), |v| v.to_string()))).collect();
    table(&rows);
    ctx.emit(&RunReport::new("bounds", Some(loaded.descriptor), to_value(&report), started))
}

fn reduce(
    ctx: &Context,
    cnf: &std::path::Path,
    emit_g6: Option<PathBuf>,
    roles: Option<PathBuf>,
    verify: bool,
    started: Instant,
) -> Result<(), Failure> {
    let formula = parse_dimacs_cnf(&read_file(cnf)?)?;
    let r = build_reduction(&formula)?;
    let g6 = r.graph.to_graph6()?;
    if let Some(path) = &emit_g6 {
        write_file(path, &format!("{g6}\n"))?;
    }
    if let Some(path) = &roles {
        let mut text = String::new();
        for (v, role) in r.roles.iter().enumerate() {
            let _ = writeln!(text, "{v} {role}");
        }
        write_file(path, &text)?;
    }
    let descriptor = crate::input::InputDescriptor {
        kind: "cnf",
        source: cnf.display().to_string(),
        order: r.graph.order(),
        size: r.graph.size(),
        graph6: g6,
    };
    let mut rows = vec![
        ("variables", r.num_vars().to_string()),
        ("clauses", r.num_clauses().to_string()),
        ("vertices", r.graph.order().to_string()),
        ("edges", r.graph.size().to_string()),
        ("bipartite", r.graph.is_bipartite().to_string()),
    ];
    let mut results = json!({
        "variables": r.num_vars(),
        "clauses": r.num_clauses(),
        "vertices": r.graph.order(),
        "edges": r.graph.size(),
        "bipartite": r.graph.is_bipartite(),
        "roles": r.roles,
    });
    let mut failed = false;
    if verify {
        let rep = verify_reduction(&r, &VerifyOptions { budget: ctx.budget })?;
        for c in &rep.checks {
            let status = match c.status {
                Status::Passed => "PASS",
                Status::Failed => "FAIL",
                Status::NotVerified => "NOT VERIFIED",
            };
            rows.push((c.name, format!("{status}: {}", c.detail)));
        }
        failed = rep.any_failed();
        results["verification"] = to_value(&rep);
    }
    table(&rows);
    ctx.emit(&RunReport::new("reduce", Some(descriptor), results, started))?;
    if failed {
        Err(Failure::Check)
    } else {
        Ok(())
    }
}

fn verify(ctx: &Context, scope: &AuditScope, started: Instant) -> Result<(), Failure> {
    let report = run_audit(scope)?;
    for c in &report.checks {
        let verdict = if c.passed() { "PASS" } else { "FAIL" };
        eprintln!("{verdict} {} [{}]: {} cases, {} failures", c.name, c.scope, c.cases, c.failures);
        for ex in &c.examples {
            eprintln!("    {}  {}", ex.graph6, ex.detail);
        }
        for (k, v) in &c.census {
            eprintln!("    {k}: {v}");
        }
    }
    let results = json!({
        "passed": report.passed(),
        "checks": report.checks,
    });
    ctx.emit(&RunReport::new("verify", None, results, started))?;
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

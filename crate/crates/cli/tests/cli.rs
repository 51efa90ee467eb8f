use std::path::PathBuf;
use std::process::{Command, Output};

use drdom::graph::family::FamilySpec;
use drdom::graph::graph6::parse_graph6;
use drdom::solver::{gamma_bruteforce, Alphabet};
use serde_json::Value;

fn drdom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_drdom")).args(args).output().expect("binary runs")
}

fn report(args: &[&str]) -> Value {
    let out = drdom(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn value(args: &[&str]) -> u64 {
    report(args)["results"]["value"].as_u64().unwrap()
}

fn oracle_gamma(spec: &str) -> u64 {
    let g = spec.parse::<FamilySpec>().unwrap().generate().unwrap();
    gamma_bruteforce(&g, Alphabet::Full).unwrap().value as u64
}

fn instance(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "instances", name].iter().collect();
    p.to_str().unwrap().to_string()
}

fn without_timing(mut v: Value) -> Value {
    v.as_object_mut().unwrap().remove("timing");
    v
}

#[test]
fn gamma_of_families_matches_the_oracle() {
    assert_eq!(value(&["gamma", "--family", "path:9"]), oracle_gamma("path:9"));
    assert_eq!(value(&["gamma", "--family", "path:9"]), 9);
    assert_eq!(value(&["gamma", "--family", "complete:6"]), 3);
    assert_eq!(value(&["gamma", "--family", "path:8", "--oracle", "--with-ones"]), oracle_gamma("path:8"));
}

#[test]
fn gamma_from_graph6_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c4.g6");
    std::fs::write(&path, "Cr\n").unwrap();
    let g = parse_graph6("Cr").unwrap();
    assert_eq!((g.order(), g.size(), g.min_degree(), g.max_degree()), (4, 4, 2, 2));
    let oracle = gamma_bruteforce(&g, Alphabet::Full).unwrap().value as u64;
    let r = report(&["gamma", "--g6", path.to_str().unwrap()]);
    assert_eq!(r["results"]["value"].as_u64().unwrap(), oracle);
    assert_eq!(oracle, 4);
    assert_eq!(r["input"]["kind"], "graph6");
}

#[test]
fn gamma_from_edge_list_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k13.txt");
    std::fs::write(&path, "4 3\n0 1\n0 2\n0 3\n").unwrap();
    assert_eq!(value(&["gamma", "--edges", path.to_str().unwrap()]), oracle_gamma("star:3"));
}

#[test]
fn bondage_of_families() {
    assert_eq!(value(&["bondage", "--family", "cycle:10"]), 1);
    assert_eq!(value(&["bondage", "--family", "wheel:6"]), 1);
    assert_eq!(value(&["bondage", "--family", "complete:5"]), 3);
}

#[test]
fn bondage_certificate_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cert.json");
    report(&["bondage", "--family", "cycle:6", "--cert", path.to_str().unwrap()]);
    let cert: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let g = parse_graph6(cert["graph"].as_str().unwrap()).unwrap();
    let removed: Vec<(usize, usize)> = cert["removed_edges"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| (e[0].as_u64().unwrap() as usize, e[1].as_u64().unwrap() as usize))
        .collect();
    assert_eq!(removed.len(), 2);
    let h = g.remove_edges(&drdom::EdgeSet::from_pairs(removed)).unwrap();
    let before = gamma_bruteforce(&g, Alphabet::Full).unwrap().value;
    let after = gamma_bruteforce(&h, Alphabet::Full).unwrap().value;
    assert_eq!(cert["gamma_before"].as_u64().unwrap(), before as u64);
    assert_eq!(cert["gamma_after"].as_u64().unwrap(), after as u64);
    assert!(after > before);
}

#[test]
fn bounds_lists_every_catalog_entry() {
    let r = report(&["bounds", "--family", "star:4"]);
    let entries = r["results"]["entries"].as_array().unwrap();
    assert!(entries.len() >= 10);
    assert!(entries.iter().any(|e| e["name"] == "tree" && e["applicable"] == true));
}

#[test]
fn exit_codes() {
    assert_eq!(drdom(&["gamma", "--family", "nonsense:3"]).status.code(), Some(2));
    assert_eq!(drdom(&["gamma", "--g6", "/nonexistent/file.g6"]).status.code(), Some(2));
    assert_eq!(drdom(&["gamma"]).status.code(), Some(2));
    assert_eq!(drdom(&["gamma", "--family", "path:3", "--edges", "x"]).status.code(), Some(2));
    assert_eq!(drdom(&["bondage", "--family", "empty:3"]).status.code(), Some(2));
    assert_eq!(drdom(&["gamma", "--family", "path:65"]).status.code(), Some(3));
    assert_eq!(drdom(&["gamma", "--family", "path:14", "--oracle"]).status.code(), Some(3));
    assert_eq!(drdom(&["bondage", "--family", "cycle:6", "--max-subset-size", "1"]).status.code(), Some(3));
}

#[test]
fn json_flag_writes_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let out = drdom(&["--json", path.to_str().unwrap(), "gamma", "--family", "cycle:5"]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["tool"], "drdom");
    assert_eq!(v["command"], "gamma");
    assert_eq!(v["results"]["value"].as_u64().unwrap(), oracle_gamma("cycle:5"));
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    assert_eq!(keys, ["tool", "version", "command", "input", "results", "timing"]);
}

#[test]
fn output_does_not_depend_on_thread_count() {
    for args in [
        &["bondage", "--family", "multipartite:2,2,2"][..],
        &["gamma", "--family", "grid:4,4"][..],
        &["reduce", "--cnf", &instance("two_var_sat.cnf"), "--verify"][..],
    ] {
        let runs: Vec<Value> = ["1", "2", "8"]
            .iter()
            .map(|t| {
                let mut a = vec!["--threads", t];
                a.extend_from_slice(args);
                without_timing(report(&a))
            })
            .collect();
        assert_eq!(runs[0], runs[1], "{args:?}");
        assert_eq!(runs[0], runs[2], "{args:?}");
    }
}

#[test]
fn reduce_writes_graph_and_roles() {
    let dir = tempfile::tempdir().unwrap();
    let g6 = dir.path().join("g.g6");
    let roles = dir.path().join("roles.txt");
    let r = report(&[
        "reduce",
        "--cnf",
        &instance("four_var.cnf"),
        "--emit-g6",
        g6.to_str().unwrap(),
        "--roles",
        roles.to_str().unwrap(),
        "--verify",
    ]);
    assert_eq!(r["results"]["vertices"], 44);
    assert_eq!(r["results"]["edges"], 73);
    let g = parse_graph6(std::fs::read_to_string(&g6).unwrap().trim()).unwrap();
    assert_eq!((g.order(), g.size()), (44, 73));
    assert!(g.is_bipartite());
    assert_eq!(std::fs::read_to_string(&roles).unwrap().lines().count(), 44);
    assert_eq!(r["results"]["verification"]["deletion_audit"]["valid"], 73);
}

#[test]
fn verify_families_and_trees_pass() {
    let out = drdom(&["verify", "--families", "--trees", "6"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["results"]["passed"], true);
}

#[test]
fn verify_reports_the_triangle_counterexample() {
    // K_3 is the one graph on at most 6 vertices where the triangle degree-sum
    // bound undershoots b_dR
    let out = drdom(&["verify", "--enumerate", "--max-n", "3"]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let failed: Vec<&Value> =
        v["results"]["checks"].as_array().unwrap().iter().filter(|c| c["failures"] != 0).collect();
    assert_eq!(failed.len(), 1);
    assert_eq!(failed[0]["examples"][0]["graph6"], "Bw");
}

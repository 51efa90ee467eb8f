//! Worked examples for each module, exercised through the public API.

use drdom::bondage::{bondage_exact, closed_form_bondage, closed_form_gamma, edge_deletion_set, path_deletion_set};
use drdom::graph::enumerate::{labeled_connected, labeled_trees};
use drdom::graph::family::FamilySpec;
use drdom::graph::graph6::{parse_graph6, to_graph6};
use drdom::reduction::{
    build_reduction, certificate_from_assignment, deletion_certificate, parse_dimacs_cnf, sat_bruteforce, CnfFormula,
    Pattern, VertexRole,
};
use drdom::solver::{classify_small_gamma, gamma_bruteforce, gamma_exact, Alphabet};
use drdom::{is_valid_drdf, normalize_no_ones, Edge, EdgeSet, Graph, Labeling};

fn fam(s: &str) -> Graph {
    s.parse::<FamilySpec>().unwrap().generate().unwrap()
}

fn lab(s: &str) -> Labeling {
    s.parse().unwrap()
}

fn oracle(g: &Graph) -> u32 {
    gamma_bruteforce(g, Alphabet::Full).unwrap().value
}

#[test]
fn graph_construction() {
    assert_eq!(Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap(), fam("path:3"));
    assert_eq!(Graph::from_edge_list(1, &[]).unwrap(), fam("complete:1"));
    assert_eq!(Graph::from_edge_list(4, &[(0, 1), (0, 1)]).unwrap().size(), 1);
    assert!(Graph::from_edge_list(3, &[(0, 3)]).is_err());
    assert!(Graph::from_edge_list(3, &[(1, 1)]).is_err());
}

#[test]
fn graph6_examples() {
    let g = parse_graph6("B?").unwrap();
    assert_eq!((g.order(), g.size()), (3, 0));
    let h = parse_graph6("D?{").unwrap();
    assert_eq!(h.order(), 5);
    assert_eq!(to_graph6(&h).unwrap(), "D?{");
    assert!(parse_graph6("D?").is_err());
}

#[test]
fn family_examples() {
    let w = fam("wheel:5");
    assert_eq!(w.order(), 5);
    assert_eq!(w.max_degree(), 4);
    assert_eq!(w.size(), 8);
    assert_eq!(fam("multipartite:1,3"), fam("star:3"));
    let j = fam("join(empty:2,cycle:3)");
    assert_eq!(j.order(), 5);
    assert_eq!((j.degree(0), j.degree(1)), (3, 3));
}

#[test]
fn structure_examples() {
    let c4 = fam("cycle:4");
    let e = c4.edges()[0];
    let (u, v) = e.endpoints();
    let p = c4.remove_edges(&EdgeSet::from_pairs([(u, v)])).unwrap();
    assert!(p.is_tree());
    assert_eq!(p.max_degree(), 2);
    let k3 = fam("complete:3");
    assert_eq!(k3.remove_edges(&EdgeSet::from_pairs([(0, 1), (0, 2), (1, 2)])).unwrap(), fam("empty:3"));
    assert_eq!(fam("cycle:7").girth(), Some(7));
    assert_eq!(fam("path:7").girth(), None);
    assert_eq!(fam("complete:4").girth(), Some(3));
    assert!(fam("cycle:6").is_bipartite());
    assert!(!fam("cycle:5").is_bipartite());
    assert_eq!(Graph::from_edge_list(4, &[(0, 1), (1, 2)]).unwrap().components().len(), 2);
}

#[test]
fn enumeration_counts() {
    assert_eq!(labeled_connected(2).unwrap().count(), 1);
    assert_eq!(labeled_connected(3).unwrap().count(), 4);
    assert_eq!(labeled_connected(4).unwrap().count(), 38);
    assert_eq!(labeled_trees(3).unwrap().count(), 3);
    assert_eq!(labeled_trees(4).unwrap().count(), 16);
}

#[test]
fn labeling_examples() {
    let p3 = fam("path:3");
    assert!(is_valid_drdf(&p3, &lab("0,3,0")).unwrap());
    assert!(!is_valid_drdf(&p3, &lab("0,2,0")).unwrap());
    assert!(is_valid_drdf(&p3, &lab("1,2,1")).unwrap());
    assert_eq!(lab("0,3,0").weight(), 3);
    assert_eq!(lab("0,0,0").weight(), 0);
    assert_eq!(lab("2,2,2,2").weight(), 8);
    assert_eq!(normalize_no_ones(&p3, &lab("0,3,0")).unwrap(), lab("0,3,0"));
    let f = normalize_no_ones(&p3, &lab("1,3,1")).unwrap();
    assert!(!f.has_ones());
    assert!(f.weight() <= 5);
    assert!(is_valid_drdf(&p3, &f).unwrap());
}

#[test]
fn gamma_examples() {
    for (s, expected) in
        [("complete:1", 2), ("empty:3", 6), ("path:6", 6), ("cycle:7", 8), ("complete:5", 3), ("multipartite:3,3", 6)]
    {
        let g = fam(s);
        let r = gamma_exact(&g);
        assert_eq!(r.value, expected, "{s}");
        assert_eq!(r.value, oracle(&g), "{s}");
        assert!(is_valid_drdf(&g, &r.witness).unwrap());
        assert_eq!(r.witness.weight(), r.value);
    }
}

#[test]
fn classifier_examples() {
    assert_eq!(classify_small_gamma(&fam("wheel:6")).unwrap(), Some(3));
    assert_eq!(classify_small_gamma(&fam("cycle:4")).unwrap(), Some(4));
    assert_eq!(classify_small_gamma(&fam("path:4")).unwrap(), Some(5));
    assert_eq!(classify_small_gamma(&fam("cycle:7")).unwrap(), None);
    assert!(classify_small_gamma(&fam("path:2")).is_err());
}

#[test]
fn bondage_examples() {
    for (s, expected) in [("path:5", 1), ("cycle:6", 2), ("cycle:8", 1), ("complete:4", 2), ("multipartite:3,3", 4)] {
        let g = fam(s);
        let r = bondage_exact(&g).unwrap();
        assert_eq!(r.value, expected, "{s}");
        let h = g.remove_edges(&r.witness).unwrap();
        assert!(oracle(&h) > oracle(&g), "{s}");
    }
    assert!(bondage_exact(&fam("empty:4")).is_err());
}

#[test]
fn certificate_examples() {
    let p3 = fam("path:3");
    let s = path_deletion_set(&p3, 0, 1, 2).unwrap();
    assert_eq!(s, EdgeSet::from_pairs([(0, 1)]));
    assert_eq!((oracle(&p3), oracle(&p3.remove_edges(&s).unwrap())), (3, 5));

    let star = fam("star:3");
    let s = path_deletion_set(&star, 1, 0, 2).unwrap();
    assert_eq!(s.len(), 2);
    assert!(!s.contains(Edge::new(0, 2)));
    assert_eq!((oracle(&star), oracle(&star.remove_edges(&s).unwrap())), (3, 7));

    let k2 = fam("complete:2");
    let s = edge_deletion_set(&k2, 0, 1).unwrap();
    assert_eq!(s.len(), 1);
    assert_eq!((oracle(&k2), oracle(&k2.remove_edges(&s).unwrap())), (3, 4));
}

#[test]
fn closed_form_examples() {
    let spec = |s: &str| s.parse::<FamilySpec>().unwrap();
    assert_eq!(closed_form_gamma(&spec("path:7")), Some(8));
    assert_eq!(closed_form_gamma(&spec("cycle:12")), Some(12));
    assert_eq!(closed_form_gamma(&spec("multipartite:2,5")), Some(4));
    assert_eq!(closed_form_bondage(&spec("cycle:9")), Some(2));
    assert_eq!(closed_form_bondage(&spec("complete:7")), Some(4));
    assert_eq!(closed_form_bondage(&spec("multipartite:2,2,4")), Some(1));
    for s in ["path:7", "cycle:12", "multipartite:2,5"] {
        assert_eq!(closed_form_gamma(&spec(s)), Some(gamma_exact(&fam(s)).value), "{s}");
    }
    for s in ["cycle:9", "complete:7", "multipartite:2,2,4"] {
        assert_eq!(closed_form_bondage(&spec(s)), Some(bondage_exact(&fam(s)).unwrap().value), "{s}");
    }
}

#[test]
fn cnf_examples() {
    assert_eq!(parse_dimacs_cnf("p cnf 2 1\n1 -2 2 0").unwrap().num_clauses(), 1);
    assert!(parse_dimacs_cnf("p cnf 2 1\n1 2 0").is_err());
    let taut = CnfFormula::new(2, &[vec![1, -1, 2]]).unwrap();
    assert!(sat_bruteforce(&taut).unwrap().is_some());
    let mut all = Vec::new();
    for a in [1, -1] {
        for b in [2, -2] {
            for c in [3, -3] {
                all.push(vec![a, b, c]);
            }
        }
    }
    assert!(sat_bruteforce(&CnfFormula::new(3, &all).unwrap()).unwrap().is_none());
    let fig = parse_dimacs_cnf("p cnf 4 3\n1 -2 4 0\n-1 -2 4 0\n2 3 -4 0").unwrap();
    assert!(sat_bruteforce(&fig).unwrap().is_some());
}

#[test]
fn reduction_examples() {
    let fig = build_reduction(&parse_dimacs_cnf("p cnf 4 3\n1 -2 4 0\n-1 -2 4 0\n2 3 -4 0").unwrap()).unwrap();
    assert_eq!((fig.graph.order(), fig.graph.size()), (44, 73));
    assert!(fig.graph.is_bipartite());
    let small = build_reduction(&CnfFormula::new(2, &[vec![1, 2, -1]]).unwrap()).unwrap();
    assert_eq!((small.graph.order(), small.graph.size()), (26, 39));
    assert!(small.graph.is_bipartite());

    let t = sat_bruteforce(&small.source).unwrap().unwrap();
    let f = certificate_from_assignment(&small, &t).unwrap();
    assert_eq!(f.weight(), 20);
    assert!(is_valid_drdf(&small.graph, &f).unwrap());
    let t = sat_bruteforce(&fig.source).unwrap().unwrap();
    assert_eq!(certificate_from_assignment(&fig, &t).unwrap().weight(), 32);

    for r in [&small, &fig] {
        let target = 6 * r.num_vars() as u32 + 9;
        for e in [
            r.edge(VertexRole::L(1), VertexRole::L(2)),
            r.edge(VertexRole::U(1), VertexRole::V(1)),
            r.edge(VertexRole::Clause(1), VertexRole::L(4)),
        ] {
            let c = deletion_certificate(r, e).unwrap();
            assert_eq!(c.labeling.weight(), target);
            assert!(is_valid_drdf(&r.graph.remove_edges(&EdgeSet::from_pairs([e.endpoints()])).unwrap(), &c.labeling)
                .unwrap());
        }
        let uv = deletion_certificate(r, r.edge(VertexRole::U(1), VertexRole::V(1))).unwrap();
        assert_eq!(uv.pattern, Pattern::OddFrameXz);
        let x = uv.labeling.get(r.id(VertexRole::X(1)));
        let z = uv.labeling.get(r.id(VertexRole::Z(1)));
        assert_eq!((x, z), (3, 3));
    }
}

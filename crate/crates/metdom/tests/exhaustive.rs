//! Exhaustive checks over the shipped corpora of all connected graphs on up
//! to 7 vertices. These pin the characterization-style results that random
//! sampling cannot settle: the path characterization of edge metric
//! dimension 1, the regular-graph floor, the maximal-beta_e implications,
//! the domination comparisons, and the structural criterion for
//! vertex-edge domination number 1.

use std::collections::BTreeMap;

use metdom::formulas::{bound_checks, ParamValues};
use metdom::*;

fn load(name: &str) -> Vec<Graph> {
    let path = format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"));
    let content = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("read {path}: {e}"));
    content
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| parse_graph6(l).unwrap_or_else(|e| panic!("parse {l}: {e}")))
        .collect()
}

#[test]
fn corpus_counts_and_round_trips() {
    let small = load("corpus-n6.g6");
    let mut by_n: BTreeMap<usize, usize> = BTreeMap::new();
    for g in &small {
        assert!(g.is_connected());
        *by_n.entry(g.n()).or_default() += 1;
    }
    // Known counts of connected graphs on 2..=6 vertices.
    assert_eq!(
        by_n,
        BTreeMap::from([(2, 1), (3, 2), (4, 6), (5, 21), (6, 112)])
    );

    let seven = load("corpus-n7.g6");
    assert_eq!(seven.len(), 853, "connected graphs on 7 vertices");
    assert!(seven.iter().all(|g| g.n() == 7 && g.is_connected()));

    // The corpus files are canonical emissions: parse then emit is identity.
    let content =
        std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/data/corpus-n6.g6")).unwrap();
    for line in content.lines() {
        assert_eq!(emit_graph6(&parse_graph6(line).unwrap()), line);
    }
}

#[test]
fn exhaustive_invariants_up_to_seven_vertices() {
    let cfg = SearchConfig::default();
    let mut graphs = load("corpus-n6.g6");
    graphs.extend(load("corpus-n7.g6"));
    assert_eq!(graphs.len(), 142 + 853);

    let mut failures: Vec<String> = Vec::new();
    let mut fail = |msg: String| failures.push(msg);

    for g in &graphs {
        let id = emit_graph6(g);
        let dm = DistanceMatrix::new(g).expect("corpus graphs are connected");
        let all = compute_all(g, &cfg).expect("desk-scale instance");
        let v = ParamValues::from(&all);
        let n = g.n();

        // Edge metric dimension 1 characterizes paths.
        if g.is_path_graph() != (v.beta_e == 1) {
            fail(format!(
                "{id}: beta_e={} but is_path={}",
                v.beta_e,
                g.is_path_graph()
            ));
        }

        // Regular graphs: beta_e >= 1 + ceil(log2 r).
        if g.max_degree() == g.min_degree() {
            let r = g.max_degree();
            let floor = 1 + (usize::BITS - (r - 1).leading_zeros()) as usize;
            if v.beta_e < floor {
                fail(format!(
                    "{id}: {r}-regular with beta_e={} < {floor}",
                    v.beta_e
                ));
            }
        }

        // Maximal beta_e forces small diameter and triangles (n >= 3).
        if v.beta_e == n - 1 && n >= 3 {
            if dm.diameter() > 2 {
                fail(format!("{id}: beta_e=n-1 with diameter {}", dm.diameter()));
            }
            let ok = g
                .edge_refs()
                .all(|e| g.neighbors(e.u).iter().any(|&w| g.has_edge(w, e.v)));
            if !ok {
                fail(format!("{id}: beta_e=n-1 with an edge on no triangle"));
            }
        }

        // Domination comparisons.
        if v.gamma_ve > v.gamma {
            fail(format!("{id}: gamma_ve={} > gamma={}", v.gamma_ve, v.gamma));
        }
        let (m, delta) = (g.m(), g.max_degree());
        if v.gamma_ve < m.div_ceil(delta * delta) {
            fail(format!(
                "{id}: gamma_ve={} below ceil(m/max_degree^2)",
                v.gamma_ve
            ));
        }
        if v.beta_e > n - v.gamma_ve {
            fail(format!(
                "{id}: beta_e={} > n - gamma_ve={}",
                v.beta_e,
                n - v.gamma_ve
            ));
        }

        // gamma_ve = 1 iff some vertex covers everything within distance two
        // and its distance-two shell is independent.
        let criterion = (0..n).any(|x| {
            (0..n).all(|y| dm.get(x, y) <= 2) && {
                let shell: Vec<usize> = (0..n).filter(|&y| dm.get(x, y) == 2).collect();
                shell
                    .iter()
                    .all(|&a| shell.iter().all(|&b| a == b || !g.has_edge(a, b)))
            }
        });
        if (v.gamma_ve == 1) != criterion {
            fail(format!(
                "{id}: gamma_ve={} vs structural criterion {criterion}",
                v.gamma_ve
            ));
        }

        // Combined parameter against order.
        if v.gamma_emd > n - 1 {
            fail(format!("{id}: gamma_emd={} > n-1", v.gamma_emd));
        }
        if delta == n - 1 {
            if !(v.gamma_emd == n - 1 || v.gamma_emd == n - 2) {
                fail(format!(
                    "{id}: universal vertex with gamma_emd={}",
                    v.gamma_emd
                ));
            }
            let universal = (0..n).filter(|&x| g.degree(x) == n - 1).count();
            if universal >= 2 && v.gamma_emd != n - 1 {
                fail(format!(
                    "{id}: two universal vertices with gamma_emd={}",
                    v.gamma_emd
                ));
            }
        }

        // The bound evaluator must agree with the raw comparisons above on
        // the ids it shares with this scan.
        for bc in bound_checks(g, &dm, &v) {
            if bc.id != "tree-ve-lower" && !bc.holds {
                fail(format!("{id}: bound {} reported violated", bc.id));
            }
        }
    }

    // Paths resolve every edge from a single endpoint at any length.
    for n in 2..=16 {
        let p = generate(&FamilySpec::Path(n)).unwrap();
        let r = edge_metric_dimension(&p, &cfg).unwrap();
        if r.value != 1 {
            failures.push(format!("path:{n}: beta_e={}", r.value));
        }
    }

    assert!(
        failures.is_empty(),
        "exhaustive invariants failed:\n{}",
        failures.join("\n")
    );
}

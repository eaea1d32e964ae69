//! Property tests for the structural invariants: distance axioms, predicate
//! monotonicity, format round trips, definition equivalences, and the
//! sandwich inequalities on freshly computed instances.

use proptest::prelude::*;

use metdom::*;

/// Random connected graph: a random labeled tree plus extra edges drawn
/// from a bitmask over the non-tree pairs.
fn connected_graph() -> impl Strategy<Value = Graph> {
    (2usize..=9, any::<u64>(), any::<u64>()).prop_map(|(n, seed, mask)| {
        let tree = random_tree(n, seed);
        let mut pairs = tree.edges().to_vec();
        let mut bit = 0u32;
        for u in 0..n {
            for v in u + 1..n {
                if !tree.has_edge(u, v) {
                    if mask >> (bit % 64) & 1 == 1 {
                        pairs.push((u, v));
                    }
                    bit += 1;
                }
            }
        }
        Graph::from_edge_list(n, &pairs).unwrap()
    })
}

fn vertex_subset(g: &Graph, mask: u64) -> Vec<usize> {
    let set: Vec<usize> = (0..g.n()).filter(|v| mask >> v & 1 == 1).collect();
    if set.is_empty() {
        vec![0]
    } else {
        set
    }
}

proptest! {
    #[test]
    fn distance_matrix_axioms(g in connected_graph()) {
        let dm = DistanceMatrix::new(&g).unwrap();
        let n = g.n();
        for i in 0..n {
            prop_assert_eq!(dm.get(i, i), 0);
            for j in 0..n {
                prop_assert_eq!(dm.get(i, j), dm.get(j, i));
                if i != j {
                    prop_assert!(dm.get(i, j) >= 1);
                    let adjacent = g.has_edge(i, j);
                    prop_assert_eq!(dm.get(i, j) == 1, adjacent);
                }
                for k in 0..n {
                    prop_assert!(dm.get(i, j) <= dm.get(i, k) + dm.get(k, j));
                }
            }
        }
    }

    #[test]
    fn vertex_edge_distance_is_endpoint_min(g in connected_graph(), w_raw in any::<u64>()) {
        let dm = DistanceMatrix::new(&g).unwrap();
        let w = (w_raw % g.n() as u64) as usize;
        for e in g.edge_refs() {
            let d = vertex_edge_distance(&dm, w, &e);
            prop_assert_eq!(d, dm.get(w, e.u).min(dm.get(w, e.v)));
            prop_assert_eq!(d == 0, w == e.u || w == e.v);
        }
    }

    #[test]
    fn resolving_predicates_are_monotone(g in connected_graph(), mask in any::<u64>(), extra in any::<u64>()) {
        let dm = DistanceMatrix::new(&g).unwrap();
        let set = vertex_subset(&g, mask);
        let w = (extra % g.n() as u64) as usize;
        let mut bigger = set.clone();
        if !bigger.contains(&w) {
            bigger.push(w);
            bigger.sort_unstable();
        }
        if is_resolving(&dm, &set) {
            prop_assert!(is_resolving(&dm, &bigger));
        }
        if is_edge_resolving(&g, &dm, &set) {
            prop_assert!(is_edge_resolving(&g, &dm, &bigger));
        }
        if is_ve_dominating(&g, &dm, &set) {
            prop_assert!(is_ve_dominating(&g, &dm, &bigger));
        }
        if is_dominating(&g, &set) {
            prop_assert!(is_dominating(&g, &bigger));
        }
    }

    /// The distance-rule evaluation of vertex-edge domination agrees with
    /// the incidence/adjacency clause form.
    #[test]
    fn ve_domination_clause_equivalence(g in connected_graph(), mask in any::<u64>()) {
        let dm = DistanceMatrix::new(&g).unwrap();
        let set = vertex_subset(&g, mask);
        let clause_form = g.edge_refs().all(|e| {
            set.iter().any(|&w| {
                w == e.u
                    || w == e.v
                    || g.has_edge(w, e.u)
                    || g.has_edge(w, e.v)
            })
        });
        prop_assert_eq!(is_ve_dominating(&g, &dm, &set), clause_form);
    }

    #[test]
    fn edge_list_text_round_trip(g in connected_graph()) {
        let text = emit_edge_list_text(&g);
        let back = parse_edge_list_text(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(emit_edge_list_text(&back), text);
    }

    #[test]
    fn graph6_round_trip(g in connected_graph()) {
        let line = emit_graph6(&g);
        let back = parse_graph6(&line).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(emit_graph6(&back), line);
    }

    /// Dropping one vertex of a false-twin pair from a vertex-edge
    /// dominating set keeps it vertex-edge dominating.
    #[test]
    fn false_twin_removal_keeps_ve_domination(g in connected_graph(), mask in any::<u64>()) {
        let dm = DistanceMatrix::new(&g).unwrap();
        let twins = find_twins(&g);
        for (u, v, kind) in twins {
            if kind != TwinKind::False {
                continue;
            }
            let mut set = vertex_subset(&g, mask);
            for w in [u, v] {
                if !set.contains(&w) {
                    set.push(w);
                }
            }
            set.sort_unstable();
            if is_ve_dominating(&g, &dm, &set) {
                let without: Vec<usize> = set.iter().copied().filter(|&w| w != u).collect();
                prop_assert!(is_ve_dominating(&g, &dm, &without));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// Both sandwich inequalities, asserted on freshly computed instances.
    #[test]
    fn sandwich_inequalities(g in connected_graph()) {
        let cfg = SearchConfig::default();
        let all = compute_all(&g, &cfg).unwrap();
        let (beta, beta_e) = (all.beta.value, all.beta_e.value);
        let (gamma, gamma_ve) = (all.gamma.value, all.gamma_ve.value);
        prop_assert!(all.gamma_md.value >= gamma.max(beta));
        prop_assert!(all.gamma_md.value <= gamma + beta);
        prop_assert!(all.gamma_emd.value >= gamma_ve.max(beta_e));
        prop_assert!(all.gamma_emd.value <= gamma_ve + beta_e);
    }

    /// Every solver witness satisfies its defining predicate.
    #[test]
    fn witnesses_re_verify(g in connected_graph()) {
        let cfg = SearchConfig::default();
        let dm = DistanceMatrix::new(&g).unwrap();
        let all = compute_all(&g, &cfg).unwrap();
        prop_assert!(is_resolving(&dm, &all.beta.witness));
        prop_assert!(is_edge_resolving(&g, &dm, &all.beta_e.witness));
        prop_assert!(is_dominating(&g, &all.gamma.witness));
        prop_assert!(is_ve_dominating(&g, &dm, &all.gamma_ve.witness));
        prop_assert!(is_dominant_resolving(&g, &dm, &all.gamma_md.witness));
        prop_assert!(is_ve_dominant_edge_resolving(&g, &dm, &all.gamma_emd.witness));
    }
}

/// Emit-parse identity over every generated family at small orders, for
/// both text formats.
#[test]
fn family_format_round_trips() {
    let mut specs: Vec<String> = Vec::new();
    for n in 1..=20 {
        specs.push(format!("path:{n}"));
    }
    for n in 3..=20 {
        specs.push(format!("cycle:{n}"));
    }
    for n in 2..=9 {
        specs.push(format!("complete:{n}"));
    }
    for n in 1..=19 {
        specs.push(format!("star:{n}"));
        specs.push(format!("fan:{n}"));
    }
    for n in 3..=19 {
        specs.push(format!("wheel:{n}"));
    }
    for n in 1..=10 {
        specs.push(format!("grid2:{n}"));
    }
    for n in 3..=10 {
        specs.push(format!("prism2:{n}"));
    }
    for (a, b) in [(2, 3), (3, 3), (4, 5), (1, 7)] {
        specs.push(format!("kb:{a},{b}"));
    }
    specs.push("corona:path:3,path:2".into());
    specs.push("join:complete:1,cycle:6".into());
    specs.push("product:path:5,path:2".into());
    for s in specs {
        let g = generate(&s.parse().unwrap()).unwrap();
        let text = emit_edge_list_text(&g);
        assert_eq!(
            parse_edge_list_text(&text).unwrap(),
            g,
            "text round trip of {s}"
        );
        let line = emit_graph6(&g);
        assert_eq!(parse_graph6(&line).unwrap(), g, "graph6 round trip of {s}");
    }
}

//! Regenerates the shipped graph6 corpora of connected graphs:
//! `data/corpus-n6.g6` (all connected graphs on 2..=6 vertices) and
//! `data/corpus-n7.g6` (all connected graphs on 7 vertices).
//!
//! Enumeration is by vertex extension with canonical-form deduplication:
//! the canonical form of a graph is the minimum adjacency bitcode over all
//! degree-respecting relabelings. Run with `--release`; the known counts
//! are asserted before anything is written.

use std::collections::BTreeSet;
use std::fs;
use std::path::Path;

use metdom::{emit_graph6, Graph};

type EdgeSet = Vec<(usize, usize)>;

fn degree_vec(n: usize, edges: &EdgeSet) -> Vec<usize> {
    let mut d = vec![0usize; n];
    for &(u, v) in edges {
        d[u] += 1;
        d[v] += 1;
    }
    d
}

fn bitcode(edges: &EdgeSet, perm: &[usize]) -> u64 {
    let mut code = 0u64;
    for &(u, v) in edges {
        let (a, b) = (perm[u].min(perm[v]), perm[u].max(perm[v]));
        code |= 1 << (b * (b - 1) / 2 + a);
    }
    code
}

/// Minimum bitcode over all permutations that map equal-degree vertices to
/// equal-degree positions, together with one minimizing relabeling.
fn canonical(n: usize, edges: &EdgeSet) -> (u64, EdgeSet) {
    let deg = degree_vec(n, edges);
    // Positions sorted by degree; a vertex may only map to a position of
    // the same degree, since isomorphisms preserve degrees.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| deg[v]);
    let target_deg: Vec<usize> = order.iter().map(|&v| deg[v]).collect();

    let mut best: Option<(u64, Vec<usize>)> = None;
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    assign(
        n,
        edges,
        &deg,
        &target_deg,
        0,
        &mut perm,
        &mut used,
        &mut best,
    );
    let (code, perm) = best.expect("at least one degree-respecting relabeling exists");
    let mut relabeled: EdgeSet = edges
        .iter()
        .map(|&(u, v)| (perm[u].min(perm[v]), perm[u].max(perm[v])))
        .collect();
    relabeled.sort_unstable();
    (code, relabeled)
}

#[allow(clippy::too_many_arguments)]
fn assign(
    n: usize,
    edges: &EdgeSet,
    deg: &[usize],
    target_deg: &[usize],
    pos: usize,
    perm: &mut Vec<usize>,
    used: &mut Vec<bool>,
    best: &mut Option<(u64, Vec<usize>)>,
) {
    if pos == n {
        let code = bitcode(edges, perm);
        if best.as_ref().is_none_or(|(b, _)| code < *b) {
            *best = Some((code, perm.clone()));
        }
        return;
    }
    for v in 0..n {
        if !used[v] && deg[v] == target_deg[pos] {
            perm[v] = pos;
            used[v] = true;
            assign(n, edges, deg, target_deg, pos + 1, perm, used, best);
            perm[v] = usize::MAX;
            used[v] = false;
        }
    }
}

fn main() {
    let expected_all = [1usize, 2, 4, 11, 34, 156, 1044];
    let expected_connected = [1usize, 1, 2, 6, 21, 112, 853];

    // level[k] holds canonical edge sets of all graphs on k+1 vertices.
    let mut level: Vec<EdgeSet> = vec![Vec::new()];
    let mut per_n: Vec<Vec<EdgeSet>> = vec![level.clone()];
    for n in 2..=7usize {
        let mut seen = BTreeSet::new();
        let mut next: Vec<EdgeSet> = Vec::new();
        for g in &level {
            for mask in 0u32..(1 << (n - 1)) {
                let mut edges = g.clone();
                for u in 0..n - 1 {
                    if mask & (1 << u) != 0 {
                        edges.push((u, n - 1));
                    }
                }
                let (code, relabeled) = canonical(n, &edges);
                if seen.insert(code) {
                    next.push(relabeled);
                }
            }
        }
        assert_eq!(
            next.len(),
            expected_all[n - 1],
            "graph count on {n} vertices"
        );
        per_n.push(next.clone());
        level = next;
    }

    let to_graph = |n: usize, edges: &EdgeSet| Graph::from_edge_list(n, edges).unwrap();
    let mut small = Vec::new();
    for n in 2..=6usize {
        let mut lines: Vec<String> = per_n[n - 1]
            .iter()
            .map(|e| to_graph(n, e))
            .filter(|g| g.is_connected())
            .map(|g| emit_graph6(&g))
            .collect();
        assert_eq!(
            lines.len(),
            expected_connected[n - 1],
            "connected count on {n} vertices"
        );
        lines.sort();
        small.extend(lines);
    }
    let mut seven: Vec<String> = per_n[6]
        .iter()
        .map(|e| to_graph(7, e))
        .filter(|g| g.is_connected())
        .map(|g| emit_graph6(&g))
        .collect();
    assert_eq!(seven.len(), expected_connected[6]);
    seven.sort();

    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
    fs::create_dir_all(&dir).unwrap();
    fs::write(dir.join("corpus-n6.g6"), small.join("\n") + "\n").unwrap();
    fs::write(dir.join("corpus-n7.g6"), seven.join("\n") + "\n").unwrap();
    println!(
        "wrote {} small lines and {} seven-vertex lines",
        small.len(),
        seven.len()
    );
}

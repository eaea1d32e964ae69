//! Dominating and vertex-edge dominating predicates, and the exact
//! domination numbers.
//!
//! Vertex-edge domination is evaluated through the distance rule (a set
//! covers an edge when some member is at vertex-edge distance at most 1),
//! which reuses the distance matrix. The incidence/adjacency clause form is
//! kept as a test oracle; the two are checked equivalent property-wise.

use crate::graph::{vertex_edge_distance, DistanceMatrix, Graph, GraphError};
use crate::search::{minimal_monotone_set, ParamResult, SearchConfig, SolveError};

#[inline]
fn in_set(set: &[usize], v: usize) -> bool {
    set.binary_search(&v).is_ok()
}

/// True iff every vertex is in the set or adjacent to a member.
/// Works on disconnected graphs; no distances involved.
pub fn is_dominating(g: &Graph, set: &[usize]) -> bool {
    debug_assert!(set.windows(2).all(|w| w[0] < w[1]), "set must be sorted");
    (0..g.n()).all(|v| in_set(set, v) || g.neighbors(v).iter().any(|&w| in_set(set, w)))
}

/// True iff every edge is at vertex-edge distance at most 1 from the set.
pub fn is_ve_dominating(g: &Graph, dm: &DistanceMatrix, set: &[usize]) -> bool {
    debug_assert!(set.windows(2).all(|w| w[0] < w[1]), "set must be sorted");
    g.edge_refs()
        .all(|e| set.iter().any(|&w| vertex_edge_distance(dm, w, &e) <= 1))
}

/// Exact domination number. Disconnected input is fine here.
pub fn domination_number(g: &Graph, cfg: &SearchConfig) -> Result<ParamResult, SolveError> {
    minimal_monotone_set(g.n(), 1, |s: &[usize]| is_dominating(g, s), cfg)
}

/// Exact vertex-edge domination number. Needs a connected graph with at
/// least one edge, since it goes through the distance matrix.
pub fn ve_domination_number(g: &Graph, cfg: &SearchConfig) -> Result<ParamResult, SolveError> {
    if g.m() == 0 {
        return Err(SolveError::Graph(GraphError::NoEdges));
    }
    let dm = DistanceMatrix::new(g)?;
    minimal_monotone_set(g.n(), 1, |s: &[usize]| is_ve_dominating(g, &dm, s), cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::generate;
    use crate::graph::Graph;

    fn gen(s: &str) -> Graph {
        generate(&s.parse().unwrap()).unwrap()
    }

    fn dm(g: &Graph) -> DistanceMatrix {
        DistanceMatrix::new(g).unwrap()
    }

    #[test]
    fn dominating_predicate() {
        let star = gen("star:6");
        assert!(is_dominating(&star, &[0]));
        assert!(is_dominating(&gen("path:6"), &[1, 4]));
        assert!(
            !is_dominating(&gen("cycle:6"), &[0]),
            "vertex 3 is uncovered"
        );
    }

    #[test]
    fn ve_dominating_predicate() {
        for spec in ["wheel:7", "fan:7", "star:7"] {
            let g = gen(spec);
            assert!(
                is_ve_dominating(&g, &dm(&g), &[0]),
                "{spec} hub covers every edge"
            );
        }
        let p8 = gen("path:8");
        assert!(
            !is_ve_dominating(&p8, &dm(&p8), &[2]),
            "edge (6,7) is too far"
        );
        let kb = gen("kb:3,3");
        let d = dm(&kb);
        for v in 0..kb.n() {
            assert!(is_ve_dominating(&kb, &d, &[v]));
        }
    }

    #[test]
    fn domination_numbers() {
        let cfg = SearchConfig::default();
        assert_eq!(domination_number(&gen("path:6"), &cfg).unwrap().value, 2);
        assert_eq!(domination_number(&gen("cycle:9"), &cfg).unwrap().value, 3);
        assert_eq!(
            domination_number(&gen("complete:7"), &cfg).unwrap().value,
            1
        );
        // Domination is defined without distances, so disconnected inputs work.
        let split = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(domination_number(&split, &cfg).unwrap().value, 2);
    }

    #[test]
    fn ve_domination_numbers() {
        let cfg = SearchConfig::default();
        assert_eq!(ve_domination_number(&gen("path:6"), &cfg).unwrap().value, 2);
        assert_eq!(
            ve_domination_number(&gen("cycle:9"), &cfg).unwrap().value,
            3
        );
        assert_eq!(
            ve_domination_number(&gen("grid2:9"), &cfg).unwrap().value,
            3
        );
    }
}

//! Vertex and edge codes, resolving predicates, and the exact metric and
//! edge metric dimensions.
//!
//! Codes are compared over all of `V` (respectively all of `E`): a landmark's
//! own code carries a unique zero coordinate, so this coincides with only
//! comparing non-landmarks and keeps the predicate simple.

use crate::graph::{vertex_edge_distance, DistanceMatrix, EdgeRef, Graph, GraphError};
use crate::search::{minimal_monotone_set, ParamResult, SearchConfig, SolveError};

/// Distance vector of one vertex with respect to an ordered landmark list.
pub type Code = Vec<u32>;

pub fn vertex_code(dm: &DistanceMatrix, y: usize, landmarks: &[usize]) -> Code {
    landmarks.iter().map(|&x| dm.get(y, x)).collect()
}

pub fn edge_code(dm: &DistanceMatrix, e: &EdgeRef, landmarks: &[usize]) -> Code {
    landmarks
        .iter()
        .map(|&x| vertex_edge_distance(dm, x, e))
        .collect()
}

/// True iff all vertex codes are pairwise distinct.
pub fn is_resolving(dm: &DistanceMatrix, landmarks: &[usize]) -> bool {
    let mut codes: Vec<Code> = (0..dm.n()).map(|y| vertex_code(dm, y, landmarks)).collect();
    codes.sort_unstable();
    codes.windows(2).all(|w| w[0] != w[1])
}

/// True iff all edge codes are pairwise distinct.
pub fn is_edge_resolving(g: &Graph, dm: &DistanceMatrix, landmarks: &[usize]) -> bool {
    let mut codes: Vec<Code> = g
        .edge_refs()
        .map(|e| edge_code(dm, &e, landmarks))
        .collect();
    codes.sort_unstable();
    codes.windows(2).all(|w| w[0] != w[1])
}

/// Exact metric dimension with its canonical witness.
pub fn metric_dimension(g: &Graph, cfg: &SearchConfig) -> Result<ParamResult, SolveError> {
    if g.n() < 2 {
        return Err(SolveError::TooSmall { need: 2 });
    }
    let dm = DistanceMatrix::new(g)?;
    minimal_monotone_set(g.n(), 1, |s: &[usize]| is_resolving(&dm, s), cfg)
}

/// Exact edge metric dimension with its canonical witness.
pub fn edge_metric_dimension(g: &Graph, cfg: &SearchConfig) -> Result<ParamResult, SolveError> {
    if g.m() == 0 {
        return Err(SolveError::Graph(GraphError::NoEdges));
    }
    let dm = DistanceMatrix::new(g)?;
    minimal_monotone_set(g.n(), 1, |s: &[usize]| is_edge_resolving(g, &dm, s), cfg)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwinKind {
    /// Equal closed neighborhoods; such vertices are adjacent.
    True,
    /// Equal open neighborhoods; such vertices are non-adjacent.
    False,
}

/// All unordered twin pairs with their classification.
pub fn find_twins(g: &Graph) -> Vec<(usize, usize, TwinKind)> {
    let mut out = Vec::new();
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if g.neighbors(u) == g.neighbors(v) {
                out.push((u, v, TwinKind::False));
            } else if g.has_edge(u, v) {
                let nu: Vec<usize> = g.neighbors(u).iter().copied().filter(|&w| w != v).collect();
                let nv: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| w != u).collect();
                if nu == nv {
                    out.push((u, v, TwinKind::True));
                }
            }
        }
    }
    out
}

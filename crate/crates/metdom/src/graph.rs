//! Simple undirected graphs with stable vertex indices and a canonical edge list.
//!
//! Vertices are dense 0-based indices. The edge list is normalized to pairs
//! `(u, v)` with `u < v`, sorted lexicographically; the position of a pair in
//! that list is the stable edge identifier used everywhere else in the crate.

use std::collections::VecDeque;
use std::fmt::Write as _;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph needs at least one vertex")]
    NoVertices,
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge index {index} out of range for {m} edges")]
    EdgeOutOfRange { index: usize, m: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has no edges")]
    NoEdges,
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid graph6 data: {0}")]
    Graph6(String),
}

/// A reference to one edge: its index in the canonical edge list plus the
/// endpoint pair `(u, v)` with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeRef {
    pub index: usize,
    pub u: usize,
    pub v: usize,
}

/// Immutable simple undirected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
    connected: bool,
}

impl Graph {
    /// Builds a graph from vertex count and unordered endpoint pairs.
    ///
    /// Pairs are normalized to `u < v` and sorted; duplicates are rejected
    /// rather than merged. Connectivity is computed once and recorded.
    pub fn from_edge_list(n: usize, pairs: &[(usize, usize)]) -> Result<Graph, GraphError> {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        let mut edges = Vec::with_capacity(pairs.len());
        for &(a, b) in pairs {
            if a == b {
                return Err(GraphError::LoopEdge(a));
            }
            for x in [a, b] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            edges.push((a.min(b), a.max(b)));
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let connected = reachable_from_zero(n, &adj) == n;
        Ok(Graph {
            n,
            adj,
            edges,
            connected,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn is_connected(&self) -> bool {
        self.connected
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        if a == b || a >= self.n || b >= self.n {
            return false;
        }
        self.edges.binary_search(&(a.min(b), a.max(b))).is_ok()
    }

    /// Edge reference by canonical index.
    pub fn edge(&self, index: usize) -> Result<EdgeRef, GraphError> {
        match self.edges.get(index) {
            Some(&(u, v)) => Ok(EdgeRef { index, u, v }),
            None => Err(GraphError::EdgeOutOfRange { index, m: self.m() }),
        }
    }

    /// Edge reference by endpoint pair, if present.
    pub fn edge_between(&self, a: usize, b: usize) -> Option<EdgeRef> {
        if a == b || a >= self.n || b >= self.n {
            return None;
        }
        let pair = (a.min(b), a.max(b));
        self.edges.binary_search(&pair).ok().map(|index| EdgeRef {
            index,
            u: pair.0,
            v: pair.1,
        })
    }

    pub fn edge_refs(&self) -> impl Iterator<Item = EdgeRef> + '_ {
        self.edges
            .iter()
            .enumerate()
            .map(|(index, &(u, v))| EdgeRef { index, u, v })
    }

    pub fn is_tree(&self) -> bool {
        self.connected && self.m() + 1 == self.n
    }

    /// True for `P_1` and every longer path graph.
    pub fn is_path_graph(&self) -> bool {
        self.is_tree() && (0..self.n).all(|v| self.degree(v) <= 2)
    }

    pub fn is_complete(&self) -> bool {
        self.m() == self.n * (self.n - 1) / 2
    }
}

fn reachable_from_zero(n: usize, adj: &[Vec<usize>]) -> usize {
    let mut seen = vec![false; n];
    let mut queue = VecDeque::new();
    seen[0] = true;
    queue.push_back(0);
    let mut count = 1;
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                queue.push_back(w);
            }
        }
    }
    count
}

/// All-pairs shortest-path hop distances of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    /// BFS from every source. Errors on disconnected input.
    pub fn new(g: &Graph) -> Result<DistanceMatrix, GraphError> {
        if !g.is_connected() {
            return Err(GraphError::Disconnected);
        }
        let n = g.n();
        let mut d = vec![0u32; n * n];
        let mut queue = VecDeque::new();
        for s in 0..n {
            let row = &mut d[s * n..(s + 1) * n];
            row.fill(u32::MAX);
            row[s] = 0;
            queue.clear();
            queue.push_back(s);
            while let Some(v) = queue.pop_front() {
                let dv = row[v];
                for &w in g.neighbors(v) {
                    if row[w] == u32::MAX {
                        row[w] = dv + 1;
                        queue.push_back(w);
                    }
                }
            }
        }
        Ok(DistanceMatrix { n, d })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.d[i * self.n + j]
    }

    pub fn diameter(&self) -> u32 {
        self.d.iter().copied().max().unwrap_or(0)
    }
}

/// Distance from a vertex to an edge: the smaller of the two endpoint distances.
#[inline]
pub fn vertex_edge_distance(dm: &DistanceMatrix, w: usize, e: &EdgeRef) -> u32 {
    dm.get(w, e.u).min(dm.get(w, e.v))
}

/// Parses the edge-list text format: a header line `n m`, then `m` lines
/// `u v` with `0 <= u < v < n` in strictly ascending lexicographic order,
/// with a required trailing newline.
pub fn parse_edge_list_text(input: &str) -> Result<Graph, GraphError> {
    let parse_err = |line: usize, message: &str| GraphError::Parse {
        line,
        message: message.to_string(),
    };
    if !input.ends_with('\n') {
        return Err(parse_err(input.lines().count(), "missing trailing newline"));
    }
    let mut lines = input.lines();
    let header = lines.next().ok_or_else(|| parse_err(1, "missing header"))?;
    let mut parts = header.split(' ');
    let n: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| parse_err(1, "header must be `n m`"))?;
    let m: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| parse_err(1, "header must be `n m`"))?;
    if parts.next().is_some() {
        return Err(parse_err(1, "header must be `n m`"));
    }
    let mut pairs: Vec<(usize, usize)> = Vec::with_capacity(m);
    for i in 0..m {
        let line_no = i + 2;
        let line = lines
            .next()
            .ok_or_else(|| parse_err(line_no, "unexpected end of input"))?;
        let mut parts = line.split(' ');
        let u: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| parse_err(line_no, "edge line must be `u v`"))?;
        let v: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| parse_err(line_no, "edge line must be `u v`"))?;
        if parts.next().is_some() {
            return Err(parse_err(line_no, "edge line must be `u v`"));
        }
        if u >= v {
            return Err(parse_err(line_no, "endpoints must satisfy u < v"));
        }
        if let Some(&prev) = pairs.last() {
            if prev >= (u, v) {
                return Err(parse_err(line_no, "edges must be strictly ascending"));
            }
        }
        pairs.push((u, v));
    }
    if lines.next().is_some() {
        return Err(parse_err(m + 2, "trailing content after edge list"));
    }
    Graph::from_edge_list(n, &pairs)
}

/// Inverse of [`parse_edge_list_text`]; output is canonical.
pub fn emit_edge_list_text(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", g.n(), g.m());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let pairs: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        Graph::from_edge_list(n, &pairs).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let mut pairs: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        pairs.push((0, n - 1));
        Graph::from_edge_list(n, &pairs).unwrap()
    }

    #[test]
    fn from_edge_list_basics() {
        let p2 = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        assert_eq!(p2.m(), 1);
        assert!(p2.is_connected());

        let c4 = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(c4.is_connected());
        assert_eq!(c4.edges(), &[(0, 1), (0, 3), (1, 2), (2, 3)]);

        assert_eq!(
            Graph::from_edge_list(3, &[(0, 1), (0, 1)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        // Reversed orientation of the same pair is still a duplicate.
        assert_eq!(
            Graph::from_edge_list(3, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Graph::from_edge_list(3, &[(1, 1)]),
            Err(GraphError::LoopEdge(1))
        );
        assert_eq!(
            Graph::from_edge_list(2, &[(0, 5)]),
            Err(GraphError::VertexOutOfRange { vertex: 5, n: 2 })
        );
    }

    #[test]
    fn distances() {
        let dm = DistanceMatrix::new(&path(3)).unwrap();
        assert_eq!(dm.get(0, 2), 2);

        let dm = DistanceMatrix::new(&cycle(4)).unwrap();
        assert_eq!(dm.get(0, 2), 2);
        assert_eq!(dm.get(1, 3), 2);

        let k5: Vec<_> = (0..5)
            .flat_map(|u| (u + 1..5).map(move |v| (u, v)))
            .collect();
        let k5 = Graph::from_edge_list(5, &k5).unwrap();
        let dm = DistanceMatrix::new(&k5).unwrap();
        for i in 0..5 {
            for j in 0..5 {
                assert_eq!(dm.get(i, j), u32::from(i != j));
            }
        }

        let split = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!split.is_connected());
        assert_eq!(DistanceMatrix::new(&split), Err(GraphError::Disconnected));
    }

    #[test]
    fn vertex_edge_distance_rule() {
        let p4 = path(4);
        let dm = DistanceMatrix::new(&p4).unwrap();
        let e = p4.edge_between(2, 3).unwrap();
        assert_eq!(vertex_edge_distance(&dm, 0, &e), 2);
        assert_eq!(vertex_edge_distance(&dm, 2, &e), 0);
        assert_eq!(vertex_edge_distance(&dm, 3, &e), 0);

        // Independent check on C_6: min over both endpoint BFS distances.
        let c6 = cycle(6);
        let dm = DistanceMatrix::new(&c6).unwrap();
        let e = c6.edge_between(3, 4).unwrap();
        assert_eq!(
            vertex_edge_distance(&dm, 0, &e),
            dm.get(0, 3).min(dm.get(0, 4))
        );
        assert_eq!(vertex_edge_distance(&dm, 0, &e), 2);
    }

    #[test]
    fn edge_list_text_round_trip() {
        let g = parse_edge_list_text("3 2\n0 1\n1 2\n").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);

        let text = "4 4\n0 1\n0 3\n1 2\n2 3\n";
        assert_eq!(
            emit_edge_list_text(&parse_edge_list_text(text).unwrap()),
            text
        );

        assert!(matches!(
            parse_edge_list_text("3 2\n0 1\n0 1\n"),
            Err(GraphError::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_edge_list_text("3 2\n1 2\n0 1\n"),
            Err(GraphError::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_edge_list_text("3 1\n0 1"),
            Err(GraphError::Parse { .. })
        ));
        assert!(matches!(
            parse_edge_list_text("2 1\n1 0\n"),
            Err(GraphError::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn shape_predicates() {
        assert!(path(5).is_path_graph());
        assert!(path(1).is_path_graph());
        assert!(!cycle(5).is_tree());
        let star = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(star.is_tree());
        assert!(!star.is_path_graph());
        let k3 = Graph::from_edge_list(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        assert!(k3.is_complete());
    }
}

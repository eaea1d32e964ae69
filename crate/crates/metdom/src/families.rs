//! Deterministic generators for the graph families under study.
//!
//! Labeling conventions (fixed so that witness sets are reproducible):
//! - `Path n` / `Cycle n`: vertices `0..n-1` in order.
//! - `Wheel n` / `Fan n` / `Star n`: hub/center is index 0, the rim, path or
//!   leaves are `1..n`.
//! - `CompleteBipartite n m`: parts `{0..n-1}` and `{n..n+m-1}`.
//! - `GridP2 n` (the product of a path with an edge): first row `0..n-1`,
//!   second row `n..2n-1`, rungs `(i, n+i)`.
//! - `PrismP2 n` (the product of a cycle with an edge): outer cycle `0..n-1`,
//!   inner cycle `n..2n-1`, rungs `(i, n+i)`.
//! - `cartesian_product`: vertex `(a, b)` maps to index `a * |V(h)| + b`.
//! - `corona`: vertex `i` of `g` keeps index `i`; the `j`-th vertex of copy
//!   `i` of `h` becomes `p + i*q + j`.
//! - `join`: `g` keeps `0..p-1`, `h` shifts to `p..p+q-1`.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::DEFAULT_VERTEX_CAP;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("{family}: parameter out of range ({detail})")]
    OutOfRange {
        family: &'static str,
        detail: String,
    },
    #[error("instance would have {vertices} vertices, above the cap of {cap}")]
    CapExceeded { vertices: usize, cap: usize },
    #[error("operands of a product must be connected")]
    DisconnectedOperand,
    #[error("invalid family spec: {0}")]
    Spec(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A family instance description with a textual form used by the CLI,
/// e.g. `path:9`, `kb:3,4`, `corona:path:3,path:2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Star(usize),
    Wheel(usize),
    Fan(usize),
    GridP2(usize),
    PrismP2(usize),
    CartesianProduct(Box<FamilySpec>, Box<FamilySpec>),
    Corona(Box<FamilySpec>, Box<FamilySpec>),
    Join(Box<FamilySpec>, Box<FamilySpec>),
    Tree(Vec<(usize, usize)>),
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::CompleteBipartite(n, m) => write!(f, "kb:{n},{m}"),
            FamilySpec::Star(n) => write!(f, "star:{n}"),
            FamilySpec::Wheel(n) => write!(f, "wheel:{n}"),
            FamilySpec::Fan(n) => write!(f, "fan:{n}"),
            FamilySpec::GridP2(n) => write!(f, "grid2:{n}"),
            FamilySpec::PrismP2(n) => write!(f, "prism2:{n}"),
            FamilySpec::CartesianProduct(a, b) => write!(f, "product:{a},{b}"),
            FamilySpec::Corona(a, b) => write!(f, "corona:{a},{b}"),
            FamilySpec::Join(a, b) => write!(f, "join:{a},{b}"),
            FamilySpec::Tree(edges) => {
                write!(f, "tree:")?;
                for (i, (u, v)) in edges.iter().enumerate() {
                    if i > 0 {
                        write!(f, ".")?;
                    }
                    write!(f, "{u}-{v}")?;
                }
                Ok(())
            }
        }
    }
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let tokens: Vec<&str> = s.split([':', ',']).collect();
        let mut pos = 0;
        let spec = parse_tokens(s, &tokens, &mut pos)?;
        if pos != tokens.len() {
            return Err(FamilyError::Spec(format!("trailing input in `{s}`")));
        }
        Ok(spec)
    }
}

fn parse_tokens(whole: &str, tokens: &[&str], pos: &mut usize) -> Result<FamilySpec, FamilyError> {
    let head = *tokens
        .get(*pos)
        .ok_or_else(|| FamilyError::Spec(format!("unexpected end of `{whole}`")))?;
    *pos += 1;
    let int = |pos: &mut usize| -> Result<usize, FamilyError> {
        let tok = *tokens
            .get(*pos)
            .ok_or_else(|| FamilyError::Spec(format!("`{head}` needs a number in `{whole}`")))?;
        *pos += 1;
        tok.parse()
            .map_err(|_| FamilyError::Spec(format!("`{tok}` is not a number in `{whole}`")))
    };
    match head {
        "path" => Ok(FamilySpec::Path(int(pos)?)),
        "cycle" => Ok(FamilySpec::Cycle(int(pos)?)),
        "complete" => Ok(FamilySpec::Complete(int(pos)?)),
        "kb" => Ok(FamilySpec::CompleteBipartite(int(pos)?, int(pos)?)),
        "star" => Ok(FamilySpec::Star(int(pos)?)),
        "wheel" => Ok(FamilySpec::Wheel(int(pos)?)),
        "fan" => Ok(FamilySpec::Fan(int(pos)?)),
        "grid2" => Ok(FamilySpec::GridP2(int(pos)?)),
        "prism2" => Ok(FamilySpec::PrismP2(int(pos)?)),
        "product" | "corona" | "join" => {
            let a = Box::new(parse_tokens(whole, tokens, pos)?);
            let b = Box::new(parse_tokens(whole, tokens, pos)?);
            Ok(match head {
                "product" => FamilySpec::CartesianProduct(a, b),
                "corona" => FamilySpec::Corona(a, b),
                _ => FamilySpec::Join(a, b),
            })
        }
        "tree" => {
            let tok = *tokens
                .get(*pos)
                .ok_or_else(|| FamilyError::Spec(format!("`tree` needs edges in `{whole}`")))?;
            *pos += 1;
            let mut edges = Vec::new();
            if !tok.is_empty() {
                for part in tok.split('.') {
                    let (u, v) = part
                        .split_once('-')
                        .ok_or_else(|| FamilyError::Spec(format!("bad tree edge `{part}`")))?;
                    let u = u
                        .parse()
                        .map_err(|_| FamilyError::Spec(format!("bad tree edge `{part}`")))?;
                    let v = v
                        .parse()
                        .map_err(|_| FamilyError::Spec(format!("bad tree edge `{part}`")))?;
                    edges.push((u, v));
                }
            }
            Ok(FamilySpec::Tree(edges))
        }
        other => Err(FamilyError::Spec(format!("unknown family `{other}`"))),
    }
}

/// Generates the labeled instance for a spec, under the default vertex cap.
pub fn generate(spec: &FamilySpec) -> Result<Graph, FamilyError> {
    generate_with_cap(spec, DEFAULT_VERTEX_CAP)
}

pub fn generate_with_cap(spec: &FamilySpec, cap: usize) -> Result<Graph, FamilyError> {
    let out_of_range =
        |family: &'static str, detail: String| FamilyError::OutOfRange { family, detail };
    let check_cap = |vertices: usize| {
        if vertices > cap {
            Err(FamilyError::CapExceeded { vertices, cap })
        } else {
            Ok(())
        }
    };
    match spec {
        FamilySpec::Path(n) => {
            if *n < 1 {
                return Err(out_of_range("path", "n >= 1 required".into()));
            }
            check_cap(*n)?;
            let pairs: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
            Ok(Graph::from_edge_list(*n, &pairs)?)
        }
        FamilySpec::Cycle(n) => {
            if *n < 3 {
                return Err(out_of_range("cycle", "n >= 3 required".into()));
            }
            check_cap(*n)?;
            let mut pairs: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
            pairs.push((0, n - 1));
            Ok(Graph::from_edge_list(*n, &pairs)?)
        }
        FamilySpec::Complete(n) => {
            if *n < 1 {
                return Err(out_of_range("complete", "n >= 1 required".into()));
            }
            check_cap(*n)?;
            let pairs: Vec<_> = (0..*n)
                .flat_map(|u| (u + 1..*n).map(move |v| (u, v)))
                .collect();
            Ok(Graph::from_edge_list(*n, &pairs)?)
        }
        FamilySpec::CompleteBipartite(n, m) => {
            if *n < 1 || *m < 1 {
                return Err(out_of_range("kb", "n, m >= 1 required".into()));
            }
            check_cap(n + m)?;
            let pairs: Vec<_> = (0..*n)
                .flat_map(|u| (0..*m).map(move |w| (u, n + w)))
                .collect();
            Ok(Graph::from_edge_list(n + m, &pairs)?)
        }
        FamilySpec::Star(n) => {
            if *n < 1 {
                return Err(out_of_range("star", "n >= 1 required".into()));
            }
            check_cap(n + 1)?;
            let pairs: Vec<_> = (1..=*n).map(|v| (0, v)).collect();
            Ok(Graph::from_edge_list(n + 1, &pairs)?)
        }
        FamilySpec::Wheel(n) => {
            if *n < 3 {
                return Err(out_of_range("wheel", "n >= 3 required".into()));
            }
            check_cap(n + 1)?;
            let mut pairs: Vec<_> = (1..=*n).map(|v| (0, v)).collect();
            pairs.extend((1..*n).map(|v| (v, v + 1)));
            pairs.push((1, *n));
            Ok(Graph::from_edge_list(n + 1, &pairs)?)
        }
        FamilySpec::Fan(n) => {
            if *n < 1 {
                return Err(out_of_range("fan", "n >= 1 required".into()));
            }
            check_cap(n + 1)?;
            let mut pairs: Vec<_> = (1..=*n).map(|v| (0, v)).collect();
            pairs.extend((1..*n).map(|v| (v, v + 1)));
            Ok(Graph::from_edge_list(n + 1, &pairs)?)
        }
        FamilySpec::GridP2(n) => {
            if *n < 1 {
                return Err(out_of_range("grid2", "n >= 1 required".into()));
            }
            check_cap(2 * n)?;
            let mut pairs: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
            pairs.extend((0..n - 1).map(|j| (n + j, n + j + 1)));
            pairs.extend((0..*n).map(|i| (i, n + i)));
            Ok(Graph::from_edge_list(2 * n, &pairs)?)
        }
        FamilySpec::PrismP2(n) => {
            if *n < 3 {
                return Err(out_of_range("prism2", "n >= 3 required".into()));
            }
            check_cap(2 * n)?;
            let mut pairs: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
            pairs.push((0, n - 1));
            pairs.extend((0..n - 1).map(|i| (n + i, n + i + 1)));
            pairs.push((*n, 2 * n - 1));
            pairs.extend((0..*n).map(|i| (i, n + i)));
            Ok(Graph::from_edge_list(2 * n, &pairs)?)
        }
        FamilySpec::CartesianProduct(a, b) => {
            let g = generate_with_cap(a, cap)?;
            let h = generate_with_cap(b, cap)?;
            cartesian_product_with_cap(&g, &h, cap)
        }
        FamilySpec::Corona(a, b) => {
            let g = generate_with_cap(a, cap)?;
            let h = generate_with_cap(b, cap)?;
            corona_with_cap(&g, &h, cap)
        }
        FamilySpec::Join(a, b) => {
            let g = generate_with_cap(a, cap)?;
            let h = generate_with_cap(b, cap)?;
            join_with_cap(&g, &h, cap)
        }
        FamilySpec::Tree(edges) => {
            let n = if edges.is_empty() { 1 } else { edges.len() + 1 };
            check_cap(n)?;
            let g = Graph::from_edge_list(n, edges)?;
            if !g.is_tree() {
                return Err(out_of_range(
                    "tree",
                    "edge list is not a tree on 0..n-1".into(),
                ));
            }
            Ok(g)
        }
    }
}

/// Cartesian product: `(a,b) ~ (a',b')` iff one coordinate agrees and the
/// other pair is an edge. Vertex `(a, b)` gets index `a * |V(h)| + b`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph, FamilyError> {
    cartesian_product_with_cap(g, h, DEFAULT_VERTEX_CAP)
}

fn cartesian_product_with_cap(g: &Graph, h: &Graph, cap: usize) -> Result<Graph, FamilyError> {
    if !g.is_connected() || !h.is_connected() {
        return Err(FamilyError::DisconnectedOperand);
    }
    let (p, q) = (g.n(), h.n());
    let vertices = p * q;
    if vertices > cap {
        return Err(FamilyError::CapExceeded { vertices, cap });
    }
    let mut pairs = Vec::new();
    for a in 0..p {
        for &(b, b2) in h.edges() {
            pairs.push((a * q + b, a * q + b2));
        }
    }
    for &(a, a2) in g.edges() {
        for b in 0..q {
            pairs.push((a * q + b, a2 * q + b));
        }
    }
    Ok(Graph::from_edge_list(vertices, &pairs)?)
}

/// Corona: one copy of `g`, `|V(g)|` copies of `h`, vertex `i` of `g` joined
/// to every vertex of its copy.
pub fn corona(g: &Graph, h: &Graph) -> Result<Graph, FamilyError> {
    corona_with_cap(g, h, DEFAULT_VERTEX_CAP)
}

fn corona_with_cap(g: &Graph, h: &Graph, cap: usize) -> Result<Graph, FamilyError> {
    if !g.is_connected() {
        return Err(FamilyError::DisconnectedOperand);
    }
    let (p, q) = (g.n(), h.n());
    let vertices = p + p * q;
    if vertices > cap {
        return Err(FamilyError::CapExceeded { vertices, cap });
    }
    let mut pairs = g.edges().to_vec();
    for i in 0..p {
        let base = p + i * q;
        for &(u, v) in h.edges() {
            pairs.push((base + u, base + v));
        }
        for j in 0..q {
            pairs.push((i, base + j));
        }
    }
    Ok(Graph::from_edge_list(vertices, &pairs)?)
}

/// Join: disjoint union plus every cross edge.
pub fn join(g: &Graph, h: &Graph) -> Result<Graph, FamilyError> {
    join_with_cap(g, h, DEFAULT_VERTEX_CAP)
}

fn join_with_cap(g: &Graph, h: &Graph, cap: usize) -> Result<Graph, FamilyError> {
    let (p, q) = (g.n(), h.n());
    let vertices = p + q;
    if vertices > cap {
        return Err(FamilyError::CapExceeded { vertices, cap });
    }
    let mut pairs = g.edges().to_vec();
    for &(u, v) in h.edges() {
        pairs.push((p + u, p + v));
    }
    for u in 0..p {
        for v in 0..q {
            pairs.push((u, p + v));
        }
    }
    Ok(Graph::from_edge_list(vertices, &pairs)?)
}

/// Uniform random labeled tree on `n` vertices, decoded from a random
/// generator sequence. Deterministic for a fixed seed.
pub fn random_tree(n: usize, seed: u64) -> Graph {
    assert!(n >= 1, "a tree needs at least one vertex");
    if n == 1 {
        return Graph::from_edge_list(1, &[]).unwrap();
    }
    if n == 2 {
        return Graph::from_edge_list(2, &[(0, 1)]).unwrap();
    }
    let mut rng = SplitMix64::new(seed);
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.below(n as u64) as usize).collect();
    let mut degree = vec![1usize; n];
    for &s in &seq {
        degree[s] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut pairs = Vec::with_capacity(n - 1);
    for &s in &seq {
        let Reverse(leaf) = leaves.pop().expect("sequence decoding always has a leaf");
        pairs.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
        if degree[s] == 1 {
            leaves.push(Reverse(s));
        }
    }
    let Reverse(a) = leaves.pop().unwrap();
    let Reverse(b) = leaves.pop().unwrap();
    pairs.push((a, b));
    Graph::from_edge_list(n, &pairs).expect("decoded sequence is a tree")
}

/// Splittable 64-bit generator; small, seedable and byte-stable across
/// platforms, which keeps verification reports reproducible.
pub(crate) struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub(crate) fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub(crate) fn next(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform draw from `0..bound` by rejection.
    pub(crate) fn below(&mut self, bound: u64) -> u64 {
        debug_assert!(bound > 0);
        let zone = (u64::MAX / bound) * bound;
        loop {
            let x = self.next();
            if x < zone {
                return x % bound;
            }
        }
    }
}

/// Brute-force isomorphism test by backtracking over degree-compatible
/// vertex maps. Intended for generator self-checks at small orders only.
pub fn brute_force_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.m() != b.m() {
        return false;
    }
    let mut da: Vec<_> = (0..a.n()).map(|v| a.degree(v)).collect();
    let mut db: Vec<_> = (0..b.n()).map(|v| b.degree(v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    let mut map = vec![usize::MAX; a.n()];
    let mut used = vec![false; b.n()];
    extend_map(a, b, 0, &mut map, &mut used)
}

fn extend_map(a: &Graph, b: &Graph, v: usize, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
    if v == a.n() {
        return true;
    }
    'cand: for w in 0..b.n() {
        if used[w] || a.degree(v) != b.degree(w) {
            continue;
        }
        for u in 0..v {
            if a.has_edge(u, v) != b.has_edge(map[u], w) {
                continue 'cand;
            }
        }
        map[v] = w;
        used[w] = true;
        if extend_map(a, b, v + 1, map, used) {
            return true;
        }
        map[v] = usize::MAX;
        used[w] = false;
    }
    false
}

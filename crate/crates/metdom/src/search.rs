//! Minimal-monotone-set search engine and the combined dominant parameters.
//!
//! All six invariants reduce to the same question: the smallest vertex set
//! satisfying a predicate that is monotone under supersets. The engine scans
//! cardinalities in ascending order and, within a cardinality, enumerates
//! index tuples in lexicographic order, so the returned witness is canonical:
//! the lexicographically first set of minimum size. The cardinality-`k` space
//! may be partitioned across worker threads by first element; the reduction
//! keeps the earliest stripe's witness, which makes parallel runs return
//! exactly the serial answer.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::time::Duration;
#[cfg(not(target_arch = "wasm32"))]
use std::time::Instant;

use thiserror::Error;

use crate::dominate::{is_dominating, is_ve_dominating};
use crate::graph::{DistanceMatrix, Graph, GraphError};
use crate::resolve::{is_edge_resolving, is_resolving};
use crate::DEFAULT_VERTEX_CAP;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("graph has {n} vertices, above the solver cap of {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("parameter needs at least {need} vertices")]
    TooSmall { need: usize },
    #[error("time budget exhausted while scanning cardinality {proven_lower_bound}; the value is at least that")]
    BudgetExceeded { proven_lower_bound: usize },
    #[error("predicate rejects the full vertex set")]
    FullSetRejected,
}

/// Knobs for the exact searches.
#[derive(Debug, Clone)]
pub struct SearchConfig {
    /// Wall-clock budget per solved parameter. `None` disables the check;
    /// on wasm targets the clock is unavailable and the budget is ignored.
    pub budget: Option<Duration>,
    /// Worker threads for the combination scan. 1 = serial.
    pub workers: usize,
    /// Hard vertex cap; the searches are exponential past desk scale.
    pub max_vertices: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            budget: Some(Duration::from_secs(60)),
            workers: 1,
            max_vertices: DEFAULT_VERTEX_CAP,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    ExactSearch,
    ClosedForm,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::ExactSearch => "exact-search",
            Method::ClosedForm => "closed-form",
        }
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct SearchStats {
    pub combinations: u64,
    pub elapsed: Duration,
}

/// A computed invariant: the value, the canonical witness set, and how it
/// was obtained.
#[derive(Debug, Clone)]
pub struct ParamResult {
    pub value: usize,
    pub witness: Vec<usize>,
    pub method: Method,
    pub stats: SearchStats,
}

/// The six invariants this crate computes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parameter {
    Beta,
    BetaE,
    Gamma,
    GammaVe,
    GammaMd,
    GammaEmd,
}

impl Parameter {
    pub const ALL: [Parameter; 6] = [
        Parameter::Beta,
        Parameter::BetaE,
        Parameter::Gamma,
        Parameter::GammaVe,
        Parameter::GammaMd,
        Parameter::GammaEmd,
    ];

    /// Stable name used in reports, CLI flags and JSON.
    pub fn name(self) -> &'static str {
        match self {
            Parameter::Beta => "beta",
            Parameter::BetaE => "beta_e",
            Parameter::Gamma => "gamma",
            Parameter::GammaVe => "gamma_ve",
            Parameter::GammaMd => "gamma_md",
            Parameter::GammaEmd => "gamma_emd",
        }
    }
}

impl std::fmt::Display for Parameter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy)]
pub(crate) struct Deadline {
    #[cfg(not(target_arch = "wasm32"))]
    at: Option<Instant>,
}

impl Deadline {
    pub(crate) fn from_budget(budget: Option<Duration>) -> Self {
        #[cfg(not(target_arch = "wasm32"))]
        {
            Deadline {
                at: budget.map(|b| Instant::now() + b),
            }
        }
        #[cfg(target_arch = "wasm32")]
        {
            let _ = budget;
            Deadline {}
        }
    }

    fn exceeded(&self) -> bool {
        #[cfg(not(target_arch = "wasm32"))]
        {
            matches!(self.at, Some(t) if Instant::now() > t)
        }
        #[cfg(target_arch = "wasm32")]
        {
            false
        }
    }
}

pub(crate) struct Stopwatch {
    #[cfg(not(target_arch = "wasm32"))]
    start: Instant,
}

impl Stopwatch {
    pub(crate) fn start() -> Self {
        #[cfg(not(target_arch = "wasm32"))]
        {
            Stopwatch {
                start: Instant::now(),
            }
        }
        #[cfg(target_arch = "wasm32")]
        {
            Stopwatch {}
        }
    }

    pub(crate) fn elapsed(&self) -> Duration {
        #[cfg(not(target_arch = "wasm32"))]
        {
            self.start.elapsed()
        }
        #[cfg(target_arch = "wasm32")]
        {
            Duration::ZERO
        }
    }
}

/// Smallest set of `0..n` satisfying a superset-monotone predicate.
///
/// Scans cardinalities `lower_bound..=n` and returns the lexicographically
/// first witness at the minimal size. The predicate must accept the full
/// vertex set; that is checked up front and rejected loudly since it signals
/// a caller bug rather than an unsatisfiable instance.
pub fn minimal_monotone_set<P>(
    n: usize,
    lower_bound: usize,
    predicate: P,
    cfg: &SearchConfig,
) -> Result<ParamResult, SolveError>
where
    P: Fn(&[usize]) -> bool + Sync,
{
    if n == 0 {
        return Err(SolveError::TooSmall { need: 1 });
    }
    if n > cfg.max_vertices {
        return Err(SolveError::TooLarge {
            n,
            cap: cfg.max_vertices,
        });
    }
    let watch = Stopwatch::start();
    let deadline = Deadline::from_budget(cfg.budget);
    let (value, witness, combinations) = solve(n, lower_bound, &predicate, cfg.workers, deadline)?;
    Ok(ParamResult {
        value,
        witness,
        method: Method::ExactSearch,
        stats: SearchStats {
            combinations,
            elapsed: watch.elapsed(),
        },
    })
}

/// Engine entry shared by all solvers. Returns `(k, witness, combinations)`.
pub(crate) fn solve<P>(
    n: usize,
    lower_bound: usize,
    predicate: &P,
    workers: usize,
    deadline: Deadline,
) -> Result<(usize, Vec<usize>, u64), SolveError>
where
    P: Fn(&[usize]) -> bool + Sync,
{
    let full: Vec<usize> = (0..n).collect();
    if !predicate(&full) {
        return Err(SolveError::FullSetRejected);
    }
    let combos = AtomicU64::new(1);
    let lb = lower_bound.clamp(1, n);
    let workers = effective_workers(workers);
    for k in lb..=n {
        if deadline.exceeded() {
            return Err(SolveError::BudgetExceeded {
                proven_lower_bound: k,
            });
        }
        let found = if workers <= 1 || n - k == 0 {
            scan_serial(n, k, predicate, deadline, &combos)
        } else {
            scan_parallel(n, k, predicate, workers, deadline, &combos)
        };
        match found {
            Ok(Some(witness)) => return Ok((k, witness, combos.load(Ordering::Relaxed))),
            Ok(None) => {}
            Err(()) => {
                return Err(SolveError::BudgetExceeded {
                    proven_lower_bound: k,
                })
            }
        }
    }
    unreachable!("the full vertex set satisfies the predicate");
}

fn effective_workers(workers: usize) -> usize {
    if cfg!(target_arch = "wasm32") {
        1
    } else {
        workers.max(1)
    }
}

/// Advances a sorted index tuple whose entries stay below `n`, with the
/// first `fixed` entries pinned. Standard lexicographic successor.
fn next_combination(idx: &mut [usize], n: usize, fixed: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > fixed {
        i -= 1;
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn scan_serial<P>(
    n: usize,
    k: usize,
    predicate: &P,
    deadline: Deadline,
    combos: &AtomicU64,
) -> Result<Option<Vec<usize>>, ()>
where
    P: Fn(&[usize]) -> bool + Sync,
{
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let seen = combos.fetch_add(1, Ordering::Relaxed);
        if seen.is_multiple_of(4096) && deadline.exceeded() {
            return Err(());
        }
        if predicate(&idx) {
            return Ok(Some(idx));
        }
        if !next_combination(&mut idx, n, 0) {
            return Ok(None);
        }
    }
}

fn scan_parallel<P>(
    n: usize,
    k: usize,
    predicate: &P,
    workers: usize,
    deadline: Deadline,
    combos: &AtomicU64,
) -> Result<Option<Vec<usize>>, ()>
where
    P: Fn(&[usize]) -> bool + Sync,
{
    // Stripe = the fixed first element of the tuple. Any hit in stripe f is
    // lexicographically before every hit in stripes > f, so the reduction
    // keeps the hit from the smallest stripe and is schedule independent.
    let stripe_count = n - k + 1;
    let next_stripe = AtomicUsize::new(0);
    let best_stripe = AtomicUsize::new(usize::MAX);
    let over_budget = AtomicBool::new(false);
    let mut results: Vec<Option<Vec<usize>>> = Vec::new();
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers.min(stripe_count))
            .map(|_| {
                scope.spawn(|| {
                    let mut local: Option<(usize, Vec<usize>)> = None;
                    loop {
                        let f = next_stripe.fetch_add(1, Ordering::Relaxed);
                        if f >= stripe_count
                            || f > best_stripe.load(Ordering::Relaxed)
                            || over_budget.load(Ordering::Relaxed)
                        {
                            break;
                        }
                        match scan_stripe(n, k, f, predicate, deadline, &best_stripe, combos) {
                            Ok(Some(witness)) => {
                                best_stripe.fetch_min(f, Ordering::Relaxed);
                                local = Some((f, witness));
                            }
                            Ok(None) => {}
                            Err(()) => {
                                over_budget.store(true, Ordering::Relaxed);
                                break;
                            }
                        }
                    }
                    local
                })
            })
            .collect();
        results = handles
            .into_iter()
            .map(|h| h.join().expect("search worker panicked"))
            .map(|r| r.map(|(_, w)| w))
            .collect::<Vec<_>>();
    });
    if over_budget.load(Ordering::Relaxed) {
        return Err(());
    }
    let best = best_stripe.load(Ordering::Relaxed);
    if best == usize::MAX {
        return Ok(None);
    }
    let witness = results
        .into_iter()
        .flatten()
        .filter(|w| w[0] == best)
        .min()
        .expect("winning stripe recorded a witness");
    Ok(Some(witness))
}

fn scan_stripe<P>(
    n: usize,
    k: usize,
    first: usize,
    predicate: &P,
    deadline: Deadline,
    best_stripe: &AtomicUsize,
    combos: &AtomicU64,
) -> Result<Option<Vec<usize>>, ()>
where
    P: Fn(&[usize]) -> bool + Sync,
{
    let mut idx: Vec<usize> = std::iter::once(first).chain(first + 1..first + k).collect();
    loop {
        let seen = combos.fetch_add(1, Ordering::Relaxed);
        if seen.is_multiple_of(4096) {
            if deadline.exceeded() {
                return Err(());
            }
            if best_stripe.load(Ordering::Relaxed) < first {
                return Ok(None);
            }
        }
        if predicate(&idx) {
            return Ok(Some(idx));
        }
        if !next_combination(&mut idx, n, 1) {
            return Ok(None);
        }
    }
}

/// Dominating and resolving at the same time.
pub fn is_dominant_resolving(g: &Graph, dm: &DistanceMatrix, set: &[usize]) -> bool {
    is_dominating(g, set) && is_resolving(dm, set)
}

/// Vertex-edge dominating and edge resolving at the same time.
pub fn is_ve_dominant_edge_resolving(g: &Graph, dm: &DistanceMatrix, set: &[usize]) -> bool {
    is_ve_dominating(g, dm, set) && is_edge_resolving(g, dm, set)
}

pub(crate) fn check_cap(g: &Graph, cfg: &SearchConfig) -> Result<(), SolveError> {
    if g.n() > cfg.max_vertices {
        return Err(SolveError::TooLarge {
            n: g.n(),
            cap: cfg.max_vertices,
        });
    }
    Ok(())
}

/// Exact dominant metric dimension. The domination and metric dimension
/// searches run first; their maximum is a valid floor for the combined
/// search and prunes it substantially.
pub fn dominant_metric_dimension(g: &Graph, cfg: &SearchConfig) -> Result<ParamResult, SolveError> {
    check_cap(g, cfg)?;
    if g.n() < 2 {
        return Err(SolveError::TooSmall { need: 2 });
    }
    let dm = DistanceMatrix::new(g)?;
    let watch = Stopwatch::start();
    let deadline = Deadline::from_budget(cfg.budget);
    let workers = cfg.workers;
    let (gamma, _, c1) = solve(
        g.n(),
        1,
        &|s: &[usize]| is_dominating(g, s),
        workers,
        deadline,
    )?;
    let (beta, _, c2) = solve(
        g.n(),
        1,
        &|s: &[usize]| is_resolving(&dm, s),
        workers,
        deadline,
    )?;
    dominant_metric_dimension_from(g, &dm, gamma.max(beta), cfg, deadline).map(|mut r| {
        r.stats.combinations += c1 + c2;
        r.stats.elapsed = watch.elapsed();
        r
    })
}

pub(crate) fn dominant_metric_dimension_from(
    g: &Graph,
    dm: &DistanceMatrix,
    lower_bound: usize,
    cfg: &SearchConfig,
    deadline: Deadline,
) -> Result<ParamResult, SolveError> {
    let watch = Stopwatch::start();
    let (value, witness, combinations) = solve(
        g.n(),
        lower_bound,
        &|s: &[usize]| is_dominant_resolving(g, dm, s),
        cfg.workers,
        deadline,
    )?;
    Ok(ParamResult {
        value,
        witness,
        method: Method::ExactSearch,
        stats: SearchStats {
            combinations,
            elapsed: watch.elapsed(),
        },
    })
}

/// Exact vertex-edge dominant edge metric dimension, the combined parameter.
/// Its floor is `max(gamma_ve, beta_e)`, both computed exactly first.
pub fn ve_dominant_edge_metric_dimension(
    g: &Graph,
    cfg: &SearchConfig,
) -> Result<ParamResult, SolveError> {
    check_cap(g, cfg)?;
    if g.m() == 0 {
        return Err(SolveError::Graph(GraphError::NoEdges));
    }
    let dm = DistanceMatrix::new(g)?;
    let watch = Stopwatch::start();
    let deadline = Deadline::from_budget(cfg.budget);
    let workers = cfg.workers;
    let (gamma_ve, _, c1) = solve(
        g.n(),
        1,
        &|s: &[usize]| is_ve_dominating(g, &dm, s),
        workers,
        deadline,
    )?;
    let (beta_e, _, c2) = solve(
        g.n(),
        1,
        &|s: &[usize]| is_edge_resolving(g, &dm, s),
        workers,
        deadline,
    )?;
    ve_dominant_edge_metric_dimension_from(g, &dm, gamma_ve.max(beta_e), cfg, deadline).map(
        |mut r| {
            r.stats.combinations += c1 + c2;
            r.stats.elapsed = watch.elapsed();
            r
        },
    )
}

pub(crate) fn ve_dominant_edge_metric_dimension_from(
    g: &Graph,
    dm: &DistanceMatrix,
    lower_bound: usize,
    cfg: &SearchConfig,
    deadline: Deadline,
) -> Result<ParamResult, SolveError> {
    let watch = Stopwatch::start();
    let (value, witness, combinations) = solve(
        g.n(),
        lower_bound,
        &|s: &[usize]| is_ve_dominant_edge_resolving(g, dm, s),
        cfg.workers,
        deadline,
    )?;
    Ok(ParamResult {
        value,
        witness,
        method: Method::ExactSearch,
        stats: SearchStats {
            combinations,
            elapsed: watch.elapsed(),
        },
    })
}

/// One invariant by name.
pub fn compute(
    parameter: Parameter,
    g: &Graph,
    cfg: &SearchConfig,
) -> Result<ParamResult, SolveError> {
    match parameter {
        Parameter::Beta => crate::resolve::metric_dimension(g, cfg),
        Parameter::BetaE => crate::resolve::edge_metric_dimension(g, cfg),
        Parameter::Gamma => crate::dominate::domination_number(g, cfg),
        Parameter::GammaVe => crate::dominate::ve_domination_number(g, cfg),
        Parameter::GammaMd => dominant_metric_dimension(g, cfg),
        Parameter::GammaEmd => ve_dominant_edge_metric_dimension(g, cfg),
    }
}

/// All six invariants of one connected graph with at least one edge.
#[derive(Debug, Clone)]
pub struct AllParams {
    pub beta: ParamResult,
    pub beta_e: ParamResult,
    pub gamma: ParamResult,
    pub gamma_ve: ParamResult,
    pub gamma_md: ParamResult,
    pub gamma_emd: ParamResult,
}

impl AllParams {
    pub fn get(&self, parameter: Parameter) -> &ParamResult {
        match parameter {
            Parameter::Beta => &self.beta,
            Parameter::BetaE => &self.beta_e,
            Parameter::Gamma => &self.gamma,
            Parameter::GammaVe => &self.gamma_ve,
            Parameter::GammaMd => &self.gamma_md,
            Parameter::GammaEmd => &self.gamma_emd,
        }
    }
}

/// Computes all six invariants, reusing the plain parameters as floors for
/// the combined ones.
pub fn compute_all(g: &Graph, cfg: &SearchConfig) -> Result<AllParams, SolveError> {
    check_cap(g, cfg)?;
    if g.n() < 2 {
        return Err(SolveError::TooSmall { need: 2 });
    }
    if g.m() == 0 {
        return Err(SolveError::Graph(GraphError::NoEdges));
    }
    let dm = DistanceMatrix::new(g)?;
    let beta = crate::resolve::metric_dimension(g, cfg)?;
    let beta_e = crate::resolve::edge_metric_dimension(g, cfg)?;
    let gamma = crate::dominate::domination_number(g, cfg)?;
    let gamma_ve = crate::dominate::ve_domination_number(g, cfg)?;
    let gamma_md = dominant_metric_dimension_from(
        g,
        &dm,
        gamma.value.max(beta.value),
        cfg,
        Deadline::from_budget(cfg.budget),
    )?;
    let gamma_emd = ve_dominant_edge_metric_dimension_from(
        g,
        &dm,
        gamma_ve.value.max(beta_e.value),
        cfg,
        Deadline::from_budget(cfg.budget),
    )?;
    Ok(AllParams {
        beta,
        beta_e,
        gamma,
        gamma_ve,
        gamma_md,
        gamma_emd,
    })
}

//! Closed-form predicted values for the family theorems, each with an
//! explicit domain of validity, plus the legs rule for trees and the bound
//! suite.
//!
//! `predict` answers only inside a formula's stated validity range and
//! returns `None` everywhere else; it never extrapolates. The verification
//! harness treats these values as claims to check against the exact solver,
//! not as ground truth.

use thiserror::Error;

use crate::families::{generate, FamilySpec};
use crate::graph::{DistanceMatrix, Graph};
use crate::search::{AllParams, Parameter};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormulaError {
    #[error("input is not a tree")]
    NotATree,
    #[error("the legs rule excludes path graphs")]
    PathInput,
}

/// A closed-form value for one (parameter, family instance) pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prediction {
    pub parameter: Parameter,
    pub value: usize,
    /// Stable rule identifier, also used as a theorem id in reports.
    pub rule: &'static str,
    /// Human-readable validity condition of the rule.
    pub validity: &'static str,
}

fn pred(
    parameter: Parameter,
    value: usize,
    rule: &'static str,
    validity: &'static str,
) -> Option<Prediction> {
    Some(Prediction {
        parameter,
        value,
        rule,
        validity,
    })
}

fn floor_div(a: usize, b: usize) -> usize {
    a / b
}

fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

/// Closed-form value of `parameter` on the instance described by `family`,
/// or `None` when no stated formula covers it.
pub fn predict(parameter: Parameter, family: &FamilySpec) -> Option<Prediction> {
    use FamilySpec::*;
    use Parameter::*;
    match (parameter, family) {
        // Metric dimension.
        (Beta, Path(n)) if *n >= 2 => pred(Beta, 1, "beta-path", "n >= 2"),
        (Beta, Cycle(n)) if *n >= 3 => pred(Beta, 2, "beta-cycle", "n >= 3"),
        (Beta, Complete(n)) if *n >= 2 => pred(Beta, n - 1, "beta-complete", "n >= 2"),
        (Beta, CompleteBipartite(n, m)) if *n >= 2 && *m >= 2 => {
            pred(Beta, n + m - 2, "beta-bipartite", "n, m >= 2")
        }
        (Beta, Star(n)) if *n >= 2 => pred(Beta, n - 1, "beta-star", "n >= 2"),
        (Beta, Wheel(n)) if *n >= 7 => pred(Beta, floor_div(2 * n + 2, 5), "beta-wheel", "n >= 7"),
        (Beta, Fan(n)) if *n >= 7 => pred(Beta, floor_div(2 * n + 2, 5), "beta-fan", "n >= 7"),

        // Edge metric dimension.
        (BetaE, Path(n)) if *n >= 2 => pred(BetaE, 1, "beta-e-path", "n >= 2"),
        (BetaE, Cycle(n)) if *n >= 3 => pred(BetaE, 2, "beta-e-cycle", "n >= 3"),
        (BetaE, Complete(n)) if *n >= 2 => pred(BetaE, n - 1, "beta-e-complete", "n >= 2"),
        (BetaE, CompleteBipartite(n, m)) if *n >= 2 && *m >= 2 => {
            pred(BetaE, n + m - 2, "beta-e-bipartite", "n, m >= 2")
        }
        (BetaE, Star(n)) if *n >= 3 => pred(BetaE, n - 1, "beta-e-star", "n >= 3"),
        (BetaE, Wheel(n)) if *n >= 3 => {
            let v = if *n <= 4 { *n } else { n - 1 };
            pred(BetaE, v, "beta-e-wheel", "n >= 3")
        }
        (BetaE, Fan(n)) if *n >= 1 => {
            let v = if *n <= 3 { *n } else { n - 1 };
            pred(BetaE, v, "beta-e-fan", "n >= 1")
        }
        (BetaE, GridP2(n)) if *n >= 2 => pred(BetaE, 2, "beta-e-grid", "n >= 2"),
        (BetaE, PrismP2(n)) if *n >= 3 => pred(BetaE, 3, "beta-e-prism", "n >= 3"),
        (BetaE, Corona(a, b)) => {
            let (g, h) = (generate(a).ok()?, generate(b).ok()?);
            if g.is_connected() && h.n() >= 2 {
                pred(
                    BetaE,
                    g.n() * (h.n() - 1),
                    "beta-e-corona",
                    "g connected, |V(h)| >= 2",
                )
            } else {
                None
            }
        }
        (BetaE, Join(a, b)) => {
            let (g, h) = (generate(a).ok()?, generate(b).ok()?);
            if g.is_connected() && h.is_connected() {
                pred(
                    BetaE,
                    g.n() + h.n() - 1,
                    "beta-e-join",
                    "both operands connected",
                )
            } else {
                None
            }
        }

        // Domination number.
        (Gamma, Path(n)) if *n >= 1 => pred(Gamma, ceil_div(*n, 3), "gamma-path", "n >= 1"),
        (Gamma, Cycle(n)) if *n >= 3 => pred(Gamma, ceil_div(*n, 3), "gamma-cycle", "n >= 3"),
        (Gamma, Complete(n)) if *n >= 1 => pred(Gamma, 1, "gamma-complete", "n >= 1"),
        (Gamma, CompleteBipartite(n, m)) if *n >= 1 && *m >= 1 => {
            let v = if *n.min(m) == 1 { 1 } else { 2 };
            pred(Gamma, v, "gamma-bipartite", "n, m >= 1")
        }
        (Gamma, Star(n)) if *n >= 1 => pred(Gamma, 1, "gamma-star", "n >= 1"),
        (Gamma, Wheel(n)) if *n >= 3 => pred(Gamma, 1, "gamma-wheel", "n >= 3"),
        (Gamma, Fan(n)) if *n >= 1 => pred(Gamma, 1, "gamma-fan", "n >= 1"),

        // Vertex-edge domination number.
        (GammaVe, Path(n)) if *n >= 2 => {
            pred(GammaVe, floor_div(n + 2, 4), "gamma-ve-path", "n >= 2")
        }
        (GammaVe, Cycle(n)) if *n >= 3 => {
            pred(GammaVe, floor_div(n + 3, 4), "gamma-ve-cycle", "n >= 3")
        }
        (GammaVe, Complete(n)) if *n >= 2 => pred(GammaVe, 1, "gamma-ve-complete", "n >= 2"),
        (GammaVe, CompleteBipartite(n, m)) if *n >= 2 && *m >= 2 => {
            pred(GammaVe, 1, "gamma-ve-bipartite", "n, m >= 2")
        }
        (GammaVe, Star(n)) if *n >= 1 => pred(GammaVe, 1, "gamma-ve-star", "n >= 1"),
        (GammaVe, Wheel(n)) if *n >= 3 => pred(GammaVe, 1, "gamma-ve-wheel", "n >= 3"),
        (GammaVe, Fan(n)) if *n >= 1 => pred(GammaVe, 1, "gamma-ve-fan", "n >= 1"),
        (GammaVe, GridP2(n)) if *n >= 1 => {
            pred(GammaVe, ceil_div(*n, 3), "gamma-ve-grid", "n >= 1")
        }
        (GammaVe, PrismP2(n)) if *n >= 4 => {
            pred(GammaVe, ceil_div(3 * n, 9), "gamma-ve-prism", "n >= 4")
        }
        (GammaVe, Corona(a, b)) => {
            let (g, h) = (generate(a).ok()?, generate(b).ok()?);
            if g.is_connected() && h.is_connected() && h.n() >= 2 {
                pred(
                    GammaVe,
                    g.n(),
                    "gamma-ve-corona",
                    "both connected, |V(h)| >= 2",
                )
            } else {
                None
            }
        }
        // The stated case split: 1 when an operand is complete, else 2. The
        // split is checked as a claim; a universal vertex can arise in a join
        // without either operand being complete.
        (GammaVe, Join(a, b)) => {
            let (g, h) = (generate(a).ok()?, generate(b).ok()?);
            if g.is_connected() && h.is_connected() {
                let v = if g.is_complete() || h.is_complete() {
                    1
                } else {
                    2
                };
                pred(GammaVe, v, "gamma-ve-join", "both operands connected")
            } else {
                None
            }
        }

        // Dominant metric dimension.
        (GammaMd, Path(n)) if *n >= 2 => {
            let v = match n {
                2 => 1,
                3 | 4 => 2,
                _ => ceil_div(*n, 3),
            };
            pred(GammaMd, v, "gamma-md-path", "n >= 2")
        }
        (GammaMd, Cycle(n)) if *n >= 3 => {
            let v = match n {
                3..=5 => 2,
                6 => 3,
                _ => ceil_div(*n, 3),
            };
            pred(GammaMd, v, "gamma-md-cycle", "n >= 3")
        }
        (GammaMd, Star(n)) if *n >= 2 => pred(GammaMd, *n, "gamma-md-star", "n >= 2"),
        (GammaMd, Complete(n)) if *n >= 2 => pred(GammaMd, n - 1, "gamma-md-complete", "n >= 2"),
        (GammaMd, CompleteBipartite(n, m)) if *n >= 2 && *m >= 2 => {
            pred(GammaMd, n + m - 2, "gamma-md-bipartite", "n, m >= 2")
        }
        (GammaMd, Wheel(n)) if *n >= 7 => {
            let beta = floor_div(2 * n + 2, 5);
            let v = if matches!(n % 5, 0 | 2 | 4) {
                beta
            } else {
                beta + 1
            };
            pred(GammaMd, v, "gamma-md-wheel", "n >= 7")
        }
        (GammaMd, Fan(n)) if *n >= 7 => {
            let beta = floor_div(2 * n + 2, 5);
            let v = if matches!(n % 5, 0 | 2 | 4) {
                beta
            } else {
                beta + 1
            };
            pred(GammaMd, v, "gamma-md-fan", "n >= 7")
        }

        // Vertex-edge dominant edge metric dimension.
        (GammaEmd, Path(n)) if *n >= 2 => {
            let v = match n {
                2 | 3 => 1,
                4 | 5 => 2,
                _ => floor_div(n + 2, 4),
            };
            pred(GammaEmd, v, "gamma-emd-path", "n >= 2")
        }
        (GammaEmd, Cycle(n)) if *n >= 3 => {
            let v = match n {
                3..=7 => 2,
                8 => 3,
                _ => floor_div(n + 3, 4),
            };
            pred(GammaEmd, v, "gamma-emd-cycle", "n >= 3")
        }
        (GammaEmd, Complete(n)) if *n >= 2 => pred(GammaEmd, n - 1, "gamma-emd-complete", "n >= 2"),
        (GammaEmd, CompleteBipartite(n, m)) if *n >= 2 && *m >= 2 => {
            pred(GammaEmd, n + m - 2, "gamma-emd-bipartite", "n, m >= 2")
        }
        (GammaEmd, Star(n)) if *n >= 3 => pred(GammaEmd, n - 1, "gamma-emd-star", "n >= 3"),
        (GammaEmd, Wheel(n)) if *n >= 5 => pred(GammaEmd, n - 1, "gamma-emd-wheel", "n >= 5"),
        (GammaEmd, Fan(n)) if *n >= 5 => pred(GammaEmd, n - 1, "gamma-emd-fan", "n >= 5"),
        (GammaEmd, GridP2(n)) if *n >= 1 => {
            let v = match n {
                1 => 1,
                2 => 2,
                3..=6 => 3,
                _ => ceil_div(*n, 3),
            };
            pred(GammaEmd, v, "gamma-emd-grid", "n >= 1")
        }
        (GammaEmd, PrismP2(n)) if *n >= 4 => {
            let v = if *n <= 9 {
                ceil_div(3 * n, 9) + 1
            } else {
                ceil_div(3 * n, 9)
            };
            pred(GammaEmd, v, "gamma-emd-prism", "n >= 4")
        }
        (GammaEmd, Corona(a, b)) => {
            let (g, h) = (generate(a).ok()?, generate(b).ok()?);
            if g.is_connected() && h.is_connected() && h.n() >= 2 {
                pred(
                    GammaEmd,
                    g.n() * (h.n() - 1),
                    "gamma-emd-corona",
                    "both connected, |V(h)| >= 2",
                )
            } else {
                None
            }
        }
        (GammaEmd, Join(a, b)) => {
            let (g, h) = (generate(a).ok()?, generate(b).ok()?);
            if g.is_connected() && h.is_connected() {
                pred(
                    GammaEmd,
                    g.n() + h.n() - 1,
                    "gamma-emd-join",
                    "both operands connected",
                )
            } else {
                None
            }
        }

        _ => None,
    }
}

/// The legs rule for the edge metric dimension of a non-path tree.
///
/// A leg at `v` is a component of `t - v` that is a path attached to `v` at
/// one of its endpoints. With `l_v` legs at `v`, the value is the sum of
/// `l_v - 1` over all vertices with more than one leg.
pub fn tree_legs_edge_metric_dimension(t: &Graph) -> Result<usize, FormulaError> {
    if !t.is_tree() {
        return Err(FormulaError::NotATree);
    }
    if t.is_path_graph() {
        return Err(FormulaError::PathInput);
    }
    let mut total = 0;
    for v in 0..t.n() {
        let legs = t
            .neighbors(v)
            .iter()
            .filter(|&&nb| component_is_leg(t, v, nb))
            .count();
        if legs > 1 {
            total += legs - 1;
        }
    }
    Ok(total)
}

/// Walks the component of `t - v` containing `nb` and decides whether it is
/// a path entered at an endpoint. In a tree the inside degree of `nb` is its
/// degree minus the removed edge to `v`; every other component vertex keeps
/// its full degree.
fn component_is_leg(t: &Graph, v: usize, nb: usize) -> bool {
    if t.degree(nb) > 2 {
        return false;
    }
    let mut stack = vec![nb];
    let mut seen = vec![false; t.n()];
    seen[v] = true;
    seen[nb] = true;
    while let Some(x) = stack.pop() {
        for &w in t.neighbors(x) {
            if !seen[w] {
                if t.degree(w) > 2 {
                    return false;
                }
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    true
}

/// Plain value view of the six computed invariants.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParamValues {
    pub beta: usize,
    pub beta_e: usize,
    pub gamma: usize,
    pub gamma_ve: usize,
    pub gamma_md: usize,
    pub gamma_emd: usize,
}

impl From<&AllParams> for ParamValues {
    fn from(all: &AllParams) -> Self {
        ParamValues {
            beta: all.beta.value,
            beta_e: all.beta_e.value,
            gamma: all.gamma.value,
            gamma_ve: all.gamma_ve.value,
            gamma_md: all.gamma_md.value,
            gamma_emd: all.gamma_emd.value,
        }
    }
}

/// One evaluated bound. For inequalities `slack` is the nonnegative margin
/// (0 = tight) and goes negative exactly when the bound is violated; for
/// implications and membership checks it is 0 when satisfied and -1 when not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundCheck {
    pub id: &'static str,
    pub holds: bool,
    pub slack: i64,
}

pub const BOUND_IDS: &[&str] = &[
    "md-sandwich-lower",
    "md-sandwich-upper",
    "emd-sandwich-lower",
    "emd-sandwich-upper",
    "gamma-ve-le-gamma",
    "ve-lower-max-degree",
    "ve-upper-size",
    "beta-e-le-n-minus-gamma-ve",
    "emd-upper-order",
    "emd-lower-order",
    "emd-universal-vertex",
    "emd-two-universal",
    "beta-e-max-implies-diameter-two",
    "beta-e-max-implies-triangles",
    "beta-e-regular-lower",
    "ve-one-criterion",
    "tree-ve-lower",
    "tree-ve-upper",
    "tree-emd-lower",
    "tree-emd-upper",
];

fn ineq(id: &'static str, slack: i64) -> BoundCheck {
    BoundCheck {
        id,
        holds: slack >= 0,
        slack,
    }
}

fn implication(id: &'static str, holds: bool) -> BoundCheck {
    BoundCheck {
        id,
        holds,
        slack: if holds { 0 } else { -1 },
    }
}

fn ceil_log2(x: usize) -> usize {
    debug_assert!(x >= 1);
    (usize::BITS - (x - 1).leading_zeros()) as usize
}

/// Evaluates every applicable bound on a connected graph whose six
/// invariants have been computed exactly. `emd-lower-order` is a claim under
/// test like the rest: a violation is reported, not asserted away.
pub fn bound_checks(g: &Graph, dm: &DistanceMatrix, p: &ParamValues) -> Vec<BoundCheck> {
    let n = g.n() as i64;
    let m = g.m() as i64;
    let delta = g.max_degree() as i64;
    let small_delta = g.min_degree() as i64;
    let (beta, beta_e) = (p.beta as i64, p.beta_e as i64);
    let (gamma, gamma_ve) = (p.gamma as i64, p.gamma_ve as i64);
    let (gamma_md, gamma_emd) = (p.gamma_md as i64, p.gamma_emd as i64);

    // Doubled to keep the half-integer term of the size bound exact.
    let upper2 = 2 * m - 2 * delta - delta * (small_delta - 1) + 2;
    let mut out = vec![
        ineq("md-sandwich-lower", gamma_md - gamma.max(beta)),
        ineq("md-sandwich-upper", gamma + beta - gamma_md),
        ineq("emd-sandwich-lower", gamma_emd - gamma_ve.max(beta_e)),
        ineq("emd-sandwich-upper", gamma_ve + beta_e - gamma_emd),
        ineq("gamma-ve-le-gamma", gamma - gamma_ve),
        ineq(
            "ve-lower-max-degree",
            gamma_ve - (m + delta * delta - 1).div_euclid(delta * delta),
        ),
        ineq("ve-upper-size", (upper2 - 2 * gamma_ve).div_euclid(2)),
        ineq("beta-e-le-n-minus-gamma-ve", n - gamma_ve - beta_e),
        ineq("emd-upper-order", n - 1 - gamma_emd),
        ineq("emd-lower-order", gamma_emd - (n + 2).div_euclid(4)),
    ];

    if delta == n - 1 {
        out.push(implication(
            "emd-universal-vertex",
            gamma_emd == n - 1 || gamma_emd == n - 2,
        ));
        let universal = (0..g.n()).filter(|&v| g.degree(v) == g.n() - 1).count();
        if universal >= 2 {
            out.push(implication("emd-two-universal", gamma_emd == n - 1));
        }
    }

    // The maximal-beta_e implications concern graphs where n-1 >= 2; the
    // single-edge graph has beta_e = n-1 = 1 vacuously and no triangles.
    // Complete graphs have diameter 1, so the diameter clause is "at most 2".
    if beta_e == n - 1 && g.n() >= 3 {
        out.push(implication(
            "beta-e-max-implies-diameter-two",
            dm.diameter() <= 2,
        ));
        let all_on_triangles = g
            .edge_refs()
            .all(|e| g.neighbors(e.u).iter().any(|&w| g.has_edge(w, e.v)));
        out.push(implication(
            "beta-e-max-implies-triangles",
            all_on_triangles,
        ));
    }

    if delta == small_delta && delta >= 1 {
        out.push(ineq(
            "beta-e-regular-lower",
            beta_e - 1 - ceil_log2(delta as usize) as i64,
        ));
    }

    out.push(implication(
        "ve-one-criterion",
        (gamma_ve == 1) == ve_one_structural_criterion(g, dm),
    ));

    if g.is_tree() {
        let quarter = (m + 3).div_euclid(4);
        out.push(ineq("tree-ve-lower", gamma_ve - quarter));
        out.push(ineq("tree-ve-upper", n - delta - gamma_ve));
        out.push(ineq("tree-emd-lower", gamma_emd - quarter));
        out.push(ineq("tree-emd-upper", n - 1 - gamma_emd));
    }
    out
}

/// Structural characterization of `gamma_ve == 1`: some vertex sees every
/// other vertex within distance two, and its distance-two shell is an
/// independent set.
fn ve_one_structural_criterion(g: &Graph, dm: &DistanceMatrix) -> bool {
    (0..g.n()).any(|x| {
        let within = (0..g.n()).all(|y| dm.get(x, y) <= 2);
        if !within {
            return false;
        }
        let shell: Vec<usize> = (0..g.n()).filter(|&y| dm.get(x, y) == 2).collect();
        shell
            .iter()
            .all(|&a| shell.iter().all(|&b| a == b || !g.has_edge(a, b)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::generate;
    use crate::search::{compute_all, SearchConfig};

    fn spec(s: &str) -> FamilySpec {
        s.parse().unwrap()
    }

    #[test]
    fn predict_examples() {
        assert_eq!(
            predict(Parameter::GammaEmd, &spec("cycle:12"))
                .unwrap()
                .value,
            3
        );
        assert_eq!(
            predict(Parameter::GammaEmd, &spec("grid2:9"))
                .unwrap()
                .value,
            3
        );
        assert_eq!(
            predict(Parameter::GammaMd, &spec("wheel:10"))
                .unwrap()
                .value,
            4
        );
        assert_eq!(predict(Parameter::GammaEmd, &spec("path:1")), None);
        assert_eq!(predict(Parameter::GammaMd, &spec("wheel:6")), None);
        assert_eq!(
            predict(Parameter::GammaEmd, &spec("prism2:9"))
                .unwrap()
                .value,
            4
        );
        assert_eq!(
            predict(Parameter::GammaEmd, &spec("prism2:10"))
                .unwrap()
                .value,
            4
        );
        assert_eq!(
            predict(Parameter::BetaE, &spec("corona:path:3,path:2"))
                .unwrap()
                .value,
            3
        );
        assert_eq!(
            predict(Parameter::GammaVe, &spec("join:path:3,path:3"))
                .unwrap()
                .value,
            2
        );
        assert_eq!(
            predict(Parameter::GammaVe, &spec("join:complete:1,cycle:5"))
                .unwrap()
                .value,
            1
        );
    }

    #[test]
    fn legs_rule() {
        let star = generate(&spec("star:4")).unwrap();
        assert_eq!(tree_legs_edge_metric_dimension(&star).unwrap(), 3);

        // Spider with three legs of length two.
        let spider =
            Graph::from_edge_list(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        assert_eq!(tree_legs_edge_metric_dimension(&spider).unwrap(), 2);

        let path = generate(&spec("path:6")).unwrap();
        assert_eq!(
            tree_legs_edge_metric_dimension(&path),
            Err(FormulaError::PathInput)
        );
        let cycle = generate(&spec("cycle:5")).unwrap();
        assert_eq!(
            tree_legs_edge_metric_dimension(&cycle),
            Err(FormulaError::NotATree)
        );

        // A caterpillar: legs can attach mid-path without counting twice.
        let cat = Graph::from_edge_list(6, &[(0, 1), (1, 2), (2, 3), (1, 4), (2, 5)]).unwrap();
        assert_eq!(tree_legs_edge_metric_dimension(&cat).unwrap(), 2);
    }

    #[test]
    fn bound_examples() {
        let cfg = SearchConfig::default();

        let k5 = generate(&spec("complete:5")).unwrap();
        let dm = DistanceMatrix::new(&k5).unwrap();
        let values = ParamValues::from(&compute_all(&k5, &cfg).unwrap());
        let checks = bound_checks(&k5, &dm, &values);
        let upper = checks.iter().find(|c| c.id == "emd-upper-order").unwrap();
        assert!(upper.holds && upper.slack == 0, "gamma_emd(K_5) hits n-1");

        let p8 = generate(&spec("path:8")).unwrap();
        let dm = DistanceMatrix::new(&p8).unwrap();
        let values = ParamValues::from(&compute_all(&p8, &cfg).unwrap());
        let checks = bound_checks(&p8, &dm, &values);
        let lower = checks.iter().find(|c| c.id == "emd-lower-order").unwrap();
        assert!(
            lower.holds && lower.slack == 0,
            "gamma_emd(P_8) hits the floor"
        );
        assert!(checks.iter().all(|c| c.holds), "all bounds hold on P_8");
    }
}

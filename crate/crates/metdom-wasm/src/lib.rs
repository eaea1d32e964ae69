//! Browser bindings: three interactive operations over the exact solvers,
//! each returning a JSON document the demo page renders directly.
//!
//! Inputs are capped at small orders; the searches are exponential and run
//! on the UI thread. The wall-clock budget is disabled on wasm (no monotonic
//! clock there), which is safe at these sizes.

use wasm_bindgen::prelude::wasm_bindgen;

use metdom::formulas::{bound_checks, predict, ParamValues};
use metdom::verify::{build_fixture_omega, build_fixture_pi};
use metdom::*;

/// Largest instance the demo page will solve interactively.
const DEMO_VERTEX_CAP: usize = 16;

fn demo_config() -> SearchConfig {
    SearchConfig {
        budget: None,
        ..SearchConfig::default()
    }
}

fn err(msg: impl Into<String>) -> String {
    msg.into()
}

fn parse_selection(selection: &str) -> Result<Vec<Parameter>, String> {
    if selection.trim().is_empty() || selection.trim() == "all" {
        return Ok(Parameter::ALL.to_vec());
    }
    let mut out = Vec::new();
    for part in selection.split(',') {
        let p = Parameter::ALL
            .into_iter()
            .find(|p| p.name() == part.trim())
            .ok_or_else(|| format!("unknown parameter `{part}`"))?;
        out.push(p);
    }
    Ok(out)
}

/// Positions on the unit square, chosen by family shape so the picture is
/// recognizable: hubs centered, grid rows, prism rings, bipartite columns.
fn layout(g: &Graph, spec: Option<&FamilySpec>) -> Vec<(f64, f64)> {
    let n = g.n();
    let circle = |count: usize, center: (f64, f64), radius: f64, offset: usize| {
        (0..count)
            .map(move |i| {
                let angle = std::f64::consts::TAU * (i as f64) / (count as f64)
                    - std::f64::consts::FRAC_PI_2;
                (
                    center.0 + radius * angle.cos(),
                    center.1 + radius * angle.sin(),
                )
            })
            .map(move |p| (offset, p))
    };
    let mut pos = vec![(0.5, 0.5); n];
    match spec {
        Some(FamilySpec::Path(_)) => {
            for v in 0..n {
                pos[v] = (0.06 + 0.88 * v as f64 / (n.max(2) - 1) as f64, 0.5);
            }
        }
        Some(FamilySpec::Star(_) | FamilySpec::Wheel(_) | FamilySpec::Fan(_)) => {
            pos[0] = (0.5, 0.5);
            for (i, (_, p)) in circle(n - 1, (0.5, 0.5), 0.42, 1).enumerate() {
                pos[i + 1] = p;
            }
        }
        Some(FamilySpec::GridP2(half)) => {
            let half = *half;
            for v in 0..n {
                let (row, col) = if v < half { (0.3, v) } else { (0.7, v - half) };
                pos[v] = (0.06 + 0.88 * col as f64 / (half.max(2) - 1) as f64, row);
            }
        }
        Some(FamilySpec::PrismP2(half)) => {
            let half = *half;
            for (i, (_, p)) in circle(half, (0.5, 0.5), 0.44, 0).enumerate() {
                pos[i] = p;
            }
            for (i, (_, p)) in circle(half, (0.5, 0.5), 0.24, 0).enumerate() {
                pos[half + i] = p;
            }
        }
        Some(FamilySpec::CompleteBipartite(a, _)) => {
            let a = *a;
            for v in 0..n {
                let (col, row, count) = if v < a {
                    (0.25, v, a)
                } else {
                    (0.75, v - a, n - a)
                };
                pos[v] = (col, 0.1 + 0.8 * (row as f64 + 0.5) / count as f64);
            }
        }
        _ => {
            for (i, (_, p)) in circle(n, (0.5, 0.5), 0.44, 0).enumerate() {
                pos[i] = p;
            }
        }
    }
    pos
}

fn graph_doc(
    g: &Graph,
    name: &str,
    spec: Option<&FamilySpec>,
    selection: &[Parameter],
) -> Result<String, String> {
    let cfg = demo_config();
    let mut params = Vec::new();
    for &p in selection {
        let r = compute(p, g, &cfg).map_err(|e| err(format!("{p}: {e}")))?;
        let predicted = spec.and_then(|s| predict(p, s)).map(|pr| pr.value);
        params.push(serde_json::json!({
            "name": p.name(),
            "value": r.value,
            "witness": r.witness,
            "method": r.method.as_str(),
            "predicted": predicted,
        }));
    }
    let bounds = if selection.len() == Parameter::ALL.len() {
        let all = compute_all(g, &cfg).map_err(|e| err(e.to_string()))?;
        let dm = DistanceMatrix::new(g).map_err(|e| err(e.to_string()))?;
        Some(
            bound_checks(g, &dm, &ParamValues::from(&all))
                .iter()
                .map(|b| serde_json::json!({"id": b.id, "holds": b.holds, "slack": b.slack}))
                .collect::<Vec<_>>(),
        )
    } else {
        None
    };
    let doc = serde_json::json!({
        "input": name,
        "n": g.n(),
        "m": g.m(),
        "edges": g.edges(),
        "layout": layout(g, spec),
        "params": params,
        "bounds": bounds,
    });
    Ok(doc.to_string())
}

fn compute_impl(input: &str, selection: &str) -> Result<String, String> {
    let selection = parse_selection(selection)?;
    let input = input.trim();
    if let Ok(spec) = input.parse::<FamilySpec>() {
        let g = generate(&spec).map_err(|e| err(e.to_string()))?;
        if g.n() > DEMO_VERTEX_CAP {
            return Err(format!(
                "demo cap is {DEMO_VERTEX_CAP} vertices; {input} has {}",
                g.n()
            ));
        }
        return graph_doc(&g, &spec.to_string(), Some(&spec), &selection);
    }
    // Otherwise treat the text as an edge list document.
    let text = if input.ends_with('\n') {
        input.to_string()
    } else {
        format!("{input}\n")
    };
    let g = parse_edge_list_text(&text)
        .map_err(|e| err(format!("not a family spec, and not an edge list: {e}")))?;
    if g.n() > DEMO_VERTEX_CAP {
        return Err(format!(
            "demo cap is {DEMO_VERTEX_CAP} vertices; input has {}",
            g.n()
        ));
    }
    graph_doc(&g, "edge list", None, &selection)
}

fn sweep_impl(family: &str, from: usize, to: usize, parameter: &str) -> Result<String, String> {
    let p = Parameter::ALL
        .into_iter()
        .find(|p| p.name() == parameter.trim())
        .ok_or_else(|| format!("unknown parameter `{parameter}`"))?;
    if from > to {
        return Err(err("empty range"));
    }
    if to - from > 40 {
        return Err(err("sweep at most 41 sizes"));
    }
    let cfg = demo_config();
    let mut rows = Vec::new();
    for n in from..=to {
        let spec: FamilySpec = format!("{}:{n}", family.trim())
            .parse()
            .map_err(|e| err(format!("{e}")))?;
        let g = match generate(&spec) {
            Ok(g) => g,
            Err(_) => continue, // below the family's minimum size
        };
        if g.n() > DEMO_VERTEX_CAP {
            continue;
        }
        let r = compute(p, &g, &cfg).map_err(|e| err(format!("{spec}: {e}")))?;
        let predicted = predict(p, &spec).map(|pr| pr.value);
        let status = match predicted {
            Some(v) if v == r.value => "match",
            Some(_) => "mismatch",
            None => "out-of-domain",
        };
        rows.push(serde_json::json!({
            "n": n,
            "instance": spec.to_string(),
            "vertices": g.n(),
            "predicted": predicted,
            "exact": r.value,
            "witness": r.witness,
            "status": status,
        }));
    }
    Ok(serde_json::json!({ "parameter": p.name(), "rows": rows }).to_string())
}

fn fixture_impl(name: &str) -> Result<String, String> {
    let (g, label) = match name.trim() {
        "omega" => (build_fixture_omega(), "omega (17 vertices, 24 edges)"),
        "pi" => (build_fixture_pi(), "pi (complete bipartite on 4+2)"),
        other => return Err(format!("unknown fixture `{other}` (omega or pi)")),
    };
    // Omega gets a two-ring layout with its hub centered; pi reuses the
    // bipartite column layout.
    if name.trim() == "pi" {
        let spec = FamilySpec::CompleteBipartite(4, 2);
        return graph_doc(&g, label, Some(&spec), &Parameter::ALL);
    }
    let cfg = demo_config();
    let mut params = Vec::new();
    for p in Parameter::ALL {
        let r = compute(p, &g, &cfg).map_err(|e| err(format!("{p}: {e}")))?;
        params.push(serde_json::json!({
            "name": p.name(),
            "value": r.value,
            "witness": r.witness,
            "method": r.method.as_str(),
            "predicted": null,
        }));
    }
    let mut pos = vec![(0.5, 0.5); g.n()];
    for i in 0..8 {
        let angle = std::f64::consts::TAU * (i as f64) / 8.0 - std::f64::consts::FRAC_PI_2;
        pos[i] = (0.5 + 0.26 * angle.cos(), 0.5 + 0.26 * angle.sin());
        let angle = angle + std::f64::consts::TAU / 16.0;
        pos[9 + i] = (0.5 + 0.44 * angle.cos(), 0.5 + 0.44 * angle.sin());
    }
    pos[8] = (0.5, 0.5);
    let all = compute_all(&g, &cfg).map_err(|e| err(e.to_string()))?;
    let dm = DistanceMatrix::new(&g).map_err(|e| err(e.to_string()))?;
    let bounds: Vec<_> = bound_checks(&g, &dm, &ParamValues::from(&all))
        .iter()
        .map(|b| serde_json::json!({"id": b.id, "holds": b.holds, "slack": b.slack}))
        .collect();
    Ok(serde_json::json!({
        "input": label,
        "n": g.n(),
        "m": g.m(),
        "edges": g.edges(),
        "layout": pos,
        "params": params,
        "bounds": bounds,
    })
    .to_string())
}

/// Computes selected invariants of a family spec or edge-list text and
/// returns a JSON document with the graph, a layout, values and witnesses.
#[wasm_bindgen]
pub fn compute_parameters(input: &str, selection: &str) -> Result<String, String> {
    compute_impl(input, selection)
}

/// Sweeps one family over `from..=to`, comparing exact values against the
/// closed form of the chosen parameter.
#[wasm_bindgen]
pub fn family_sweep(
    family: &str,
    from: usize,
    to: usize,
    parameter: &str,
) -> Result<String, String> {
    sweep_impl(family, from, to, parameter)
}

/// The two bundled showcase graphs with all six invariants computed.
#[wasm_bindgen]
pub fn fixture_graph(name: &str) -> Result<String, String> {
    fixture_impl(name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compute_doc_shape() {
        let doc: serde_json::Value =
            serde_json::from_str(&compute_impl("wheel:6", "all").unwrap()).unwrap();
        assert_eq!(doc["n"], 7);
        assert_eq!(doc["params"].as_array().unwrap().len(), 6);
        assert_eq!(doc["layout"].as_array().unwrap().len(), 7);
        let emd = doc["params"]
            .as_array()
            .unwrap()
            .iter()
            .find(|p| p["name"] == "gamma_emd")
            .unwrap();
        assert_eq!(emd["value"], 5);
        assert_eq!(emd["predicted"], 5);
    }

    #[test]
    fn compute_accepts_edge_lists_and_enforces_cap() {
        let doc: serde_json::Value =
            serde_json::from_str(&compute_impl("3 2\n0 1\n1 2", "beta_e").unwrap()).unwrap();
        assert_eq!(doc["params"][0]["value"], 1);
        assert!(compute_impl("path:40", "all").is_err());
        assert!(compute_impl("gibberish", "all").is_err());
    }

    #[test]
    fn sweep_doc_shape() {
        let doc: serde_json::Value =
            serde_json::from_str(&sweep_impl("cycle", 3, 12, "gamma_emd").unwrap()).unwrap();
        let rows = doc["rows"].as_array().unwrap();
        assert_eq!(rows.len(), 10);
        assert!(rows.iter().all(|r| r["status"] == "match"));
    }

    #[test]
    fn fixtures_render() {
        let doc: serde_json::Value = serde_json::from_str(&fixture_impl("omega").unwrap()).unwrap();
        assert_eq!(doc["n"], 17);
        assert_eq!(doc["m"], 24);
        let doc: serde_json::Value = serde_json::from_str(&fixture_impl("pi").unwrap()).unwrap();
        assert_eq!(doc["n"], 6);
        assert!(fixture_impl("nope").is_err());
    }
}

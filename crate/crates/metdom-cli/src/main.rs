//! `metdom`: compute distance-based invariants of a graph, sweep families
//! against their closed forms, run the verification suites, or scan a
//! graph6 corpus against the bound suite.
//!
//! Exit codes: 0 ok / all match; 1 mismatches found (verify/scan);
//! 2 input error; 3 time budget exceeded.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use metdom::formulas::{bound_checks, predict, ParamValues};
use metdom::verify::{
    known_bound_ids, run_exhaustive_scan, run_verify, Report, Suite, VerifyConfig,
};
use metdom::*;

#[derive(Parser)]
#[command(
    name = "metdom",
    version,
    about = "Exact metric dimension and domination invariants, with a closed-form verification harness"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute invariants of one graph: a family spec like `cycle:8`, or a
    /// path to an edge-list file (`.g6` files are read as graph6).
    Compute {
        input: String,
        #[command(flatten)]
        params: ParamFlags,
        #[command(flatten)]
        run: RunFlags,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Sweep one family over an inclusive size range, comparing the exact
    /// value of each selected parameter against its closed form.
    Family {
        /// Family name: path, cycle, complete, star, wheel, fan, grid2, prism2.
        family: String,
        /// Inclusive range like `5..9`.
        range: String,
        #[command(flatten)]
        params: ParamFlags,
        #[command(flatten)]
        run: RunFlags,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Run verification suites and print the JSON report.
    Verify {
        /// Comma-separated subset of fixtures,families,trees,comparison, or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Skip family instances with more vertices than this.
        #[arg(long)]
        max_n: Option<usize>,
        /// Number of random trees in the tree suite.
        #[arg(long, default_value_t = 200)]
        count: usize,
        /// Random seed for the tree suite.
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[command(flatten)]
        run: RunFlags,
        /// Also write the report to a file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Scan a newline-delimited graph6 corpus against the bound suite.
    Scan {
        file: PathBuf,
        /// Comma-separated bound ids, or `all`. See `--bounds list`.
        #[arg(long, default_value = "all")]
        bounds: String,
        #[command(flatten)]
        run: RunFlags,
        /// Also write the report to a file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct RunFlags {
    /// Per-parameter time budget in seconds (0 disables the check).
    #[arg(long, default_value_t = 60)]
    budget: u64,
    /// Worker threads for the combination search.
    #[arg(long, default_value_t = 1)]
    workers: usize,
}

impl RunFlags {
    fn search_config(&self) -> SearchConfig {
        SearchConfig {
            budget: if self.budget == 0 {
                None
            } else {
                Some(Duration::from_secs(self.budget))
            },
            workers: self.workers.max(1),
            ..SearchConfig::default()
        }
    }
}

#[derive(Args)]
struct ParamFlags {
    /// All six parameters (the default when no flag is given).
    #[arg(long)]
    all: bool,
    #[arg(long)]
    beta: bool,
    #[arg(long = "beta-e")]
    beta_e: bool,
    #[arg(long)]
    gamma: bool,
    #[arg(long = "gamma-ve")]
    gamma_ve: bool,
    #[arg(long = "gamma-md")]
    gamma_md: bool,
    #[arg(long = "gamma-emd")]
    gamma_emd: bool,
}

impl ParamFlags {
    fn selection(&self) -> Vec<Parameter> {
        let chosen: Vec<Parameter> = [
            (self.beta, Parameter::Beta),
            (self.beta_e, Parameter::BetaE),
            (self.gamma, Parameter::Gamma),
            (self.gamma_ve, Parameter::GammaVe),
            (self.gamma_md, Parameter::GammaMd),
            (self.gamma_emd, Parameter::GammaEmd),
        ]
        .into_iter()
        .filter_map(|(on, p)| on.then_some(p))
        .collect();
        if self.all || chosen.is_empty() {
            Parameter::ALL.to_vec()
        } else {
            chosen
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Compute {
            input,
            params,
            run,
            format,
        } => cmd_compute(&input, &params, &run, format),
        Command::Family {
            family,
            range,
            params,
            run,
            format,
        } => cmd_family(&family, &range, &params, &run, format),
        Command::Verify {
            suite,
            max_n,
            count,
            seed,
            run,
            out,
        } => cmd_verify(&suite, max_n, count, seed, &run, out.as_deref()),
        Command::Scan {
            file,
            bounds,
            run,
            out,
        } => cmd_scan(&file, &bounds, &run, out.as_deref()),
    };
    match code {
        Ok(c) => c,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn load_graph(input: &str) -> Result<(Graph, String), String> {
    if let Ok(spec) = input.parse::<FamilySpec>() {
        let g = generate(&spec).map_err(|e| format!("{input}: {e}"))?;
        return Ok((g, spec.to_string()));
    }
    let path = std::path::Path::new(input);
    if !path.exists() {
        return Err(format!(
            "`{input}` is neither a family spec nor an existing file"
        ));
    }
    let content = std::fs::read_to_string(path).map_err(|e| format!("{input}: {e}"))?;
    if path.extension().and_then(|e| e.to_str()) == Some("g6") {
        let line = content
            .lines()
            .next()
            .ok_or_else(|| format!("{input}: empty file"))?;
        let g = parse_graph6(line).map_err(|e| format!("{input}: {e}"))?;
        Ok((g, input.to_string()))
    } else {
        let g = parse_edge_list_text(&content).map_err(|e| format!("{input}: {e}"))?;
        Ok((g, input.to_string()))
    }
}

fn witness_text(witness: &[usize]) -> String {
    let items: Vec<String> = witness.iter().map(|v| v.to_string()).collect();
    format!("[{}]", items.join(", "))
}

fn cmd_compute(
    input: &str,
    params: &ParamFlags,
    run: &RunFlags,
    format: Format,
) -> Result<ExitCode, String> {
    let (g, name) = load_graph(input)?;
    let cfg = run.search_config();
    let selection = params.selection();
    let mut results: Vec<(Parameter, ParamResult)> = Vec::new();
    for &p in &selection {
        match compute(p, &g, &cfg) {
            Ok(r) => results.push((p, r)),
            Err(SolveError::BudgetExceeded { proven_lower_bound }) => {
                eprintln!("error: {p}: budget exceeded, value is at least {proven_lower_bound}");
                return Ok(ExitCode::from(3));
            }
            Err(e) => return Err(format!("{p} on {name}: {e}")),
        }
    }

    // The bound report needs all six values; compute the rest quietly.
    let bounds = if selection.len() >= 2 {
        match compute_all(&g, &cfg) {
            Ok(all) => {
                let dm = DistanceMatrix::new(&g).map_err(|e| e.to_string())?;
                Some(bound_checks(&g, &dm, &ParamValues::from(&all)))
            }
            Err(SolveError::BudgetExceeded { .. }) => None,
            Err(e) => return Err(format!("bounds on {name}: {e}")),
        }
    } else {
        None
    };

    match format {
        Format::Json => {
            let doc = json!({
                "input": name,
                "n": g.n(),
                "m": g.m(),
                "params": results.iter().map(|(p, r)| json!({
                    "name": p.name(),
                    "value": r.value,
                    "witness": r.witness,
                    "method": r.method.as_str(),
                })).collect::<Vec<_>>(),
                "bounds": bounds.as_ref().map(|bs| bs.iter().map(|b| json!({
                    "id": b.id, "holds": b.holds, "slack": b.slack,
                })).collect::<Vec<_>>()),
            });
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        }
        Format::Table => {
            println!("input: {name} (n={}, m={})", g.n(), g.m());
            println!(
                "{:<10}  {:>5}  {:<24}  method",
                "parameter", "value", "witness"
            );
            for (p, r) in &results {
                println!(
                    "{:<10}  {:>5}  {:<24}  {}",
                    p.name(),
                    r.value,
                    witness_text(&r.witness),
                    r.method.as_str()
                );
            }
            if let Some(bs) = &bounds {
                println!("bounds:");
                for b in bs {
                    println!(
                        "  {:<34} {}  (slack {})",
                        b.id,
                        if b.holds { "holds" } else { "VIOLATED" },
                        b.slack
                    );
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn family_spec(family: &str, n: usize) -> Result<FamilySpec, String> {
    format!("{family}:{n}")
        .parse()
        .map_err(|e| format!("family `{family}`: {e}"))
}

fn cmd_family(
    family: &str,
    range: &str,
    params: &ParamFlags,
    run: &RunFlags,
    format: Format,
) -> Result<ExitCode, String> {
    let (lo, hi) = range
        .split_once("..")
        .and_then(|(a, b)| Some((a.parse::<usize>().ok()?, b.parse::<usize>().ok()?)))
        .ok_or_else(|| format!("range `{range}` must look like `5..9`"))?;
    if lo > hi {
        return Err(format!("empty range `{range}`"));
    }
    let cfg = run.search_config();
    let mut rows = Vec::new();
    for n in lo..=hi {
        let spec = family_spec(family, n)?;
        let g = generate(&spec).map_err(|e| format!("{spec}: {e}"))?;
        for &p in &params.selection() {
            let predicted = predict(p, &spec);
            match compute(p, &g, &cfg) {
                Ok(r) => {
                    let status = match &predicted {
                        Some(pr) if pr.value == r.value => "match",
                        Some(_) => "mismatch",
                        None => "out-of-domain",
                    };
                    rows.push((spec.to_string(), p, predicted.map(|pr| pr.value), r, status));
                }
                Err(SolveError::BudgetExceeded { proven_lower_bound }) => {
                    eprintln!(
                        "error: {p} on {spec}: budget exceeded, value >= {proven_lower_bound}"
                    );
                    return Ok(ExitCode::from(3));
                }
                Err(e) => return Err(format!("{p} on {spec}: {e}")),
            }
        }
    }

    match format {
        Format::Json => {
            let doc: Vec<_> = rows
                .iter()
                .map(|(inst, p, predicted, r, status)| {
                    json!({
                        "instance": inst,
                        "parameter": p.name(),
                        "predicted": predicted,
                        "exact": r.value,
                        "witness": r.witness,
                        "status": status,
                    })
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        }
        Format::Table => {
            println!(
                "{:<12}  {:<10}  {:>9}  {:>5}  {:<13}  witness",
                "instance", "parameter", "predicted", "exact", "status"
            );
            for (inst, p, predicted, r, status) in &rows {
                let shown = predicted
                    .map(|v| v.to_string())
                    .unwrap_or_else(|| "-".into());
                println!(
                    "{:<12}  {:<10}  {:>9}  {:>5}  {:<13}  {}",
                    inst,
                    p.name(),
                    shown,
                    r.value,
                    status,
                    witness_text(&r.witness)
                );
            }
        }
    }
    let mismatch = rows
        .iter()
        .any(|(_, _, _, _, status)| *status == "mismatch");
    Ok(if mismatch {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn cmd_verify(
    suite: &str,
    max_n: Option<usize>,
    count: usize,
    seed: u64,
    run: &RunFlags,
    out: Option<&std::path::Path>,
) -> Result<ExitCode, String> {
    let mut suites = Vec::new();
    for part in suite.split(',') {
        match part.trim() {
            "all" => suites.extend(Suite::ALL),
            "fixtures" => suites.push(Suite::Fixtures),
            "families" => suites.push(Suite::Families),
            "trees" => suites.push(Suite::Trees),
            "comparison" => suites.push(Suite::Comparison),
            other => return Err(format!("unknown suite `{other}`")),
        }
    }
    suites.dedup();
    let mut vc = VerifyConfig {
        suites,
        tree_count: count,
        seed,
        search: run.search_config(),
        ..VerifyConfig::default()
    };
    if let Some(cap) = max_n {
        vc.ranges.max_vertices = cap;
    }
    let report = run_verify(&vc);
    emit_report(&report, out)?;
    Ok(if report.all_match() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_scan(
    file: &std::path::Path,
    bounds: &str,
    run: &RunFlags,
    out: Option<&std::path::Path>,
) -> Result<ExitCode, String> {
    let content = std::fs::read_to_string(file).map_err(|e| format!("{}: {e}", file.display()))?;
    let selection: Option<Vec<String>> = if bounds.trim() == "all" {
        None
    } else if bounds.trim() == "list" {
        let mut listing = String::new();
        for id in known_bound_ids() {
            let _ = writeln!(listing, "{id}");
        }
        print!("{listing}");
        return Ok(ExitCode::SUCCESS);
    } else {
        let ids: Vec<String> = bounds.split(',').map(|s| s.trim().to_string()).collect();
        for id in &ids {
            if !known_bound_ids().contains(&id.as_str()) {
                return Err(format!("unknown bound id `{id}` (try `--bounds list`)"));
            }
        }
        Some(ids)
    };
    let outcome = run_exhaustive_scan(&content, selection.as_deref(), &run.search_config());
    for d in &outcome.diagnostics {
        eprintln!("{}: {d}", file.display());
    }
    let config = format!("scan:file={};bounds={bounds}", file.display());
    let report = Report::new(&config, 0, outcome.checks);
    emit_report(&report, out)?;
    Ok(if !report.all_match() {
        ExitCode::from(1)
    } else if !outcome.diagnostics.is_empty() {
        ExitCode::from(2)
    } else {
        ExitCode::SUCCESS
    })
}

fn emit_report(report: &Report, out: Option<&std::path::Path>) -> Result<(), String> {
    let body = report.to_json();
    print!("{body}");
    if let Some(path) = out {
        std::fs::write(path, &body).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    Ok(())
}

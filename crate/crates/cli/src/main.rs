mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use hamlab_core::campaign::{
    claw_o_heavy_corpus, closure_campaign, default_witnesses, if_campaign, lemma_campaign, only_if_campaign,
    pattern_census, route, CorpusConfig, Filter,
};
use hamlab_core::closure::{check_regions, compute_closure, regions};
use hamlab_core::conditions::{
    dirac_holds, is_claw_free, is_claw_o_heavy, is_h_f_heavy, is_h_free, is_h_o_heavy, ore_holds, patterns,
};
use hamlab_core::families::{brousek, g1, g2, g3, BrousekSpec, FamilyWitness, G2Layout};
use hamlab_core::gamma::{
    enumerate_symmetrical, find_bad_p6, gamma_constants, guaranteeing_superpattern, guarantees_hamiltonicity,
    is_p6_gamma_heavy, GammaPattern,
};
use hamlab_core::hamilton::{is_hamiltonian, HamOptions, Verdict, DEFAULT_BUDGET};
use hamlab_core::io::{parse_any, write_edge_list, write_graph6};
use hamlab_core::Graph;
use serde::Serialize;
use serde_json::{json, Value};

use report::Report;

#[derive(Parser)]
#[command(
    name = "hamlab",
    version,
    about = "Hamiltonicity of claw-heavy graphs: predicates, closure and verification campaigns"
)]
struct Cli {
    #[command(flatten)]
    config: Config,
    #[command(subcommand)]
    command: Command,
}

/// Flags shared by every command; echoed into each report.
#[derive(Args, Serialize, Clone)]
struct Config {
    /// Position pattern, e.g. "13,46".
    #[arg(long, global = true)]
    gamma: Option<String>,
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Sample count for campaigns.
    #[arg(long, global = true)]
    trials: Option<usize>,
    /// Largest sampled order (at most 14).
    #[arg(long, global = true)]
    nmax: Option<usize>,
    /// Search-node budget for the exact solver.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Where to write the JSON report (for `generate`: the edge list).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Structural predicates of each input graph.
    Check { input: PathBuf },
    /// Closure trace of a claw-o-heavy graph.
    Closure { input: PathBuf },
    /// Region decomposition of the closure, with structure checks.
    Regions { input: PathBuf },
    /// Exact hamiltonicity with a checkable certificate.
    Ham { input: PathBuf },
    /// Build a family member.
    Generate {
        #[arg(value_enum)]
        family: Family,
        /// brousek "3,T,4"; g1 "r"; g2 "q,r,s,t"; g3 "k,r".
        #[arg(long)]
        params: String,
    },
    /// Whether a symmetrical pattern guarantees hamiltonicity.
    ClassifyGamma { pattern: String },
    /// Census of all symmetrical patterns.
    EnumerateGamma,
    /// An induced P6 violating P6-γ-heaviness.
    FindBadP6 { input: PathBuf },
    /// Sampled sufficiency check over the three maximal patterns.
    #[command(name = "verify-theorem9-if")]
    VerifyTheorem9If,
    /// Counterexample coverage of every non-guaranteed pattern.
    #[command(name = "verify-theorem9-onlyif")]
    VerifyTheorem9Onlyif,
    /// Closure and region-structure campaign.
    VerifyLemmas,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Brousek,
    G1,
    G2,
    G3,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<bool> {
    if let Some(jobs) = cli.config.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .context("configuring worker threads")?;
    }
    let cfg = &cli.config;
    let report = match &cli.command {
        Command::Check { input } => cmd_check(cfg, input)?,
        Command::Closure { input } => cmd_closure(cfg, input)?,
        Command::Regions { input } => cmd_regions(cfg, input)?,
        Command::Ham { input } => cmd_ham(cfg, input)?,
        Command::Generate { family, params } => return cmd_generate(cfg, *family, params).map(|()| true),
        Command::ClassifyGamma { pattern } => cmd_classify_gamma(cfg, pattern)?,
        Command::EnumerateGamma => cmd_enumerate_gamma(cfg),
        Command::FindBadP6 { input } => cmd_find_bad_p6(cfg, input)?,
        Command::VerifyTheorem9If => cmd_verify_if(cfg)?,
        Command::VerifyTheorem9Onlyif => cmd_verify_onlyif(cfg)?,
        Command::VerifyLemmas => cmd_verify_lemmas(cfg)?,
    };
    println!("{}", report.summary.trim_end());
    if let Some(path) = &cfg.out {
        report.write_json(path)?;
    }
    Ok(report.passed)
}

fn read_graphs(path: &Path) -> Result<Vec<Graph>> {
    let text = if path.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin()).context("reading standard input")?
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    let graphs = parse_any(&text).with_context(|| format!("parsing {}", path.display()))?;
    if graphs.is_empty() {
        bail!("{} contains no graphs", path.display());
    }
    Ok(graphs)
}

fn parse_gamma(text: &str) -> Result<GammaPattern> {
    text.parse().with_context(|| format!("pattern {text:?}"))
}

fn required_gamma(cfg: &Config) -> Result<GammaPattern> {
    match &cfg.gamma {
        Some(t) => parse_gamma(t),
        None => bail!("--gamma is required"),
    }
}

fn cmd_check(cfg: &Config, input: &Path) -> Result<Report> {
    let graphs = read_graphs(input)?;
    let gamma = cfg.gamma.as_deref().map(parse_gamma).transpose()?;
    let (gamma1, gamma2, gamma3) = gamma_constants();
    let claw = patterns::claw();
    let p6 = patterns::p6();
    let mut rows = Vec::new();
    let mut summary = String::new();
    for (i, g) in graphs.iter().enumerate() {
        let mut row = json!({
            "index": i,
            "graph6": write_graph6(g),
            "n": g.order(),
            "m": g.size(),
            "connected": g.is_connected(),
            "two_connected": g.is_two_connected(),
            "claw_free": is_claw_free(g),
            "claw_o_heavy": is_claw_o_heavy(g),
            "claw_f_heavy": is_h_f_heavy(g, &claw),
            "p6_free": is_h_free(g, &p6),
            "p6_o_heavy": is_h_o_heavy(g, &p6),
            "p6_f_heavy": is_h_f_heavy(g, &p6),
            "p6_gamma1_heavy": is_p6_gamma_heavy(g, gamma1),
            "p6_gamma2_heavy": is_p6_gamma_heavy(g, gamma2),
            "p6_gamma3_heavy": is_p6_gamma_heavy(g, gamma3),
            "dirac": dirac_holds(g),
            "ore": ore_holds(g),
        });
        if let Some(gamma) = gamma {
            row["p6_gamma_heavy"] = json!(is_p6_gamma_heavy(g, gamma));
        }
        summary.push_str(&format!("graph {i}: n={} m={}", g.order(), g.size()));
        for (key, value) in row.as_object().unwrap() {
            if let Value::Bool(b) = value {
                summary.push_str(&format!(" {key}={b}"));
            }
        }
        summary.push('\n');
        rows.push(row);
    }
    Ok(Report::new("check", cfg, true, summary, json!({ "graphs": rows })))
}

fn cmd_closure(cfg: &Config, input: &Path) -> Result<Report> {
    let mut results = Vec::new();
    let mut summary = String::new();
    let mut passed = true;
    for (i, g) in read_graphs(input)?.iter().enumerate() {
        match compute_closure(g) {
            Ok(trace) => {
                let cl = &trace.result;
                summary.push_str(&format!(
                    "graph {i}: {} completion steps, {} -> {} edges, closure claw-free: {}\n",
                    trace.steps.len(),
                    g.size(),
                    cl.size(),
                    is_claw_free(cl)
                ));
                results.push(json!({
                    "index": i,
                    "graph6": write_graph6(g),
                    "steps": trace.steps,
                    "closure": cl,
                    "closure_graph6": write_graph6(cl),
                }));
            }
            Err(e) => {
                passed = false;
                summary.push_str(&format!("graph {i}: {e}\n"));
                results.push(json!({ "index": i, "graph6": write_graph6(g), "error": e.to_string() }));
            }
        }
    }
    Ok(Report::new(
        "closure",
        cfg,
        passed,
        summary,
        json!({ "graphs": results }),
    ))
}

fn cmd_regions(cfg: &Config, input: &Path) -> Result<Report> {
    let mut results = Vec::new();
    let mut summary = String::new();
    let mut passed = true;
    for (i, g) in read_graphs(input)?.iter().enumerate() {
        let outcome = compute_closure(g).and_then(|trace| {
            let dec = regions(&trace, g)?;
            let violations = check_regions(g, &trace.result, &dec);
            Ok((dec, violations))
        });
        match outcome {
            Ok((dec, violations)) => {
                passed &= violations.is_empty();
                summary.push_str(&format!(
                    "graph {i}: {} regions, {} interior vertices, {} violations\n",
                    dec.regions.len(),
                    g.vertices().filter(|&v| dec.is_interior(v)).count(),
                    violations.len()
                ));
                results.push(json!({
                    "index": i,
                    "graph6": write_graph6(g),
                    "regions": dec.regions,
                    "vertex_regions": dec.vertex_regions,
                    "violations": violations,
                }));
            }
            Err(e) => {
                passed = false;
                summary.push_str(&format!("graph {i}: {e}\n"));
                results.push(json!({ "index": i, "graph6": write_graph6(g), "error": e.to_string() }));
            }
        }
    }
    Ok(Report::new(
        "regions",
        cfg,
        passed,
        summary,
        json!({ "graphs": results }),
    ))
}

fn cmd_ham(cfg: &Config, input: &Path) -> Result<Report> {
    let opts = HamOptions {
        budget: cfg.budget,
        ..HamOptions::default()
    };
    let mut results = Vec::new();
    let mut summary = String::new();
    let mut passed = true;
    for (i, g) in read_graphs(input)?.iter().enumerate() {
        let d = is_hamiltonian(g, &opts);
        passed &= d.verdict != Verdict::Inconclusive;
        summary.push_str(&format!("graph {i}: {:?} ({} search nodes)\n", d.verdict, d.nodes));
        results.push(json!({ "index": i, "graph6": write_graph6(g), "decision": d }));
    }
    Ok(Report::new("ham", cfg, passed, summary, json!({ "graphs": results })))
}

fn parse_numbers<const K: usize>(params: &str) -> Result<[usize; K]> {
    let values: Vec<usize> = params
        .split([',', ' '])
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().with_context(|| format!("invalid parameter {t:?}")))
        .collect::<Result<_>>()?;
    values
        .try_into()
        .map_err(|v: Vec<usize>| anyhow::anyhow!("expected {K} parameters, got {}", v.len()))
}

fn build_family(family: Family, params: &str) -> Result<FamilyWitness> {
    let w = match family {
        Family::Brousek => brousek(params.parse::<BrousekSpec>()?)?,
        Family::G1 => {
            let [r] = parse_numbers(params)?;
            g1(r)?
        }
        Family::G2 => {
            let [q, r, s, t] = parse_numbers(params)?;
            g2(q, r, s, t, G2Layout::default())?
        }
        Family::G3 => {
            let [k, r] = parse_numbers(params)?;
            g3(k, r)?
        }
    };
    Ok(w)
}

fn cmd_generate(cfg: &Config, family: Family, params: &str) -> Result<()> {
    let w = build_family(family, params)?;
    let edges = write_edge_list(&w.graph);
    let sidecar = json!({
        "schema_version": report::SCHEMA_VERSION,
        "params": w.params,
        "labels": w.labels,
        "warnings": w.warnings,
        "roles": w.roles,
    });
    match &cfg.out {
        Some(path) => {
            std::fs::write(path, edges).with_context(|| format!("writing {}", path.display()))?;
            let labels = path.with_extension("labels.json");
            std::fs::write(&labels, serde_json::to_string_pretty(&sidecar)? + "\n")
                .with_context(|| format!("writing {}", labels.display()))?;
            println!(
                "wrote {} (n={}, m={}) and {}",
                path.display(),
                w.graph.order(),
                w.graph.size(),
                labels.display()
            );
        }
        None => print!("{edges}"),
    }
    for warning in &w.warnings {
        eprintln!("warning: {warning}");
    }
    Ok(())
}

fn cmd_classify_gamma(cfg: &Config, pattern: &str) -> Result<Report> {
    let gamma = parse_gamma(pattern)?;
    let guaranteed = guarantees_hamiltonicity(gamma)?;
    let verdict = match guaranteeing_superpattern(gamma) {
        Some(k) if guaranteed => format!("guaranteed (⊆ γ{k})"),
        _ => "not guaranteed".to_string(),
    };
    let routed = route(gamma);
    let mut summary = format!("{{{gamma}}}: {verdict}");
    if let Some(r) = routed {
        summary.push_str(&format!("; counterexample route {r:?}"));
    }
    let result = json!({
        "pattern": gamma,
        "guaranteed": guaranteed,
        "superpattern": guaranteeing_superpattern(gamma),
        "verdict": verdict,
        "route": routed,
    });
    Ok(Report::new("classify-gamma", cfg, true, summary, result))
}

fn cmd_enumerate_gamma(cfg: &Config) -> Report {
    let census = pattern_census();
    let patterns: Vec<Value> = enumerate_symmetrical()
        .map(|g| json!({ "pattern": g, "superpattern": guaranteeing_superpattern(g), "route": route(g) }))
        .collect();
    let summary = format!(
        "{} symmetrical patterns: {} guaranteed, {} not guaranteed",
        patterns.len(),
        census.guaranteed,
        census.non_guaranteed
    );
    Report::new(
        "enumerate-gamma",
        cfg,
        true,
        summary,
        json!({ "census": census, "patterns": patterns }),
    )
}

fn cmd_find_bad_p6(cfg: &Config, input: &Path) -> Result<Report> {
    let gamma = required_gamma(cfg)?;
    let mut results = Vec::new();
    let mut summary = String::new();
    let mut passed = true;
    for (i, g) in read_graphs(input)?.iter().enumerate() {
        let bad = find_bad_p6(g, gamma);
        passed &= bad.is_none();
        match bad {
            Some(p) => summary.push_str(&format!("graph {i}: bad P6 {p:?}\n")),
            None => summary.push_str(&format!("graph {i}: P6-{{{gamma}}}-heavy\n")),
        }
        results.push(json!({ "index": i, "graph6": write_graph6(g), "bad_p6": bad }));
    }
    Ok(Report::new(
        "find-bad-p6",
        cfg,
        passed,
        summary,
        json!({ "pattern": gamma, "graphs": results }),
    ))
}

fn corpus_config(cfg: &Config, default_trials: usize, default_nmax: usize, min_n: usize) -> Result<CorpusConfig> {
    let max_n = cfg.nmax.unwrap_or(default_nmax);
    if !(min_n..=14).contains(&max_n) {
        bail!("--nmax must lie in {min_n}..=14");
    }
    Ok(CorpusConfig {
        count: cfg.trials.unwrap_or(default_trials),
        min_n,
        max_n,
        seed: cfg.seed,
    })
}

fn cmd_verify_if(cfg: &Config) -> Result<Report> {
    let corpus = corpus_config(cfg, 10_000, 12, 5)?;
    let samples = claw_o_heavy_corpus(&corpus)?;
    let mut filters = Filter::STANDARD.to_vec();
    if let Some(text) = &cfg.gamma {
        filters.push(Filter::Custom(parse_gamma(text)?));
    }
    let report = if_campaign(&samples, &filters, cfg.budget);
    let passed = report.violations() == 0 && report.filter_inconclusive() == 0;
    let mut summary = format!(
        "{} graphs (n {}..={}), {} non-hamiltonian, {} inconclusive\n",
        report.graphs, corpus.min_n, corpus.max_n, report.non_hamiltonian, report.inconclusive
    );
    for f in &report.filters {
        summary.push_str(&format!(
            "  {:?}: {} satisfy, {} hamiltonian, {} violations, {} inconclusive\n",
            f.filter,
            f.satisfied,
            f.hamiltonian,
            f.violations.len(),
            f.inconclusive
        ));
    }
    Ok(Report::new(
        "verify-theorem9-if",
        cfg,
        passed,
        summary,
        serde_json::to_value(&report)?,
    ))
}

fn cmd_verify_onlyif(cfg: &Config) -> Result<Report> {
    let witnesses = default_witnesses()?;
    let opts = HamOptions {
        budget: cfg.budget,
        ..HamOptions::default()
    };
    let report = only_if_campaign(&witnesses, &opts);
    let mut summary = format!(
        "{} non-guaranteed patterns, {} covered by their routed witness, {} uncovered\n",
        report.census.non_guaranteed,
        report.covered_by_route,
        report.uncovered.len()
    );
    for w in &report.witnesses {
        summary.push_str(&format!(
            "  {:?} ({:?}, n={}): {} routed, {} covered, validation {}\n",
            w.route,
            w.validation.params,
            w.validation.n,
            w.routed_patterns,
            w.covered,
            if w.validation.passed() { "passed" } else { "FAILED" }
        ));
    }
    for gamma in &report.uncovered {
        summary.push_str(&format!("  uncovered: {{{gamma}}}\n"));
    }
    let passed = report.passed();
    Ok(Report::new(
        "verify-theorem9-onlyif",
        cfg,
        passed,
        summary,
        serde_json::to_value(&report)?,
    ))
}

fn cmd_verify_lemmas(cfg: &Config) -> Result<Report> {
    let corpus = corpus_config(cfg, 500, 14, 6)?;
    let samples = claw_o_heavy_corpus(&corpus)?;
    let closure = closure_campaign(&samples, 20, cfg.budget);
    let lemmas = lemma_campaign(&samples);
    let passed = closure.violations.is_empty()
        && closure.inconclusive == 0
        && lemmas.violations.is_empty()
        && lemmas.errors.is_empty();
    let summary = format!(
        "closure: {} graphs x {} orders, {} violations, {} inconclusive\nregions: {} regions, {} violations, {} errors\n",
        closure.graphs,
        closure.orders_per_graph,
        closure.violations.len(),
        closure.inconclusive,
        lemmas.regions,
        lemmas.violations.len(),
        lemmas.errors.len()
    );
    Ok(Report::new(
        "verify-lemmas",
        cfg,
        passed,
        summary,
        json!({ "closure": closure, "regions": lemmas }),
    ))
}

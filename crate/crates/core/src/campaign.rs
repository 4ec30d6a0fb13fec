//! Seeded verification campaigns over random corpora and over the whole
//! symmetrical pattern space. Every report is serializable and ordered
//! deterministically regardless of thread count.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::closure::{check_regions, compute_closure, compute_closure_with, RegionDecomposition, RegionViolation};
use crate::conditions::{is_claw_free, is_h_f_heavy, is_h_free, patterns};
use crate::families::{
    find_induced_brousek, g1, g2, g3, perturbed_brousek, random_claw_o_heavy, validate_counterexample, BrousekSpec,
    FamilyError, FamilyWitness, G2Layout, Strategy, ValidationReport,
};
use crate::gamma::{
    enumerate_symmetrical, gamma1, gamma2, gamma3, guarantees_hamiltonicity, is_gamma_heavy_by_classes,
    signature_classes, GammaPattern,
};
use crate::graph::Graph;
use crate::hamilton::{decide_by_search, is_hamiltonian, HamOptions, Verdict};
use crate::io::write_graph6;

/// Number of symmetrical patterns and how many of them guarantee
/// hamiltonicity.
pub const SYMMETRICAL_PATTERNS: usize = 4096;
pub const GUARANTEED_PATTERNS: usize = 120;
pub const NON_GUARANTEED_PATTERNS: usize = SYMMETRICAL_PATTERNS - GUARANTEED_PATTERNS;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PatternCensus {
    pub symmetrical: usize,
    pub guaranteed: usize,
    pub non_guaranteed: usize,
}

pub fn pattern_census() -> PatternCensus {
    let mut census = PatternCensus {
        symmetrical: 0,
        guaranteed: 0,
        non_guaranteed: 0,
    };
    for gamma in enumerate_symmetrical() {
        census.symmetrical += 1;
        if guarantees_hamiltonicity(gamma).expect("symmetrical") {
            census.guaranteed += 1;
        } else {
            census.non_guaranteed += 1;
        }
    }
    census
}

#[derive(Debug, Clone)]
pub struct CorpusConfig {
    pub count: usize,
    pub min_n: usize,
    pub max_n: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Sample {
    pub index: usize,
    pub seed: u64,
    pub strategy: Strategy,
    #[serde(serialize_with = "as_graph6")]
    pub graph: Graph,
}

fn as_graph6<S: serde::Serializer>(g: &Graph, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&write_graph6(g))
}

const STRATEGIES: [Strategy; 3] = [Strategy::Rejection, Strategy::LineGraph, Strategy::DensifiedLineGraph];

/// Deterministic corpus of 2-connected claw-o-heavy graphs; sample `i` uses
/// strategy `i mod 3` and an order cycling through `min_n..=max_n`.
pub fn claw_o_heavy_corpus(cfg: &CorpusConfig) -> Result<Vec<Sample>, FamilyError> {
    let span = cfg.max_n - cfg.min_n + 1;
    (0..cfg.count)
        .into_par_iter()
        .map(|index| {
            let strategy = STRATEGIES[index % 3];
            let n = cfg.min_n + (index / 3) % span;
            let seed = cfg.seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(index as u64);
            let graph = random_claw_o_heavy(n, seed, strategy)?;
            Ok(Sample {
                index,
                seed,
                strategy,
                graph,
            })
        })
        .collect()
}

/// One failed closure property on one sample.
#[derive(Debug, Clone, Serialize)]
pub struct ClosureViolation {
    pub sample: usize,
    pub graph6: String,
    pub property: String,
    pub detail: String,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct ClosureReport {
    pub graphs: usize,
    pub orders_per_graph: usize,
    pub hamiltonian: usize,
    pub non_hamiltonian: usize,
    pub inconclusive: usize,
    /// Closures with an induced diamond (logged, not a failure).
    pub diamond_warnings: usize,
    pub violations: Vec<ClosureViolation>,
}

struct ClosureOutcome {
    verdict: Verdict,
    diamond: bool,
    violations: Vec<ClosureViolation>,
}

fn closure_sample(sample: &Sample, orders: usize, budget: u64) -> ClosureOutcome {
    let g = &sample.graph;
    let mut violations = Vec::new();
    let mut fail = |property: &str, detail: String| {
        violations.push(ClosureViolation {
            sample: sample.index,
            graph6: write_graph6(g),
            property: property.to_string(),
            detail,
        })
    };
    let trace = match compute_closure(g) {
        Ok(t) => t,
        Err(e) => {
            fail("closure", e.to_string());
            return ClosureOutcome {
                verdict: Verdict::Inconclusive,
                diamond: false,
                violations,
            };
        }
    };
    let cl = &trace.result;
    if let Some((u, v)) = g.edges().find(|&(u, v)| !cl.has_edge(u, v)) {
        fail("extensive", format!("edge {u} {v} lost"));
    }
    match compute_closure(cl) {
        Ok(again) if again.result == *cl => {}
        Ok(_) => fail("idempotent", "closing the closure added edges".into()),
        Err(e) => fail("idempotent", e.to_string()),
    }
    if !is_claw_free(cl) {
        fail("claw_free", "closure contains an induced claw".into());
    }
    let diamond = !is_h_free(cl, &patterns::diamond());
    if diamond {
        log::warn!("closure of sample {} contains an induced diamond", sample.index);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(sample.seed ^ 0x5EED);
    for k in 0..orders {
        match compute_closure_with(g, |eligible| rng.gen_range(0..eligible.len())) {
            Ok(t) if t.result == *cl => {}
            Ok(_) => fail("order_invariant", format!("random order {k} gave a different closure")),
            Err(e) => fail("order_invariant", e.to_string()),
        }
    }
    let before = decide_by_search(g, budget).verdict;
    let after = decide_by_search(cl, budget).verdict;
    if before == Verdict::Inconclusive || after == Verdict::Inconclusive {
        fail("hamiltonicity_equivalence", "search budget exhausted".into());
    } else if before != after {
        fail(
            "hamiltonicity_equivalence",
            format!("graph {before:?}, closure {after:?}"),
        );
    }
    ClosureOutcome {
        verdict: before,
        diamond,
        violations,
    }
}

/// Extensivity, idempotence, claw-freeness, order invariance and
/// hamiltonicity equivalence of the closure on every sample.
pub fn closure_campaign(samples: &[Sample], orders: usize, budget: u64) -> ClosureReport {
    let outcomes: Vec<ClosureOutcome> = samples.par_iter().map(|s| closure_sample(s, orders, budget)).collect();
    let mut report = ClosureReport {
        graphs: samples.len(),
        orders_per_graph: orders,
        ..ClosureReport::default()
    };
    for o in outcomes {
        match o.verdict {
            Verdict::Hamiltonian => report.hamiltonian += 1,
            Verdict::NonHamiltonian => report.non_hamiltonian += 1,
            Verdict::Inconclusive => report.inconclusive += 1,
        }
        report.diamond_warnings += usize::from(o.diamond);
        report.violations.extend(o.violations);
    }
    report
}

#[derive(Debug, Clone, Serialize)]
pub struct RegionViolationRecord {
    pub sample: usize,
    pub graph6: String,
    pub violation: RegionViolation,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct LemmaReport {
    pub graphs: usize,
    pub regions: usize,
    pub interior_vertices: usize,
    pub frontier_vertices: usize,
    pub errors: Vec<String>,
    pub violations: Vec<RegionViolationRecord>,
}

/// Region count, interior count, frontier count and violations of one sample.
type RegionTally = (usize, usize, usize, Vec<RegionViolation>);

/// Region structure checks on the closure of every sample.
pub fn lemma_campaign(samples: &[Sample]) -> LemmaReport {
    let per: Vec<Result<RegionTally, String>> = samples
        .par_iter()
        .map(|s| {
            let trace = compute_closure(&s.graph).map_err(|e| format!("sample {}: {e}", s.index))?;
            let dec =
                RegionDecomposition::from_closure(&trace.result).map_err(|e| format!("sample {}: {e}", s.index))?;
            let interior = (0..s.graph.order()).filter(|&v| dec.is_interior(v)).count();
            let frontier = (0..s.graph.order()).filter(|&v| dec.is_frontier(v)).count();
            Ok((
                dec.regions.len(),
                interior,
                frontier,
                check_regions(&s.graph, &trace.result, &dec),
            ))
        })
        .collect();
    let mut report = LemmaReport {
        graphs: samples.len(),
        ..LemmaReport::default()
    };
    for (s, r) in samples.iter().zip(per) {
        match r {
            Ok((regions, interior, frontier, violations)) => {
                report.regions += regions;
                report.interior_vertices += interior;
                report.frontier_vertices += frontier;
                report
                    .violations
                    .extend(violations.into_iter().map(|violation| RegionViolationRecord {
                        sample: s.index,
                        graph6: write_graph6(&s.graph),
                        violation,
                    }));
            }
            Err(e) => report.errors.push(e),
        }
    }
    report
}

/// A hypothesis filter for the sufficiency direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Filter {
    Gamma1,
    Gamma2,
    Gamma3,
    /// No induced P6 at all.
    P6Free,
    P6FHeavy,
    /// A user-supplied pattern.
    Custom(GammaPattern),
}

impl Filter {
    pub const STANDARD: [Filter; 5] = [
        Filter::Gamma1,
        Filter::Gamma2,
        Filter::Gamma3,
        Filter::P6Free,
        Filter::P6FHeavy,
    ];

    fn holds(self, g: &Graph, classes: &[GammaPattern]) -> bool {
        match self {
            Filter::Gamma1 => is_gamma_heavy_by_classes(classes, gamma1()),
            Filter::Gamma2 => is_gamma_heavy_by_classes(classes, gamma2()),
            Filter::Gamma3 => is_gamma_heavy_by_classes(classes, gamma3()),
            Filter::Custom(p) => is_gamma_heavy_by_classes(classes, p),
            Filter::P6Free => classes.is_empty(),
            Filter::P6FHeavy => is_h_f_heavy(g, &patterns::p6()),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FilterTally {
    pub filter: Filter,
    pub satisfied: usize,
    pub hamiltonian: usize,
    pub violations: Vec<String>,
    pub inconclusive: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct IfReport {
    pub graphs: usize,
    pub non_hamiltonian: usize,
    pub inconclusive: usize,
    pub filters: Vec<FilterTally>,
}

impl IfReport {
    pub fn violations(&self) -> usize {
        self.filters.iter().map(|f| f.violations.len()).sum()
    }

    pub fn filter_inconclusive(&self) -> usize {
        self.filters.iter().map(|f| f.inconclusive).sum()
    }
}

/// Every sample satisfying a filter must be hamiltonian.
pub fn if_campaign(samples: &[Sample], filters: &[Filter], budget: u64) -> IfReport {
    let per: Vec<(Verdict, Vec<bool>)> = samples
        .par_iter()
        .map(|s| {
            let classes: Vec<GammaPattern> = signature_classes(&s.graph).into_keys().collect();
            let held = filters.iter().map(|f| f.holds(&s.graph, &classes)).collect();
            let opts = HamOptions {
                budget,
                ..HamOptions::default()
            };
            (is_hamiltonian(&s.graph, &opts).verdict, held)
        })
        .collect();
    let mut filters_out: Vec<FilterTally> = filters
        .iter()
        .map(|&filter| FilterTally {
            filter,
            satisfied: 0,
            hamiltonian: 0,
            violations: Vec::new(),
            inconclusive: 0,
        })
        .collect();
    let mut report = IfReport {
        graphs: samples.len(),
        non_hamiltonian: 0,
        inconclusive: 0,
        filters: Vec::new(),
    };
    for (s, (verdict, held)) in samples.iter().zip(per) {
        match verdict {
            Verdict::NonHamiltonian => report.non_hamiltonian += 1,
            Verdict::Inconclusive => report.inconclusive += 1,
            Verdict::Hamiltonian => {}
        }
        for (tally, held) in filters_out.iter_mut().zip(held) {
            if !held {
                continue;
            }
            tally.satisfied += 1;
            match verdict {
                Verdict::Hamiltonian => tally.hamiltonian += 1,
                Verdict::NonHamiltonian => tally.violations.push(write_graph6(&s.graph)),
                Verdict::Inconclusive => tally.inconclusive += 1,
            }
        }
    }
    report.filters = filters_out;
    report
}

/// Which counterexample a non-guaranteed pattern is sent to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    G1,
    G3,
    G2,
}

/// Middle pairs that G1 covers.
pub fn middle_pairs() -> GammaPattern {
    GammaPattern::from_codes(&[22, 23, 24, 33, 34, 35, 44, 45, 55])
}

/// Routes a non-guaranteed symmetrical pattern; `None` for guaranteed ones.
pub fn route(gamma: GammaPattern) -> Option<Route> {
    if guarantees_hamiltonicity(gamma).unwrap_or(true) {
        return None;
    }
    if gamma.intersects(middle_pairs()) {
        Some(Route::G1)
    } else if gamma.intersects(GammaPattern::from_codes(&[11, 16, 66])) {
        Some(Route::G3)
    } else {
        Some(Route::G2)
    }
}

/// Pairs a routed pattern must contain by the elimination argument.
pub fn route_precondition(route: Route) -> GammaPattern {
    match route {
        Route::G1 => GammaPattern::EMPTY,
        Route::G3 => GammaPattern::from_codes(&[13, 46]),
        Route::G2 => GammaPattern::from_codes(&[12, 13, 46, 56]),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessSummary {
    pub route: Route,
    pub validation: ValidationReport,
    pub signature_classes: usize,
    pub routed_patterns: usize,
    pub covered: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct OnlyIfReport {
    pub census: PatternCensus,
    pub witnesses: Vec<WitnessSummary>,
    /// Patterns heavy on their routed witness.
    pub covered_by_route: usize,
    /// Patterns heavy on at least one witness.
    pub covered_by_any: usize,
    pub precondition_failures: Vec<String>,
    pub uncovered: Vec<String>,
}

impl OnlyIfReport {
    pub fn passed(&self) -> bool {
        self.witnesses
            .iter()
            .all(|w| w.validation.checks.iter().all(|c| c.passed))
            && self.uncovered.is_empty()
            && self.precondition_failures.is_empty()
            && self.covered_by_route == self.census.non_guaranteed
    }
}

/// The default counterexamples: g1(7), g3(8,31) and g2(7,13,13,25).
pub fn default_witnesses() -> Result<Vec<(Route, FamilyWitness)>, FamilyError> {
    Ok(vec![
        (Route::G1, g1(7)?),
        (Route::G3, g3(8, 31)?),
        (Route::G2, g2(7, 13, 13, 25, G2Layout::default())?),
    ])
}

/// Validates each witness and checks that every non-guaranteed pattern is
/// heavy on the witness it is routed to.
pub fn only_if_campaign(witnesses: &[(Route, FamilyWitness)], opts: &HamOptions) -> OnlyIfReport {
    let prepared: Vec<(Route, ValidationReport, Vec<GammaPattern>)> = witnesses
        .par_iter()
        .map(|(route, w)| {
            let validation = validate_counterexample(w, None, opts);
            let classes = signature_classes(&w.graph).into_keys().collect();
            (*route, validation, classes)
        })
        .collect();
    let census = pattern_census();
    let mut covered_by_route = 0;
    let mut covered_by_any = 0;
    let mut uncovered = Vec::new();
    let mut precondition_failures = Vec::new();
    let mut routed = vec![0usize; prepared.len()];
    let mut covered = vec![0usize; prepared.len()];
    for gamma in enumerate_symmetrical() {
        let Some(r) = route(gamma) else { continue };
        if !route_precondition(r).is_subset(gamma) {
            precondition_failures.push(format!("{gamma} routed to {r:?}"));
        }
        let heavy: Vec<bool> = prepared
            .iter()
            .map(|(_, _, c)| is_gamma_heavy_by_classes(c, gamma))
            .collect();
        let mut on_route = false;
        for (i, (wr, _, _)) in prepared.iter().enumerate() {
            if *wr == r {
                routed[i] += 1;
                if heavy[i] {
                    covered[i] += 1;
                    on_route = true;
                }
            }
        }
        covered_by_route += usize::from(on_route);
        if heavy.iter().any(|&h| h) {
            covered_by_any += 1;
        } else {
            uncovered.push(gamma.to_string());
        }
    }
    let witnesses = prepared
        .into_iter()
        .enumerate()
        .map(|(i, (route, validation, classes))| WitnessSummary {
            route,
            validation,
            signature_classes: classes.len(),
            routed_patterns: routed[i],
            covered: covered[i],
        })
        .collect();
    OnlyIfReport {
        census,
        witnesses,
        covered_by_route,
        covered_by_any,
        precondition_failures,
        uncovered,
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct BrousekDeskReport {
    pub graphs: usize,
    pub claw_free_two_connected: usize,
    pub non_hamiltonian: usize,
    pub inconclusive: usize,
    /// Smallest induced member found, per non-hamiltonian graph.
    pub members: Vec<String>,
    pub violations: Vec<String>,
}

/// Non-hamiltonian 2-connected claw-free graphs must contain an induced
/// member of the Brousek family.
pub fn brousek_desk_check(graphs: &[Graph], budget: u64) -> BrousekDeskReport {
    let per: Vec<(bool, Verdict, Option<BrousekSpec>)> = graphs
        .par_iter()
        .map(|g| {
            if !(g.is_two_connected() && is_claw_free(g)) {
                return (false, Verdict::Inconclusive, None);
            }
            let verdict = decide_by_search(g, budget).verdict;
            let member = (verdict == Verdict::NonHamiltonian)
                .then(|| find_induced_brousek(g).map(|(s, _)| s))
                .flatten();
            (true, verdict, member)
        })
        .collect();
    let mut report = BrousekDeskReport {
        graphs: graphs.len(),
        ..BrousekDeskReport::default()
    };
    for (g, (eligible, verdict, member)) in graphs.iter().zip(per) {
        if !eligible {
            continue;
        }
        report.claw_free_two_connected += 1;
        match verdict {
            Verdict::Hamiltonian => {}
            Verdict::Inconclusive => report.inconclusive += 1,
            Verdict::NonHamiltonian => {
                report.non_hamiltonian += 1;
                match member {
                    Some(spec) => report.members.push(spec.to_string()),
                    None => report.violations.push(write_graph6(g)),
                }
            }
        }
    }
    report
}

/// Claw-free corpus for the Brousek desk check: line-graph samples plus
/// randomly thickened Brousek members, all with at most `max_n` vertices.
pub fn claw_free_corpus(count: usize, max_n: usize, seed: u64) -> Result<Vec<Graph>, FamilyError> {
    let specs: Vec<BrousekSpec> = crate::families::brousek_specs(max_n);
    (0..count)
        .into_par_iter()
        .map(|i| {
            let s = seed.wrapping_mul(0x2545_F491_4F6C_DD1D).wrapping_add(i as u64);
            if i % 2 == 0 || specs.is_empty() {
                let n = 6 + (i / 2) % (max_n.max(6) - 5);
                random_claw_o_heavy(n, s, Strategy::LineGraph)
            } else {
                let spec = specs[(i / 2) % specs.len()];
                perturbed_brousek(spec, s, 1 + (i / 2) % 4)
            }
        })
        .collect()
}

//! Acceptance suite: one PASS/FAIL line per criterion; exits non-zero if
//! any criterion fails.

mod common;

use std::time::Instant;

use hamlab_core::campaign::{
    brousek_desk_check, claw_free_corpus, claw_o_heavy_corpus, closure_campaign, default_witnesses, if_campaign,
    lemma_campaign, only_if_campaign, pattern_census, CorpusConfig, Filter, GUARANTEED_PATTERNS,
    NON_GUARANTEED_PATTERNS, SYMMETRICAL_PATTERNS,
};
use hamlab_core::families::{
    brousek, check_claims, claim_table, g1, g2_pattern, g2_unchecked, g3, validate_counterexample, FamilyWitness,
    G2Layout,
};
use hamlab_core::gamma::{
    enumerate_symmetrical, gamma_constants, guarantees_hamiltonicity, signature_classes, GammaPattern,
};
use hamlab_core::hamilton::{
    decide_by_search, find_hamiltonian_cycle, is_hamiltonian, verify_certificate, Certificate, HamOptions,
    SearchOutcome, Verdict, DEFAULT_BUDGET,
};
use hamlab_core::Graph;
use rayon::prelude::*;

type Outcome = (bool, String);
type Criterion = (&'static str, fn() -> Outcome);

fn criterion_1() -> Outcome {
    let (g1, g2, g3) = gamma_constants();
    let texts = [g1.to_string(), g2.to_string(), g3.to_string()];
    let expected = [
        "14,15,16,24,25,26,34,35,36",
        "11,12,14,15,16,25,26,36,56,66",
        "13,14,15,25,26,36,46",
    ];
    let sizes = [g1.len(), g2.len(), g3.len()];
    let only_g3 = |i, j| g3.contains(i, j) && !g1.contains(i, j) && !g2.contains(i, j);
    let loops_ok = g2.loops().collect::<Vec<_>>() == vec![1, 6] && g1.loops().count() == 0 && g3.loops().count() == 0;
    let pass = texts == expected && sizes == [9, 10, 7] && only_g3(4, 6) && only_g3(1, 3) && loops_ok;
    (
        pass,
        format!(
            "edge counts {sizes:?}; 46 and 13 only in γ3: {}; loops 11,66 only in γ2: {loops_ok}",
            only_g3(4, 6) && only_g3(1, 3)
        ),
    )
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let all: Vec<GammaPattern> = enumerate_symmetrical().collect();
    let mut distinct = all.clone();
    distinct.sort();
    distinct.dedup();
    let fixed = all.iter().all(|g| g.mirror() == *g);
    let first = pattern_census();
    let second = pattern_census();
    let guaranteed = all.iter().filter(|g| guarantees_hamiltonicity(**g).unwrap()).count();
    let elapsed = start.elapsed();
    let pass = all.len() == SYMMETRICAL_PATTERNS
        && distinct.len() == all.len()
        && fixed
        && first == second
        && first.guaranteed == GUARANTEED_PATTERNS
        && first.non_guaranteed == NON_GUARANTEED_PATTERNS
        && guaranteed == GUARANTEED_PATTERNS
        && elapsed.as_secs_f64() < 1.0;
    (
        pass,
        format!(
            "{} patterns ({} distinct, all mirror-fixed: {fixed}); guaranteed {} / non-guaranteed {}; stable: {}; {:.3}s",
            all.len(),
            distinct.len(),
            first.guaranteed,
            first.non_guaranteed,
            first == second,
            elapsed.as_secs_f64()
        ),
    )
}

fn closure_corpus() -> CorpusConfig {
    CorpusConfig {
        count: 600,
        min_n: 6,
        max_n: 14,
        seed: 20_240_601,
    }
}

fn criterion_3() -> Outcome {
    let samples = claw_o_heavy_corpus(&closure_corpus()).expect("corpus");
    let report = closure_campaign(&samples, 20, DEFAULT_BUDGET);
    let pass = report.graphs >= 500 && report.violations.is_empty() && report.inconclusive == 0;
    let mut summary = format!(
        "{} graphs x {} orders; {} hamiltonian, {} not; {} violations; {} diamond warnings",
        report.graphs,
        report.orders_per_graph,
        report.hamiltonian,
        report.non_hamiltonian,
        report.violations.len(),
        report.diamond_warnings
    );
    if let Some(v) = report.violations.first() {
        summary.push_str(&format!("; first: {} on {} ({})", v.property, v.graph6, v.detail));
    }
    (pass, summary)
}

fn criterion_4() -> Outcome {
    let samples = claw_o_heavy_corpus(&closure_corpus()).expect("corpus");
    let report = lemma_campaign(&samples);
    let pass = report.violations.is_empty() && report.errors.is_empty();
    let mut summary = format!(
        "{} graphs, {} regions, {} interior / {} frontier vertices; {} violations, {} errors",
        report.graphs,
        report.regions,
        report.interior_vertices,
        report.frontier_vertices,
        report.violations.len(),
        report.errors.len()
    );
    if let Some(v) = report.violations.first() {
        summary.push_str(&format!("; first: {:?}", v.violation));
    }
    (pass, summary)
}

fn criterion_5() -> Outcome {
    let samples = claw_o_heavy_corpus(&CorpusConfig {
        count: 10_000,
        min_n: 5,
        max_n: 12,
        seed: 9_000_001,
    })
    .expect("corpus");
    let report = if_campaign(&samples, &Filter::STANDARD, DEFAULT_BUDGET);
    let pass = report.graphs >= 10_000 && report.violations() == 0 && report.filter_inconclusive() == 0;
    let per: Vec<String> = report
        .filters
        .iter()
        .map(|f| format!("{:?} {}/{}", f.filter, f.hamiltonian, f.satisfied))
        .collect();
    (
        pass,
        format!(
            "{} graphs ({} non-hamiltonian); hamiltonian/satisfied: {}; violations {}",
            report.graphs,
            report.non_hamiltonian,
            per.join(", "),
            report.violations()
        ),
    )
}

fn criterion_6() -> Outcome {
    let witnesses = default_witnesses().expect("witnesses validate");
    let report = only_if_campaign(&witnesses, &HamOptions::default());
    let mut notes = Vec::new();
    let mut pass = report.passed() && report.covered_by_route == NON_GUARANTEED_PATTERNS;

    // g1(7) by exhaustive search as well
    let w1 = g1(7).unwrap();
    let search = decide_by_search(&w1.graph, DEFAULT_BUDGET);
    let exhaustive_ok = search.verdict == Verdict::NonHamiltonian
        && search.certificate.as_ref().is_some_and(|c| {
            matches!(c, Certificate::ExhaustedSearch { .. }) && verify_certificate(&w1.graph, c).is_ok()
        });
    pass &= exhaustive_ok;
    notes.push(format!(
        "g1(7) exhaustive search: {} ({} nodes)",
        exhaustive_ok, search.nodes
    ));

    for w in &report.witnesses {
        let cert_ok = matches!(w.validation.certificate, Some(Certificate::ThreeChannel { .. }));
        pass &= cert_ok;
        notes.push(format!(
            "{:?} n={} {} [{}] covers {}/{}",
            w.route,
            w.validation.n,
            if w.validation.checks.iter().all(|c| c.passed) {
                "valid"
            } else {
                "INVALID"
            },
            w.validation
                .checks
                .iter()
                .map(|c| c.name.as_str())
                .collect::<Vec<_>>()
                .join(","),
            w.covered,
            w.routed_patterns
        ));
    }
    let minimal = g2_unchecked(6, 12, 12, 23, G2Layout::default()).unwrap();
    let minimal_report = validate_counterexample(&minimal, Some(g2_pattern()), &HamOptions::default());
    notes.push(format!(
        "g2(6,12,12,23) γ'-heavy: {} (validated witness g2(7,13,13,25) used)",
        minimal_report
            .checks
            .iter()
            .any(|c| c.name == "p6_gamma_heavy" && c.passed)
    ));
    (
        pass,
        format!(
            "{}/{} non-guaranteed patterns covered on their routed witness, {} uncovered; {}",
            report.covered_by_route,
            NON_GUARANTEED_PATTERNS,
            report.uncovered.len(),
            notes.join("; ")
        ),
    )
}

fn claim_classes(w: &FamilyWitness, expected: usize) -> (bool, String) {
    let classes = signature_classes(&w.graph);
    let table = claim_table(w);
    let claims = check_claims(w);
    let unmatched: Vec<String> = classes
        .keys()
        .filter(|s| !table.iter().any(|(_, req)| req.holds(**s)))
        .map(|s| format!("{{{s}}}"))
        .collect();
    let rows_ok = claims.iter().all(|c| c.passed);
    let up_to_reversal = classes.keys().filter(|s| **s <= s.mirror()).count();
    let pass = classes.len() == expected && rows_ok && unmatched.is_empty();
    (
        pass,
        format!(
            "{} classes (expected {expected}; {up_to_reversal} up to reversal), claimed paths realized: {rows_ok}, classes outside the table: {}",
            classes.len(),
            if unmatched.is_empty() { "none".to_string() } else { unmatched.join(" ") }
        ),
    )
}

fn criterion_7() -> Outcome {
    let (p1, s1) = claim_classes(&g1(7).unwrap(), 4);
    let (p3, s3) = claim_classes(&g3(8, 31).unwrap(), 7);
    (p1 && p3, format!("g1(7): {s1} | g3(8,31): {s3}"))
}

fn criterion_8() -> Outcome {
    let corpus = common::random_corpus(2400, 3, 9, 77);
    let mismatches: Vec<String> = corpus
        .par_iter()
        .filter_map(|g| {
            let oracle = common::hamiltonian_by_permutations(g);
            let search = find_hamiltonian_cycle(g, DEFAULT_BUDGET);
            let search_says = match &search.outcome {
                SearchOutcome::Found { .. } => Some(true),
                SearchOutcome::Exhausted => Some(false),
                SearchOutcome::BudgetExceeded => None,
            };
            let decision = is_hamiltonian(g, &HamOptions::default());
            let cert_ok = decision
                .certificate
                .as_ref()
                .is_some_and(|c| verify_certificate(g, c).is_ok());
            (search_says != Some(oracle) || decision.is_hamiltonian() != Some(oracle) || !cert_ok)
                .then(|| hamlab_core::io::write_graph6(g))
        })
        .collect();
    let yes = corpus.iter().filter(|g| common::hamiltonian_by_permutations(g)).count();
    let exhaust = |g: &Graph| {
        let d = decide_by_search(g, DEFAULT_BUDGET);
        d.verdict == Verdict::NonHamiltonian
            && matches!(d.certificate, Some(Certificate::ExhaustedSearch { .. }))
            && verify_certificate(g, d.certificate.as_ref().unwrap()).is_ok()
    };
    let petersen = exhaust(&Graph::petersen());
    let p333 = exhaust(&brousek("3,3,3".parse().unwrap()).unwrap().graph);
    (
        mismatches.is_empty() && petersen && p333 && corpus.len() >= 2000,
        format!(
            "{} graphs ({} hamiltonian), {} disagreements with the permutation oracle; Petersen exhausted: {petersen}; P(3,3,3) exhausted: {p333}",
            corpus.len(),
            yes,
            mismatches.len()
        ),
    )
}

fn criterion_9() -> Outcome {
    let mut graphs = claw_free_corpus(2000, 12, 4242).expect("claw-free corpus");
    let extra = claw_o_heavy_corpus(&CorpusConfig {
        count: 2000,
        min_n: 5,
        max_n: 12,
        seed: 31_337,
    })
    .expect("corpus");
    graphs.extend(extra.into_iter().map(|s| s.graph));
    let report = brousek_desk_check(&graphs, DEFAULT_BUDGET);
    let pass = report.violations.is_empty() && report.inconclusive == 0 && report.non_hamiltonian > 0;
    (
        pass,
        format!(
            "{} graphs, {} 2-connected claw-free, {} non-hamiltonian, {} without an induced member, {} inconclusive",
            report.graphs,
            report.claw_free_two_connected,
            report.non_hamiltonian,
            report.violations.len(),
            report.inconclusive
        ),
    )
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("pattern constants", criterion_1),
        ("symmetrical pattern enumeration", criterion_2),
        ("closure oracle", criterion_3),
        ("region structure", criterion_4),
        ("sufficiency sampling", criterion_5),
        ("counterexample coverage", criterion_6),
        ("claim tables", criterion_7),
        ("solver oracle", criterion_8),
        ("induced Brousek members", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let (pass, summary) = run();
        println!(
            "criterion {} {:<32} {} ({:.1}s) {}",
            i + 1,
            name,
            if pass { "PASS" } else { "FAIL" },
            start.elapsed().as_secs_f64(),
            summary
        );
        failed += usize::from(!pass);
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}

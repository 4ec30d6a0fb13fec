//! Exact Hamiltonicity with checkable certificates.
//!
//! Non-hamiltonicity is certified in one of three ways:
//!
//! * a vertex set `S` whose removal leaves more than `max(|S|, 1)` components;
//! * a three-channel template: an apex triangle whose every vertex is forced
//!   to use exactly one triangle edge in any Hamilton cycle, which is
//!   impossible because the triangle edges used would have odd degree sum;
//! * an exhausted backtracking search (re-run by the verifier).

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// How one apex vertex is forced to use exactly one apex-triangle edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Channel {
    /// `N(vertex) = {apex, partner}`, `partner ~ apex`, and
    /// `N(apex) ⊆ {vertex, partner} ∪ triangle`.
    Bottleneck { vertex: usize, partner: usize },
    /// `members` is closed except through the apex vertex and `gateway`:
    /// `N(members) ⊆ members ∪ {apex, gateway}` and
    /// `N(apex) ⊆ members ∪ triangle`.
    Gateway { members: Vec<usize>, gateway: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ThreeChannelRoles {
    pub apex: [usize; 3],
    /// `channels[i]` belongs to `apex[i]`.
    pub channels: [Channel; 3],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    Cycle { cycle: Vec<usize> },
    ExhaustedSearch { nodes: u64 },
    CutWitness { set: Vec<usize>, components: usize },
    ThreeChannel { roles: ThreeChannelRoles },
    TooFewVertices { n: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error("cycle has {found} vertices, graph has {expected}")]
    WrongLength { expected: usize, found: usize },
    #[error("vertex {0} repeated or out of range in cycle")]
    BadVertex(usize),
    #[error("cycle uses non-edge {0} {1}")]
    MissingEdge(usize, usize),
    #[error("removing {size} vertices leaves only {components} components")]
    CutTooWeak { size: usize, components: usize },
    #[error("three-channel template does not fit: {0}")]
    TemplateMismatch(String),
    #[error("re-running the search gave a different outcome: {0}")]
    SearchMismatch(String),
    #[error("graph has {0} vertices; at least 3 are needed for a cycle")]
    NotTooSmall(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SearchOutcome {
    Found { cycle: Vec<usize> },
    Exhausted,
    BudgetExceeded,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchResult {
    pub outcome: SearchOutcome,
    pub nodes: u64,
}

struct OutOfBudget;

struct Solver<'a> {
    g: &'a Graph,
    start: usize,
    path: Vec<usize>,
    unvisited: VertexSet,
    nodes: u64,
    budget: u64,
}

impl Solver<'_> {
    fn dfs(&mut self, end: usize) -> Result<bool, OutOfBudget> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(OutOfBudget);
        }
        let g = self.g;
        if self.unvisited.is_empty() {
            return Ok(g.has_edge(end, self.start));
        }
        let Some(candidates) = self.candidates(end) else {
            return Ok(false);
        };
        for v in candidates {
            self.unvisited.remove(v);
            self.path.push(v);
            if self.dfs(v)? {
                return Ok(true);
            }
            self.path.pop();
            self.unvisited.insert(v);
        }
        Ok(false)
    }

    /// Next-vertex candidates after pruning, or `None` if the node is dead.
    fn candidates(&self, end: usize) -> Option<Vec<usize>> {
        let g = self.g;
        let start = self.start;
        let remaining = self.unvisited.len();
        let mut allowed = self.unvisited.clone();
        allowed.insert(end);
        allowed.insert(start);

        let mut forced_next = None;
        let mut needs_start = 0;
        let mut at_root_forced = 0;
        let mut ranked = Vec::new();
        for v in self.unvisited.iter() {
            let avail = g.neighbors(v).intersection_len(&allowed);
            if avail < 2 {
                return None;
            }
            let to_end = g.has_edge(v, end);
            let to_start = start != end && g.has_edge(v, start);
            if avail == 2 {
                if to_end {
                    // at the root both cycle neighbours of the start hang off `end`
                    if start == end {
                        at_root_forced += 1;
                        if at_root_forced > 2 {
                            return None;
                        }
                        forced_next.get_or_insert(v);
                    } else if forced_next.replace(v).is_some() {
                        return None;
                    }
                }
                if to_start {
                    needs_start += 1;
                    if needs_start > 1 || (to_end && remaining > 1) {
                        return None;
                    }
                }
            }
            if to_end {
                ranked.push((avail, v));
            }
        }
        if ranked.is_empty() {
            return None;
        }
        if start != end && g.neighbors(start).is_disjoint(&self.unvisited) {
            return None;
        }
        let first = self.unvisited.first().expect("non-empty");
        if g.reach_within(first, &self.unvisited).len() != remaining {
            return None;
        }
        if let Some(v) = forced_next {
            return Some(vec![v]);
        }
        ranked.sort_unstable();
        Some(ranked.into_iter().map(|(_, v)| v).collect())
    }
}

/// Backtracking search for a Hamilton cycle. `Exhausted` is only reported
/// when the whole search space was covered within `budget` nodes.
pub fn find_hamiltonian_cycle(g: &Graph, budget: u64) -> SearchResult {
    let n = g.order();
    let dead = |nodes| SearchResult {
        outcome: SearchOutcome::Exhausted,
        nodes,
    };
    if n < 3 || g.degrees().iter().any(|&d| d < 2) || !g.is_connected() {
        return dead(0);
    }
    let start = g.vertices().min_by_key(|&v| (g.degree(v), v)).expect("n >= 3");
    let mut unvisited = VertexSet::full(n);
    unvisited.remove(start);
    let mut solver = Solver {
        g,
        start,
        path: vec![start],
        unvisited,
        nodes: 0,
        budget,
    };
    match solver.dfs(start) {
        Ok(true) => SearchResult {
            outcome: SearchOutcome::Found { cycle: solver.path },
            nodes: solver.nodes,
        },
        Ok(false) => dead(solver.nodes),
        Err(OutOfBudget) => SearchResult {
            outcome: SearchOutcome::BudgetExceeded,
            nodes: solver.nodes,
        },
    }
}

/// Components of `g - set`.
fn components_without(g: &Graph, set: &[usize]) -> usize {
    let mut allowed = VertexSet::full(g.order());
    for &v in set {
        allowed.remove(v);
    }
    g.components_within(&allowed).len()
}

fn is_cut_witness(g: &Graph, set: &[usize]) -> Option<usize> {
    let c = components_without(g, set);
    (c > set.len().max(1)).then_some(c)
}

/// Smallest set `S` (by size, then lexicographically) with
/// `components(g - S) > max(|S|, 1)`, searching sizes up to `max_size`.
pub fn find_cut_witness(g: &Graph, max_size: usize) -> Option<Vec<usize>> {
    let n = g.order();
    for size in 0..=max_size.min(n) {
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            if is_cut_witness(g, &combo).is_some() {
                return Some(combo);
            }
            // next combination in lexicographic order
            let Some(i) = (0..size).rev().find(|&i| combo[i] < n - size + i) else {
                break;
            };
            combo[i] += 1;
            for j in i + 1..size {
                combo[j] = combo[j - 1] + 1;
            }
        }
    }
    None
}

fn binomial(n: usize, k: usize) -> u64 {
    (0..k as u64).fold(1u64, |acc, i| acc.saturating_mul(n as u64 - i) / (i + 1))
}

/// Largest cut size (at most 5) whose subset count stays under `limit`.
pub fn affordable_cut_size(n: usize, limit: u64) -> usize {
    let mut total = 0u64;
    let mut size = 0;
    for k in 0..=5.min(n) {
        total = total.saturating_add(binomial(n, k));
        if total > limit {
            break;
        }
        size = k;
    }
    size
}

fn check_channel(g: &Graph, apex: &[usize; 3], i: usize, channel: &Channel) -> Result<(), String> {
    let a = apex[i];
    let triangle = VertexSet::from_vertices(g.order(), apex.iter().copied());
    match channel {
        Channel::Bottleneck { vertex, partner } => {
            let (v, p) = (*vertex, *partner);
            if v >= g.order() || p >= g.order() || triangle.contains(v) || triangle.contains(p) || v == p {
                return Err(format!("bottleneck roles {v},{p} invalid for apex {a}"));
            }
            let expected = VertexSet::from_vertices(g.order(), [a, p]);
            if g.neighbors(v) != &expected {
                return Err(format!("N({v}) is not {{{a},{p}}}"));
            }
            if !g.has_edge(a, p) {
                return Err(format!("{p} not adjacent to apex {a}"));
            }
            let mut allowed = triangle.clone();
            allowed.insert(v);
            allowed.insert(p);
            if !g.neighbors(a).is_subset(&allowed) {
                return Err(format!("apex {a} has neighbours outside its bottleneck channel"));
            }
            if g.order() <= 3 {
                return Err("graph too small".into());
            }
        }
        Channel::Gateway { members, gateway } => {
            let gw = *gateway;
            if members.is_empty() {
                return Err(format!("empty channel at apex {a}"));
            }
            if members.iter().chain([gw].iter()).any(|&v| v >= g.order()) {
                return Err("channel vertex out of range".into());
            }
            let set = VertexSet::from_vertices(g.order(), members.iter().copied());
            if set.len() != members.len() || !set.is_disjoint(&triangle) || set.contains(gw) || triangle.contains(gw) {
                return Err(format!("channel at apex {a} overlaps the triangle or its gateway"));
            }
            let mut apex_allowed = set.clone();
            apex_allowed.union_with(&triangle);
            if !g.neighbors(a).is_subset(&apex_allowed) {
                return Err(format!("apex {a} has neighbours outside its channel"));
            }
            let mut closed = set.clone();
            closed.insert(a);
            closed.insert(gw);
            for v in members {
                if !g.neighbors(*v).is_subset(&closed) {
                    return Err(format!("channel member {v} escapes through a non-gateway vertex"));
                }
            }
        }
    }
    Ok(())
}

fn check_roles(g: &Graph, roles: &ThreeChannelRoles) -> Result<(), String> {
    let [a, b, c] = roles.apex;
    if [a, b, c].iter().any(|&v| v >= g.order()) || a == b || b == c || a == c {
        return Err("apex vertices must be three distinct vertices".into());
    }
    if !(g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)) {
        return Err("apex vertices do not form a triangle".into());
    }
    for (i, ch) in roles.channels.iter().enumerate() {
        check_channel(g, &roles.apex, i, ch)?;
    }
    Ok(())
}

/// Validates a proposed three-channel template against `g`; `Some` means
/// the template proves `g` non-hamiltonian.
pub fn certify_three_channel(g: &Graph, roles: &ThreeChannelRoles) -> Option<ThreeChannelRoles> {
    check_roles(g, roles).ok().map(|_| roles.clone())
}

fn discover_channel(g: &Graph, apex: &[usize; 3], i: usize) -> Option<Channel> {
    let a = apex[i];
    let n = g.order();
    let triangle = VertexSet::from_vertices(n, apex.iter().copied());
    let outside = g.neighbors(a).difference(&triangle);
    if outside.is_empty() {
        return None;
    }
    let outs = outside.to_vec();
    if outs.len() == 2 {
        for (v, p) in [(outs[0], outs[1]), (outs[1], outs[0])] {
            let ch = Channel::Bottleneck { vertex: v, partner: p };
            if check_channel(g, apex, i, &ch).is_ok() {
                return Some(ch);
            }
        }
    }
    let others: Vec<usize> = apex.iter().copied().filter(|&v| v != a).collect();
    if others.iter().any(|&o| !g.neighbors(o).is_disjoint(&outside)) {
        return None;
    }
    let mut base = VertexSet::full(n);
    for &v in apex {
        base.remove(v);
    }
    for gw in base.iter().filter(|&v| !outside.contains(v)) {
        let mut allowed = base.clone();
        allowed.remove(gw);
        let mut members = VertexSet::new(n);
        for &o in &outs {
            if !members.contains(o) {
                members.union_with(&g.reach_within(o, &allowed));
            }
        }
        let ch = Channel::Gateway {
            members: members.to_vec(),
            gateway: gw,
        };
        if check_channel(g, apex, i, &ch).is_ok() {
            return Some(ch);
        }
    }
    None
}

/// Searches every triangle for a three-channel template.
pub fn discover_three_channel(g: &Graph) -> Option<ThreeChannelRoles> {
    for a in g.vertices() {
        for b in g.neighbors(a).iter().filter(|&b| b > a) {
            for c in g.neighbors(a).intersection(g.neighbors(b)).iter().filter(|&c| c > b) {
                let apex = [a, b, c];
                let mut channels = Vec::with_capacity(3);
                for i in 0..3 {
                    match discover_channel(g, &apex, i) {
                        Some(ch) => channels.push(ch),
                        None => break,
                    }
                }
                if let Ok(channels) = <[Channel; 3]>::try_from(channels) {
                    return Some(ThreeChannelRoles { apex, channels });
                }
            }
        }
    }
    None
}

pub fn verify_certificate(g: &Graph, cert: &Certificate) -> Result<(), CertificateError> {
    let n = g.order();
    match cert {
        Certificate::Cycle { cycle } => {
            if cycle.len() != n || n < 3 {
                return Err(CertificateError::WrongLength {
                    expected: n,
                    found: cycle.len(),
                });
            }
            let mut seen = VertexSet::new(n);
            for &v in cycle {
                if v >= n || seen.contains(v) {
                    return Err(CertificateError::BadVertex(v));
                }
                seen.insert(v);
            }
            for k in 0..n {
                let (u, v) = (cycle[k], cycle[(k + 1) % n]);
                if !g.has_edge(u, v) {
                    return Err(CertificateError::MissingEdge(u, v));
                }
            }
            Ok(())
        }
        Certificate::CutWitness { set, .. } => {
            if set.iter().any(|&v| v >= n) {
                return Err(CertificateError::BadVertex(*set.iter().find(|&&v| v >= n).unwrap()));
            }
            match is_cut_witness(g, set) {
                Some(_) => Ok(()),
                None => Err(CertificateError::CutTooWeak {
                    size: set.len(),
                    components: components_without(g, set),
                }),
            }
        }
        Certificate::ThreeChannel { roles } => check_roles(g, roles).map_err(CertificateError::TemplateMismatch),
        Certificate::ExhaustedSearch { nodes } => {
            let rerun = find_hamiltonian_cycle(g, *nodes);
            match rerun.outcome {
                SearchOutcome::Exhausted if rerun.nodes == *nodes => Ok(()),
                other => Err(CertificateError::SearchMismatch(format!(
                    "{other:?} after {} nodes",
                    rerun.nodes
                ))),
            }
        }
        Certificate::TooFewVertices { n: claimed } => {
            if n < 3 && *claimed == n {
                Ok(())
            } else {
                Err(CertificateError::NotTooSmall(n))
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Hamiltonian,
    NonHamiltonian,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decision {
    pub verdict: Verdict,
    pub certificate: Option<Certificate>,
    pub nodes: u64,
}

impl Decision {
    pub fn is_hamiltonian(&self) -> Option<bool> {
        match self.verdict {
            Verdict::Hamiltonian => Some(true),
            Verdict::NonHamiltonian => Some(false),
            Verdict::Inconclusive => None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct HamOptions {
    pub budget: u64,
    /// Subset budget for the cut-witness scan.
    pub cut_subsets: u64,
    /// Template roles known in advance (e.g. from a generator's labels).
    pub roles: Option<ThreeChannelRoles>,
    pub discover_template: bool,
}

impl Default for HamOptions {
    fn default() -> Self {
        HamOptions {
            budget: DEFAULT_BUDGET,
            cut_subsets: 50_000,
            roles: None,
            discover_template: true,
        }
    }
}

/// Cut witness, then three-channel template, then exhaustive search.
pub fn is_hamiltonian(g: &Graph, opts: &HamOptions) -> Decision {
    let n = g.order();
    let non = |certificate, nodes| Decision {
        verdict: Verdict::NonHamiltonian,
        certificate: Some(certificate),
        nodes,
    };
    if n < 3 {
        if !g.is_connected() {
            let set = Vec::new();
            return non(
                Certificate::CutWitness {
                    components: components_without(g, &set),
                    set,
                },
                0,
            );
        }
        return non(Certificate::TooFewVertices { n }, 0);
    }
    if let Some(set) = find_cut_witness(g, affordable_cut_size(n, opts.cut_subsets)) {
        let components = components_without(g, &set);
        return non(Certificate::CutWitness { set, components }, 0);
    }
    let roles = opts
        .roles
        .as_ref()
        .and_then(|r| certify_three_channel(g, r))
        .or_else(|| opts.discover_template.then(|| discover_three_channel(g)).flatten());
    if let Some(roles) = roles {
        return non(Certificate::ThreeChannel { roles }, 0);
    }
    let search = find_hamiltonian_cycle(g, opts.budget);
    match search.outcome {
        SearchOutcome::Found { cycle } => Decision {
            verdict: Verdict::Hamiltonian,
            certificate: Some(Certificate::Cycle { cycle }),
            nodes: search.nodes,
        },
        SearchOutcome::Exhausted => non(Certificate::ExhaustedSearch { nodes: search.nodes }, search.nodes),
        SearchOutcome::BudgetExceeded => Decision {
            verdict: Verdict::Inconclusive,
            certificate: None,
            nodes: search.nodes,
        },
    }
}

/// Exhaustive search only; used where a template must not be trusted.
pub fn decide_by_search(g: &Graph, budget: u64) -> Decision {
    is_hamiltonian(
        g,
        &HamOptions {
            budget,
            cut_subsets: 0,
            roles: None,
            discover_template: false,
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn search(g: &Graph) -> SearchOutcome {
        find_hamiltonian_cycle(g, DEFAULT_BUDGET).outcome
    }

    #[test]
    fn cycles_are_found_and_verified() {
        let c5 = Graph::cycle(5);
        let SearchOutcome::Found { cycle } = search(&c5) else {
            panic!("C5 is hamiltonian")
        };
        assert!(verify_certificate(&c5, &Certificate::Cycle { cycle }).is_ok());
        assert!(matches!(search(&Graph::complete(7)), SearchOutcome::Found { .. }));
    }

    #[test]
    fn petersen_is_exhausted() {
        let p = Graph::petersen();
        let r = find_hamiltonian_cycle(&p, DEFAULT_BUDGET);
        assert_eq!(r.outcome, SearchOutcome::Exhausted);
        assert!(verify_certificate(&p, &Certificate::ExhaustedSearch { nodes: r.nodes }).is_ok());
        assert!(verify_certificate(&p, &Certificate::ExhaustedSearch { nodes: r.nodes + 1 }).is_err());
    }

    #[test]
    fn budget_exhaustion_is_not_a_no() {
        let r = find_hamiltonian_cycle(&Graph::petersen(), 3);
        assert_eq!(r.outcome, SearchOutcome::BudgetExceeded);
        let d = decide_by_search(&Graph::petersen(), 3);
        assert_eq!(d.verdict, Verdict::Inconclusive);
    }

    #[test]
    fn cut_witnesses() {
        let k23 = Graph::complete_bipartite(2, 3);
        assert_eq!(find_cut_witness(&k23, 5), Some(vec![0, 1]));
        let cert = Certificate::CutWitness {
            set: vec![0, 1],
            components: 3,
        };
        assert!(verify_certificate(&k23, &cert).is_ok());
        assert!(find_cut_witness(&Graph::cycle(6), 5).is_none());
        let two = Graph::empty(2);
        assert_eq!(find_cut_witness(&two, 0), Some(vec![]));
        let d = is_hamiltonian(&two, &HamOptions::default());
        assert_eq!(d.verdict, Verdict::NonHamiltonian);
        assert!(matches!(d.certificate, Some(Certificate::CutWitness { ref set, .. }) if set.is_empty()));
        let bad = Certificate::CutWitness {
            set: vec![0],
            components: 1,
        };
        assert!(verify_certificate(&Graph::cycle(6), &bad).is_err());
    }

    #[test]
    fn malformed_cycles_rejected() {
        let c5 = Graph::cycle(5);
        let short = Certificate::Cycle {
            cycle: vec![0, 1, 2, 3],
        };
        assert!(matches!(
            verify_certificate(&c5, &short),
            Err(CertificateError::WrongLength { .. })
        ));
        let wrong = Certificate::Cycle {
            cycle: vec![0, 2, 1, 3, 4],
        };
        assert!(matches!(
            verify_certificate(&c5, &wrong),
            Err(CertificateError::MissingEdge(..))
        ));
        let repeat = Certificate::Cycle {
            cycle: vec![0, 1, 2, 1, 0],
        };
        assert!(verify_certificate(&c5, &repeat).is_err());
    }

    #[test]
    fn three_channel_rejected_on_cycle() {
        let c6 = Graph::cycle(6);
        assert!(discover_three_channel(&c6).is_none());
        let roles = ThreeChannelRoles {
            apex: [0, 1, 2],
            channels: [
                Channel::Bottleneck { vertex: 3, partner: 4 },
                Channel::Bottleneck { vertex: 4, partner: 5 },
                Channel::Bottleneck { vertex: 5, partner: 3 },
            ],
        };
        assert!(certify_three_channel(&c6, &roles).is_none());
    }

    #[test]
    fn affordable_sizes() {
        assert_eq!(affordable_cut_size(16, 50_000), 5);
        assert!(affordable_cut_size(64, 50_000) <= 3);
        assert_eq!(affordable_cut_size(2, 50_000), 2);
    }

    #[test]
    fn small_graphs() {
        let d = is_hamiltonian(&Graph::complete(2), &HamOptions::default());
        assert_eq!(d.certificate, Some(Certificate::TooFewVertices { n: 2 }));
        assert!(verify_certificate(&Graph::complete(2), d.certificate.as_ref().unwrap()).is_ok());
        let d = is_hamiltonian(&Graph::complete(3), &HamOptions::default());
        assert_eq!(d.verdict, Verdict::Hamiltonian);
    }
}

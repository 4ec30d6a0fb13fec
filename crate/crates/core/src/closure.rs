//! The o-closure of claw-o-heavy graphs and its region decomposition.
//!
//! The closure repeatedly completes the neighbourhood of an o-eligible
//! vertex until none is left. Regions are the subgraphs of `G` induced by
//! maximal cliques of the closure.

use serde::Serialize;
use thiserror::Error;

use crate::conditions::{find_light_copy, patterns};
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClosureError {
    #[error("graph is not claw-o-heavy: light claw centred at {center} with leaves {leaves:?}")]
    NotClawOHeavy { center: usize, leaves: [usize; 3] },
    #[error("vertex {vertex} lies in {count} maximal cliques of the closure")]
    TooManyRegions { vertex: usize, count: usize },
    #[error("vertices {0} and {1} share no region")]
    Dissociated(usize, usize),
    #[error("no path from {0} to {1} through interior vertices of their region")]
    NoInteriorPath(usize, usize),
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
}

/// `g` plus every missing edge inside `N(x)`.
pub fn local_completion(g: &Graph, x: usize) -> Graph {
    g.with_edges(missing_neighbourhood_edges(g, x))
}

fn missing_neighbourhood_edges(g: &Graph, x: usize) -> Vec<(usize, usize)> {
    let nbrs = g.neighbors(x).to_vec();
    let mut out = Vec::new();
    for (i, &u) in nbrs.iter().enumerate() {
        for &v in &nbrs[i + 1..] {
            if !g.has_edge(u, v) {
                out.push((u, v));
            }
        }
    }
    out
}

/// Heavy pairs inside `N(x)`, adjacent or not, as `(u, v)` with `u < v`.
pub fn heavy_neighborhood_edges(g: &Graph, x: usize) -> Vec<(usize, usize)> {
    let nbrs = g.neighbors(x).to_vec();
    let mut out = Vec::new();
    for (i, &u) in nbrs.iter().enumerate() {
        for &v in &nbrs[i + 1..] {
            if g.is_heavy_pair(u, v) {
                out.push((u, v));
            }
        }
    }
    out
}

/// Why a vertex is or is not o-eligible.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Eligibility {
    /// The neighbourhood plus its heavy pairs is connected.
    Connected,
    /// Two cliques bridged by a join vertex (the lowest one is reported).
    TwoCliquesWithJoin {
        join: usize,
    },
    TwoCliquesNoJoin,
    /// Neighbourhood already a clique, or any other shape.
    NotApplicable,
}

impl Eligibility {
    pub fn is_eligible(self) -> bool {
        matches!(self, Eligibility::Connected | Eligibility::TwoCliquesWithJoin { .. })
    }
}

pub fn eligibility(g: &Graph, x: usize) -> Eligibility {
    let nbrs = g.neighbors(x);
    if g.is_clique(nbrs) {
        return Eligibility::NotApplicable;
    }
    // adjacency of G°x restricted to N(x)
    let row = |u: usize| {
        let mut r = g.neighbors(u).intersection(nbrs);
        for w in nbrs.iter() {
            if w != u && g.is_heavy_pair(u, w) {
                r.insert(w);
            }
        }
        r
    };
    let mut remaining = nbrs.clone();
    let mut comps: Vec<VertexSet> = Vec::new();
    while let Some(s) = remaining.first() {
        let mut comp = VertexSet::new(g.order());
        let mut stack = vec![s];
        comp.insert(s);
        remaining.remove(s);
        while let Some(u) = stack.pop() {
            for w in row(u).intersection(&remaining).iter() {
                remaining.remove(w);
                comp.insert(w);
                stack.push(w);
            }
        }
        comps.push(comp);
        if comps.len() > 2 {
            return Eligibility::NotApplicable;
        }
    }
    if comps.len() == 1 {
        return Eligibility::Connected;
    }
    let complete = |c: &VertexSet| {
        c.iter().all(|u| {
            let mut others = c.clone();
            others.remove(u);
            others.is_subset(&row(u))
        })
    };
    if !comps.iter().all(complete) {
        return Eligibility::NotApplicable;
    }
    let join = g.vertices().find(|&z| {
        z != x
            && !nbrs.contains(z)
            && g.is_heavy_pair(x, z)
            && !g.neighbors(z).is_disjoint(&comps[0])
            && !g.neighbors(z).is_disjoint(&comps[1])
    });
    match join {
        Some(join) => Eligibility::TwoCliquesWithJoin { join },
        None => Eligibility::TwoCliquesNoJoin,
    }
}

pub fn is_o_eligible(g: &Graph, x: usize) -> bool {
    eligibility(g, x).is_eligible()
}

pub fn eligible_vertices(g: &Graph) -> Vec<usize> {
    g.vertices().filter(|&x| is_o_eligible(g, x)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosureStep {
    pub vertex: usize,
    pub eligibility: Eligibility,
    pub added: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosureTrace {
    pub steps: Vec<ClosureStep>,
    pub result: Graph,
}

fn require_claw_o_heavy(g: &Graph) -> Result<(), ClosureError> {
    match find_light_copy(g, &patterns::claw()) {
        None => Ok(()),
        Some(e) => {
            let m = e.vertices();
            Err(ClosureError::NotClawOHeavy {
                center: m[0],
                leaves: [m[1], m[2], m[3]],
            })
        }
    }
}

/// Closure with the lowest-indexed eligible vertex completed at each step.
pub fn compute_closure(g: &Graph) -> Result<ClosureTrace, ClosureError> {
    compute_closure_with(g, |_| 0)
}

/// Closure where `choose` picks an index into the (sorted) list of
/// currently eligible vertices.
pub fn compute_closure_with<F>(g: &Graph, mut choose: F) -> Result<ClosureTrace, ClosureError>
where
    F: FnMut(&[usize]) -> usize,
{
    require_claw_o_heavy(g)?;
    let mut current = g.clone();
    let mut steps = Vec::new();
    loop {
        let eligible = eligible_vertices(&current);
        if eligible.is_empty() {
            break;
        }
        let x = eligible[choose(&eligible) % eligible.len()];
        let eligibility = eligibility(&current, x);
        let added = missing_neighbourhood_edges(&current, x);
        current = current.with_edges(added.iter().copied());
        steps.push(ClosureStep {
            vertex: x,
            eligibility,
            added,
        });
    }
    Ok(ClosureTrace { steps, result: current })
}

/// All maximal cliques, each sorted, in lexicographic order.
pub fn maximal_cliques(g: &Graph) -> Vec<Vec<usize>> {
    fn expand(g: &Graph, r: &mut Vec<usize>, mut p: VertexSet, mut x: VertexSet, out: &mut Vec<Vec<usize>>) {
        if p.is_empty() && x.is_empty() {
            let mut c = r.clone();
            c.sort_unstable();
            out.push(c);
            return;
        }
        let pivot = p
            .iter()
            .chain(x.iter())
            .max_by_key(|&u| g.neighbors(u).intersection_len(&p))
            .expect("p or x non-empty");
        for v in p.difference(g.neighbors(pivot)).iter() {
            r.push(v);
            expand(
                g,
                r,
                p.intersection(g.neighbors(v)),
                x.intersection(g.neighbors(v)),
                out,
            );
            r.pop();
            p.remove(v);
            x.insert(v);
        }
    }
    let mut out = Vec::new();
    let n = g.order();
    expand(g, &mut Vec::new(), VertexSet::full(n), VertexSet::new(n), &mut out);
    out.sort();
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegionDecomposition {
    /// Maximal cliques of the closure, sorted.
    pub regions: Vec<Vec<usize>>,
    /// Indices into `regions` for every vertex.
    pub vertex_regions: Vec<Vec<usize>>,
}

impl RegionDecomposition {
    /// Decomposes the closure graph `cl` into regions.
    pub fn from_closure(cl: &Graph) -> Result<RegionDecomposition, ClosureError> {
        let regions = maximal_cliques(cl);
        let mut vertex_regions = vec![Vec::new(); cl.order()];
        for (i, r) in regions.iter().enumerate() {
            for &v in r {
                vertex_regions[v].push(i);
            }
        }
        if let Some((vertex, rs)) = vertex_regions.iter().enumerate().find(|(_, rs)| rs.len() > 2) {
            return Err(ClosureError::TooManyRegions {
                vertex,
                count: rs.len(),
            });
        }
        Ok(RegionDecomposition {
            regions,
            vertex_regions,
        })
    }

    pub fn order(&self) -> usize {
        self.vertex_regions.len()
    }

    pub fn is_interior(&self, v: usize) -> bool {
        self.vertex_regions[v].len() == 1
    }

    pub fn is_frontier(&self, v: usize) -> bool {
        self.vertex_regions[v].len() == 2
    }

    pub fn interior(&self, region: usize) -> VertexSet {
        VertexSet::from_vertices(
            self.order(),
            self.regions[region].iter().copied().filter(|&v| self.is_interior(v)),
        )
    }

    pub fn frontier(&self, region: usize) -> VertexSet {
        VertexSet::from_vertices(
            self.order(),
            self.regions[region].iter().copied().filter(|&v| self.is_frontier(v)),
        )
    }

    /// The region containing both `u` and `v`, if any.
    pub fn common_region(&self, u: usize, v: usize) -> Option<usize> {
        self.vertex_regions[u]
            .iter()
            .copied()
            .find(|r| self.vertex_regions[v].contains(r))
    }

    pub fn dissociated(&self, u: usize, v: usize) -> bool {
        self.common_region(u, v).is_none()
    }
}

/// Region decomposition of `g` from a closure trace of `g`.
pub fn regions(trace: &ClosureTrace, g: &Graph) -> Result<RegionDecomposition, ClosureError> {
    debug_assert_eq!(trace.result.order(), g.order());
    RegionDecomposition::from_closure(&trace.result)
}

pub fn dissociated(dec: &RegionDecomposition, u: usize, v: usize) -> bool {
    dec.dissociated(u, v)
}

/// Shortest path of `g` from `u` to `v` whose internal vertices are
/// interior vertices of the region shared by `u` and `v`.
pub fn interior_path(dec: &RegionDecomposition, g: &Graph, u: usize, v: usize) -> Result<Vec<usize>, ClosureError> {
    for w in [u, v] {
        if w >= g.order() || w >= dec.order() {
            return Err(ClosureError::VertexOutOfRange {
                vertex: w,
                order: g.order(),
            });
        }
    }
    let r = dec.common_region(u, v).ok_or(ClosureError::Dissociated(u, v))?;
    if u == v {
        return Ok(vec![u]);
    }
    let mut allowed = dec.interior(r);
    allowed.insert(u);
    allowed.insert(v);
    let mut parent = vec![usize::MAX; g.order()];
    let mut queue = std::collections::VecDeque::from([u]);
    parent[u] = u;
    while let Some(a) = queue.pop_front() {
        if a == v {
            break;
        }
        // endpoints are never used as internal vertices
        if a != u && a != v && !dec.is_interior(a) {
            continue;
        }
        for b in g.neighbors(a).intersection(&allowed).iter() {
            if parent[b] == usize::MAX {
                parent[b] = a;
                queue.push_back(b);
            }
        }
    }
    if parent[v] == usize::MAX {
        return Err(ClosureError::NoInteriorPath(u, v));
    }
    let mut path = vec![v];
    while *path.last().unwrap() != u {
        path.push(parent[*path.last().unwrap()]);
    }
    path.reverse();
    Ok(path)
}

/// A failed structural property of a region decomposition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RegionViolation {
    VertexInTooManyRegions { vertex: usize, count: usize },
    VertexInNoRegion { vertex: usize },
    RegionsOverlap { first: usize, second: usize, shared: usize },
    HeavyDissociatedPair { u: usize, v: usize, in_closure: bool },
    SeparableRegion { region: usize },
    FrontierWithoutInteriorNeighbor { region: usize, vertex: usize },
    NoInteriorPath { u: usize, v: usize },
    InteriorPathNotInduced { u: usize, v: usize },
    TooFewCommonInteriorNeighbors { u: usize, v: usize, found: usize },
    HeavyPairOnInteriorPath { u: usize, v: usize, a: usize, b: usize },
}

fn is_nonseparable(g: &Graph, members: &[usize]) -> bool {
    let h = g.induced_subgraph(members);
    match h.order() {
        0 | 1 => true,
        2 => h.size() == 1,
        _ => h.is_two_connected(),
    }
}

/// Checks the structural facts a region decomposition of a claw-o-heavy
/// graph must satisfy; returns every violation found.
pub fn check_regions(g: &Graph, cl: &Graph, dec: &RegionDecomposition) -> Vec<RegionViolation> {
    let n = g.order();
    let mut out = Vec::new();
    for v in 0..n {
        match dec.vertex_regions[v].len() {
            0 => out.push(RegionViolation::VertexInNoRegion { vertex: v }),
            1 | 2 => {}
            count => out.push(RegionViolation::VertexInTooManyRegions { vertex: v, count }),
        }
    }
    let sets: Vec<VertexSet> = dec
        .regions
        .iter()
        .map(|r| VertexSet::from_vertices(n, r.iter().copied()))
        .collect();
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            let shared = sets[i].intersection_len(&sets[j]);
            if shared > 1 {
                out.push(RegionViolation::RegionsOverlap {
                    first: i,
                    second: j,
                    shared,
                });
            }
        }
    }
    for u in 0..n {
        for v in u + 1..n {
            if dec.dissociated(u, v) {
                for (graph, in_closure) in [(cl, true), (g, false)] {
                    if graph.is_heavy_pair(u, v) {
                        out.push(RegionViolation::HeavyDissociatedPair { u, v, in_closure });
                    }
                }
            }
        }
    }
    for (r, members) in dec.regions.iter().enumerate() {
        if !is_nonseparable(g, members) {
            out.push(RegionViolation::SeparableRegion { region: r });
        }
        let interior = dec.interior(r);
        let frontier = dec.frontier(r);
        for f in frontier.iter() {
            let ok = !g.neighbors(f).is_disjoint(&interior) || (interior.is_empty() && g.is_clique(&frontier));
            if !ok {
                out.push(RegionViolation::FrontierWithoutInteriorNeighbor { region: r, vertex: f });
            }
        }
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                check_pair(g, dec, &interior, u, v, &mut out);
            }
        }
    }
    out
}

fn check_pair(
    g: &Graph,
    dec: &RegionDecomposition,
    interior: &VertexSet,
    u: usize,
    v: usize,
    out: &mut Vec<RegionViolation>,
) {
    let path = match interior_path(dec, g, u, v) {
        Ok(p) => p,
        Err(_) => {
            out.push(RegionViolation::NoInteriorPath { u, v });
            return;
        }
    };
    if !crate::induced::Embedding::new(path.clone()).is_induced_copy(g, &Graph::path(path.len())) {
        out.push(RegionViolation::InteriorPathNotInduced { u, v });
    }
    for i in 0..path.len() {
        for j in i + 3..path.len() {
            if g.is_heavy_pair(path[i], path[j]) {
                out.push(RegionViolation::HeavyPairOnInteriorPath {
                    u,
                    v,
                    a: path[i],
                    b: path[j],
                });
            }
        }
    }
    if !g.has_edge(u, v) && g.is_heavy_pair(u, v) {
        let found = g.neighbors(u).intersection(g.neighbors(v)).intersection_len(interior);
        if found < 2 {
            out.push(RegionViolation::TooFewCommonInteriorNeighbors { u, v, found });
        }
    }
}

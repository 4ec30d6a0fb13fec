//! Induced-subgraph enumeration for small patterns.
//!
//! Positional backtracking: pattern vertices are placed one at a time in a
//! connectivity-first order, and the candidate set for each position is the
//! intersection (or difference) of the host rows of the already placed
//! vertices, so edges and non-edges are both enforced while searching.

use std::ops::ControlFlow;

use serde::Serialize;

use crate::graph::{Graph, VertexSet};

/// An injective map from pattern vertices to host vertices:
/// `map[i]` is the image of pattern vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Embedding {
    map: Vec<usize>,
}

impl Embedding {
    pub fn new(map: Vec<usize>) -> Self {
        Embedding { map }
    }

    pub fn order(&self) -> usize {
        self.map.len()
    }

    pub fn vertices(&self) -> &[usize] {
        &self.map
    }

    pub fn reversed(&self) -> Embedding {
        Embedding::new(self.map.iter().rev().copied().collect())
    }

    /// Checks injectivity and that the image induces `pattern` positionally.
    pub fn is_induced_copy(&self, host: &Graph, pattern: &Graph) -> bool {
        if self.map.len() != pattern.order() || self.map.iter().any(|&v| v >= host.order()) {
            return false;
        }
        for (i, &u) in self.map.iter().enumerate() {
            for (j, &v) in self.map.iter().enumerate().skip(i + 1) {
                if u == v || host.has_edge(u, v) != pattern.has_edge(i, j) {
                    return false;
                }
            }
        }
        true
    }
}

struct Plan {
    /// pattern vertex placed at each depth
    order: Vec<usize>,
    /// earlier depths adjacent / non-adjacent to the vertex at this depth
    adjacent: Vec<Vec<usize>>,
    nonadjacent: Vec<Vec<usize>>,
    min_degree: Vec<usize>,
}

impl Plan {
    fn new(pattern: &Graph) -> Plan {
        let k = pattern.order();
        let mut placed = vec![false; k];
        let mut order = Vec::with_capacity(k);
        while order.len() < k {
            // most links into the placed prefix, then highest degree, then lowest index
            let next = (0..k)
                .filter(|&v| !placed[v])
                .max_by_key(|&v| {
                    let links = order.iter().filter(|&&u| pattern.has_edge(u, v)).count();
                    (links, pattern.degree(v), std::cmp::Reverse(v))
                })
                .expect("unplaced vertex exists");
            placed[next] = true;
            order.push(next);
        }
        let mut adjacent = Vec::with_capacity(k);
        let mut nonadjacent = Vec::with_capacity(k);
        for (depth, &v) in order.iter().enumerate() {
            let (adj, non): (Vec<usize>, Vec<usize>) = (0..depth).partition(|&d| pattern.has_edge(order[d], v));
            adjacent.push(adj);
            nonadjacent.push(non);
        }
        let min_degree = order.iter().map(|&v| pattern.degree(v)).collect();
        Plan {
            order,
            adjacent,
            nonadjacent,
            min_degree,
        }
    }
}

struct Search<'a, F> {
    host: &'a Graph,
    plan: Plan,
    /// host vertex at each depth
    chosen: Vec<usize>,
    /// output map indexed by pattern vertex
    map: Vec<usize>,
    used: VertexSet,
    scratch: Vec<VertexSet>,
    visit: F,
}

impl<F: FnMut(&[usize]) -> ControlFlow<()>> Search<'_, F> {
    fn run(&mut self, depth: usize) -> ControlFlow<()> {
        if depth == self.plan.order.len() {
            return (self.visit)(&self.map);
        }
        let mut cand = std::mem::take(&mut self.scratch[depth]);
        match self.plan.adjacent[depth].first() {
            Some(&d) => cand.clone_from(self.host.neighbors(self.chosen[d])),
            None => cand = VertexSet::full(self.host.order()),
        }
        for &d in self.plan.adjacent[depth].iter().skip(1) {
            cand.intersect_with(self.host.neighbors(self.chosen[d]));
        }
        for &d in &self.plan.nonadjacent[depth] {
            cand.difference_with(self.host.neighbors(self.chosen[d]));
        }
        cand.difference_with(&self.used);
        let need = self.plan.min_degree[depth];
        let pattern_vertex = self.plan.order[depth];
        let mut flow = ControlFlow::Continue(());
        for v in cand.iter() {
            if self.host.degree(v) < need {
                continue;
            }
            self.chosen[depth] = v;
            self.map[pattern_vertex] = v;
            self.used.insert(v);
            flow = self.run(depth + 1);
            self.used.remove(v);
            if flow.is_break() {
                break;
            }
        }
        self.scratch[depth] = cand;
        flow
    }
}

/// Calls `visit` with every induced copy of `pattern` in `host` (as a map
/// indexed by pattern vertex) until it returns `Break`. Copies related by a
/// pattern automorphism are all reported.
pub fn for_each_induced<F>(host: &Graph, pattern: &Graph, visit: F) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let k = pattern.order();
    if k > host.order() {
        return ControlFlow::Continue(());
    }
    let mut search = Search {
        host,
        plan: Plan::new(pattern),
        chosen: vec![0; k],
        map: vec![0; k],
        used: VertexSet::new(host.order()),
        scratch: vec![VertexSet::new(host.order()); k],
        visit,
    };
    search.run(0)
}

pub fn enumerate_induced(host: &Graph, pattern: &Graph) -> Vec<Embedding> {
    let mut out = Vec::new();
    let _ = for_each_induced(host, pattern, |m| {
        out.push(Embedding::new(m.to_vec()));
        ControlFlow::Continue(())
    });
    out
}

/// First induced copy of `pattern`, if any.
pub fn find_induced(host: &Graph, pattern: &Graph) -> Option<Embedding> {
    let mut found = None;
    let _ = for_each_induced(host, pattern, |m| {
        found = Some(Embedding::new(m.to_vec()));
        ControlFlow::Break(())
    });
    found
}

/// First induced copy for which `pred` holds.
pub fn find_induced_where<P>(host: &Graph, pattern: &Graph, mut pred: P) -> Option<Embedding>
where
    P: FnMut(&[usize]) -> bool,
{
    let mut found = None;
    let _ = for_each_induced(host, pattern, |m| {
        if pred(m) {
            found = Some(Embedding::new(m.to_vec()));
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    found
}

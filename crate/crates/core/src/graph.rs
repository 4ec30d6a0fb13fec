//! Simple undirected graphs over dense bitset adjacency rows.
//!
//! Vertices are `0..n`. A [`Graph`] is immutable once built; every operation
//! that changes the edge set returns a new graph.

use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Serialize, Serializer};
use thiserror::Error;

/// Largest order accepted by the constructors unless a caller asks for more.
pub const DEFAULT_MAX_ORDER: usize = 512;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(usize, usize),
    #[error("order {order} exceeds the configured limit {limit}")]
    OrderTooLarge { order: usize, limit: usize },
}

/// A subset of `0..capacity`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct VertexSet(FixedBitSet);

impl VertexSet {
    pub fn new(capacity: usize) -> Self {
        VertexSet(FixedBitSet::with_capacity(capacity))
    }

    pub fn full(capacity: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(capacity);
        bits.insert_range(..);
        VertexSet(bits)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(capacity: usize, vertices: I) -> Self {
        let mut set = VertexSet::new(capacity);
        for v in vertices {
            set.insert(v);
        }
        set
    }

    pub fn capacity(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0.insert(v);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0.set(v, false);
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(v)
    }

    pub fn len(&self) -> usize {
        self.0.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_clear()
    }

    pub fn clear(&mut self) {
        self.0.clear();
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.ones()
    }

    pub fn first(&self) -> Option<usize> {
        self.0.ones().next()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        self.0.union_with(&other.0);
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        self.0.intersect_with(&other.0);
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        self.0.difference_with(&other.0);
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.intersect_with(other);
        out
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.difference_with(other);
        out
    }

    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.0.intersection(&other.0).count()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.0.is_disjoint(&other.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// Simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    rows: Vec<VertexSet>,
    degrees: Vec<usize>,
    size: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        Graph {
            rows: vec![VertexSet::new(n); n],
            degrees: vec![0; n],
            size: 0,
        }
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints. Edges may be given in either orientation.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        Graph::from_edges_with_limit(n, edges, DEFAULT_MAX_ORDER)
    }

    pub fn from_edges_with_limit(n: usize, edges: &[(usize, usize)], limit: usize) -> Result<Graph, GraphError> {
        if n > limit {
            return Err(GraphError::OrderTooLarge { order: n, limit });
        }
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, order: n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if g.has_edge(u, v) {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.add_edge_unchecked(u, v);
        }
        Ok(g)
    }

    fn add_edge_unchecked(&mut self, u: usize, v: usize) {
        self.rows[u].insert(v);
        self.rows[v].insert(u);
        self.degrees[u] += 1;
        self.degrees[v] += 1;
        self.size += 1;
    }

    pub fn complete(n: usize) -> Graph {
        let mut b = GraphBuilder::new(n);
        b.clique(&(0..n).collect::<Vec<_>>());
        b.build()
    }

    /// The path `0-1-…-(n-1)`.
    pub fn path(n: usize) -> Graph {
        let mut b = GraphBuilder::new(n);
        for v in 1..n {
            b.edge(v - 1, v);
        }
        b.build()
    }

    /// The cycle `0-1-…-(n-1)-0`; needs `n >= 3`.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least three vertices");
        let mut b = GraphBuilder::new(n);
        for v in 0..n {
            b.edge(v, (v + 1) % n);
        }
        b.build()
    }

    /// `K_{1,leaves}` with centre 0.
    pub fn star(leaves: usize) -> Graph {
        let mut b = GraphBuilder::new(leaves + 1);
        for v in 1..=leaves {
            b.edge(0, v);
        }
        b.build()
    }

    /// `K_{a,b}`; the `a` side is `0..a`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut builder = GraphBuilder::new(a + b);
        for u in 0..a {
            for v in a..a + b {
                builder.edge(u, v);
            }
        }
        builder.build()
    }

    pub fn petersen() -> Graph {
        let mut b = GraphBuilder::new(10);
        for i in 0..5 {
            b.edge(i, (i + 1) % 5);
            b.edge(i, i + 5);
            b.edge(5 + i, 5 + (i + 2) % 5);
        }
        b.build()
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.degrees[v]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices()
            .flat_map(move |u| self.rows[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Heavy vertex: `d(v) >= n/2`, evaluated as `2 d(v) >= n`.
    #[inline]
    pub fn is_heavy_vertex(&self, v: usize) -> bool {
        2 * self.degrees[v] >= self.order()
    }

    /// Heavy pair: `d(u) + d(v) >= n`. Adjacency is not inspected.
    #[inline]
    pub fn is_heavy_pair(&self, u: usize, v: usize) -> bool {
        self.degrees[u] + self.degrees[v] >= self.order()
    }

    /// Copy of `self` with the given edges added; edges already present are
    /// ignored.
    pub fn with_edges<I: IntoIterator<Item = (usize, usize)>>(&self, edges: I) -> Graph {
        let mut g = self.clone();
        for (u, v) in edges {
            assert!(u != v, "self-loop at {u}");
            if !g.has_edge(u, v) {
                g.add_edge_unchecked(u, v);
            }
        }
        g
    }

    /// Subgraph induced by `vertices`, relabelled so that `vertices[i]` becomes `i`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut b = GraphBuilder::new(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    b.edge(i, j);
                }
            }
        }
        b.build()
    }

    pub fn is_clique(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| {
            let mut others = set.clone();
            others.remove(v);
            others.is_subset(&self.rows[v])
        })
    }

    /// Connected components of the subgraph induced by `allowed`.
    pub fn components_within(&self, allowed: &VertexSet) -> Vec<VertexSet> {
        let mut remaining = allowed.clone();
        let mut out = Vec::new();
        while let Some(start) = remaining.first() {
            let comp = self.reach_within(start, &remaining);
            remaining.difference_with(&comp);
            out.push(comp);
        }
        out
    }

    /// Vertices reachable from `start` inside `allowed` (`start` must be allowed).
    pub fn reach_within(&self, start: usize, allowed: &VertexSet) -> VertexSet {
        let n = self.order();
        let mut seen = VertexSet::new(n);
        seen.insert(start);
        let mut frontier = seen.clone();
        while !frontier.is_empty() {
            let mut next = VertexSet::new(n);
            for v in frontier.iter() {
                next.union_with(&self.rows[v]);
            }
            next.intersect_with(allowed);
            next.difference_with(&seen);
            seen.union_with(&next);
            frontier = next;
        }
        seen
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(&VertexSet::full(self.order()))
    }

    pub fn is_connected(&self) -> bool {
        self.order() == 0 || self.reach_within(0, &VertexSet::full(self.order())).len() == self.order()
    }

    /// Breadth-first distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order()];
        dist[source] = Some(0);
        let mut queue = std::collections::VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap_or(0);
            for v in self.rows[u].iter() {
                if dist[v].is_none() {
                    dist[v] = Some(d + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Cut vertices, via DFS low-link.
    pub fn articulation_points(&self) -> Vec<usize> {
        let n = self.order();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut is_cut = vec![false; n];
        let mut timer = 0;
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            // explicit stack of (vertex, parent, neighbour iterator position)
            let mut stack: Vec<(usize, usize, Vec<usize>, usize)> = Vec::new();
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            stack.push((root, usize::MAX, self.rows[root].to_vec(), 0));
            let mut root_children = 0;
            while let Some(frame) = stack.last_mut() {
                let (v, parent) = (frame.0, frame.1);
                if frame.3 < frame.2.len() {
                    let w = frame.2[frame.3];
                    frame.3 += 1;
                    if disc[w] == usize::MAX {
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        if v == root {
                            root_children += 1;
                        }
                        stack.push((w, v, self.rows[w].to_vec(), 0));
                    } else if w != parent {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(up) = stack.last() {
                        let p = up.0;
                        low[p] = low[p].min(low[v]);
                        if p != root && low[v] >= disc[p] {
                            is_cut[p] = true;
                        }
                    }
                }
            }
            if root_children > 1 {
                is_cut[root] = true;
            }
        }
        (0..n).filter(|&v| is_cut[v]).collect()
    }

    /// At least three vertices, connected, and no cut vertex.
    pub fn is_two_connected(&self) -> bool {
        self.order() >= 3 && self.is_connected() && self.articulation_points().is_empty()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.order())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Serialized as `{"n": order, "edges": [[u, v], ...]}` with `u < v`.
impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("Graph", 2)?;
        st.serialize_field("n", &self.order())?;
        st.serialize_field("edges", &self.edges().collect::<Vec<_>>())?;
        st.end()
    }
}

/// Accumulates edges for generators; repeated edges collapse.
#[derive(Debug, Clone)]
pub struct GraphBuilder {
    graph: Graph,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        GraphBuilder { graph: Graph::empty(n) }
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    pub fn edge(&mut self, u: usize, v: usize) -> &mut Self {
        assert!(u != v, "self-loop at {u}");
        if !self.graph.has_edge(u, v) {
            self.graph.add_edge_unchecked(u, v);
        }
        self
    }

    pub fn clique(&mut self, vertices: &[usize]) -> &mut Self {
        for (i, &u) in vertices.iter().enumerate() {
            for &v in &vertices[i + 1..] {
                self.edge(u, v);
            }
        }
        self
    }

    /// Joins every vertex of `left` to every vertex of `right`.
    pub fn join(&mut self, left: &[usize], right: &[usize]) -> &mut Self {
        for &u in left {
            for &v in right {
                self.edge(u, v);
            }
        }
        self
    }

    pub fn build(&self) -> Graph {
        self.graph.clone()
    }
}

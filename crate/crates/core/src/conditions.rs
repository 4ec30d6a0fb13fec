//! Forbidden-subgraph and heavy-subgraph predicates, plus the small named
//! patterns they are usually applied to.

use crate::graph::Graph;
use crate::induced::{find_induced, find_induced_where, Embedding};

/// Named small graphs. Vertex numbering is part of the contract: callers
/// (and reports) refer to positions in these graphs.
pub mod patterns {
    use crate::graph::{Graph, GraphBuilder};

    /// `K_{1,3}`, centre 0.
    pub fn claw() -> Graph {
        Graph::star(3)
    }

    /// Path on `k` vertices, `0-1-…-(k-1)`.
    pub fn path(k: usize) -> Graph {
        Graph::path(k)
    }

    pub fn p3() -> Graph {
        Graph::path(3)
    }

    pub fn p4() -> Graph {
        Graph::path(4)
    }

    pub fn p5() -> Graph {
        Graph::path(5)
    }

    pub fn p6() -> Graph {
        Graph::path(6)
    }

    pub fn c3() -> Graph {
        Graph::complete(3)
    }

    /// Triangle 0,1,2 with a pendant path of `tail` vertices hung from 2.
    fn triangle_with_tail(tail: usize) -> Graph {
        let mut b = GraphBuilder::new(3 + tail);
        b.clique(&[0, 1, 2]);
        let mut prev = 2;
        for v in 3..3 + tail {
            b.edge(prev, v);
            prev = v;
        }
        b.build()
    }

    /// Triangle with one pendant edge (4 vertices).
    pub fn z1() -> Graph {
        triangle_with_tail(1)
    }

    /// Triangle with a pendant path of two edges (5 vertices).
    pub fn z2() -> Graph {
        triangle_with_tail(2)
    }

    /// Bull: triangle 0,1,2 with pendants 3 at 1 and 4 at 2.
    pub fn bull() -> Graph {
        let mut b = GraphBuilder::new(5);
        b.clique(&[0, 1, 2]).edge(1, 3).edge(2, 4);
        b.build()
    }

    /// Net: triangle 0,1,2 with one pendant at each corner (3, 4, 5).
    pub fn net() -> Graph {
        let mut b = GraphBuilder::new(6);
        b.clique(&[0, 1, 2]).edge(0, 3).edge(1, 4).edge(2, 5);
        b.build()
    }

    /// Wounded: triangle 0,1,2; pendant 3 at 1; pendant path 2-4-5.
    /// Six vertices, six edges, degree sequence 3,3,2,2,1,1.
    pub fn wounded() -> Graph {
        let mut b = GraphBuilder::new(6);
        b.clique(&[0, 1, 2]).edge(1, 3).edge(2, 4).edge(4, 5);
        b.build()
    }

    /// `K_4` minus the edge 0–3.
    pub fn diamond() -> Graph {
        let mut b = GraphBuilder::new(4);
        b.clique(&[0, 1, 2]).clique(&[1, 2, 3]);
        b.build()
    }

    /// Every named pattern with its display name.
    pub fn library() -> Vec<(&'static str, Graph)> {
        vec![
            ("claw", claw()),
            ("P3", p3()),
            ("P4", p4()),
            ("P5", p5()),
            ("P6", p6()),
            ("C3", c3()),
            ("Z1", z1()),
            ("Z2", z2()),
            ("B", bull()),
            ("N", net()),
            ("W", wounded()),
            ("diamond", diamond()),
        ]
    }

    pub fn by_name(name: &str) -> Option<Graph> {
        library()
            .into_iter()
            .find(|(n, _)| n.eq_ignore_ascii_case(name))
            .map(|(_, g)| g)
    }
}

pub fn is_h_free(g: &Graph, h: &Graph) -> bool {
    find_induced(g, h).is_none()
}

/// True if the copy `m` of `h` contains a nonadjacent pair with degree sum
/// (in `g`) at least `|V(g)|`.
fn copy_has_heavy_nonadjacent_pair(g: &Graph, h: &Graph, m: &[usize]) -> bool {
    (0..m.len()).any(|i| (i + 1..m.len()).any(|j| !h.has_edge(i, j) && g.is_heavy_pair(m[i], m[j])))
}

/// An induced copy of `h` with no heavy nonadjacent pair, if one exists.
pub fn find_light_copy(g: &Graph, h: &Graph) -> Option<Embedding> {
    find_induced_where(g, h, |m| !copy_has_heavy_nonadjacent_pair(g, h, m))
}

pub fn is_h_o_heavy(g: &Graph, h: &Graph) -> bool {
    find_light_copy(g, h).is_none()
}

/// Pairs of pattern vertices at distance exactly 2 inside `h`.
fn distance_two_pairs(h: &Graph) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for u in h.vertices() {
        let dist = h.distances_from(u);
        pairs.extend((u + 1..h.order()).filter(|&v| dist[v] == Some(2)).map(|v| (u, v)));
    }
    pairs
}

/// An induced copy of `h` violating the f-heavy condition, if one exists.
pub fn find_f_light_copy(g: &Graph, h: &Graph) -> Option<Embedding> {
    let pairs = distance_two_pairs(h);
    find_induced_where(g, h, |m| {
        pairs
            .iter()
            .any(|&(i, j)| !g.is_heavy_vertex(m[i]) && !g.is_heavy_vertex(m[j]))
    })
}

/// Every distance-2 pair (measured inside the copy) of every induced copy
/// of `h` has an endpoint of degree at least `n/2`.
pub fn is_h_f_heavy(g: &Graph, h: &Graph) -> bool {
    find_f_light_copy(g, h).is_none()
}

pub fn dirac_holds(g: &Graph) -> bool {
    g.vertices().all(|v| g.is_heavy_vertex(v))
}

pub fn ore_holds(g: &Graph) -> bool {
    g.vertices()
        .all(|u| (u + 1..g.order()).all(|v| g.has_edge(u, v) || g.is_heavy_pair(u, v)))
}

pub fn is_claw_free(g: &Graph) -> bool {
    is_h_free(g, &patterns::claw())
}

pub fn is_claw_o_heavy(g: &Graph) -> bool {
    is_h_o_heavy(g, &patterns::claw())
}

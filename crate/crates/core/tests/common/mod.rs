//! Independent oracles shared by the integration tests.

#![allow(dead_code)]

use hamlab_core::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Hamiltonicity by brute force: vertex 0 is fixed and every ordering of
/// the remaining vertices is tried as a cycle.
pub fn hamiltonian_by_permutations(g: &Graph) -> bool {
    let n = g.order();
    if n < 3 {
        return false;
    }
    let mut rest: Vec<usize> = (1..n).collect();
    loop {
        let closes = g.has_edge(0, rest[0]) && g.has_edge(rest[n - 2], 0);
        if closes && rest.windows(2).all(|w| g.has_edge(w[0], w[1])) {
            return true;
        }
        if !next_permutation(&mut rest) {
            return false;
        }
    }
}

/// Lexicographic successor; `false` once the last permutation is reached.
pub fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("pivot exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// `G(n, p)` with `p` drawn from `[0.2, 0.9]`.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let p: f64 = rng.gen_range(0.2..=0.9);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("simple")
}

/// Seeded corpus of arbitrary graphs with orders cycling through `min_n..=max_n`.
pub fn random_corpus(count: usize, min_n: usize, max_n: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| random_graph(&mut rng, min_n + i % (max_n - min_n + 1)))
        .collect()
}

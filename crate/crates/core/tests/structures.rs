mod common;

use hamlab_core::closure::{compute_closure, compute_closure_with, eligible_vertices, regions};
use hamlab_core::conditions::{is_claw_free, is_claw_o_heavy};
use hamlab_core::families::{random_claw_o_heavy, Strategy};
use hamlab_core::gamma::{heavy_signature, induced_p6s, is_p6_gamma_heavy, GammaPattern};
use hamlab_core::io::{parse_any, parse_graph6, write_edge_list, write_graph6};
use hamlab_core::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Every ordered 6-tuple that is an induced path with `v1 < v6`.
fn induced_p6s_by_brute_force(g: &Graph) -> Vec<[usize; 6]> {
    let n = g.order();
    let mut out = Vec::new();
    let mut path = Vec::with_capacity(6);
    fn extend(g: &Graph, n: usize, path: &mut Vec<usize>, out: &mut Vec<[usize; 6]>) {
        if path.len() == 6 {
            if path[0] < path[5] {
                out.push(path.clone().try_into().unwrap());
            }
            return;
        }
        for v in 0..n {
            if path.contains(&v) {
                continue;
            }
            let k = path.len();
            let ok = (0..k).all(|i| g.has_edge(path[i], v) == (i + 1 == k));
            if ok {
                path.push(v);
                extend(g, n, path, out);
                path.pop();
            }
        }
    }
    extend(g, n, &mut path, &mut out);
    out
}

fn has_claw_by_brute_force(g: &Graph, only_light: bool) -> bool {
    let n = g.order();
    for c in 0..n {
        for a in 0..n {
            for b in a + 1..n {
                for d in b + 1..n {
                    let leaves = [a, b, d];
                    if leaves.contains(&c) || !leaves.iter().all(|&x| g.has_edge(c, x)) {
                        continue;
                    }
                    if g.has_edge(a, b) || g.has_edge(a, d) || g.has_edge(b, d) {
                        continue;
                    }
                    let light = !(g.is_heavy_pair(a, b) || g.is_heavy_pair(a, d) || g.is_heavy_pair(b, d));
                    if !only_light || light {
                        return true;
                    }
                }
            }
        }
    }
    false
}

#[test]
fn induced_p6_enumeration_matches_brute_force() {
    for g in common::random_corpus(150, 6, 10, 11) {
        let mut fast = induced_p6s(&g);
        let mut slow = induced_p6s_by_brute_force(&g);
        fast.sort();
        slow.sort();
        assert_eq!(fast, slow, "{}", write_graph6(&g));
    }
}

#[test]
fn gamma_heaviness_matches_definition() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for g in common::random_corpus(120, 6, 10, 12) {
        let gamma = GammaPattern::from_mask(rng.gen_range(0..1u32 << 21)).unwrap();
        let expected = induced_p6s_by_brute_force(&g).iter().all(|p| {
            let mut rev = *p;
            rev.reverse();
            heavy_signature(&g, p).intersects(gamma) || heavy_signature(&g, &rev).intersects(gamma)
        });
        assert_eq!(is_p6_gamma_heavy(&g, gamma), expected, "{}", write_graph6(&g));
    }
}

#[test]
fn claw_conditions_match_brute_force() {
    for g in common::random_corpus(400, 4, 10, 13) {
        assert_eq!(is_claw_free(&g), !has_claw_by_brute_force(&g, false));
        assert_eq!(is_claw_o_heavy(&g), !has_claw_by_brute_force(&g, true));
    }
}

#[test]
fn closure_preserves_hamiltonicity_and_is_order_independent() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for i in 0..120u64 {
        let n = 6 + (i as usize % 5);
        let strategy = [Strategy::Rejection, Strategy::LineGraph, Strategy::DensifiedLineGraph][i as usize % 3];
        let g = random_claw_o_heavy(n, 1000 + i, strategy).unwrap();
        let trace = compute_closure(&g).unwrap();
        let cl = &trace.result;
        assert!(eligible_vertices(cl).is_empty());
        assert!(g.edges().all(|(u, v)| cl.has_edge(u, v)));
        assert_eq!(
            common::hamiltonian_by_permutations(&g),
            common::hamiltonian_by_permutations(cl),
            "{}",
            write_graph6(&g)
        );
        let shuffled = compute_closure_with(&g, |c| c[rng.gen_range(0..c.len())]).unwrap();
        assert_eq!(write_graph6(&shuffled.result), write_graph6(cl));
        let dec = regions(&trace, &g).unwrap();
        for v in g.vertices() {
            assert!(dec.vertex_regions[v].len() <= 2);
        }
    }
}

#[test]
fn io_round_trips() {
    for g in common::random_corpus(100, 1, 20, 14) {
        let back = parse_graph6(&write_graph6(&g)).unwrap();
        assert_eq!(write_graph6(&back), write_graph6(&g));
        let parsed = parse_any(&write_edge_list(&g)).unwrap();
        assert_eq!(parsed.len(), 1);
        assert_eq!(write_graph6(&parsed[0]), write_graph6(&g));
    }
}

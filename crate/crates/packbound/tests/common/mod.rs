//! Shared helpers for the integration tests: an independent brute-force
//! enumeration oracle (labeled scan plus pairwise permutation rejection) and
//! seeded random graph generation.

use std::collections::HashMap;

use packbound::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Permutation-based isomorphism check with degree prefiltering. Independent
/// of the library's canonical labeling.
pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.m() != b.m() {
        return false;
    }
    if sorted_degrees(a) != sorted_degrees(b) {
        return false;
    }
    let n = a.n();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend_map(a, b, &mut map, &mut used, 0)
}

pub fn sorted_degrees(g: &Graph) -> Vec<usize> {
    let mut d: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    d.sort_unstable();
    d
}

fn extend_map(a: &Graph, b: &Graph, map: &mut Vec<usize>, used: &mut Vec<bool>, v: usize) -> bool {
    if v == a.n() {
        return true;
    }
    for w in 0..b.n() {
        if used[w] || b.degree(w) != a.degree(v) {
            continue;
        }
        if (0..v).all(|u| a.has_edge(u, v) == b.has_edge(map[u], w)) {
            map[v] = w;
            used[w] = true;
            if extend_map(a, b, map, used, v + 1) {
                return true;
            }
            used[w] = false;
        }
    }
    false
}

/// Brute-force oracle: every labeled graph on n vertices, connectivity
/// filter, isomorph rejection against the kept representatives.
pub fn oracle_connected_classes(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    let mut reps: Vec<Graph> = Vec::new();
    let mut buckets: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
    for mask in 0u64..(1 << pairs.len()) {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::from_edges(n, &edges).unwrap();
        if !g.is_connected() {
            continue;
        }
        let key = sorted_degrees(&g);
        let bucket = buckets.entry(key).or_default();
        if !bucket.iter().any(|&i| isomorphic(&reps[i], &g)) {
            bucket.push(reps.len());
            reps.push(g);
        }
    }
    reps
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn random_connected_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    loop {
        let g = random_graph(rng, n, p);
        if g.is_connected() {
            return g;
        }
    }
}

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

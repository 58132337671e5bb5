//! Exhaustive enumeration of connected graphs on up to 7 vertices, one
//! representative per isomorphism class, in a deterministic order.
//!
//! Classes are built by vertex extension: every graph on k+1 vertices arises
//! from a graph on k vertices by adding one vertex with some neighborhood, so
//! extending one representative per class level by level and canonicalizing
//! reaches every class. Canonical labeling is brute-force minimization over
//! vertex permutations, prefiltered to permutations that sort vertices by
//! descending degree (degree sequences are isomorphism invariants, so the
//! minimum over that subset is still canonical). Fine at this scale.

use thiserror::Error;

use crate::graph::Graph;

pub const MAX_ENUMERATION_ORDER: usize = 7;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EnumerateError {
    #[error("order {0} outside the supported range 1..={MAX_ENUMERATION_ORDER}")]
    UnsupportedOrder(usize),
}

/// Bit index of the pair {i, j} (i < j) in the column-major upper triangle.
fn edge_bit(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

fn has_edge(mask: u64, a: usize, b: usize) -> bool {
    let (i, j) = if a < b { (a, b) } else { (b, a) };
    mask & (1 << edge_bit(i, j)) != 0
}

fn degree(mask: u64, n: usize, v: usize) -> usize {
    (0..n).filter(|&u| u != v && has_edge(mask, u, v)).count()
}

fn is_connected_mask(mask: u64, n: usize) -> bool {
    let mut seen: u32 = 1;
    let mut stack = vec![0usize];
    while let Some(v) = stack.pop() {
        for u in 0..n {
            if u != v && seen & (1 << u) == 0 && has_edge(mask, u, v) {
                seen |= 1 << u;
                stack.push(u);
            }
        }
    }
    seen.count_ones() as usize == n
}

fn relabeled(mask: u64, n: usize, perm: &[usize]) -> u64 {
    // perm[new_position] = original vertex
    let mut out = 0u64;
    for j in 1..n {
        for i in 0..j {
            if has_edge(mask, perm[i], perm[j]) {
                out |= 1 << edge_bit(i, j);
            }
        }
    }
    out
}

/// Minimum relabeled mask over all permutations that list vertices in
/// non-increasing degree order.
fn canonical(mask: u64, n: usize) -> u64 {
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| std::cmp::Reverse(degree(mask, n, v)));
    // block boundaries between distinct degrees
    let degs: Vec<usize> = by_degree.iter().map(|&v| degree(mask, n, v)).collect();
    let mut blocks: Vec<(usize, usize)> = Vec::new();
    let mut start = 0;
    for i in 1..=n {
        if i == n || degs[i] != degs[start] {
            blocks.push((start, i));
            start = i;
        }
    }
    let mut perm = by_degree.clone();
    let mut best = u64::MAX;
    permute_blocks(&mut perm, &blocks, 0, mask, n, &mut best);
    best
}

fn permute_blocks(
    perm: &mut Vec<usize>,
    blocks: &[(usize, usize)],
    block_idx: usize,
    mask: u64,
    n: usize,
    best: &mut u64,
) {
    if block_idx == blocks.len() {
        let candidate = relabeled(mask, n, perm);
        if candidate < *best {
            *best = candidate;
        }
        return;
    }
    let (lo, hi) = blocks[block_idx];
    permute_range(perm, lo, hi, blocks, block_idx, mask, n, best);
}

#[allow(clippy::too_many_arguments)]
fn permute_range(
    perm: &mut Vec<usize>,
    lo: usize,
    hi: usize,
    blocks: &[(usize, usize)],
    block_idx: usize,
    mask: u64,
    n: usize,
    best: &mut u64,
) {
    if lo + 1 >= hi {
        permute_blocks(perm, blocks, block_idx + 1, mask, n, best);
        return;
    }
    for i in lo..hi {
        perm.swap(lo, i);
        permute_range(perm, lo + 1, hi, blocks, block_idx, mask, n, best);
        perm.swap(lo, i);
    }
}

fn mask_to_graph(mask: u64, n: usize) -> Graph {
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if mask & (1 << edge_bit(i, j)) != 0 {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("enumeration masks are valid graphs")
}

/// One representative per isomorphism class of connected graphs on `n`
/// vertices (1 ≤ n ≤ 7), sorted by edge count, then canonical form.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>, EnumerateError> {
    if n == 0 || n > MAX_ENUMERATION_ORDER {
        return Err(EnumerateError::UnsupportedOrder(n));
    }
    let mut level: Vec<u64> = vec![0]; // the single graph on one vertex
    for k in 1..n {
        let base = k * (k - 1) / 2;
        let mut next = std::collections::HashSet::new();
        for &mask in &level {
            for nb in 0u64..(1 << k) {
                let extended = mask | (nb << base);
                next.insert(canonical(extended, k + 1));
            }
        }
        level = next.into_iter().collect();
        level.sort_unstable();
    }
    let mut masks: Vec<u64> = level
        .into_iter()
        .filter(|&m| is_connected_mask(m, n))
        .collect();
    masks.sort_unstable_by_key(|&m| (m.count_ones(), m));
    Ok(masks.into_iter().map(|m| mask_to_graph(m, n)).collect())
}

//! Recognizers and generators for the extremal families attaining the sharp
//! bounds: Ω (the L_k order/size bound), Σ (the ρₒ order/size bound), Γ
//! (ρₒ = n/δ) and Γ′ (ρ = n/(δ+1)). Recognizers search structural
//! certificates directly and never consult the solvers, so the tightness
//! equivalence tests cross two independent routes.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, MAX_VERTICES};
use crate::set::VertexSet;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("inconsistent parameters: {0}")]
    InconsistentParams(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Family {
    Omega { k: usize },
    Sigma,
    Gamma,
    GammaPrime,
}

/// The H part of a certificate: a perfect matching for Γ, an independent
/// vertex set for Γ′.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum HStructure {
    Pairs(Vec<(usize, usize)>),
    Vertices(Vec<usize>),
}

/// Structural certificate of family membership.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FamilyWitness {
    #[serde(flatten)]
    pub family: Family,
    #[serde(rename = "S", skip_serializing_if = "Option::is_none")]
    pub clique_s: Option<VertexSet>,
    #[serde(rename = "H", skip_serializing_if = "Option::is_none")]
    pub matching_h: Option<HStructure>,
    #[serde(rename = "pn", skip_serializing_if = "Option::is_none")]
    pub private_neighbors: Option<BTreeMap<usize, VertexSet>>,
}

// ---------------------------------------------------------------------------
// recognizers

/// Every clique of `g`, the empty set included.
fn all_cliques(g: &Graph) -> Vec<VertexSet> {
    fn extend(g: &Graph, start: usize, current: VertexSet, out: &mut Vec<VertexSet>) {
        out.push(current);
        for v in start..g.n() {
            if current.is_subset_of(g.neighbors(v)) {
                extend(g, v + 1, current.union(VertexSet::singleton(v)), out);
            }
        }
    }
    let mut out = Vec::new();
    extend(g, 0, VertexSet::empty(), &mut out);
    out
}

fn better(best: &Option<VertexSet>, candidate: VertexSet) -> bool {
    match best {
        None => true,
        Some(b) => match candidate.len().cmp(&b.len()) {
            std::cmp::Ordering::Less => true,
            std::cmp::Ordering::Greater => false,
            std::cmp::Ordering::Equal => candidate.lex_cmp(*b) == std::cmp::Ordering::Less,
        },
    }
}

/// Ω(k) membership: a clique S such that G[V∖S] is (k−1)-regular and every
/// vertex of S has exactly k neighbors outside S. Returns the smallest such
/// S (ties broken lexicographically).
pub fn recognize_omega(g: &Graph, k: usize) -> Option<FamilyWitness> {
    assert!(k >= 1, "k must be at least 1");
    let mut best: Option<VertexSet> = None;
    for s in all_cliques(g) {
        if satisfies_p1(g, s, k) && better(&best, s) {
            best = Some(s);
        }
    }
    best.map(|s| FamilyWitness {
        family: Family::Omega { k },
        clique_s: Some(s),
        matching_h: None,
        private_neighbors: None,
    })
}

fn satisfies_p1(g: &Graph, s: VertexSet, k: usize) -> bool {
    let outside = s.complement(g.n());
    outside
        .iter()
        .all(|v| g.neighbors(v).intersection(outside).len() == k - 1)
        && s.iter()
            .all(|v| g.neighbors(v).intersection(outside).len() == k)
}

/// Σ membership: a clique S such that G[V∖S] is a disjoint union of copies
/// of K₂ (equivalently 1-regular) and every vertex of S has exactly one
/// neighbor outside S.
pub fn recognize_sigma(g: &Graph) -> Option<FamilyWitness> {
    let mut best: Option<VertexSet> = None;
    for s in all_cliques(g) {
        if satisfies_p2(g, s) && better(&best, s) {
            best = Some(s);
        }
    }
    best.map(|s| FamilyWitness {
        family: Family::Sigma,
        clique_s: Some(s),
        matching_h: None,
        private_neighbors: None,
    })
}

fn satisfies_p2(g: &Graph, s: VertexSet) -> bool {
    let outside = s.complement(g.n());
    outside
        .iter()
        .all(|v| g.neighbors(v).intersection(outside).len() == 1)
        && s.iter()
            .all(|v| g.neighbors(v).intersection(outside).len() == 1)
}

fn pn_map(g: &Graph, w: VertexSet) -> BTreeMap<usize, VertexSet> {
    let outside = w.complement(g.n());
    w.iter()
        .filter_map(|u| {
            let pn = g.neighbors(u).intersection(outside);
            (!pn.is_empty()).then_some((u, pn))
        })
        .collect()
}

/// Checks the outside side of the Γ/Γ′ decompositions: every vertex not in
/// `w` has exactly one neighbor in `w`.
fn outside_exactly_one(g: &Graph, w: VertexSet) -> bool {
    w.complement(g.n())
        .iter()
        .all(|x| g.neighbors(x).intersection(w).len() == 1)
}

/// Γ membership: V(H) for an induced perfect matching H among minimum-degree
/// vertices such that every outside vertex has exactly one neighbor in V(H).
/// Requires `g` connected of order at least 2.
pub fn recognize_gamma(g: &Graph) -> Result<Option<FamilyWitness>, FamilyError> {
    if g.n() < 2 {
        return Err(FamilyError::Precondition("order below 2".into()));
    }
    if !g.is_connected() {
        return Err(FamilyError::Precondition("graph not connected".into()));
    }
    let delta = g.min_degree();
    let low: Vec<usize> = g.vertices().filter(|&v| g.degree(v) == delta).collect();
    let mut low_edges = Vec::new();
    for (i, &u) in low.iter().enumerate() {
        for &v in &low[i + 1..] {
            if g.has_edge(u, v) {
                low_edges.push((u, v));
            }
        }
    }

    let mut best: Option<VertexSet> = None;
    fn matchings(
        g: &Graph,
        edges: &[(usize, usize)],
        from: usize,
        used: VertexSet,
        best: &mut Option<VertexSet>,
    ) {
        if !used.is_empty() && gamma_conditions(g, used) && better(best, used) {
            *best = Some(used);
        }
        for i in from..edges.len() {
            let (u, v) = edges[i];
            if used.contains(u) || used.contains(v) {
                continue;
            }
            let mut next = used;
            next.insert(u);
            next.insert(v);
            matchings(g, edges, i + 1, next, best);
        }
    }
    matchings(g, &low_edges, 0, VertexSet::empty(), &mut best);

    Ok(best.map(|w| {
        let pairs: Vec<(usize, usize)> = w
            .iter()
            .filter_map(|u| {
                let partner = g.neighbors(u).intersection(w);
                partner.min().filter(|&v| u < v).map(|v| (u, v))
            })
            .collect();
        FamilyWitness {
            family: Family::Gamma,
            clique_s: None,
            matching_h: Some(HStructure::Pairs(pairs)),
            private_neighbors: Some(pn_map(g, w)),
        }
    }))
}

/// H must be induced: every member of `w` sees exactly its partner inside.
fn gamma_conditions(g: &Graph, w: VertexSet) -> bool {
    w.iter().all(|u| g.neighbors(u).intersection(w).len() == 1) && outside_exactly_one(g, w)
}

/// Γ′ membership: an independent set H of minimum-degree vertices such that
/// every outside vertex has exactly one neighbor in H. Requires `g`
/// connected.
pub fn recognize_gamma_prime(g: &Graph) -> Result<Option<FamilyWitness>, FamilyError> {
    if !g.is_connected() {
        return Err(FamilyError::Precondition("graph not connected".into()));
    }
    let delta = g.min_degree();
    let low: Vec<usize> = g.vertices().filter(|&v| g.degree(v) == delta).collect();
    let mut best: Option<VertexSet> = None;
    fn subsets(
        g: &Graph,
        low: &[usize],
        i: usize,
        current: VertexSet,
        best: &mut Option<VertexSet>,
    ) {
        if i == low.len() {
            if !current.is_empty() && outside_exactly_one(g, current) && better(best, current) {
                *best = Some(current);
            }
            return;
        }
        let v = low[i];
        if g.neighbors(v).intersection(current).is_empty() {
            let mut with = current;
            with.insert(v);
            subsets(g, low, i + 1, with, best);
        }
        subsets(g, low, i + 1, current, best);
    }
    subsets(g, &low, 0, VertexSet::empty(), &mut best);

    Ok(best.map(|w| FamilyWitness {
        family: Family::GammaPrime,
        clique_s: None,
        matching_h: Some(HStructure::Vertices(w.to_vec())),
        private_neighbors: Some(pn_map(g, w)),
    }))
}

// ---------------------------------------------------------------------------
// certificate validation (independent linear re-check of the certificate)

impl FamilyWitness {
    /// Re-checks the family's defining conditions directly against the
    /// stored certificate.
    pub fn validate(&self, g: &Graph) -> Result<(), String> {
        match self.family {
            Family::Omega { k } => {
                let s = self.clique_s.ok_or("missing clique S")?;
                validate_clique(g, s)?;
                if !satisfies_p1(g, s, k) {
                    return Err("property p1 fails".into());
                }
            }
            Family::Sigma => {
                let s = self.clique_s.ok_or("missing clique S")?;
                validate_clique(g, s)?;
                if !satisfies_p2(g, s) {
                    return Err("property p2 fails".into());
                }
            }
            Family::Gamma => {
                let Some(HStructure::Pairs(pairs)) = &self.matching_h else {
                    return Err("missing matching H".into());
                };
                if pairs.is_empty() {
                    return Err("H must contain at least one K2".into());
                }
                let mut w = VertexSet::empty();
                for &(u, v) in pairs {
                    if !g.has_edge(u, v) {
                        return Err(format!("pair ({u}, {v}) is not an edge"));
                    }
                    if w.contains(u) || w.contains(v) {
                        return Err("pairs are not vertex-disjoint".into());
                    }
                    w.insert(u);
                    w.insert(v);
                }
                let delta = g.min_degree();
                if w.iter().any(|u| g.degree(u) != delta) {
                    return Err("H vertex without minimum degree".into());
                }
                if !gamma_conditions(g, w) {
                    return Err("decomposition conditions fail".into());
                }
                self.validate_pn(g, w)?;
            }
            Family::GammaPrime => {
                let Some(HStructure::Vertices(vs)) = &self.matching_h else {
                    return Err("missing vertex set H".into());
                };
                if vs.is_empty() {
                    return Err("H must be nonempty".into());
                }
                let w: VertexSet = vs.iter().copied().collect();
                if w.iter().any(|u| !g.neighbors(u).intersection(w).is_empty()) {
                    return Err("H is not independent".into());
                }
                let delta = g.min_degree();
                if w.iter().any(|u| g.degree(u) != delta) {
                    return Err("H vertex without minimum degree".into());
                }
                if !outside_exactly_one(g, w) {
                    return Err("an outside vertex does not have exactly one neighbor in H".into());
                }
                self.validate_pn(g, w)?;
            }
        }
        Ok(())
    }

    fn validate_pn(&self, g: &Graph, w: VertexSet) -> Result<(), String> {
        let pn = self
            .private_neighbors
            .as_ref()
            .ok_or("missing private neighbor map")?;
        let outside = w.complement(g.n());
        let mut covered = VertexSet::empty();
        for (&u, &set) in pn {
            if !w.contains(u) {
                return Err(format!("pn key {u} is not in H"));
            }
            if set != g.neighbors(u).intersection(outside) {
                return Err(format!("pn({u}) does not match the outside neighborhood"));
            }
            if !covered.is_disjoint_from(set) {
                return Err("private neighbor sets are not pairwise disjoint".into());
            }
            covered = covered.union(set);
        }
        if covered != outside {
            return Err("private neighbor sets do not partition the outside".into());
        }
        Ok(())
    }
}

fn validate_clique(g: &Graph, s: VertexSet) -> Result<(), String> {
    for u in s.iter() {
        for v in s.iter() {
            if u < v && !g.has_edge(u, v) {
                return Err(format!("S is not a clique: {u} and {v} not adjacent"));
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// generators

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyParams {
    /// Clique of `clique_size`, an exact (k−1)-regular graph on
    /// `outside_size` vertices, k outside neighbors per clique vertex.
    Omega {
        k: usize,
        clique_size: usize,
        outside_size: usize,
    },
    /// Clique of `clique_size`, `pairs` disjoint copies of K₂ outside, one
    /// outside neighbor per clique vertex.
    Sigma { clique_size: usize, pairs: usize },
    /// `t` disjoint K₂s, k private neighbors per matched vertex, and edges
    /// among the private neighbors keeping the graph connected with outside
    /// degrees at least k+1. `outside_edges` (indices into the private
    /// vertices, in creation order) overrides the seeded wiring.
    Gamma {
        t: usize,
        k: usize,
        outside_edges: Option<Vec<(usize, usize)>>,
    },
    /// `size` independent vertices, `degree` private neighbors each.
    GammaPrime { size: usize, degree: usize },
}

/// Edge set of the circulant graph on `p` vertices with degree exactly `d`.
fn circulant_exact(p: usize, d: usize) -> Result<Vec<(usize, usize)>, FamilyError> {
    if d == 0 {
        return Ok(Vec::new());
    }
    if d >= p {
        return Err(FamilyError::InconsistentParams(format!(
            "cannot build a {d}-regular graph on {p} vertices"
        )));
    }
    if p * d % 2 != 0 {
        return Err(FamilyError::InconsistentParams(format!(
            "{d}-regular graph on {p} vertices violates the handshake parity"
        )));
    }
    let mut edges = Vec::new();
    for off in 1..=d / 2 {
        for i in 0..p {
            let j = (i + off) % p;
            if i < j {
                edges.push((i, j));
            } else {
                edges.push((j, i));
            }
        }
    }
    if d % 2 == 1 {
        for i in 0..p / 2 {
            edges.push((i, i + p / 2));
        }
    }
    edges.sort_unstable();
    edges.dedup();
    Ok(edges)
}

/// Connected graph on `p` vertices with minimum degree at least `dmin`
/// (degree may exceed `dmin` for parity or connectivity).
fn connected_min_degree(p: usize, dmin: usize) -> Result<Vec<(usize, usize)>, FamilyError> {
    if p == 0 {
        return Ok(Vec::new());
    }
    if dmin > p - 1 {
        return Err(FamilyError::InconsistentParams(format!(
            "minimum degree {dmin} impossible on {p} vertices"
        )));
    }
    if p == 1 {
        return Ok(Vec::new());
    }
    let mut d = dmin.max(2.min(p - 1));
    if d % 2 == 1 && p % 2 == 1 {
        d += 1;
    }
    circulant_exact(p, d)
}

fn shuffled(len: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let mut v: Vec<usize> = (0..len).collect();
    v.shuffle(rng);
    v
}

/// Sprinkles a few extra random edges among `pool` vertices, skipping pairs
/// that already exist.
fn sprinkle(edges: &mut Vec<(usize, usize)>, pool: &[usize], count: usize, rng: &mut ChaCha8Rng) {
    if pool.len() < 2 {
        return;
    }
    let mut present: std::collections::HashSet<(usize, usize)> = edges.iter().copied().collect();
    for _ in 0..count {
        let a = pool[rng.random_range(0..pool.len())];
        let b = pool[rng.random_range(0..pool.len())];
        if a == b {
            continue;
        }
        let e = (a.min(b), a.max(b));
        if present.insert(e) {
            edges.push(e);
        }
    }
}

/// Builds a member of the requested family. The result is always accepted by
/// the corresponding recognizer.
pub fn generate_family(params: &FamilyParams, seed: u64) -> Result<Graph, FamilyError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match *params {
        FamilyParams::Omega {
            k,
            clique_size: a,
            outside_size: b,
        } => {
            if k == 0 {
                return Err(FamilyError::InconsistentParams(
                    "k must be at least 1".into(),
                ));
            }
            if a + b == 0 || a + b > MAX_VERTICES {
                return Err(FamilyError::InconsistentParams(format!(
                    "order {} out of range",
                    a + b
                )));
            }
            if b < k {
                return Err(FamilyError::InconsistentParams(format!(
                    "need at least k = {k} outside vertices, got {b}"
                )));
            }
            let mut edges = Vec::new();
            for v in 1..a {
                for u in 0..v {
                    edges.push((u, v));
                }
            }
            let relabel = shuffled(b, &mut rng);
            for (i, j) in circulant_exact(b, k - 1)? {
                let (x, y) = (a + relabel[i], a + relabel[j]);
                edges.push((x.min(y), x.max(y)));
            }
            let targets = shuffled(b, &mut rng);
            for s in 0..a {
                for j in 0..k {
                    edges.push((s, a + targets[(s * k + j) % b]));
                }
            }
            Ok(Graph::from_edges(a + b, &edges).expect("omega construction is simple"))
        }
        FamilyParams::Sigma {
            clique_size: a,
            pairs: t,
        } => {
            if t == 0 {
                return Err(FamilyError::InconsistentParams(
                    "need at least one K2 outside".into(),
                ));
            }
            let n = a + 2 * t;
            if n > MAX_VERTICES {
                return Err(FamilyError::InconsistentParams(format!(
                    "order {n} out of range"
                )));
            }
            let mut edges = Vec::new();
            for v in 1..a {
                for u in 0..v {
                    edges.push((u, v));
                }
            }
            for i in 0..t {
                edges.push((a + 2 * i, a + 2 * i + 1));
            }
            let targets = shuffled(2 * t, &mut rng);
            for s in 0..a {
                edges.push((s, a + targets[s % (2 * t)]));
            }
            Ok(Graph::from_edges(n, &edges).expect("sigma construction is simple"))
        }
        FamilyParams::Gamma {
            t,
            k,
            ref outside_edges,
        } => {
            if t == 0 {
                return Err(FamilyError::InconsistentParams(
                    "t must be at least 1".into(),
                ));
            }
            if k == 0 && t > 1 {
                return Err(FamilyError::InconsistentParams(
                    "k = 0 with t > 1 cannot be connected".into(),
                ));
            }
            let w = 2 * t;
            let p = w * k;
            let n = w + p;
            if n > MAX_VERTICES {
                return Err(FamilyError::InconsistentParams(format!(
                    "order {n} out of range"
                )));
            }
            let mut edges = Vec::new();
            for i in 0..t {
                edges.push((2 * i, 2 * i + 1));
            }
            for u in 0..w {
                for j in 0..k {
                    edges.push((u, w + u * k + j));
                }
            }
            match outside_edges {
                Some(list) => {
                    for &(x, y) in list {
                        if x >= p || y >= p || x == y {
                            return Err(FamilyError::InconsistentParams(format!(
                                "outside edge ({x}, {y}) out of range"
                            )));
                        }
                        let e = (w + x.min(y), w + x.max(y));
                        if edges.contains(&e) {
                            return Err(FamilyError::InconsistentParams(format!(
                                "duplicate outside edge ({x}, {y})"
                            )));
                        }
                        edges.push(e);
                    }
                }
                None => {
                    let relabel = shuffled(p, &mut rng);
                    for (i, j) in connected_min_degree(p, k)? {
                        let (x, y) = (w + relabel[i], w + relabel[j]);
                        edges.push((x.min(y), x.max(y)));
                    }
                    let extra = if p >= 2 { rng.random_range(0..=p) } else { 0 };
                    let pool: Vec<usize> = (w..n).collect();
                    sprinkle(&mut edges, &pool, extra, &mut rng);
                }
            }
            let g = Graph::from_edges(n, &edges)
                .map_err(|e| FamilyError::InconsistentParams(e.to_string()))?;
            if !g.is_connected() {
                return Err(FamilyError::InconsistentParams(
                    "outside edges leave the graph disconnected".into(),
                ));
            }
            for x in w..n {
                if g.degree(x) < k + 1 {
                    return Err(FamilyError::InconsistentParams(format!(
                        "private neighbor {x} has degree {} < k+1",
                        g.degree(x)
                    )));
                }
            }
            Ok(g)
        }
        FamilyParams::GammaPrime { size: h, degree: d } => {
            if h == 0 || d == 0 {
                return Err(FamilyError::InconsistentParams(
                    "size and degree must be at least 1".into(),
                ));
            }
            let p = h * d;
            let n = h + p;
            if n > MAX_VERTICES {
                return Err(FamilyError::InconsistentParams(format!(
                    "order {n} out of range"
                )));
            }
            let mut edges = Vec::new();
            for u in 0..h {
                for j in 0..d {
                    edges.push((u, h + u * d + j));
                }
            }
            if p > 1 {
                let relabel = shuffled(p, &mut rng);
                for (i, j) in connected_min_degree(p, d - 1)? {
                    let (x, y) = (h + relabel[i], h + relabel[j]);
                    edges.push((x.min(y), x.max(y)));
                }
                let extra = rng.random_range(0..=p);
                let pool: Vec<usize> = (h..n).collect();
                sprinkle(&mut edges, &pool, extra, &mut rng);
            }
            let g = Graph::from_edges(n, &edges).expect("gamma-prime construction is simple");
            debug_assert!(g.is_connected());
            Ok(g)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn omega_on_path4_at_one() {
        let g = Graph::path(4).unwrap();
        let w = recognize_omega(&g, 1).expect("P4 is in Omega(1)");
        assert_eq!(w.clique_s.unwrap().to_vec(), vec![1, 2]);
        assert!(w.validate(&g).is_ok());
    }

    #[test]
    fn omega_on_complete_graphs_at_one() {
        for n in 2..=6 {
            let g = Graph::complete(n).unwrap();
            let w = recognize_omega(&g, 1).expect("K_n is in Omega(1)");
            assert_eq!(w.clique_s.unwrap().len(), n - 1, "n = {n}");
            assert!(w.validate(&g).is_ok());
        }
    }

    #[test]
    fn omega_rejects_the_star_at_one() {
        assert!(recognize_omega(&Graph::star(4).unwrap(), 1).is_none());
    }

    #[test]
    fn sigma_examples() {
        let c4 = Graph::cycle(4).unwrap();
        let w = recognize_sigma(&c4).expect("C4 is in Sigma");
        let s = w.clique_s.unwrap();
        assert_eq!(s.len(), 2);
        assert!(w.validate(&c4).is_ok());

        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let w = recognize_sigma(&k2).expect("K2 is in Sigma with empty S");
        assert!(w.clique_s.unwrap().is_empty());
        assert!(w.validate(&k2).is_ok());

        assert!(recognize_sigma(&Graph::complete(3).unwrap()).is_none());
    }

    #[test]
    fn gamma_examples() {
        let c4 = Graph::cycle(4).unwrap();
        let w = recognize_gamma(&c4).unwrap().expect("C4 is in Gamma");
        assert_eq!(w.matching_h, Some(HStructure::Pairs(vec![(0, 1)])));
        let pn = w.private_neighbors.clone().unwrap();
        assert_eq!(pn[&0].to_vec(), vec![3]);
        assert_eq!(pn[&1].to_vec(), vec![2]);
        assert!(w.validate(&c4).is_ok());

        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let w = recognize_gamma(&k2)
            .unwrap()
            .expect("K2 is in Gamma (k = 0)");
        assert_eq!(w.matching_h, Some(HStructure::Pairs(vec![(0, 1)])));
        assert_eq!(w.private_neighbors, Some(BTreeMap::new()));
        assert!(w.validate(&k2).is_ok());

        assert!(recognize_gamma(&Graph::complete(3).unwrap())
            .unwrap()
            .is_none());
    }

    #[test]
    fn gamma_preconditions() {
        let k1 = Graph::from_edges(1, &[]).unwrap();
        assert!(recognize_gamma(&k1).is_err());
        let split = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(recognize_gamma(&split).is_err());
        assert!(recognize_gamma_prime(&split).is_err());
    }

    #[test]
    fn gamma_prime_examples() {
        let c6 = Graph::cycle(6).unwrap();
        let w = recognize_gamma_prime(&c6)
            .unwrap()
            .expect("C6 is in Gamma'");
        assert_eq!(w.matching_h, Some(HStructure::Vertices(vec![0, 3])));
        assert!(w.validate(&c6).is_ok());

        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let w = recognize_gamma_prime(&k2)
            .unwrap()
            .expect("K2 is in Gamma'");
        assert_eq!(w.matching_h, Some(HStructure::Vertices(vec![0])));
        assert!(w.validate(&k2).is_ok());

        assert!(recognize_gamma_prime(&Graph::cycle(4).unwrap())
            .unwrap()
            .is_none());
    }

    #[test]
    fn generated_gamma_with_explicit_edges_is_c4() {
        let g = generate_family(
            &FamilyParams::Gamma {
                t: 1,
                k: 1,
                outside_edges: Some(vec![(0, 1)]),
            },
            0,
        )
        .unwrap();
        assert_eq!((g.n(), g.m()), (4, 4));
        assert!(g.vertices().all(|v| g.degree(v) == 2));
        assert!(g.is_connected());
        let w = recognize_gamma(&g).unwrap().expect("generated member");
        assert!(w.validate(&g).is_ok());
    }

    #[test]
    fn generated_sigma_trivial_is_k2() {
        let g = generate_family(
            &FamilyParams::Sigma {
                clique_size: 0,
                pairs: 1,
            },
            7,
        )
        .unwrap();
        assert_eq!((g.n(), g.m()), (2, 1));
    }

    #[test]
    fn generated_omega_pendant_case_is_p4() {
        // clique of two, one pendant each: the path on four vertices up to
        // labels
        let g = generate_family(
            &FamilyParams::Omega {
                k: 1,
                clique_size: 2,
                outside_size: 2,
            },
            3,
        )
        .unwrap();
        assert_eq!((g.n(), g.m()), (4, 3));
        assert!(g.is_connected());
        let mut degs: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
        degs.sort_unstable();
        assert_eq!(degs, vec![1, 1, 2, 2]);
        assert!(recognize_omega(&g, 1).is_some());
    }

    #[test]
    fn generator_round_trips() {
        for seed in 0..5u64 {
            for k in 1..=3usize {
                let b = if k % 2 == 0 { k + 2 } else { k + 1 };
                let g = generate_family(
                    &FamilyParams::Omega {
                        k,
                        clique_size: 2,
                        outside_size: b,
                    },
                    seed,
                )
                .unwrap();
                let w = recognize_omega(&g, k).expect("omega member");
                assert!(w.validate(&g).is_ok());
            }
            let g = generate_family(
                &FamilyParams::Sigma {
                    clique_size: 3,
                    pairs: 2,
                },
                seed,
            )
            .unwrap();
            recognize_sigma(&g)
                .expect("sigma member")
                .validate(&g)
                .unwrap();

            let g = generate_family(
                &FamilyParams::Gamma {
                    t: 2,
                    k: 2,
                    outside_edges: None,
                },
                seed,
            )
            .unwrap();
            recognize_gamma(&g)
                .unwrap()
                .expect("gamma member")
                .validate(&g)
                .unwrap();

            let g =
                generate_family(&FamilyParams::GammaPrime { size: 2, degree: 2 }, seed).unwrap();
            recognize_gamma_prime(&g)
                .unwrap()
                .expect("gamma-prime member")
                .validate(&g)
                .unwrap();
        }
    }

    #[test]
    fn generator_rejects_inconsistent_params() {
        assert!(generate_family(
            &FamilyParams::Omega {
                k: 1,
                clique_size: 2,
                outside_size: 0
            },
            0
        )
        .is_err());
        // 2-regular outside on 3 vertices with parity violation: 3*... use
        // k = 2 on 3 outside vertices: 1-regular on odd order
        assert!(generate_family(
            &FamilyParams::Omega {
                k: 2,
                clique_size: 0,
                outside_size: 3
            },
            0
        )
        .is_err());
        assert!(generate_family(
            &FamilyParams::Sigma {
                clique_size: 2,
                pairs: 0
            },
            0
        )
        .is_err());
        assert!(generate_family(
            &FamilyParams::Gamma {
                t: 2,
                k: 0,
                outside_edges: None
            },
            0
        )
        .is_err());
        // a single outside edge cannot give both C4 privates degree 2 and
        // stay connected if it is a self-pair
        assert!(generate_family(
            &FamilyParams::Gamma {
                t: 1,
                k: 1,
                outside_edges: Some(vec![(0, 0)])
            },
            0
        )
        .is_err());
        assert!(generate_family(&FamilyParams::GammaPrime { size: 0, degree: 1 }, 0).is_err());
    }

    #[test]
    fn witness_json_shape() {
        let c4 = Graph::cycle(4).unwrap();
        let w = recognize_gamma(&c4).unwrap().unwrap();
        let json = serde_json::to_value(&w).unwrap();
        assert_eq!(json["family"], "gamma");
        assert_eq!(json["H"], serde_json::json!([[0, 1]]));
        assert_eq!(json["pn"], serde_json::json!({"0": [3], "1": [2]}));

        let p4 = Graph::path(4).unwrap();
        let w = recognize_omega(&p4, 1).unwrap();
        let json = serde_json::to_value(&w).unwrap();
        assert_eq!(json["family"], "omega");
        assert_eq!(json["k"], 1);
        assert_eq!(json["S"], serde_json::json!([1, 2]));
    }
}

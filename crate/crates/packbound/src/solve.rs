//! Exact solvers for ρ(G), ρₒ(G), L_k(G) and γ_×k(G).
//!
//! The default method is depth-first branch-and-bound over vertices in
//! descending-degree order. Packing-type maximization keeps a per-vertex
//! residual capacity k − |N[v] ∩ B| and prunes when the chosen count plus
//! the still-eligible count cannot beat the incumbent; domination-type
//! minimization keeps residual needs and prunes with the lower bound
//! ⌈(total residual need)/(Δ+1)⌉. A subset-enumeration oracle is available
//! behind `force_exhaustive` for cross-checking (n ≤ 20).
//!
//! Among all optimal witnesses both methods return the lexicographically
//! smallest by vertex id: the exhaustive path scans subsets of each
//! cardinality in lexicographic order, and the branch-and-bound path
//! reconstructs the witness greedily with decision searches.

use itertools::Itertools;
use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::set::VertexSet;

/// Hard cap for the exhaustive oracle.
pub const EXHAUSTIVE_MAX_ORDER: usize = 20;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolveError {
    #[error("node limit of {limit} exceeded")]
    NodeLimitExceeded { limit: u64 },
    #[error("k must be at least 1")]
    ZeroK,
    #[error("{invariant} is undefined for k = {k}: requires minimum degree at least {}", k - 1)]
    InvariantUndefined { invariant: &'static str, k: usize },
    #[error("exhaustive search unsupported for n = {n} (cap {EXHAUSTIVE_MAX_ORDER})")]
    ExhaustiveTooLarge { n: usize },
}

#[derive(Debug, Clone, Copy, Default)]
pub struct SolveOptions {
    pub force_exhaustive: bool,
    pub node_limit: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    BranchAndBound,
    Exhaustive,
}

/// An invariant value together with an optimal witness set and search
/// statistics.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolveResult {
    pub value: usize,
    pub witness: VertexSet,
    pub nodes_explored: u64,
    pub method: Method,
}

// ---------------------------------------------------------------------------
// defining constraints, used both by solvers and as witness re-checks

/// |N[v] ∩ B| ≤ k for every vertex v.
pub fn is_limited_packing(g: &Graph, set: VertexSet, k: usize) -> bool {
    g.vertices()
        .all(|v| g.closed_neighbors(v).intersection(set).len() <= k)
}

/// Pairwise disjoint closed neighborhoods, equivalently a 1-limited packing.
pub fn is_packing(g: &Graph, set: VertexSet) -> bool {
    is_limited_packing(g, set, 1)
}

/// Pairwise disjoint open neighborhoods, equivalently |N(v) ∩ B| ≤ 1 for
/// every vertex v.
pub fn is_open_packing(g: &Graph, set: VertexSet) -> bool {
    g.vertices()
        .all(|v| g.neighbors(v).intersection(set).len() <= 1)
}

/// |N[v] ∩ D| ≥ k for every vertex v.
pub fn is_tuple_dominating(g: &Graph, set: VertexSet, k: usize) -> bool {
    g.vertices()
        .all(|v| g.closed_neighbors(v).intersection(set).len() >= k)
}

// ---------------------------------------------------------------------------
// node budget

struct Budget {
    used: u64,
    limit: Option<u64>,
}

impl Budget {
    fn new(limit: Option<u64>) -> Budget {
        Budget { used: 0, limit }
    }

    fn tick(&mut self) -> Result<(), SolveError> {
        self.used += 1;
        match self.limit {
            Some(limit) if self.used > limit => Err(SolveError::NodeLimitExceeded { limit }),
            _ => Ok(()),
        }
    }
}

fn search_order(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = g.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    order
}

// ---------------------------------------------------------------------------
// packing-type maximization: max |B| with |influence(v) ∩ B| ≤ cap for all v

struct PackSearch {
    order: Vec<usize>,
    /// influence[v] = the vertices whose constraint counts v, i.e. N[v] for
    /// the closed variant and N(v) for the open one.
    influence: Vec<VertexSet>,
    residual: Vec<usize>,
    forced_in: VertexSet,
    forced_out: VertexSet,
    best: usize,
    target: Option<usize>,
    found: bool,
}

impl PackSearch {
    fn new(g: &Graph, cap: usize, closed: bool) -> PackSearch {
        let influence = g
            .vertices()
            .map(|v| {
                if closed {
                    g.closed_neighbors(v)
                } else {
                    g.neighbors(v)
                }
            })
            .collect();
        PackSearch {
            order: search_order(g),
            influence,
            residual: vec![cap; g.n()],
            forced_in: VertexSet::empty(),
            forced_out: VertexSet::empty(),
            best: 0,
            target: None,
            found: false,
        }
    }

    fn addable(&self, v: usize) -> bool {
        self.influence[v].iter().all(|w| self.residual[w] >= 1)
    }

    fn add(&mut self, v: usize) {
        for w in self.influence[v].iter() {
            self.residual[w] -= 1;
        }
    }

    fn unadd(&mut self, v: usize) {
        for w in self.influence[v].iter() {
            self.residual[w] += 1;
        }
    }

    fn greedy(&mut self) -> usize {
        let mut count = 0;
        let mut added = Vec::new();
        for i in 0..self.order.len() {
            let v = self.order[i];
            if self.addable(v) {
                self.add(v);
                added.push(v);
                count += 1;
            }
        }
        for v in added {
            self.unadd(v);
        }
        count
    }

    fn remaining_forced_in(&self, idx: usize) -> usize {
        self.order[idx..]
            .iter()
            .filter(|&&v| self.forced_in.contains(v))
            .count()
    }

    fn dfs(&mut self, idx: usize, count: usize, budget: &mut Budget) -> Result<(), SolveError> {
        budget.tick()?;
        if self.found {
            return Ok(());
        }
        if let Some(target) = self.target {
            // every already-processed forced-in vertex is in B, so success
            // needs only that none remain ahead
            if count >= target && self.remaining_forced_in(idx) == 0 {
                self.found = true;
                return Ok(());
            }
        }
        // upper bound: everything still eligible could join; a forced-in
        // vertex that lost eligibility kills the branch
        let mut eligible = 0;
        for i in idx..self.order.len() {
            let v = self.order[i];
            if self.forced_out.contains(v) {
                continue;
            }
            if self.addable(v) {
                eligible += 1;
            } else if self.forced_in.contains(v) {
                return Ok(());
            }
        }
        let ub = count + eligible;
        match self.target {
            Some(target) => {
                if ub < target {
                    return Ok(());
                }
            }
            None => {
                if ub <= self.best {
                    return Ok(());
                }
            }
        }
        if idx == self.order.len() {
            if self.target.is_none() && count > self.best {
                self.best = count;
            }
            return Ok(());
        }
        let v = self.order[idx];
        if !self.forced_out.contains(v) && self.addable(v) {
            self.add(v);
            self.dfs(idx + 1, count + 1, budget)?;
            self.unadd(v);
            if self.found {
                return Ok(());
            }
        }
        if !self.forced_in.contains(v) {
            self.dfs(idx + 1, count, budget)?;
        }
        Ok(())
    }

    /// Optimal value.
    fn maximize(&mut self, budget: &mut Budget) -> Result<usize, SolveError> {
        self.target = None;
        self.best = self.greedy();
        self.dfs(0, 0, budget)?;
        Ok(self.best)
    }

    /// Is `target` reachable under the current forced_in/forced_out sets?
    fn decide(&mut self, target: usize, budget: &mut Budget) -> Result<bool, SolveError> {
        self.target = Some(target);
        self.found = false;
        self.dfs(0, 0, budget)?;
        Ok(self.found)
    }
}

fn pack_branch_and_bound(
    g: &Graph,
    cap: usize,
    closed: bool,
    opts: &SolveOptions,
) -> Result<SolveResult, SolveError> {
    let mut budget = Budget::new(opts.node_limit);
    let mut search = PackSearch::new(g, cap, closed);
    let value = search.maximize(&mut budget)?;
    // lexicographically smallest optimal witness, by greedy decision checks
    let mut forced_in = VertexSet::empty();
    let mut forced_out = VertexSet::empty();
    for v in g.vertices() {
        if forced_in.len() == value {
            break;
        }
        let mut trial = forced_in;
        trial.insert(v);
        search.forced_in = trial;
        search.forced_out = forced_out;
        if search.decide(value, &mut budget)? {
            forced_in = trial;
        } else {
            forced_out.insert(v);
        }
    }
    debug_assert_eq!(forced_in.len(), value);
    Ok(SolveResult {
        value,
        witness: forced_in,
        nodes_explored: budget.used,
        method: Method::BranchAndBound,
    })
}

fn pack_exhaustive(
    g: &Graph,
    cap: usize,
    closed: bool,
    opts: &SolveOptions,
) -> Result<SolveResult, SolveError> {
    if g.n() > EXHAUSTIVE_MAX_ORDER {
        return Err(SolveError::ExhaustiveTooLarge { n: g.n() });
    }
    let valid = |set: VertexSet| {
        if closed {
            is_limited_packing(g, set, cap)
        } else {
            is_open_packing(g, set)
        }
    };
    let mut budget = Budget::new(opts.node_limit);
    for size in (0..=g.n()).rev() {
        for combo in g.vertices().combinations(size) {
            budget.tick()?;
            let set: VertexSet = combo.into_iter().collect();
            if valid(set) {
                return Ok(SolveResult {
                    value: size,
                    witness: set,
                    nodes_explored: budget.used,
                    method: Method::Exhaustive,
                });
            }
        }
    }
    unreachable!("the empty set always satisfies a packing constraint");
}

// ---------------------------------------------------------------------------
// domination-type minimization: min |D| with |N[v] ∩ D| ≥ k for all v

struct DomSearch<'a> {
    g: &'a Graph,
    order: Vec<usize>,
    need: Vec<isize>,
    undecided: Vec<usize>,
    total_need: usize,
    delta_plus_1: usize,
    forced_in: VertexSet,
    forced_out: VertexSet,
    best: usize,
    best_found: bool,
    target: Option<usize>,
    found: bool,
}

impl<'a> DomSearch<'a> {
    fn new(g: &'a Graph, k: usize) -> DomSearch<'a> {
        DomSearch {
            g,
            order: search_order(g),
            need: vec![k as isize; g.n()],
            undecided: g.vertices().map(|v| g.degree(v) + 1).collect(),
            total_need: k * g.n(),
            delta_plus_1: g.max_degree() + 1,
            forced_in: VertexSet::empty(),
            forced_out: VertexSet::empty(),
            best: g.n(),
            best_found: false,
            target: None,
            found: false,
        }
    }

    fn decide_vertex(&mut self, v: usize, include: bool) {
        for w in self.g.closed_neighbors(v).iter() {
            self.undecided[w] -= 1;
            if include {
                if self.need[w] > 0 {
                    self.total_need -= 1;
                }
                self.need[w] -= 1;
            }
        }
    }

    fn undecide_vertex(&mut self, v: usize, include: bool) {
        for w in self.g.closed_neighbors(v).iter() {
            self.undecided[w] += 1;
            if include {
                self.need[w] += 1;
                if self.need[w] > 0 {
                    self.total_need += 1;
                }
            }
        }
    }

    /// No vertex may need more than its undecided closed neighborhood.
    fn locally_feasible(&self, v: usize) -> bool {
        self.g
            .closed_neighbors(v)
            .iter()
            .all(|w| self.need[w] <= self.undecided[w] as isize)
    }

    fn dfs(&mut self, idx: usize, count: usize, budget: &mut Budget) -> Result<(), SolveError> {
        budget.tick()?;
        if self.found {
            return Ok(());
        }
        let lower = count + self.total_need.div_ceil(self.delta_plus_1);
        match self.target {
            Some(target) => {
                if lower > target {
                    return Ok(());
                }
                if self.total_need == 0 {
                    // needs are met; the remaining forced-in vertices can
                    // always join (domination is upward closed), the rest
                    // stay out
                    let remaining_fi = self.order[idx..]
                        .iter()
                        .filter(|&&v| self.forced_in.contains(v))
                        .count();
                    if count + remaining_fi <= target {
                        self.found = true;
                    }
                    return Ok(());
                }
            }
            None => {
                if lower >= self.best {
                    return Ok(());
                }
                if self.total_need == 0 {
                    self.best = count;
                    self.best_found = true;
                    return Ok(());
                }
            }
        }
        if idx == self.order.len() {
            return Ok(());
        }
        let v = self.order[idx];
        if !self.forced_out.contains(v) {
            self.decide_vertex(v, true);
            self.dfs(idx + 1, count + 1, budget)?;
            self.undecide_vertex(v, true);
            if self.found {
                return Ok(());
            }
        }
        if !self.forced_in.contains(v) {
            self.decide_vertex(v, false);
            if self.locally_feasible(v) {
                self.dfs(idx + 1, count, budget)?;
            }
            self.undecide_vertex(v, false);
        }
        Ok(())
    }

    fn minimize(&mut self, budget: &mut Budget) -> Result<usize, SolveError> {
        self.target = None;
        self.dfs(0, 0, budget)?;
        // the full vertex set is always valid under the δ ≥ k−1 precondition
        Ok(self.best)
    }

    fn decide(&mut self, target: usize, budget: &mut Budget) -> Result<bool, SolveError> {
        self.target = Some(target);
        self.found = false;
        self.dfs(0, 0, budget)?;
        Ok(self.found)
    }
}

fn dom_branch_and_bound(
    g: &Graph,
    k: usize,
    opts: &SolveOptions,
) -> Result<SolveResult, SolveError> {
    let mut budget = Budget::new(opts.node_limit);
    let mut search = DomSearch::new(g, k);
    let value = search.minimize(&mut budget)?;
    if !search.best_found && value == g.n() {
        // only the full vertex set works; no reconstruction needed
        return Ok(SolveResult {
            value,
            witness: VertexSet::full(g.n()),
            nodes_explored: budget.used,
            method: Method::BranchAndBound,
        });
    }
    let mut forced_in = VertexSet::empty();
    let mut forced_out = VertexSet::empty();
    for v in g.vertices() {
        if forced_in.len() == value {
            break;
        }
        let mut trial = forced_in;
        trial.insert(v);
        search.forced_in = trial;
        search.forced_out = forced_out;
        if search.decide(value, &mut budget)? {
            forced_in = trial;
        } else {
            forced_out.insert(v);
        }
    }
    debug_assert_eq!(forced_in.len(), value);
    Ok(SolveResult {
        value,
        witness: forced_in,
        nodes_explored: budget.used,
        method: Method::BranchAndBound,
    })
}

fn dom_exhaustive(g: &Graph, k: usize, opts: &SolveOptions) -> Result<SolveResult, SolveError> {
    if g.n() > EXHAUSTIVE_MAX_ORDER {
        return Err(SolveError::ExhaustiveTooLarge { n: g.n() });
    }
    let mut budget = Budget::new(opts.node_limit);
    for size in 0..=g.n() {
        for combo in g.vertices().combinations(size) {
            budget.tick()?;
            let set: VertexSet = combo.into_iter().collect();
            if is_tuple_dominating(g, set, k) {
                return Ok(SolveResult {
                    value: size,
                    witness: set,
                    nodes_explored: budget.used,
                    method: Method::Exhaustive,
                });
            }
        }
    }
    unreachable!("the full vertex set dominates when δ ≥ k−1");
}

// ---------------------------------------------------------------------------
// public operations

/// L_k(G): the largest B with |N[v] ∩ B| ≤ k for every vertex. Short-circuits
/// to n when k ≥ Δ+1.
pub fn limited_packing_number(
    g: &Graph,
    k: usize,
    opts: &SolveOptions,
) -> Result<SolveResult, SolveError> {
    if k == 0 {
        return Err(SolveError::ZeroK);
    }
    if opts.force_exhaustive {
        return pack_exhaustive(g, k, true, opts);
    }
    if k >= g.max_degree() + 1 {
        return Ok(SolveResult {
            value: g.n(),
            witness: VertexSet::full(g.n()),
            nodes_explored: 0,
            method: Method::BranchAndBound,
        });
    }
    pack_branch_and_bound(g, k, true, opts)
}

/// ρ(G): the largest set with pairwise disjoint closed neighborhoods.
/// Always equals `limited_packing_number(g, 1)`.
pub fn packing_number(g: &Graph, opts: &SolveOptions) -> Result<SolveResult, SolveError> {
    limited_packing_number(g, 1, opts)
}

/// ρₒ(G): the largest set with pairwise disjoint open neighborhoods.
pub fn open_packing_number(g: &Graph, opts: &SolveOptions) -> Result<SolveResult, SolveError> {
    if opts.force_exhaustive {
        pack_exhaustive(g, 1, false, opts)
    } else {
        pack_branch_and_bound(g, 1, false, opts)
    }
}

/// γ_×k(G): the smallest D with |N[v] ∩ D| ≥ k for every vertex. Defined for
/// 1 ≤ k ≤ δ(G)+1.
pub fn tuple_domination_number(
    g: &Graph,
    k: usize,
    opts: &SolveOptions,
) -> Result<SolveResult, SolveError> {
    if k == 0 {
        return Err(SolveError::ZeroK);
    }
    if g.min_degree() + 1 < k {
        return Err(SolveError::InvariantUndefined {
            invariant: "tuple domination number",
            k,
        });
    }
    if opts.force_exhaustive {
        dom_exhaustive(g, k, opts)
    } else {
        dom_branch_and_bound(g, k, opts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bb() -> SolveOptions {
        SolveOptions::default()
    }

    fn ex() -> SolveOptions {
        SolveOptions {
            force_exhaustive: true,
            ..Default::default()
        }
    }

    #[test]
    fn star_two_limited_packing_is_two() {
        for n in 3..=8 {
            let g = Graph::star(n).unwrap();
            for opts in [bb(), ex()] {
                let r = limited_packing_number(&g, 2, &opts).unwrap();
                assert_eq!(r.value, 2, "n = {n}");
                assert!(is_limited_packing(&g, r.witness, 2));
            }
        }
    }

    #[test]
    fn k_above_max_degree_gives_n() {
        for g in [
            Graph::star(5).unwrap(),
            Graph::cycle(4).unwrap(),
            Graph::complete(6).unwrap(),
        ] {
            let k = g.max_degree() + 1;
            for opts in [bb(), ex()] {
                assert_eq!(limited_packing_number(&g, k, &opts).unwrap().value, g.n());
            }
        }
    }

    #[test]
    fn path4_values() {
        let g = Graph::path(4).unwrap();
        assert_eq!(limited_packing_number(&g, 2, &bb()).unwrap().value, 3);
        assert_eq!(limited_packing_number(&g, 2, &ex()).unwrap().value, 3);
        let r = packing_number(&g, &bb()).unwrap();
        assert_eq!(r.value, 2);
        assert_eq!(r.witness.to_vec(), vec![0, 3]);
    }

    #[test]
    fn packing_examples() {
        for n in 1..=8 {
            let g = Graph::complete(n).unwrap();
            assert_eq!(packing_number(&g, &bb()).unwrap().value, 1);
        }
        assert_eq!(
            packing_number(&Graph::cycle(5).unwrap(), &ex())
                .unwrap()
                .value,
            1
        );
    }

    #[test]
    fn open_packing_examples() {
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(open_packing_number(&k2, &bb()).unwrap().value, 2);
        assert_eq!(
            open_packing_number(&Graph::cycle(4).unwrap(), &ex())
                .unwrap()
                .value,
            2
        );
        assert_eq!(
            open_packing_number(&Graph::complete(3).unwrap(), &ex())
                .unwrap()
                .value,
            1
        );
        // the defining constraint holds on every returned witness
        let r = open_packing_number(&Graph::cycle(4).unwrap(), &bb()).unwrap();
        assert!(is_open_packing(&Graph::cycle(4).unwrap(), r.witness));
    }

    #[test]
    fn open_packing_allows_isolated_vertices() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert_eq!(open_packing_number(&g, &ex()).unwrap().value, 3);
    }

    #[test]
    fn domination_examples() {
        let star = Graph::star(4).unwrap();
        let r = tuple_domination_number(&star, 1, &bb()).unwrap();
        assert_eq!(r.value, 1);
        assert_eq!(r.witness.to_vec(), vec![0]);

        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(tuple_domination_number(&c4, 2, &bb()).unwrap().value, 3);
        assert_eq!(tuple_domination_number(&c4, 2, &ex()).unwrap().value, 3);

        for n in 2..=8 {
            let g = Graph::complete(n).unwrap();
            assert_eq!(tuple_domination_number(&g, 2, &ex()).unwrap().value, 2);
        }
    }

    #[test]
    fn domination_undefined_below_degree_bound() {
        let star = Graph::star(4).unwrap();
        assert_eq!(
            tuple_domination_number(&star, 3, &bb()),
            Err(SolveError::InvariantUndefined {
                invariant: "tuple domination number",
                k: 3
            })
        );
    }

    #[test]
    fn zero_k_rejected() {
        let g = Graph::path(3).unwrap();
        assert_eq!(limited_packing_number(&g, 0, &bb()), Err(SolveError::ZeroK));
        assert_eq!(
            tuple_domination_number(&g, 0, &bb()),
            Err(SolveError::ZeroK)
        );
    }

    #[test]
    fn node_limit_reported() {
        let g = Graph::complete(9).unwrap();
        let opts = SolveOptions {
            force_exhaustive: false,
            node_limit: Some(3),
        };
        assert_eq!(
            open_packing_number(&g, &opts),
            Err(SolveError::NodeLimitExceeded { limit: 3 })
        );
    }

    #[test]
    fn exhaustive_cap() {
        let g = Graph::path(21).unwrap();
        assert_eq!(
            packing_number(&g, &ex()),
            Err(SolveError::ExhaustiveTooLarge { n: 21 })
        );
    }

    #[test]
    fn methods_agree_and_return_identical_witnesses() {
        // both methods pin the lexicographically smallest optimum
        for g in [
            Graph::path(6).unwrap(),
            Graph::cycle(6).unwrap(),
            Graph::star(6).unwrap(),
            Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)])
                .unwrap(),
        ] {
            for k in 1..=3 {
                let a = limited_packing_number(&g, k, &bb()).unwrap();
                let b = limited_packing_number(&g, k, &ex()).unwrap();
                assert_eq!(a.value, b.value);
                assert_eq!(a.witness, b.witness);
            }
            let a = open_packing_number(&g, &bb()).unwrap();
            let b = open_packing_number(&g, &ex()).unwrap();
            assert_eq!((a.value, a.witness), (b.value, b.witness));
            for k in 1..=g.min_degree() + 1 {
                let a = tuple_domination_number(&g, k, &bb()).unwrap();
                let b = tuple_domination_number(&g, k, &ex()).unwrap();
                assert_eq!((a.value, a.witness), (b.value, b.witness), "k = {k}");
            }
        }
    }

    #[test]
    fn packing_equals_limited_packing_at_one() {
        for g in [Graph::path(5).unwrap(), Graph::cycle(6).unwrap()] {
            assert_eq!(
                packing_number(&g, &bb()).unwrap().value,
                limited_packing_number(&g, 1, &bb()).unwrap().value
            );
        }
    }

    #[test]
    fn domination_chain() {
        // γ = γ_×1 ≤ γ_×2
        for g in [Graph::cycle(5).unwrap(), Graph::complete(4).unwrap()] {
            let g1 = tuple_domination_number(&g, 1, &bb()).unwrap().value;
            let g2 = tuple_domination_number(&g, 2, &bb()).unwrap().value;
            assert!(g1 <= g2);
        }
    }

    #[test]
    fn complement_of_max_limited_packing_double_dominates() {
        for g in [
            Graph::cycle(4).unwrap(),
            Graph::cycle(5).unwrap(),
            Graph::complete(5).unwrap(),
            Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap(),
        ] {
            let delta = g.min_degree();
            assert!(delta >= 2);
            let b = limited_packing_number(&g, delta - 1, &bb())
                .unwrap()
                .witness;
            assert!(is_tuple_dominating(&g, b.complement(g.n()), 2));
        }
    }

    #[test]
    fn statistics_recorded() {
        let g = Graph::cycle(5).unwrap();
        let r = packing_number(&g, &bb()).unwrap();
        assert!(r.nodes_explored > 0);
        assert_eq!(r.method, Method::BranchAndBound);
        let r = packing_number(&g, &ex()).unwrap();
        assert_eq!(r.method, Method::Exhaustive);
    }

    #[test]
    fn disconnected_inputs_accepted_for_packings() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(packing_number(&g, &ex()).unwrap().value, 2);
        assert_eq!(open_packing_number(&g, &ex()).unwrap().value, 4);
    }
}

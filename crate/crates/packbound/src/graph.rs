//! Immutable simple undirected graphs with adjacency bitsets and cached
//! degree data, plus the pendant/support census used by the L₂ bound.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::set::VertexSet;

/// Largest supported order; everything fits the graph6 short form and a
/// single-word vertex set.
pub const MAX_VERTICES: usize = 62;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("order {0} exceeds the supported maximum of {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("vertex {v} out of range for order {n}")]
    InvalidVertex { v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("graph is not connected")]
    NotConnected,
    #[error("order {n} is below the required minimum {min}")]
    OrderTooSmall { n: usize, min: usize },
}

/// A simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut adj = vec![VertexSet::empty(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::InvalidVertex { v: u, n });
            }
            if v >= n {
                return Err(GraphError::InvalidVertex { v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if adj[u].contains(v) {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph {
            n,
            m: edges.len(),
            adj,
        })
    }

    /// Complete graph K_n.
    pub fn complete(n: usize) -> Result<Graph, GraphError> {
        let mut edges = Vec::new();
        for v in 1..n {
            for u in 0..v {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges)
    }

    /// Path P_n with edges i—i+1.
    pub fn path(n: usize) -> Result<Graph, GraphError> {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &edges)
    }

    /// Cycle C_n (n ≥ 3).
    pub fn cycle(n: usize) -> Result<Graph, GraphError> {
        if n < 3 {
            return Err(GraphError::OrderTooSmall { n, min: 3 });
        }
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges)
    }

    /// Star K_{1,n−1} with center 0.
    pub fn star(n: usize) -> Result<Graph, GraphError> {
        let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Open neighborhood N(v).
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// Closed neighborhood N[v].
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.adj[v].union(VertexSet::singleton(v))
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Edge list as (u, v) pairs with u < v, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = VertexSet::singleton(0);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::empty();
            for v in frontier.iter() {
                next = next.union(self.adj[v]);
            }
            frontier = next.difference(seen);
            seen = seen.union(next);
        }
        seen.len() == self.n
    }

    /// Pendant/support census. δ* follows the convention: minimum degree over
    /// vertices of degree at least two, absent when there is none.
    pub fn structural_profile(&self) -> StructuralProfile {
        let mut pendants = VertexSet::empty();
        for v in self.vertices() {
            if self.degree(v) == 1 {
                pendants.insert(v);
            }
        }
        let mut supports = VertexSet::empty();
        let mut weak_supports = VertexSet::empty();
        let mut pendant_count_per_support = BTreeMap::new();
        for v in self.vertices() {
            let pendant_nbrs = self.adj[v].intersection(pendants).len();
            if pendant_nbrs >= 1 {
                supports.insert(v);
                pendant_count_per_support.insert(v, pendant_nbrs);
                if pendant_nbrs == 1 {
                    weak_supports.insert(v);
                }
            }
        }
        let delta_star = self
            .vertices()
            .map(|v| self.degree(v))
            .filter(|&d| d >= 2)
            .min();
        StructuralProfile {
            pendants,
            supports,
            weak_supports,
            pendant_count_per_support,
            delta_star,
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph(n={}, m={}, edges={:?})",
            self.n,
            self.m,
            self.edges()
        )
    }
}

/// Census of pendant and support vertices: ℓ = |pendants|, s = |supports|,
/// s₁ = |weak_supports|, ℓ_u per support, and δ*.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructuralProfile {
    pub pendants: VertexSet,
    pub supports: VertexSet,
    pub weak_supports: VertexSet,
    pub pendant_count_per_support: BTreeMap<usize, usize>,
    pub delta_star: Option<usize>,
}

impl StructuralProfile {
    /// ℓ, the number of pendant vertices.
    pub fn pendant_count(&self) -> usize {
        self.pendants.len()
    }

    /// s, the number of support vertices.
    pub fn support_count(&self) -> usize {
        self.supports.len()
    }

    /// s₁, the number of weak support vertices.
    pub fn weak_support_count(&self) -> usize {
        self.weak_supports.len()
    }
}

/// Attaches one new pendant to every weak support of `g`. Returns `g`
/// unchanged when there is no weak support. Requires `g` connected of
/// order at least 3.
///
/// The new graph has n′ = n + s₁, ℓ′ = ℓ + s₁, s′ = s, and the same set of
/// degree-≥2 vertices; every support of the result has at least two pendant
/// neighbors. Note that δ* may strictly increase (each weak support gains a
/// degree), see the unit tests.
pub fn augment_weak_supports(g: &Graph) -> Result<Graph, GraphError> {
    if g.n() < 3 {
        return Err(GraphError::OrderTooSmall { n: g.n(), min: 3 });
    }
    if !g.is_connected() {
        return Err(GraphError::NotConnected);
    }
    let weak = g.structural_profile().weak_supports;
    if weak.is_empty() {
        return Ok(g.clone());
    }
    let mut edges = g.edges();
    let mut next = g.n();
    for u in weak.iter() {
        edges.push((u, next));
        next += 1;
    }
    Graph::from_edges(next, &edges)
}

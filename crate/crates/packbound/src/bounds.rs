//! Closed-form upper bounds on the packing and domination invariants, each
//! with an applicability predicate and exact tightness detection.

use serde::Serialize;

use crate::exact::ExactValue;
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundId {
    /// L₂(G) ≤ 2(n − ℓ + s·δ*)/(1 + δ*) for connected G, n ≥ 3.
    L2Pendant,
    /// L_k(G) ≤ n + k/2 − √(k²/4 + (1−k)n + 2m).
    LkOrderSize,
    /// ρₒ(G) ≤ n − √(2m − n) when G has no isolated vertex.
    OpenPackingOrderSize,
    /// ρₒ(G) ≤ n/δ for connected G, n ≥ 2.
    OpenPackingMinDegree,
    /// ρ(G) ≤ n/(δ+1) for connected G.
    PackingMinDegree,
    /// γ_×2(G) + ρ(G) ≤ n − δ + 2 when δ ≥ 2.
    DoubleDominationNew,
    /// γ_×2(G) + ρ(G) ≤ n when δ ≥ 2.
    DoubleDominationOrder,
    /// γ_×2(G) ≤ n − δ + 1 when δ ≥ 1.
    DoubleDominationMinDegree,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "applicable", content = "reason")]
pub enum Applicability {
    #[serde(rename = "true")]
    Applicable,
    #[serde(rename = "false")]
    Inapplicable(String),
}

/// One bound's value and applicability on a graph, plus a tightness verdict
/// once the matching invariant value has been supplied.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundEvaluation {
    pub bound: BoundId,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(flatten)]
    pub applicability: Applicability,
    /// Present exactly when applicable.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<ExactValue>,
    /// Set by `with_invariant`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tight: Option<bool>,
}

impl BoundEvaluation {
    fn applicable(bound: BoundId, k: Option<usize>, value: ExactValue) -> Self {
        BoundEvaluation {
            bound,
            k,
            applicability: Applicability::Applicable,
            value: Some(value),
            tight: None,
        }
    }

    fn inapplicable(bound: BoundId, k: Option<usize>, reason: &str) -> Self {
        BoundEvaluation {
            bound,
            k,
            applicability: Applicability::Inapplicable(reason.to_string()),
            value: None,
            tight: None,
        }
    }

    pub fn is_applicable(&self) -> bool {
        self.applicability == Applicability::Applicable
    }

    /// invariant ≤ value, or None when inapplicable.
    pub fn admits(&self, invariant: usize) -> Option<bool> {
        self.value.map(|v| v.admits(invariant as i64))
    }

    /// invariant = value as real numbers, or None when inapplicable.
    pub fn is_tight_for(&self, invariant: usize) -> Option<bool> {
        self.value.map(|v| v.eq_int(invariant as i64))
    }

    /// Records the tightness verdict against a solver value.
    pub fn with_invariant(mut self, invariant: usize) -> Self {
        self.tight = self.is_tight_for(invariant);
        self
    }
}

/// L₂(G) ≤ 2(n − ℓ + s·δ*)/(1 + δ*) for connected graphs of order ≥ 3.
pub fn l2_pendant_bound(g: &Graph) -> BoundEvaluation {
    let id = BoundId::L2Pendant;
    if g.n() < 3 {
        return BoundEvaluation::inapplicable(id, None, "order below 3");
    }
    if !g.is_connected() {
        return BoundEvaluation::inapplicable(id, None, "not connected");
    }
    let profile = g.structural_profile();
    let Some(delta_star) = profile.delta_star else {
        return BoundEvaluation::inapplicable(id, None, "delta* undefined");
    };
    let n = g.n() as i64;
    let ell = profile.pendant_count() as i64;
    let s = profile.support_count() as i64;
    let d = delta_star as i64;
    BoundEvaluation::applicable(id, None, ExactValue::rational(2 * (n - ell + s * d), 1 + d))
}

/// Does the order/size hypothesis hold for (g, k)? Evaluated in integers:
/// k ≤ 2(n − √(n²−n−2m)) ⇔ k ≤ 2n and (2n−k)² ≥ 4(n²−n−2m).
fn lk_hypothesis(g: &Graph, k: usize) -> bool {
    if g.min_degree() + 1 >= k {
        return true;
    }
    let n = g.n() as i64;
    let m = g.m() as i64;
    let k = k as i64;
    k <= 2 * n && (2 * n - k).pow(2) >= 4 * (n * n - n - 2 * m)
}

/// L_k(G) ≤ (2n + k − √(k² + 4(1−k)n + 8m))/2 under the hypothesis
/// k ≤ 2(n − √(n²−n−2m)) or δ ≥ k−1.
pub fn lk_order_size_bound(g: &Graph, k: usize) -> BoundEvaluation {
    let id = BoundId::LkOrderSize;
    assert!(k >= 1, "k must be at least 1");
    if !lk_hypothesis(g, k) {
        return BoundEvaluation::inapplicable(id, Some(k), "hypothesis fails");
    }
    let n = g.n() as i64;
    let m = g.m() as i64;
    let ki = k as i64;
    let rad = ki * ki + 4 * (1 - ki) * n + 8 * m;
    if rad < 0 {
        // unreachable under the hypothesis; kept as a reported state
        return BoundEvaluation::inapplicable(id, Some(k), "negative radicand");
    }
    BoundEvaluation::applicable(id, Some(k), ExactValue::sqrt_deficit(2 * n + ki, rad, 2))
}

/// ρₒ(G) ≤ n − √(2m − n) for graphs without isolated vertices.
pub fn open_packing_order_size_bound(g: &Graph) -> BoundEvaluation {
    let id = BoundId::OpenPackingOrderSize;
    if g.min_degree() == 0 {
        return BoundEvaluation::inapplicable(id, None, "isolated vertex");
    }
    let n = g.n() as i64;
    let m = g.m() as i64;
    BoundEvaluation::applicable(id, None, ExactValue::sqrt_deficit(n, 2 * m - n, 1))
}

/// ρₒ(G) ≤ n/δ for connected graphs of order ≥ 2.
pub fn open_packing_min_degree_bound(g: &Graph) -> BoundEvaluation {
    let id = BoundId::OpenPackingMinDegree;
    if g.n() < 2 {
        return BoundEvaluation::inapplicable(id, None, "order below 2");
    }
    if !g.is_connected() {
        return BoundEvaluation::inapplicable(id, None, "not connected");
    }
    BoundEvaluation::applicable(
        id,
        None,
        ExactValue::rational(g.n() as i64, g.min_degree() as i64),
    )
}

/// ρ(G) ≤ n/(δ+1) for connected graphs.
pub fn packing_min_degree_bound(g: &Graph) -> BoundEvaluation {
    let id = BoundId::PackingMinDegree;
    if !g.is_connected() {
        return BoundEvaluation::inapplicable(id, None, "not connected");
    }
    BoundEvaluation::applicable(
        id,
        None,
        ExactValue::rational(g.n() as i64, g.min_degree() as i64 + 1),
    )
}

/// The three double-domination bounds: the new one (n − δ + 2 on γ_×2 + ρ)
/// and the two prior ones it improves (n on γ_×2 + ρ, and n − δ + 1 on γ_×2).
pub fn double_domination_bounds(g: &Graph) -> Vec<BoundEvaluation> {
    let n = g.n() as i64;
    let delta = g.min_degree() as i64;
    let gated = |id, min_delta: i64, value: i64| {
        if delta >= min_delta {
            BoundEvaluation::applicable(id, None, ExactValue::integer(value))
        } else {
            BoundEvaluation::inapplicable(id, None, "minimum degree too small")
        }
    };
    vec![
        gated(BoundId::DoubleDominationNew, 2, n - delta + 2),
        gated(BoundId::DoubleDominationOrder, 2, n),
        gated(BoundId::DoubleDominationMinDegree, 1, n - delta + 1),
    ]
}

/// Confirms on this graph that the new bound implies both priors:
/// n − δ + 2 ≤ n (given δ ≥ 2) and (n − δ + 2) − ρ ≤ n − δ + 1 (given ρ ≥ 1).
/// None when δ < 2.
pub fn double_domination_dominance(g: &Graph, rho: usize) -> Option<bool> {
    let n = g.n() as i64;
    let delta = g.min_degree() as i64;
    if delta < 2 {
        return None;
    }
    let new = n - delta + 2;
    Some(new <= n && new - rho as i64 <= n - delta + 1)
}

/// L_k(G) = n exactly when k ≥ Δ(G) + 1.
pub fn lk_trivial_threshold(g: &Graph, k: usize) -> bool {
    k >= g.max_degree() + 1
}

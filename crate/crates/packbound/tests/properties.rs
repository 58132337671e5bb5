//! Property tests for the structural invariants: graph6 round trips,
//! solver/oracle agreement, witness validity, the monotonicity chain, and
//! the complement/double-domination step.

use proptest::prelude::*;

use packbound::graph6::{parse_graph6, to_graph6};
use packbound::solve::{
    is_limited_packing, is_open_packing, is_tuple_dominating, limited_packing_number,
    open_packing_number, tuple_domination_number, SolveOptions,
};
use packbound::Graph;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut idx = 0;
            for v in 1..n {
                for u in 0..v {
                    if bits[idx] {
                        edges.push((u, v));
                    }
                    idx += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn bb() -> SolveOptions {
    SolveOptions::default()
}

fn ex() -> SolveOptions {
    SolveOptions {
        force_exhaustive: true,
        ..Default::default()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn graph6_round_trip(g in graph_strategy(30)) {
        prop_assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn handshake(g in graph_strategy(30)) {
        let sum: usize = g.vertices().map(|v| g.degree(v)).sum();
        prop_assert_eq!(sum, 2 * g.m());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn solver_methods_agree_with_valid_witnesses(g in graph_strategy(8), k in 1usize..=3) {
        let a = limited_packing_number(&g, k, &bb()).unwrap();
        let b = limited_packing_number(&g, k, &ex()).unwrap();
        prop_assert_eq!(a.value, b.value);
        prop_assert_eq!(a.witness, b.witness);
        prop_assert_eq!(a.witness.len(), a.value);
        prop_assert!(is_limited_packing(&g, a.witness, k));

        let a = open_packing_number(&g, &bb()).unwrap();
        let b = open_packing_number(&g, &ex()).unwrap();
        prop_assert_eq!(a.value, b.value);
        prop_assert_eq!(a.witness, b.witness);
        prop_assert!(is_open_packing(&g, a.witness));

        if k <= g.min_degree() + 1 {
            let a = tuple_domination_number(&g, k, &bb()).unwrap();
            let b = tuple_domination_number(&g, k, &ex()).unwrap();
            prop_assert_eq!(a.value, b.value);
            prop_assert_eq!(a.witness, b.witness);
            prop_assert_eq!(a.witness.len(), a.value);
            prop_assert!(is_tuple_dominating(&g, a.witness, k));
        }
    }

    #[test]
    fn limited_packing_monotonicity_chain(g in graph_strategy(8)) {
        for k in 1..=g.max_degree() {
            let lk = limited_packing_number(&g, k, &bb()).unwrap().value;
            let lk1 = limited_packing_number(&g, k + 1, &bb()).unwrap().value;
            prop_assert!(lk1 >= lk + 1, "k = {}: {} < {} + 1", k, lk1, lk);
        }
    }

    #[test]
    fn complement_of_max_limited_packing_double_dominates(g in graph_strategy(8)) {
        prop_assume!(g.min_degree() >= 2);
        let b = limited_packing_number(&g, g.min_degree() - 1, &bb()).unwrap().witness;
        prop_assert!(is_tuple_dominating(&g, b.complement(g.n()), 2));
    }

    #[test]
    fn trivial_threshold_iff(g in graph_strategy(7)) {
        for k in 1..=g.max_degree() + 1 {
            let lk = limited_packing_number(&g, k, &ex()).unwrap().value;
            prop_assert_eq!(lk == g.n(), k >= g.max_degree() + 1);
        }
    }
}

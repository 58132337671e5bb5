//! Branch-and-bound versus the exhaustive oracle over the whole enumerated
//! corpus, for all four invariants and every legal k. Witnesses must agree
//! too: both methods pin the lexicographically smallest optimum.

use packbound::enumerate::enumerate_connected;
use packbound::graph6::to_graph6;
use packbound::solve::{
    limited_packing_number, open_packing_number, packing_number, tuple_domination_number,
    SolveOptions,
};

#[test]
fn oracle_equivalence_over_the_enumerated_corpus() {
    let bb = SolveOptions::default();
    let ex = SolveOptions {
        force_exhaustive: true,
        ..Default::default()
    };
    let mut compared = 0usize;
    for n in 1..=6 {
        for g in enumerate_connected(n).unwrap() {
            let tag = to_graph6(&g);
            for k in 1..=g.max_degree() + 1 {
                let a = limited_packing_number(&g, k, &bb).unwrap();
                let b = limited_packing_number(&g, k, &ex).unwrap();
                assert_eq!((a.value, a.witness), (b.value, b.witness), "L_{k} on {tag}");
                compared += 1;
            }
            let a = packing_number(&g, &bb).unwrap();
            let b = packing_number(&g, &ex).unwrap();
            assert_eq!((a.value, a.witness), (b.value, b.witness), "rho on {tag}");

            let a = open_packing_number(&g, &bb).unwrap();
            let b = open_packing_number(&g, &ex).unwrap();
            assert_eq!((a.value, a.witness), (b.value, b.witness), "rho_o on {tag}");

            for k in 1..=g.min_degree() + 1 {
                let a = tuple_domination_number(&g, k, &bb).unwrap();
                let b = tuple_domination_number(&g, k, &ex).unwrap();
                assert_eq!(
                    (a.value, a.witness),
                    (b.value, b.witness),
                    "gamma_x{k} on {tag}"
                );
                compared += 1;
            }
        }
    }
    assert!(compared > 500);
}

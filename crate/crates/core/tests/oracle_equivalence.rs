mod common;

use hypoham::hamilton::{oracle_hamiltonian_cycle, oracle_hamiltonian_path, HamiltonSearch, SearchConfig};
use hypoham::SimpleGraph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn agree(g: &SimpleGraph) {
    let cycle = HamiltonSearch::new(g).cycle().0.found();
    let path = HamiltonSearch::new(g).path().0.found();
    assert_eq!(cycle.is_some(), oracle_hamiltonian_cycle(g).unwrap().is_some(), "cycle verdict on {g:?}");
    assert_eq!(path.is_some(), oracle_hamiltonian_path(g).unwrap().is_some(), "path verdict on {g:?}");
    let unpruned = SearchConfig { budget: None, prune: false };
    assert_eq!(cycle.is_some(), HamiltonSearch::new(g).config(unpruned).cycle().0.is_found());
}

#[test]
fn connected_graph_counts() {
    let counts: Vec<usize> = (1..=8).map(|n| common::connected_graphs(n).len()).collect();
    assert_eq!(counts, [1, 1, 2, 6, 21, 112, 853, 11117]);
}

#[test]
fn all_connected_graphs_up_to_eight_vertices() {
    for n in 1..=8 {
        for g in common::connected_graphs(n) {
            agree(&g);
        }
    }
}

#[test]
fn random_connected_graphs_nine_to_fourteen() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for i in 0..240 {
        let n = 9 + i % 6;
        let p = rng.gen_range(0.05..0.45);
        agree(&common::random_connected(&mut rng, n, p));
    }
}

#[test]
fn path_between_matches_oracle_on_small_graphs() {
    // a u-v Hamiltonian path exists iff G + x, with x joined to u and v, is Hamiltonian
    for g in common::connected_graphs(6) {
        for u in 0..6 {
            for v in u + 1..6 {
                let mut h = g.clone();
                let x = h.add_vertex();
                h.add_edge(u, x);
                h.add_edge(v, x);
                let expect = oracle_hamiltonian_cycle(&h).unwrap().is_some();
                let got = HamiltonSearch::new(&g).path_between(u, v).0.is_found();
                assert_eq!(got, expect);
            }
        }
    }
}

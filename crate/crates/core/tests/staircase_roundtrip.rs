use std::time::Instant;

use stairdec::bridge::c4_decompositions;
use stairdec::decomposer::decompositions;
use stairdec::fixtures;
use stairdec::graph::{is_isomorphic, is_isomorphism};
use stairdec::staircase::{canonical_graph_of, graph_of, set_of_graph};
use stairdec::transform::{canonicalize, transitive_closure};
use stairdec_oracle::{brute_canonical_graph, gen};

#[test]
fn unique_max_family_round_trips() {
    let family = gen::unique_max_family(5, 4);
    assert!(family.len() >= 100);
    for g in &family {
        let start = Instant::now();
        let r = set_of_graph(g).unwrap_or_else(|e| panic!("{g:?}: {e}"));
        let cg = canonical_graph_of(&r.set).unwrap();
        let map: Vec<usize> = r.node_map(g, &cg).into_iter().map(Option::unwrap).collect();
        assert!(is_isomorphism(g, &cg.graph, &map), "{g:?} realized as {:?}", cg.graph);
        assert!(start.elapsed().as_secs_f64() < 5.0, "{g:?} took {:?}", start.elapsed());
    }
}

#[test]
fn small_family_members_agree_with_cell_based_graphs() {
    for g in gen::unique_max_family(4, 3) {
        let r = set_of_graph(&g).unwrap();
        if r.set.cardinality() > 2000 {
            continue;
        }
        let cg = canonical_graph_of(&r.set).unwrap();
        assert!(is_isomorphic(&cg.graph, &brute_canonical_graph(&r.set)));
        assert!(is_isomorphic(&cg.graph, &canonicalize(&graph_of(&r.set).unwrap()).unwrap().graph));
    }
}

#[test]
fn closure_of_shortcut_chain_is_realized() {
    let closed = transitive_closure(&fixtures::chain_with_shortcut());
    let r = set_of_graph(&closed).unwrap();
    assert!(is_isomorphic(&canonical_graph_of(&r.set).unwrap().graph, &closed));
    assert!(set_of_graph(&fixtures::chain_with_shortcut()).is_err());
}

#[test]
fn realizations_preserve_decomposition_counts() {
    for g in gen::unique_max_family(4, 3) {
        let r = set_of_graph(&g).unwrap();
        assert_eq!(c4_decompositions(&r.set).unwrap().len(), decompositions(&g).len(), "{g:?}");
    }
}

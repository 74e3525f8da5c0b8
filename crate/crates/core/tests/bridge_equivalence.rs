use std::collections::BTreeSet;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use stairdec::bridge::{c4_decompositions, c4_to_graph_decomposition, c4_transport, graph_problem_to_set_problem, C4Decomposition};
use stairdec::decomposer::decompositions;
use stairdec::graph::{Decomposition, LabeledGraph};
use stairdec::staircase::{Point, StandardSet};
use stairdec_oracle::{brute_c4_decompositions, brute_staircases, gen, CellMultiset};

fn cell_multiset(d: &C4Decomposition) -> CellMultiset {
    let mut out: CellMultiset = d
        .members()
        .iter()
        .map(|m| m.cells().iter().map(|p| p.coords().to_vec()).collect())
        .collect();
    out.sort();
    out
}

fn all_staircases(max_cells: usize, dim: usize) -> Vec<StandardSet> {
    (0..=max_cells)
        .flat_map(|n| brute_staircases(n, dim))
        .map(|cells| StandardSet::from_cells(dim, cells.into_iter().map(Point)).unwrap())
        .collect()
}

#[test]
fn c4_decompositions_match_brute_force_in_three_dimensions() {
    let sets = all_staircases(10, 3);
    assert!(sets.len() > 1000);
    for s in sets {
        let ds = c4_decompositions(&s).unwrap();
        let found: BTreeSet<CellMultiset> = ds.iter().map(cell_multiset).collect();
        assert_eq!(found.len(), ds.len());
        assert_eq!(found, brute_c4_decompositions(&s).unwrap(), "{s:?}");
        for d in &ds {
            assert_eq!(d.sum(3).unwrap(), s);
        }
    }
}

#[test]
fn transport_round_trips() {
    for s in all_staircases(8, 3).into_iter().chain(all_staircases(6, 4)) {
        let t = c4_transport(&s).unwrap();
        for (g, c) in &t.pairs {
            assert_eq!(&c4_to_graph_decomposition(c, &t.canonical, &s).unwrap(), g);
        }
    }
}

#[test]
fn single_columns_decompose_into_singletons() {
    for n in 1..=6u32 {
        let s = StandardSet::from_cells(2, (0..n).map(|h| Point(vec![0, h]))).unwrap();
        let ds = c4_decompositions(&s).unwrap();
        assert_eq!(ds.len(), 1);
        assert_eq!(ds[0].len(), n as usize);
    }
}

fn check_pipeline(g: &LabeledGraph) {
    let report = graph_problem_to_set_problem(g).unwrap();
    let expected: BTreeSet<Decomposition> = decompositions(g).into_iter().collect();
    let mapped: BTreeSet<Decomposition> = report.pairs.iter().map(|(_, d)| d.clone()).collect();
    assert_eq!(report.pairs.len(), expected.len(), "{g:?}");
    assert_eq!(mapped, expected, "{g:?}");
    for (c, _) in &report.pairs {
        assert_eq!(c.sum(report.set.dim()).unwrap(), report.set);
    }
}

#[test]
fn graph_problems_become_set_problems() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..150 {
        check_pipeline(&gen::random_standard_graph(&mut rng, 4, 2));
    }
    check_pipeline(&LabeledGraph::from_strs(&[("a", 1), ("b", 1), ("c", 1)], &[]));
    check_pipeline(&LabeledGraph::from_strs(&[("a", 0)], &[]));
    check_pipeline(&LabeledGraph::from_strs(&[], &[]));
}

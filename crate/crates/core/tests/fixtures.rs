use std::collections::BTreeSet;
use std::time::Instant;

use stairdec::bridge::{c4_decompositions, C4Decomposition};
use stairdec::decomposer::{check_decom_bounds, decompositions, decompositions_with_stats, node_decompositions, unit_components_at};
use stairdec::fixtures;
use stairdec::graph::{add, is_isomorphic, Decomposition, LabeledGraph};
use stairdec::staircase::{canonical_graph_of, Point, StandardSet};
use stairdec::transform::{augment_unique_max, canonicalize, strip_augmented};
use stairdec_oracle::{brute_c4_decompositions, CellMultiset};

fn encode(g: &LabeledGraph, ds: &[Decomposition]) -> BTreeSet<Vec<Vec<String>>> {
    ds.iter().map(|d| d.encoding(g)).collect()
}

fn expected(rows: Vec<Vec<Vec<&str>>>) -> BTreeSet<Vec<Vec<String>>> {
    rows.into_iter()
        .map(|d| {
            let mut d: Vec<Vec<String>> = d.into_iter().map(|m| m.into_iter().map(String::from).collect()).collect();
            d.sort();
            d
        })
        .collect()
}

fn cell_multiset(d: &C4Decomposition) -> CellMultiset {
    let mut out: CellMultiset = d
        .members()
        .iter()
        .map(|m| m.cells().iter().map(|p| p.coords().to_vec()).collect())
        .collect();
    out.sort();
    out
}

#[test]
fn diamond_has_two_decompositions() {
    let start = Instant::now();
    let g = fixtures::diamond();
    let e = decompositions_with_stats(&g);
    assert_eq!(
        encode(&g, &e.decompositions),
        expected(vec![
            vec![vec!["b", "l", "r", "t"], vec!["l", "r", "t"], vec!["t"]],
            vec![vec!["b", "l", "r", "t"], vec!["l", "t"], vec!["r", "t"]],
        ])
    );
    assert!(e.stats.iter().all(|s| s.within_bound()));
    assert!(start.elapsed().as_secs_f64() < 1.0);
}

#[test]
fn six_node_graph_has_four_decompositions() {
    let g = fixtures::six_node_graph();
    let ds = decompositions(&g);
    assert!(ds.iter().all(|d| d.len() == 3));
    assert_eq!(encode(&g, &ds), expected(fixtures::six_node_decompositions()));

    let c = canonicalize(&g).unwrap();
    let lifted: Vec<Decomposition> = decompositions(&c.graph).iter().map(|d| c.lift(d, &g)).collect();
    assert_eq!(encode(&g, &lifted), expected(fixtures::six_node_decompositions()));
}

#[test]
fn summands_sum_is_not_standard() {
    let (g, h) = fixtures::summands();
    assert!(g.is_standard() && h.is_standard());
    assert!(!add(&g, &h).is_standard());
}

#[test]
fn stars_have_exponentially_many_decompositions() {
    for n in 1..=10 {
        let start = Instant::now();
        let g = fixtures::star(n);
        assert_eq!(unit_components_at(&g, "y").unwrap().items.len(), 1 << n);
        let e = decompositions_with_stats(&g);
        assert_eq!(e.decompositions.len(), 1 << (n - 1));
        assert!(e.stats.iter().all(|s| s.within_bound()));
        assert!(start.elapsed().as_secs_f64() < 30.0);
    }
}

#[test]
fn two_point_star_node_decompositions() {
    let g = fixtures::star(2);
    let (ds, _) = node_decompositions(&g, "x01").unwrap();
    assert_eq!(
        encode(&g, &ds),
        expected(vec![vec![vec!["x01", "y"]], vec![vec!["x01", "x02", "y"]]])
    );
}

#[test]
fn lower_bound_is_sharp_on_fans() {
    for m in 1..=6 {
        let b = check_decom_bounds(&fixtures::fan(m, 1, 1, 2), "v").unwrap();
        assert_eq!(b.k, 1 << m);
        assert_eq!(b.actual, b.k);
        assert!(b.minimal_pivot && b.holds());
    }
}

#[test]
fn chains_have_one_node_decomposition() {
    for l in 1..=8 {
        let top = format!("c{l:02}");
        let b = check_decom_bounds(&fixtures::chain(l), &top).unwrap();
        assert_eq!((b.k, b.l, b.actual), (l as u64, l as u64, 1));
        assert!(b.holds());
    }
}

#[test]
fn forked_chains_have_two_node_decompositions() {
    for l in 3..=8 {
        let b = check_decom_bounds(&fixtures::forked_chain(l), "top").unwrap();
        assert_eq!((b.k, b.l, b.actual), (l as u64 + 2, l as u64, 2));
        assert!(b.holds());
    }
}

#[test]
fn two_points_and_their_apex_both_have_two() {
    let g = fixtures::two_points();
    let (aug, v) = augment_unique_max(&g);
    assert!(is_isomorphic(&aug, &fixtures::two_points_with_apex()));
    assert_eq!(decompositions(&g).len(), 2);
    let aug_ds = decompositions(&aug);
    assert_eq!(aug_ds.len(), 2);
    let stripped: Vec<Decomposition> = aug_ds.iter().map(|d| strip_augmented(d, &v, &aug, &g)).collect();
    assert_eq!(encode(&g, &stripped), encode(&g, &decompositions(&g)));
}

#[test]
fn four_dim_staircase_has_the_expected_canonical_graph() {
    let s = fixtures::four_dim_staircase();
    assert_eq!(s.cardinality(), 13);
    let cg = canonical_graph_of(&s).unwrap().graph;
    assert_eq!(cg.edge_count(), 6);
    assert!(is_isomorphic(&cg, &fixtures::four_dim_canonical_graph()));
}

#[test]
fn diamond_staircase_has_two_c4_decompositions() {
    let s = fixtures::diamond_staircase();
    assert_eq!(s.cardinality(), 15);
    assert!(is_isomorphic(&canonical_graph_of(&s).unwrap().graph, &fixtures::diamond()));
    let ds = c4_decompositions(&s).unwrap();
    assert_eq!(ds.len(), 2);
    for d in &ds {
        assert_eq!(d.sum(3).unwrap(), s);
    }
    let sizes: BTreeSet<Vec<usize>> = ds
        .iter()
        .map(|d| {
            let mut v: Vec<usize> = d.members().iter().map(StandardSet::cardinality).collect();
            v.sort();
            v
        })
        .collect();
    assert_eq!(sizes, BTreeSet::from([vec![1, 5, 9], vec![3, 3, 9]]));
    let found: BTreeSet<CellMultiset> = ds.iter().map(cell_multiset).collect();
    assert_eq!(found, brute_c4_decompositions(&s).unwrap());
}

#[test]
fn stacked_staircase_decompositions_are_found() {
    let s = fixtures::stacked_staircase();
    assert_eq!(s.cardinality(), 10);
    let found: BTreeSet<CellMultiset> = c4_decompositions(&s).unwrap().iter().map(cell_multiset).collect();
    assert_eq!(found, brute_c4_decompositions(&s).unwrap());
    for d in fixtures::stacked_staircase_decompositions() {
        let mut ms: CellMultiset = d.into_iter().map(|m| m.into_iter().map(|p| p.to_vec()).collect()).collect();
        ms.sort();
        assert!(found.contains(&ms), "{ms:?}");
    }
}

#[test]
fn two_by_two_staircase_canonical_graph() {
    let s = fixtures::two_by_two_staircase();
    assert_eq!(s.cardinality(), 9);
    assert!(s.contains(&Point(vec![1, 0, 2])));
    let cg = canonical_graph_of(&s).unwrap().graph;
    assert!(is_isomorphic(&cg, &fixtures::two_by_two_canonical_graph()));
}

//! The bundled fixture suite behind `stairdec selfcheck`.

use std::collections::BTreeSet;

use stairdec::bridge::c4_decompositions;
use stairdec::decomposer::{check_decom_bounds, decompositions, decompositions_with_stats, unit_components_at};
use stairdec::fixtures;
use stairdec::games::c4_games;
use stairdec::graph::{add, is_isomorphic};
use stairdec::staircase::canonical_graph_of;
use stairdec::transform::augment_unique_max;
use stairdec_oracle::{brute_c4_decompositions, brute_decompositions, partition_count};

type Check = Result<(), String>;

fn expect<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Check {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, expected {want:?}"))
    }
}

fn diamond() -> Check {
    let g = fixtures::diamond();
    let e = decompositions_with_stats(&g);
    expect("decompositions", e.decompositions.len(), 2)?;
    let found: BTreeSet<_> = e.decompositions.iter().map(|d| d.encoding(&g)).collect();
    expect("oracle", found, brute_decompositions(&g).map_err(|e| e.to_string())?)?;
    expect("bound", e.stats.iter().all(|s| s.within_bound()), true)
}

fn six_node_graph() -> Check {
    let g = fixtures::six_node_graph();
    let found: BTreeSet<Vec<Vec<String>>> = decompositions(&g).iter().map(|d| d.encoding(&g)).collect();
    let want: BTreeSet<Vec<Vec<String>>> = fixtures::six_node_decompositions()
        .into_iter()
        .map(|d| {
            let mut d: Vec<Vec<String>> = d.into_iter().map(|m| m.into_iter().map(String::from).collect()).collect();
            d.sort();
            d
        })
        .collect();
    expect("decompositions", found, want)
}

fn summands() -> Check {
    let (g, h) = fixtures::summands();
    expect("summands standard", g.is_standard() && h.is_standard(), true)?;
    expect("sum standard", add(&g, &h).is_standard(), false)
}

fn stars() -> Check {
    for n in 1..=10 {
        let g = fixtures::star(n);
        let k = unit_components_at(&g, "y").map_err(|e| e.to_string())?.items.len();
        expect(&format!("components of star {n}"), k, 1 << n)?;
        expect(&format!("decompositions of star {n}"), decompositions(&g).len(), 1 << (n - 1))?;
    }
    Ok(())
}

fn sharp_bounds() -> Check {
    for m in 1..=6 {
        let b = check_decom_bounds(&fixtures::fan(m, 1, 1, 2), "v").map_err(|e| e.to_string())?;
        expect(&format!("fan {m}"), (b.k, b.actual), (1 << m, 1 << m))?;
    }
    let b = check_decom_bounds(&fixtures::chain(5), "c05").map_err(|e| e.to_string())?;
    expect("chain", (b.k, b.actual), (5, 1))?;
    let b = check_decom_bounds(&fixtures::forked_chain(5), "top").map_err(|e| e.to_string())?;
    expect("forked chain", (b.k, b.actual), (7, 2))
}

fn two_points() -> Check {
    let g = fixtures::two_points();
    let (aug, _) = augment_unique_max(&g);
    expect("apex graph", is_isomorphic(&aug, &fixtures::two_points_with_apex()), true)?;
    expect("counts", (decompositions(&g).len(), decompositions(&aug).len()), (2, 2))
}

fn four_dim() -> Check {
    let cg = canonical_graph_of(&fixtures::four_dim_staircase()).map_err(|e| e.to_string())?;
    expect("canonical graph", is_isomorphic(&cg.graph, &fixtures::four_dim_canonical_graph()), true)
}

fn c4_fixture(s: stairdec::staircase::StandardSet, count: usize) -> Check {
    let ds = c4_decompositions(&s).map_err(|e| e.to_string())?;
    expect("C4 decompositions", ds.len(), count)?;
    for d in &ds {
        expect("re-sum", d.sum(s.dim()).map_err(|e| e.to_string())?, s.clone())?;
    }
    expect("oracle", ds.len(), brute_c4_decompositions(&s).map_err(|e| e.to_string())?.len())
}

fn two_by_two() -> Check {
    let cg = canonical_graph_of(&fixtures::two_by_two_staircase()).map_err(|e| e.to_string())?;
    expect("canonical graph", is_isomorphic(&cg.graph, &fixtures::two_by_two_canonical_graph()), true)
}

fn games() -> Check {
    expect("games(3,3)", c4_games(3, 3).map_err(|e| e.to_string())?.len(), 6)?;
    for n in 1..=6 {
        let got = c4_games(n, 2).map_err(|e| e.to_string())?.len() as u64;
        expect(&format!("games({n},2)"), got, partition_count(n))?;
    }
    Ok(())
}

pub fn run() -> Vec<(&'static str, Check)> {
    vec![
        ("diamond graph has 2 decompositions", diamond()),
        ("six-node graph has 4 decompositions", six_node_graph()),
        ("sum of two standard graphs can fail to be standard", summands()),
        ("stars: 2^n components, 2^(n-1) decompositions", stars()),
        ("decomposition bounds are reached", sharp_bounds()),
        ("two points and their apex both have 2", two_points()),
        ("4D staircase canonical graph", four_dim()),
        ("diamond staircase has 2 C4 decompositions", c4_fixture(fixtures::diamond_staircase(), 2)),
        ("stacked staircase has 4 C4 decompositions", c4_fixture(fixtures::stacked_staircase(), 4)),
        ("2x2 staircase canonical graph", two_by_two()),
        ("C4 games match partition counts", games()),
    ]
}

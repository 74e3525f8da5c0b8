//! Small named graphs and staircases used by tests, examples and `selfcheck`.

use std::collections::BTreeMap;

use crate::games::IteratedPartition;
use crate::graph::LabeledGraph;
use crate::staircase::{Point, StandardSet};

/// Diamond `b → l, r → t` labeled 1, 2, 2, 3.
pub fn diamond() -> LabeledGraph {
    LabeledGraph::from_strs(
        &[("b", 1), ("l", 2), ("r", 2), ("t", 3)],
        &[("b", "l"), ("b", "r"), ("l", "t"), ("r", "t")],
    )
}

/// Six nodes, eight edges, with one equal-label edge `C → R`; four decompositions.
pub fn six_node_graph() -> LabeledGraph {
    LabeledGraph::from_strs(
        &[("BL", 1), ("BR", 1), ("C", 2), ("L", 2), ("R", 2), ("T", 3)],
        &[
            ("L", "T"),
            ("C", "T"),
            ("R", "T"),
            ("BR", "T"),
            ("BR", "R"),
            ("BL", "C"),
            ("BL", "L"),
            ("C", "R"),
        ],
    )
}

/// The four decompositions of [`six_node_graph`], as sorted id lists.
pub fn six_node_decompositions() -> Vec<Vec<Vec<&'static str>>> {
    let all = vec!["BL", "BR", "C", "L", "R", "T"];
    vec![
        vec![all.clone(), vec!["C", "L", "R", "T"], vec!["T"]],
        vec![all, vec!["C", "R", "T"], vec!["L", "T"]],
        vec![vec!["BL", "C", "L", "R", "T"], vec!["BR", "C", "L", "R", "T"], vec!["T"]],
        vec![vec!["BL", "C", "L", "R", "T"], vec!["BR", "C", "R", "T"], vec!["L", "T"]],
    ]
}

/// Two standard graphs on overlapping nodes whose sum is not standard.
pub fn summands() -> (LabeledGraph, LabeledGraph) {
    let g = LabeledGraph::from_strs(
        &[("apex", 5), ("m4", 4), ("m3", 3), ("m2", 2), ("b2l", 2), ("b2r", 2)],
        &[
            ("m4", "apex"),
            ("m3", "apex"),
            ("m2", "apex"),
            ("b2l", "m4"),
            ("b2l", "m3"),
            ("b2r", "apex"),
            ("b2r", "m2"),
        ],
    );
    let h = LabeledGraph::from_strs(
        &[("top", 2), ("apex", 2), ("m2", 2), ("b2r", 1)],
        &[("apex", "top"), ("m2", "apex"), ("b2r", "m2"), ("b2r", "apex")],
    );
    (g, h)
}

/// Nodes `x01..xn` labeled 1, each pointing to `y` labeled 2.
pub fn star(n: usize) -> LabeledGraph {
    let names: Vec<String> = (1..=n).map(|i| format!("x{i:02}")).collect();
    let mut nodes: Vec<(&str, i64)> = names.iter().map(|s| (s.as_str(), 1)).collect();
    nodes.push(("y", 2));
    let edges: Vec<(&str, &str)> = names.iter().map(|s| (s.as_str(), "y")).collect();
    LabeledGraph::from_strs(&nodes, &edges)
}

/// `v` and `v01..vm` all pointing to `w`, with the given labels.
pub fn fan(m: usize, v: i64, vi: i64, w: i64) -> LabeledGraph {
    let names: Vec<String> = (1..=m).map(|i| format!("v{i:02}")).collect();
    let mut nodes: Vec<(&str, i64)> = names.iter().map(|s| (s.as_str(), vi)).collect();
    nodes.push(("v", v));
    nodes.push(("w", w));
    let mut edges: Vec<(&str, &str)> = names.iter().map(|s| (s.as_str(), "w")).collect();
    edges.push(("v", "w"));
    LabeledGraph::from_strs(&nodes, &edges)
}

/// Chain `c01 → … → cl` labeled `1, …, l`.
pub fn chain(l: usize) -> LabeledGraph {
    let names: Vec<String> = (1..=l).map(|i| format!("c{i:02}")).collect();
    let nodes: Vec<(&str, i64)> = names.iter().enumerate().map(|(i, s)| (s.as_str(), i as i64 + 1)).collect();
    let edges: Vec<(&str, &str)> = names.windows(2).map(|w| (w[0].as_str(), w[1].as_str())).collect();
    LabeledGraph::from_strs(&nodes, &edges)
}

/// Chain labeled `1, …, l-2` that forks into two nodes labeled `l-1`, both pointing to a top labeled `l`.
pub fn forked_chain(l: usize) -> LabeledGraph {
    assert!(l >= 3, "needs at least three levels");
    let names: Vec<String> = (1..=l - 2).map(|i| format!("c{i:02}")).collect();
    let mut nodes: Vec<(&str, i64)> = names.iter().enumerate().map(|(i, s)| (s.as_str(), i as i64 + 1)).collect();
    let top = l as i64;
    nodes.extend([("fa", top - 1), ("fb", top - 1), ("top", top)]);
    let mut edges: Vec<(&str, &str)> = names.windows(2).map(|w| (w[0].as_str(), w[1].as_str())).collect();
    let last = names.last().expect("l >= 3").as_str();
    edges.extend([(last, "fa"), (last, "fb"), ("fa", "top"), ("fb", "top")]);
    LabeledGraph::from_strs(&nodes, &edges)
}

/// Chain `n1 → n2 → n3 → n4` labeled by index, plus the shortcut `n1 → n4`.
pub fn chain_with_shortcut() -> LabeledGraph {
    LabeledGraph::from_strs(
        &[("n1", 1), ("n2", 2), ("n3", 3), ("n4", 4)],
        &[("n1", "n2"), ("n2", "n3"), ("n3", "n4"), ("n1", "n4")],
    )
}

/// Two isolated nodes labeled 1.
pub fn two_points() -> LabeledGraph {
    LabeledGraph::from_strs(&[("x", 1), ("y", 1)], &[])
}

/// [`two_points`] with an apex `z` labeled 2 above both.
pub fn two_points_with_apex() -> LabeledGraph {
    LabeledGraph::from_strs(&[("x", 1), ("y", 1), ("z", 2)], &[("x", "z"), ("y", "z")])
}

fn from_height_table(dim: usize, heights: &[(&[u32], u32)]) -> StandardSet {
    let map: BTreeMap<Point, u32> = heights.iter().map(|(p, h)| (Point(p.to_vec()), *h)).collect();
    StandardSet::from_heights(dim, &map).expect("fixture heights are monotone")
}

/// 15 cells over a 3×3 base; its canonical graph is the diamond.
pub fn diamond_staircase() -> StandardSet {
    from_height_table(
        3,
        &[
            (&[0, 0], 3),
            (&[1, 0], 2),
            (&[2, 0], 2),
            (&[0, 1], 2),
            (&[0, 2], 2),
            (&[1, 1], 1),
            (&[2, 1], 1),
            (&[1, 2], 1),
            (&[2, 2], 1),
        ],
    )
}

/// 10 cells over a base with rows of lengths 4 and 2.
pub fn stacked_staircase() -> StandardSet {
    from_height_table(
        3,
        &[
            (&[0, 0], 3),
            (&[1, 0], 2),
            (&[2, 0], 1),
            (&[3, 0], 1),
            (&[0, 1], 2),
            (&[1, 1], 1),
        ],
    )
}

/// Two of the four C4 decompositions of [`stacked_staircase`], members as 2D cell lists.
pub fn stacked_staircase_decompositions() -> Vec<Vec<Vec<[u32; 2]>>> {
    let square = vec![[0, 0], [1, 0], [0, 1], [1, 1]];
    let column = vec![[0, 0], [0, 1]];
    let row4 = vec![[0, 0], [1, 0], [2, 0], [3, 0]];
    let ell = vec![[0, 0], [1, 0], [2, 0], [3, 0], [0, 1], [1, 1]];
    let row2 = vec![[0, 0], [1, 0]];
    vec![vec![square, column.clone(), row4], vec![ell, column, row2]]
}

/// 9 cells over a 2×2 base with heights 3, 3, 2, 1.
pub fn two_by_two_staircase() -> StandardSet {
    from_height_table(3, &[(&[0, 0], 3), (&[1, 0], 3), (&[0, 1], 2), (&[1, 1], 1)])
}

/// Canonical graph of [`two_by_two_staircase`]: chain labeled 1, 2, 3 with a shortcut.
pub fn two_by_two_canonical_graph() -> LabeledGraph {
    LabeledGraph::from_strs(
        &[("a", 1), ("b", 2), ("c", 3)],
        &[("a", "b"), ("b", "c"), ("a", "c")],
    )
}

/// 13 cells in `ℕ⁴`.
pub fn four_dim_staircase() -> StandardSet {
    from_height_table(
        4,
        &[
            (&[0, 0, 0], 3),
            (&[1, 0, 0], 2),
            (&[0, 1, 0], 2),
            (&[0, 0, 1], 2),
            (&[0, 1, 1], 2),
            (&[1, 1, 0], 1),
            (&[1, 0, 1], 1),
        ],
    )
}

/// Canonical graph of [`four_dim_staircase`]: two 1s fully joined to two 2s, both 2s below a 3.
pub fn four_dim_canonical_graph() -> LabeledGraph {
    LabeledGraph::from_strs(
        &[("p", 1), ("q", 1), ("r", 2), ("s", 2), ("t", 3)],
        &[("p", "r"), ("p", "s"), ("q", "r"), ("q", "s"), ("r", "t"), ("s", "t")],
    )
}

/// The partition 5 + 3 + 2 + 2.
pub fn partition_5322() -> IteratedPartition {
    IteratedPartition::multiset([5, 3, 2, 2].map(IteratedPartition::Atom).to_vec())
}

/// The 2-fold partition {{4,3},{2,1},{5}}.
pub fn nested_partition() -> IteratedPartition {
    let part = |xs: &[u32]| IteratedPartition::multiset(xs.iter().map(|&x| IteratedPartition::Atom(x)).collect());
    IteratedPartition::multiset(vec![part(&[4, 3]), part(&[2, 1]), part(&[5])])
}

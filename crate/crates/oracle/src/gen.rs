//! Random and exhaustive generators of test graphs and staircases.

use rand::Rng;
use stairdec::graph::is_isomorphic;
use stairdec::LabeledGraph;

fn names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("n{i}")).collect()
}

fn build(labels: &[i64], edges: &[(usize, usize)]) -> LabeledGraph {
    let ids = names(labels.len());
    let nodes: Vec<(&str, i64)> = ids.iter().map(String::as_str).zip(labels.iter().copied()).collect();
    let es: Vec<(&str, &str)> = edges.iter().map(|&(a, b)| (ids[a].as_str(), ids[b].as_str())).collect();
    LabeledGraph::from_strs(&nodes, &es)
}

/// A standard graph with `1..=max_nodes` nodes and labels in `0..=max_label`;
/// equal-label edges, including both directions, are allowed.
pub fn random_standard_graph<R: Rng>(rng: &mut R, max_nodes: usize, max_label: i64) -> LabeledGraph {
    let n = rng.gen_range(1..=max_nodes);
    let labels: Vec<i64> = (0..n).map(|_| rng.gen_range(0..=max_label)).collect();
    let density: f64 = rng.gen_range(0.1..0.6);
    let mut edges = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if a != b && labels[a] <= labels[b] && rng.gen_bool(density) {
                edges.push((a, b));
            }
        }
    }
    build(&labels, &edges)
}

/// A DAG with positive labels strictly increasing along every edge.
pub fn random_canonical_dag<R: Rng>(rng: &mut R, max_nodes: usize, max_label: i64) -> LabeledGraph {
    let n = rng.gen_range(1..=max_nodes);
    let labels: Vec<i64> = (0..n).map(|_| rng.gen_range(1..=max_label)).collect();
    let density: f64 = rng.gen_range(0.1..0.7);
    let mut edges = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if labels[a] < labels[b] && rng.gen_bool(density) {
                edges.push((a, b));
            }
        }
    }
    build(&labels, &edges)
}

/// A graph that is not standard: some label is negative or decreases along an edge.
pub fn random_nonstandard_graph<R: Rng>(rng: &mut R, max_nodes: usize, max_label: i64) -> LabeledGraph {
    loop {
        let n = rng.gen_range(1..=max_nodes);
        let labels: Vec<i64> = (0..n).map(|_| rng.gen_range(-1..=max_label)).collect();
        let mut edges = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a != b && rng.gen_bool(0.3) {
                    edges.push((a, b));
                }
            }
        }
        let g = build(&labels, &edges);
        if !g.is_standard() {
            return g;
        }
    }
}

/// Every canonical, transitive graph with at most `max_nodes` nodes, labels at
/// most `max_label`, and a unique maximal node that all other nodes point to;
/// one representative per isomorphism class.
pub fn unique_max_family(max_nodes: usize, max_label: i64) -> Vec<LabeledGraph> {
    let mut out: Vec<LabeledGraph> = Vec::new();
    for n in 1..=max_nodes {
        for top in 1..=max_label {
            // Non-decreasing labels for the other nodes, each below `top`.
            let mut lower_labels = Vec::new();
            non_decreasing(n - 1, 1, top - 1, &mut Vec::new(), &mut lower_labels);
            for lower in lower_labels {
                let mut labels = lower.clone();
                labels.push(top);
                let t = n - 1;
                let pairs: Vec<(usize, usize)> = (0..t)
                    .flat_map(|a| (0..t).map(move |b| (a, b)))
                    .filter(|&(a, b)| labels[a] < labels[b])
                    .collect();
                for mask in 0u64..1 << pairs.len() {
                    let mut edges: Vec<(usize, usize)> = (0..t).map(|a| (a, t)).collect();
                    edges.extend(pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p));
                    let transitive = edges.iter().all(|&(a, b)| {
                        edges.iter().filter(|&&(x, _)| x == b).all(|&(_, c)| edges.contains(&(a, c)))
                    });
                    if !transitive {
                        continue;
                    }
                    let g = build(&labels, &edges);
                    if !out.iter().any(|h| is_isomorphic(h, &g)) {
                        out.push(g);
                    }
                }
            }
        }
    }
    out
}

fn non_decreasing(len: usize, lo: i64, hi: i64, acc: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    if acc.len() == len {
        out.push(acc.clone());
        return;
    }
    let start = acc.last().copied().unwrap_or(lo);
    for x in start..=hi {
        acc.push(x);
        non_decreasing(len, lo, hi, acc, out);
        acc.pop();
    }
}

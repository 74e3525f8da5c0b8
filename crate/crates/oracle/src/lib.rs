//! Exhaustive reference enumerators.
//!
//! Everything here works from the raw definitions: node subsets are scanned
//! as bitmasks, staircase cells are found by scanning a bounding box, and
//! multisets are built by ordered recursion with multiplicity bounds. Only the
//! data types of `stairdec` are used, none of its algorithms.

use std::collections::{BTreeMap, BTreeSet};

use stairdec::{LabeledGraph, StandardSet};
use thiserror::Error;

pub mod gen;

/// Canonical encoding of a graph decomposition: sorted list of sorted id lists.
pub type Encoding = Vec<Vec<String>>;

/// A multiset of cell sets, sorted.
pub type CellMultiset = Vec<BTreeSet<Vec<u32>>>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("input too large for exhaustive search: {0}")]
    TooLarge(String),
}

/// Size caps for the exhaustive searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_nodes: usize,
    pub max_label: i64,
    pub max_cells: usize,
    pub max_dim: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_nodes: 8,
            max_label: 4,
            max_cells: 20,
            max_dim: 4,
        }
    }
}

impl Limits {
    /// Defaults, with node and cell caps taken from `STAIRDEC_MAX_BRUTE` when set.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Some(cap) = std::env::var("STAIRDEC_MAX_BRUTE").ok().and_then(|v| v.parse().ok()) {
            limits.max_nodes = cap;
            limits.max_cells = cap;
        }
        limits
    }

    fn check_graph(&self, g: &LabeledGraph) -> Result<(), OracleError> {
        if g.node_count() > self.max_nodes || g.node_count() > 20 {
            return Err(OracleError::TooLarge(format!("{} nodes", g.node_count())));
        }
        if g.labels().iter().any(|&l| l > self.max_label) {
            return Err(OracleError::TooLarge(format!("label above {}", self.max_label)));
        }
        Ok(())
    }
}

fn mask_contains(mask: u32, i: usize) -> bool {
    mask >> i & 1 == 1
}

fn edges(g: &LabeledGraph) -> Vec<(usize, usize)> {
    g.edges().collect()
}

fn standard(labels: &[i64], edges: &[(usize, usize)]) -> bool {
    labels.iter().all(|&l| l >= 0) && edges.iter().all(|&(a, b)| labels[a] <= labels[b])
}

fn indicator(mask: u32, n: usize) -> Vec<i64> {
    (0..n).map(|i| i64::from(mask_contains(mask, i))).collect()
}

fn encode(g: &LabeledGraph, masks: &[u32]) -> Vec<Vec<String>> {
    let mut enc: Vec<Vec<String>> = masks
        .iter()
        .map(|&m| (0..g.node_count()).filter(|&i| mask_contains(m, i)).map(|i| g.id(i).to_string()).collect())
        .collect();
    enc.sort();
    enc
}

/// Supports satisfying the component definition literally: nonempty, a
/// standard 0-1 labeling, and leaving a standard remainder.
fn component_masks(g: &LabeledGraph) -> Vec<u32> {
    let n = g.node_count();
    let es = edges(g);
    (1u32..1 << n)
        .filter(|&m| {
            let h = indicator(m, n);
            let rest: Vec<i64> = g.labels().iter().zip(&h).map(|(a, b)| a - b).collect();
            standard(&h, &es) && standard(&rest, &es)
        })
        .collect()
}

/// All standard components of `g`, as sorted id lists.
pub fn brute_components(g: &LabeledGraph) -> Result<Vec<Vec<String>>, OracleError> {
    Limits::from_env().check_graph(g)?;
    let mut out: Vec<Vec<String>> = component_masks(g).iter().map(|&m| encode(g, &[m]).remove(0)).collect();
    out.sort();
    Ok(out)
}

/// All standard decompositions of `g`.
pub fn brute_decompositions(g: &LabeledGraph) -> Result<BTreeSet<Encoding>, OracleError> {
    brute_decompositions_with(g, Limits::from_env())
}

pub fn brute_decompositions_with(g: &LabeledGraph, limits: Limits) -> Result<BTreeSet<Encoding>, OracleError> {
    limits.check_graph(g)?;
    let n = g.node_count();
    let es = edges(g);
    // Every nonzero upward-closed support is a candidate member.
    let candidates: Vec<u32> = (1u32..1 << n)
        .filter(|&m| standard(&indicator(m, n), &es))
        .collect();
    let mut out = BTreeSet::new();
    if g.labels().iter().any(|&l| l < 0) {
        return Ok(out);
    }
    // coverage[j]: union of candidates j.. (for the dead-end test).
    let mut coverage = vec![0u32; candidates.len() + 1];
    for j in (0..candidates.len()).rev() {
        coverage[j] = coverage[j + 1] | candidates[j];
    }

    #[allow(clippy::too_many_arguments)]
    fn go(
        j: usize,
        remaining: &mut Vec<i64>,
        candidates: &[u32],
        coverage: &[u32],
        chosen: &mut Vec<u32>,
        g: &LabeledGraph,
        out: &mut BTreeSet<Encoding>,
    ) {
        let n = remaining.len();
        let open = (0..n).filter(|&i| remaining[i] > 0).fold(0u32, |m, i| m | 1 << i);
        if open == 0 {
            out.insert(encode(g, chosen));
            return;
        }
        if j == candidates.len() || open & !coverage[j] != 0 {
            return;
        }
        let c = candidates[j];
        let bound = (0..n).filter(|&i| mask_contains(c, i)).map(|i| remaining[i]).min().unwrap_or(0);
        for mult in (0..=bound).rev() {
            for _ in 0..mult {
                chosen.push(c);
            }
            for i in (0..n).filter(|&i| mask_contains(c, i)) {
                remaining[i] -= mult;
            }
            go(j + 1, remaining, candidates, coverage, chosen, g, out);
            for i in (0..n).filter(|&i| mask_contains(c, i)) {
                remaining[i] += mult;
            }
            for _ in 0..mult {
                chosen.pop();
            }
        }
    }

    let mut remaining = g.labels().to_vec();
    go(0, &mut remaining, &candidates, &coverage, &mut Vec::new(), g, &mut out);
    Ok(out)
}

/// All standard `v`-decompositions of `g`, checked against the four defining conditions.
pub fn brute_node_decompositions(g: &LabeledGraph, v: &str) -> Result<BTreeSet<Encoding>, OracleError> {
    Limits::from_env().check_graph(g)?;
    let es = edges(g);
    let Some(vi) = g.index_of(v) else {
        return Ok(BTreeSet::new());
    };
    let l = g.label(vi);
    let mut out = BTreeSet::new();
    if l <= 0 {
        return Ok(out);
    }
    let candidates: Vec<u32> = component_masks(g)
        .into_iter()
        .filter(|&m| mask_contains(m, vi))
        .collect();

    fn go(
        start: usize,
        left: i64,
        candidates: &[u32],
        chosen: &mut Vec<u32>,
        g: &LabeledGraph,
        es: &[(usize, usize)],
        out: &mut BTreeSet<Encoding>,
    ) {
        if left == 0 {
            let n = g.node_count();
            let mut rest = g.labels().to_vec();
            for &m in chosen.iter() {
                for (i, r) in rest.iter_mut().enumerate().take(n) {
                    *r -= i64::from(mask_contains(m, i));
                }
            }
            if standard(&rest, es) {
                out.insert(encode(g, chosen));
            }
            return;
        }
        for j in start..candidates.len() {
            chosen.push(candidates[j]);
            go(j, left - 1, candidates, chosen, g, es, out);
            chosen.pop();
        }
    }

    go(0, l, &candidates, &mut Vec::new(), g, &es, &mut out);
    Ok(out)
}

/// Reachability pairs of `g` by Floyd–Warshall, as id pairs.
pub fn brute_closure(g: &LabeledGraph) -> BTreeSet<(String, String)> {
    let n = g.node_count();
    let mut reach = vec![vec![false; n]; n];
    for (a, b) in g.edges() {
        reach[a][b] = true;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if reach[i][k] && reach[k][j] {
                    reach[i][j] = true;
                }
            }
        }
    }
    let mut out = BTreeSet::new();
    for i in 0..n {
        for j in 0..n {
            if i != j && reach[i][j] {
                out.insert((g.id(i).to_string(), g.id(j).to_string()));
            }
        }
    }
    out
}

/// Cells of a staircase by scanning the box spanned by its axis corners.
pub fn brute_cells(s: &StandardSet) -> BTreeSet<Vec<u32>> {
    let d = s.dim();
    let corners: Vec<Vec<u32>> = s.corners().iter().map(|c| c.coords().to_vec()).collect();
    let extent: Vec<u32> = (0..d)
        .map(|i| {
            corners
                .iter()
                .filter(|c| c.iter().enumerate().all(|(j, &x)| j == i || x == 0))
                .map(|c| c[i])
                .min()
                .expect("finite set has an axis corner")
        })
        .collect();
    let mut out = BTreeSet::new();
    let mut p = vec![0u32; d];
    if extent.contains(&0) {
        return out;
    }
    loop {
        if !corners.iter().any(|c| c.iter().zip(&p).all(|(a, b)| a <= b)) {
            out.insert(p.clone());
        }
        let mut i = 0;
        loop {
            if i == d {
                return out;
            }
            p[i] += 1;
            if p[i] < extent[i] {
                break;
            }
            p[i] = 0;
            i += 1;
        }
    }
}

/// All downward-closed subsets of `universe` (given downward closed) with at most `max` cells.
fn downsets(universe: &BTreeSet<Vec<u32>>, max: usize) -> Vec<BTreeSet<Vec<u32>>> {
    // Lexicographic order is a linear extension of the product order.
    let order: Vec<&Vec<u32>> = universe.iter().collect();
    let mut out = Vec::new();

    fn go(
        start: usize,
        order: &[&Vec<u32>],
        current: &mut BTreeSet<Vec<u32>>,
        max: usize,
        out: &mut Vec<BTreeSet<Vec<u32>>>,
    ) {
        out.push(current.clone());
        if current.len() == max {
            return;
        }
        for j in start..order.len() {
            let p = order[j];
            let addable = (0..p.len()).all(|i| {
                if p[i] == 0 {
                    return true;
                }
                let mut q = p.clone();
                q[i] -= 1;
                current.contains(&q)
            });
            if addable {
                current.insert(p.clone());
                go(j + 1, order, current, max, out);
                current.remove(p);
            }
        }
    }

    go(0, &order, &mut BTreeSet::new(), max, &mut out);
    out
}

/// All staircases of exactly `n` cells in `ℕ^d`, as cell sets.
pub fn brute_staircases(n: usize, d: usize) -> Vec<BTreeSet<Vec<u32>>> {
    let mut universe = BTreeSet::new();
    let mut p = vec![0u32; d];
    // Every cell of an n-cell staircase has coordinate sum below n.
    loop {
        if p.iter().map(|&x| x as usize).sum::<usize>() < n {
            universe.insert(p.clone());
        }
        let mut i = 0;
        loop {
            if i == d {
                return downsets(&universe, n).into_iter().filter(|s| s.len() == n).collect();
            }
            p[i] += 1;
            if (p[i] as usize) < n.max(1) {
                break;
            }
            p[i] = 0;
            i += 1;
        }
    }
}

/// All C4 decompositions of `s`, as multisets of base cell sets.
pub fn brute_c4_decompositions(s: &StandardSet) -> Result<BTreeSet<CellMultiset>, OracleError> {
    let limits = Limits::from_env();
    let cells = brute_cells(s);
    if cells.len() > limits.max_cells || s.dim() > limits.max_dim {
        return Err(OracleError::TooLarge(format!("{} cells in dimension {}", cells.len(), s.dim())));
    }
    let mut heights: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
    for c in &cells {
        *heights.entry(c[..c.len() - 1].to_vec()).or_default() += 1;
    }
    let base: BTreeSet<Vec<u32>> = heights.keys().cloned().collect();
    let candidates: Vec<BTreeSet<Vec<u32>>> = downsets(&base, base.len())
        .into_iter()
        .filter(|d| !d.is_empty())
        .collect();
    let mut out = BTreeSet::new();

    fn go(
        j: usize,
        remaining: &mut BTreeMap<Vec<u32>, i64>,
        candidates: &[BTreeSet<Vec<u32>>],
        chosen: &mut Vec<usize>,
        out: &mut BTreeSet<CellMultiset>,
    ) {
        if remaining.values().all(|&h| h == 0) {
            let mut ms: CellMultiset = chosen.iter().map(|&i| candidates[i].clone()).collect();
            ms.sort();
            out.insert(ms);
            return;
        }
        if j == candidates.len() {
            return;
        }
        let c = &candidates[j];
        let bound = c.iter().map(|p| remaining[p]).min().unwrap_or(0);
        for mult in (0..=bound).rev() {
            for p in c {
                *remaining.get_mut(p).expect("base cell") -= mult;
            }
            for _ in 0..mult {
                chosen.push(j);
            }
            go(j + 1, remaining, candidates, chosen, out);
            for _ in 0..mult {
                chosen.pop();
            }
            for p in c {
                *remaining.get_mut(p).expect("base cell") += mult;
            }
        }
    }

    go(0, &mut heights, &candidates, &mut Vec::new(), &mut out);
    Ok(out)
}

/// Canonical graph of a staircase from its cells: isohypse components by
/// flood fill, node ids `h@<least cell>`, edges between adjacent cells.
pub fn brute_canonical_graph(s: &StandardSet) -> LabeledGraph {
    let cells = brute_cells(s);
    let mut heights: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
    for c in &cells {
        *heights.entry(c[..c.len() - 1].to_vec()).or_default() += 1;
    }
    let neighbors = |p: &Vec<u32>| {
        let mut out = Vec::new();
        for i in 0..p.len() {
            let mut q = p.clone();
            q[i] += 1;
            out.push(q);
            if p[i] > 0 {
                let mut q = p.clone();
                q[i] -= 1;
                out.push(q);
            }
        }
        out
    };
    let mut comp: BTreeMap<Vec<u32>, String> = BTreeMap::new();
    for (p, &h) in &heights {
        if comp.contains_key(p) {
            continue;
        }
        let name = format!("{h}@{p:?}").replace(' ', "");
        let mut stack = vec![p.clone()];
        while let Some(x) = stack.pop() {
            if comp.contains_key(&x) {
                continue;
            }
            comp.insert(x.clone(), name.clone());
            for y in neighbors(&x) {
                if heights.get(&y) == Some(&h) && !comp.contains_key(&y) {
                    stack.push(y);
                }
            }
        }
    }
    let nodes: BTreeMap<String, i64> = comp.iter().map(|(p, name)| (name.clone(), heights[p])).collect();
    let mut es = BTreeSet::new();
    for p in heights.keys() {
        for i in 0..p.len() {
            let mut q = p.clone();
            q[i] += 1;
            if heights.contains_key(&q) && comp[&q] != comp[p] {
                es.insert((comp[&q].clone(), comp[p].clone()));
            }
        }
    }
    let nodes: Vec<(&str, i64)> = nodes.iter().map(|(k, &v)| (k.as_str(), v)).collect();
    let es: Vec<(&str, &str)> = es.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    LabeledGraph::from_strs(&nodes, &es)
}

/// Number of partitions of `n`, by the classic largest-part recursion.
pub fn partition_count(n: usize) -> u64 {
    fn p(n: usize, max: usize) -> u64 {
        if n == 0 {
            return 1;
        }
        (1..=max.min(n)).map(|k| p(n - k, k)).sum()
    }
    p(n, n)
}

/// Number of `q`-fold iterated partitions of `n`, via the Euler transform of
/// the counts one level down.
pub fn iterated_partition_count(n: usize, q: usize) -> u64 {
    // a[k] = number of (q-1)-fold objects of total k.
    let mut a = vec![1u64; n + 1];
    a[0] = 0;
    for _ in 0..q {
        // b = coefficients of prod_k (1 - x^k)^(-a[k]), dropping the constant term.
        let mut b = vec![0u64; n + 1];
        b[0] = 1;
        for k in 1..=n {
            for _ in 0..a[k] {
                for t in k..=n {
                    b[t] += b[t - k];
                }
            }
        }
        b[0] = 0;
        a = b;
    }
    a[n]
}

#[cfg(test)]
mod tests {
    use super::*;
    use stairdec::fixtures;

    #[test]
    fn diamond_decompositions() {
        let ds = brute_decompositions(&fixtures::diamond()).unwrap();
        assert_eq!(ds.len(), 2);
    }

    #[test]
    fn trivial_graphs() {
        let zero = LabeledGraph::from_strs(&[("x", 0)], &[]);
        assert_eq!(brute_decompositions(&zero).unwrap(), BTreeSet::from([vec![]]));
        let bad = LabeledGraph::from_strs(&[("a", 2), ("b", 1)], &[("a", "b")]);
        assert!(brute_decompositions(&bad).unwrap().is_empty());
        let big = fixtures::star(9);
        assert!(matches!(brute_decompositions(&big), Err(OracleError::TooLarge(_))));
    }

    #[test]
    fn node_decompositions() {
        assert_eq!(brute_node_decompositions(&fixtures::star(2), "x01").unwrap().len(), 2);
        assert_eq!(brute_node_decompositions(&fixtures::chain(3), "c03").unwrap().len(), 1);
        let z = LabeledGraph::from_strs(&[("x", 0), ("y", 1)], &[]);
        assert!(brute_node_decompositions(&z, "x").unwrap().is_empty());
    }

    #[test]
    fn staircase_scans() {
        assert_eq!(brute_cells(&fixtures::four_dim_staircase()).len(), 13);
        assert_eq!(brute_cells(&StandardSet::empty(3)).len(), 0);
        let counts: Vec<usize> = (1..=5).map(|n| brute_staircases(n, 2).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7]);
        assert_eq!(brute_c4_decompositions(&fixtures::diamond_staircase()).unwrap().len(), 2);
        assert_eq!(brute_c4_decompositions(&StandardSet::empty(2)).unwrap().len(), 1);
    }

    #[test]
    fn counts() {
        assert_eq!(partition_count(5), 7);
        assert_eq!(iterated_partition_count(5, 1), 7);
        assert_eq!(iterated_partition_count(3, 2), 6);
        assert_eq!(iterated_partition_count(4, 0), 1);
    }

    #[test]
    fn unique_max_family_size() {
        let family = gen::unique_max_family(5, 4);
        assert!(family.len() >= 100, "{}", family.len());
        println!("family size {}", family.len());
    }
}

//! Enumeration of standard components, node decompositions and standard
//! decompositions, with recursion counters for the output-sensitive bound.

use num_bigint::BigUint;
use num_rational::Ratio;

use crate::error::DecomposeError;
use crate::graph::{is_component, labels_standard, Decomposition, LabeledGraph, NodeId, NodeSet, Structure};

/// The components of a graph that give the pivot label 1, maximal one first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentList {
    pub pivot: NodeId,
    pub pivot_label: i64,
    pub items: Vec<NodeSet>,
}

impl ComponentList {
    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }
}

/// Counters recorded for one node decomposition call.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationStats {
    pub pivot: NodeId,
    pub pivot_label: i64,
    pub tau_calls: u64,
    pub decomposition_count: u64,
    pub component_count: u64,
}

impl EnumerationStats {
    /// The recursion tree bound `2d(k+1)`.
    pub fn bound(&self) -> u64 {
        2 * self.decomposition_count * (self.component_count + 1)
    }

    pub fn within_bound(&self) -> bool {
        self.tau_calls <= self.bound()
    }
}

/// All decompositions of a graph plus the counters of every node decomposition call.
#[derive(Clone, Debug, Default)]
pub struct Enumeration {
    pub decompositions: Vec<Decomposition>,
    pub stats: Vec<EnumerationStats>,
}

fn resolve(g: &LabeledGraph, v: &str) -> Result<usize, DecomposeError> {
    g.index_of(v).ok_or_else(|| DecomposeError::UnknownNode(v.to_string()))
}

/// Node of minimal positive label, least id among ties.
pub fn pivot(labels: &[i64]) -> Option<usize> {
    (0..labels.len())
        .filter(|&i| labels[i] > 0)
        .min_by_key(|&i| (labels[i], i))
}

/// Implication graph whose closed sets are exactly the supports `S` such that
/// the indicator of `S` is a standard 0-1 graph and `labels - S` is standard:
/// `a ∈ S ⇒ b ∈ S` for each edge, and `b ∈ S ⇒ a ∈ S` for equal-label edges.
struct Implications {
    forward: Vec<Vec<usize>>,
    backward: Vec<Vec<usize>>,
}

impl Implications {
    fn new(s: &Structure, labels: &[i64]) -> Self {
        let n = s.node_count();
        let mut forward = vec![Vec::new(); n];
        let mut backward = vec![Vec::new(); n];
        for (a, b) in s.edges() {
            forward[a].push(b);
            backward[b].push(a);
            if labels[a] == labels[b] {
                forward[b].push(a);
                backward[a].push(b);
            }
        }
        Implications { forward, backward }
    }

    fn closure(adj: &[Vec<usize>], start: usize, into: &mut NodeSet) -> Vec<usize> {
        let mut added = Vec::new();
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            if into.contains(x) {
                continue;
            }
            into.insert(x);
            added.push(x);
            stack.extend_from_slice(&adj[x]);
        }
        added
    }
}

/// Supports of all components of `labels` containing `v`, in no particular order.
fn components_containing(s: &Structure, labels: &[i64], v: usize) -> Vec<NodeSet> {
    let n = s.node_count();
    let imp = Implications::new(s, labels);
    let mut inside = NodeSet::empty(n);
    let mut outside = NodeSet::empty(n);
    for z in (0..n).filter(|&z| labels[z] <= 0) {
        Implications::closure(&imp.backward, z, &mut outside);
    }
    Implications::closure(&imp.forward, v, &mut inside);
    let mut out = Vec::new();
    if !inside.is_disjoint(&outside) {
        return out;
    }

    // Every consistent partial assignment extends to a leaf, so no branch is dead.
    fn branch(
        imp: &Implications,
        next: usize,
        inside: &mut NodeSet,
        outside: &mut NodeSet,
        out: &mut Vec<NodeSet>,
    ) {
        let n = inside.universe();
        let Some(x) = (next..n).find(|&x| !inside.contains(x) && !outside.contains(x)) else {
            out.push(inside.clone());
            return;
        };
        let mut trial = inside.clone();
        let added = Implications::closure(&imp.forward, x, &mut trial);
        if added.iter().all(|&y| !outside.contains(y)) {
            branch(imp, x + 1, &mut trial, outside, out);
        }
        let mut trial = outside.clone();
        let added = Implications::closure(&imp.backward, x, &mut trial);
        if added.iter().all(|&y| !inside.contains(y)) {
            branch(imp, x + 1, inside, &mut trial, out);
        }
    }

    branch(&imp, 0, &mut inside, &mut outside, &mut out);
    out
}

/// Maximal component first, then the others in canonical order.
fn ordered_components(s: &Structure, labels: &[i64], v: usize) -> Vec<NodeSet> {
    let n = s.node_count();
    let maximal = NodeSet::from_indices(n, (0..n).filter(|&i| labels[i] > 0));
    let mut rest: Vec<NodeSet> = components_containing(s, labels, v)
        .into_iter()
        .filter(|c| *c != maximal)
        .collect();
    rest.sort();
    let mut items = Vec::with_capacity(rest.len() + 1);
    items.push(maximal);
    items.extend(rest);
    items
}

fn check_pivot(g: &LabeledGraph, v: usize) -> Result<(), DecomposeError> {
    if !g.is_standard() {
        return Err(DecomposeError::NotStandard);
    }
    if g.label(v) <= 0 {
        return Err(DecomposeError::ZeroPivot(g.id(v).clone()));
    }
    Ok(())
}

/// The standard components of `g` that give `v` the label 1.
pub fn unit_components_at(g: &LabeledGraph, v: &str) -> Result<ComponentList, DecomposeError> {
    let vi = resolve(g, v)?;
    check_pivot(g, vi)?;
    let items = ordered_components(g.structure(), g.labels(), vi);
    debug_assert!(items.iter().all(|c| c.contains(vi) && is_component(g, c)));
    Ok(ComponentList {
        pivot: g.id(vi).clone(),
        pivot_label: g.label(vi),
        items,
    })
}

/// The pruned recursion over `(F, i)`: branch on whether `H_i` is used again.
struct Tau<'a> {
    structure: &'a Structure,
    items: &'a [NodeSet],
    v: usize,
    calls: u64,
    results: Vec<Vec<usize>>,
}

impl Tau<'_> {
    /// `i` is 1-based and always at least 1; `acc` holds chosen item indices.
    fn run(&mut self, f: &mut [i64], i: usize, acc: &mut Vec<usize>) {
        self.calls += 1;
        if !labels_standard(self.structure, f) {
            return;
        }
        if f[self.v] == 0 {
            self.results.push(acc.clone());
            return;
        }
        if i > 1 {
            self.run(f, i - 1, acc);
        }
        let item = &self.items[i - 1];
        for x in item.iter() {
            f[x] -= 1;
        }
        acc.push(i - 1);
        self.run(f, i, acc);
        acc.pop();
        for x in item.iter() {
            f[x] += 1;
        }
    }
}

/// Multisets of component indices (into `items`) forming the `v`-decompositions.
fn tau_enumerate(s: &Structure, labels: &[i64], items: &[NodeSet], v: usize) -> (Vec<Vec<usize>>, u64) {
    let mut tau = Tau {
        structure: s,
        items,
        v,
        calls: 0,
        results: Vec::new(),
    };
    let mut f = labels.to_vec();
    tau.run(&mut f, items.len(), &mut Vec::new());
    (tau.results, tau.calls)
}

fn to_decomposition(items: &[NodeSet], chosen: &[usize]) -> Decomposition {
    Decomposition::new(chosen.iter().map(|&i| items[i].clone()).collect())
}

/// All standard `v`-decompositions; `v` must carry the minimal positive label.
pub fn node_decompositions(
    g: &LabeledGraph,
    v: &str,
) -> Result<(Vec<Decomposition>, EnumerationStats), DecomposeError> {
    let vi = resolve(g, v)?;
    check_pivot(g, vi)?;
    if g.labels().iter().any(|&l| l > 0 && l < g.label(vi)) {
        return Err(DecomposeError::NotMinimalPivot(g.id(vi).clone()));
    }
    let items = ordered_components(g.structure(), g.labels(), vi);
    let (chosen, calls) = tau_enumerate(g.structure(), g.labels(), &items, vi);
    let mut out: Vec<Decomposition> = chosen.iter().map(|c| to_decomposition(&items, c)).collect();
    out.sort();
    let stats = EnumerationStats {
        pivot: g.id(vi).clone(),
        pivot_label: g.label(vi),
        tau_calls: calls,
        decomposition_count: out.len() as u64,
        component_count: items.len() as u64,
    };
    Ok((out, stats))
}

/// Every standard decomposition of `g`, sorted; empty if `g` is not standard.
pub fn decompositions(g: &LabeledGraph) -> Vec<Decomposition> {
    decompositions_with_stats(g).decompositions
}

/// As [`decompositions`], recording the counters of each node decomposition call.
pub fn decompositions_with_stats(g: &LabeledGraph) -> Enumeration {
    let mut e = Enumeration::default();
    if !g.is_standard() {
        return e;
    }
    let mut prefix = Vec::new();
    recurse(g.structure(), &mut g.labels().to_vec(), &mut prefix, &mut e);
    e.decompositions.sort();
    debug_assert!(e.decompositions.windows(2).all(|w| w[0] != w[1]));
    debug_assert!(e.decompositions.iter().all(|d| d.is_decomposition_of(g)));
    e
}

fn recurse(s: &Structure, labels: &mut [i64], prefix: &mut Vec<NodeSet>, e: &mut Enumeration) {
    let Some(v) = pivot(labels) else {
        e.decompositions.push(Decomposition::new(prefix.clone()));
        return;
    };
    let items = ordered_components(s, labels, v);
    let (chosen, calls) = tau_enumerate(s, labels, &items, v);
    e.stats.push(EnumerationStats {
        pivot: s.ids()[v].clone(),
        pivot_label: labels[v],
        tau_calls: calls,
        decomposition_count: chosen.len() as u64,
        component_count: items.len() as u64,
    });
    for c in &chosen {
        let depth = prefix.len();
        for &i in c {
            for x in items[i].iter() {
                labels[x] -= 1;
            }
            prefix.push(items[i].clone());
        }
        recurse(s, labels, prefix, e);
        for &i in c {
            for x in items[i].iter() {
                labels[x] += 1;
            }
        }
        prefix.truncate(depth);
    }
}

/// Counting bounds on the `v`-decompositions of a standard graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecomBounds {
    /// Number of components giving `v` the label 1.
    pub k: u64,
    /// Label of `v`.
    pub l: u64,
    pub lower: Ratio<u64>,
    pub upper: BigUint,
    pub actual: u64,
    pub minimal_pivot: bool,
}

impl DecomBounds {
    /// `⌈k/l⌉ ≤ actual ≤ C(k+l-1, l)`, and `actual ≥ k` for a minimal pivot.
    pub fn holds(&self) -> bool {
        let lower_ok = self.lower.ceil().to_integer() <= self.actual;
        let upper_ok = BigUint::from(self.actual) <= self.upper;
        let minimal_ok = !self.minimal_pivot || self.actual >= self.k;
        lower_ok && upper_ok && minimal_ok
    }
}

/// Binomial coefficient as an exact big integer.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let k = k.min(n - k);
    let mut acc = BigUint::from(1u32);
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// Computes `k`, `l`, the bounds and the actual number of `v`-decompositions.
///
/// For a pivot that is not of minimal positive label the same recursion is
/// used; cutting non-standard branches stays sound, only the call-count
/// guarantee is lost.
pub fn check_decom_bounds(g: &LabeledGraph, v: &str) -> Result<DecomBounds, DecomposeError> {
    let vi = resolve(g, v)?;
    check_pivot(g, vi)?;
    let items = ordered_components(g.structure(), g.labels(), vi);
    let (chosen, _) = tau_enumerate(g.structure(), g.labels(), &items, vi);
    let k = items.len() as u64;
    let l = g.label(vi) as u64;
    Ok(DecomBounds {
        k,
        l,
        lower: Ratio::new(k, l),
        upper: binomial(k + l - 1, l),
        actual: chosen.len() as u64,
        minimal_pivot: pivot(g.labels()).map(|p| g.label(p)) == Some(g.label(vi)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diamond() -> LabeledGraph {
        LabeledGraph::from_strs(
            &[("b", 1), ("l", 2), ("r", 2), ("t", 3)],
            &[("b", "l"), ("b", "r"), ("l", "t"), ("r", "t")],
        )
    }

    fn star(n: usize) -> LabeledGraph {
        let names: Vec<String> = (1..=n).map(|i| format!("x{i:02}")).collect();
        let mut nodes: Vec<(&str, i64)> = names.iter().map(|s| (s.as_str(), 1)).collect();
        nodes.push(("y", 2));
        let edges: Vec<(&str, &str)> = names.iter().map(|s| (s.as_str(), "y")).collect();
        LabeledGraph::from_strs(&nodes, &edges)
    }

    #[test]
    fn diamond_has_two_decompositions() {
        let g = diamond();
        let ds = decompositions(&g);
        let enc: Vec<_> = ds.iter().map(|d| d.encoding(&g)).collect();
        let s = |v: &[&str]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
        assert_eq!(
            enc,
            vec![
                vec![s(&["b", "l", "r", "t"]), s(&["l", "r", "t"]), s(&["t"])],
                vec![s(&["b", "l", "r", "t"]), s(&["l", "t"]), s(&["r", "t"])],
            ]
        );
    }

    #[test]
    fn star_counts() {
        for n in 1..=6 {
            let g = star(n);
            assert_eq!(unit_components_at(&g, "y").unwrap().len(), 1 << n);
            assert_eq!(decompositions(&g).len(), 1 << (n - 1));
        }
        let (nd, _) = node_decompositions(&star(2), "x01").unwrap();
        assert_eq!(nd.len(), 2);
    }

    #[test]
    fn pivot_contracts() {
        let g = diamond();
        assert!(matches!(node_decompositions(&g, "t"), Err(DecomposeError::NotMinimalPivot(_))));
        let z = LabeledGraph::from_strs(&[("x", 0)], &[]);
        assert!(matches!(node_decompositions(&z, "x"), Err(DecomposeError::ZeroPivot(_))));
        let bad = LabeledGraph::from_strs(&[("a", 2), ("b", 1)], &[("a", "b")]);
        assert!(matches!(unit_components_at(&bad, "a"), Err(DecomposeError::NotStandard)));
    }

    #[test]
    fn trivial_graphs() {
        let empty = LabeledGraph::from_strs(&[], &[]);
        assert_eq!(decompositions(&empty), vec![Decomposition::empty()]);
        let zero = LabeledGraph::from_strs(&[("x", 0)], &[]);
        assert_eq!(decompositions(&zero), vec![Decomposition::empty()]);
        let bad = LabeledGraph::from_strs(&[("a", 2), ("b", 1)], &[("a", "b")]);
        assert!(decompositions(&bad).is_empty());
        let single = LabeledGraph::from_strs(&[("x", 1)], &[]);
        assert_eq!(unit_components_at(&single, "x").unwrap().items.len(), 1);
    }

    #[test]
    fn single_node_call_count_within_bound() {
        let g = LabeledGraph::from_strs(&[("x", 3)], &[]);
        let (ds, stats) = node_decompositions(&g, "x").unwrap();
        assert_eq!(ds.len(), 1);
        assert!(stats.within_bound(), "{stats:?}");
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigUint::from(10u32));
        assert_eq!(binomial(3, 0), BigUint::from(1u32));
        assert_eq!(binomial(2, 3), BigUint::from(0u32));
    }
}

//! Decomposition-preserving rewrites of labeled graphs and the maps that
//! transport decompositions back to the original graph.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::GraphError;
use crate::graph::{Decomposition, LabeledGraph, NodeId, NodeSet};

/// Original node to the node that represents it; `None` for deleted nodes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodeMap {
    pub forward: BTreeMap<NodeId, Option<NodeId>>,
}

impl NodeMap {
    pub fn identity(g: &LabeledGraph) -> Self {
        NodeMap {
            forward: g.ids().iter().map(|id| (id.clone(), Some(id.clone()))).collect(),
        }
    }

    pub fn image(&self, id: &NodeId) -> Option<&NodeId> {
        self.forward.get(id).and_then(Option::as_ref)
    }

    pub fn is_identity(&self) -> bool {
        self.forward.iter().all(|(k, v)| v.as_ref() == Some(k))
    }
}

/// A canonical graph together with the map from the graph it came from.
#[derive(Clone, Debug)]
pub struct Canonicalization {
    pub graph: LabeledGraph,
    pub map: NodeMap,
}

impl Canonicalization {
    /// Pulls a decomposition of the canonical graph back to `original`.
    pub fn lift(&self, d: &Decomposition, original: &LabeledGraph) -> Decomposition {
        lift_decomposition_from_canonical(d, &self.graph, &self.map, original)
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Contracts equal-label edges and deletes zero-labeled nodes.
///
/// Each class is named by its least original id.
pub fn canonicalize(g: &LabeledGraph) -> Result<Canonicalization, GraphError> {
    if !g.is_standard() {
        return Err(GraphError::NotStandard);
    }
    let n = g.node_count();
    let mut parent: Vec<usize> = (0..n).collect();
    for (a, b) in g.edges() {
        if g.label(a) == g.label(b) {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            // Indices follow id order, so the smaller root carries the least id.
            parent[ra.max(rb)] = ra.min(rb);
        }
    }
    let roots: Vec<usize> = (0..n).map(|i| find(&mut parent, i)).collect();
    let mut forward = BTreeMap::new();
    let mut nodes = BTreeMap::new();
    for i in 0..n {
        let r = roots[i];
        if g.label(r) > 0 {
            forward.insert(g.id(i).clone(), Some(g.id(r).clone()));
            nodes.insert(g.id(r).clone(), g.label(r));
        } else {
            forward.insert(g.id(i).clone(), None);
        }
    }
    let edges: BTreeSet<(NodeId, NodeId)> = g
        .edges()
        .filter(|&(a, b)| roots[a] != roots[b] && g.label(a) > 0)
        .map(|(a, b)| (g.id(roots[a]).clone(), g.id(roots[b]).clone()))
        .collect();
    let graph = LabeledGraph::new(nodes, edges).expect("contraction of a well-formed graph");
    Ok(Canonicalization {
        graph,
        map: NodeMap { forward },
    })
}

/// Whether `g` is standard, acyclic, positively labeled and strictly increasing along edges.
pub fn is_canonical(g: &LabeledGraph) -> bool {
    // Strict increase along edges rules out cycles.
    g.labels().iter().all(|&l| l > 0) && g.edges().all(|(a, b)| g.label(a) < g.label(b))
}

/// Pulls each member back through the preimages of `map`.
pub fn lift_decomposition_from_canonical(
    d: &Decomposition,
    canonical: &LabeledGraph,
    map: &NodeMap,
    original: &LabeledGraph,
) -> Decomposition {
    let mut preimages: Vec<Vec<usize>> = vec![Vec::new(); canonical.node_count()];
    for (i, id) in original.ids().iter().enumerate() {
        if let Some(image) = map.image(id) {
            let j = canonical.index_of(image.as_str()).expect("map image lies in canonical graph");
            preimages[j].push(i);
        }
    }
    let members = d
        .members()
        .iter()
        .map(|m| {
            NodeSet::from_indices(
                original.node_count(),
                m.iter().flat_map(|j| preimages[j].iter().copied()),
            )
        })
        .collect();
    Decomposition::new(members)
}

/// Adds every reachability pair as an edge; labels are unchanged.
pub fn transitive_closure(g: &LabeledGraph) -> LabeledGraph {
    let n = g.node_count();
    let mut edges = BTreeSet::new();
    for s in 0..n {
        let mut seen = vec![false; n];
        let mut stack = g.successors(s).to_vec();
        while let Some(x) = stack.pop() {
            if seen[x] {
                continue;
            }
            seen[x] = true;
            stack.extend_from_slice(g.successors(x));
        }
        for t in (0..n).filter(|&t| seen[t] && t != s) {
            edges.insert((g.id(s).clone(), g.id(t).clone()));
        }
    }
    let nodes = (0..n).map(|i| (g.id(i).clone(), g.label(i)));
    LabeledGraph::new(nodes, edges).expect("closure of a well-formed graph")
}

/// Adds a fresh node above every node, labeled one more than the maximal label.
///
/// Counts are preserved only when no decomposition of `g` has more than
/// `max + 1` members; [`augment_for_transport`] lifts that restriction.
pub fn augment_unique_max(g: &LabeledGraph) -> (LabeledGraph, NodeId) {
    augment_with_label(g, g.max_label().unwrap_or(0) + 1)
}

/// Upper bound on the number of members of any decomposition of a standard `g`:
/// every member contains a whole terminal strongly connected class, so the
/// labels of one node per positive terminal class bound the count.
pub fn member_count_bound(g: &LabeledGraph) -> i64 {
    let closed = transitive_closure(g);
    let reaches = |a: usize, b: usize| a == b || closed.has_edge(a, b);
    (0..g.node_count())
        .filter(|&s| g.label(s) > 0)
        .filter(|&s| (0..g.node_count()).all(|t| !reaches(s, t) || reaches(t, s)))
        .filter(|&s| (0..s).all(|t| !(reaches(s, t) && reaches(t, s))))
        .map(|s| g.label(s))
        .sum()
}

/// Like [`augment_unique_max`], but the fresh label is raised to
/// [`member_count_bound`] when needed, so stripping is a bijection on every standard graph.
pub fn augment_for_transport(g: &LabeledGraph) -> (LabeledGraph, NodeId) {
    let top = (g.max_label().unwrap_or(0) + 1).max(member_count_bound(g));
    augment_with_label(g, top)
}

fn augment_with_label(g: &LabeledGraph, top: i64) -> (LabeledGraph, NodeId) {
    let mut name = "__max".to_string();
    let mut counter = 1;
    while g.index_of(&name).is_some() {
        name = format!("__max{counter}");
        counter += 1;
    }
    let v = NodeId::new(name).expect("fresh id is a valid token");
    let nodes = (0..g.node_count())
        .map(|i| (g.id(i).clone(), g.label(i)))
        .chain([(v.clone(), top)]);
    let edges = g
        .edge_ids()
        .into_iter()
        .map(|(a, b)| (a.clone(), b.clone()))
        .chain(g.ids().iter().map(|a| (a.clone(), v.clone())))
        .collect::<Vec<_>>();
    (LabeledGraph::new(nodes, edges).expect("augmentation is well formed"), v)
}

/// Drops the `{v}` members and removes `v` from the others.
pub fn strip_augmented(
    d: &Decomposition,
    v: &NodeId,
    augmented: &LabeledGraph,
    original: &LabeledGraph,
) -> Decomposition {
    let vi = augmented.index_of(v.as_str()).expect("augmented node present");
    let to_original: Vec<Option<usize>> = augmented
        .ids()
        .iter()
        .map(|id| original.index_of(id.as_str()))
        .collect();
    let members = d
        .members()
        .iter()
        .filter(|m| m.iter().any(|i| i != vi))
        .map(|m| {
            NodeSet::from_indices(
                original.node_count(),
                m.iter().filter_map(|i| to_original[i]),
            )
        })
        .collect();
    Decomposition::new(members)
}

/// Inverse of [`strip_augmented`]: adds `v` to every member and pads with `{v}` singletons.
pub fn pad_augmented(
    d: &Decomposition,
    v: &NodeId,
    augmented: &LabeledGraph,
    original: &LabeledGraph,
) -> Decomposition {
    let n = augmented.node_count();
    let vi = augmented.index_of(v.as_str()).expect("augmented node present");
    let to_augmented: Vec<usize> = original
        .ids()
        .iter()
        .map(|id| augmented.index_of(id.as_str()).expect("original node present"))
        .collect();
    let mut members: Vec<NodeSet> = d
        .members()
        .iter()
        .map(|m| {
            let mut s = NodeSet::from_indices(n, m.iter().map(|i| to_augmented[i]));
            s.insert(vi);
            s
        })
        .collect();
    let pad = augmented.label(vi) - members.len() as i64;
    for _ in 0..pad.max(0) {
        members.push(NodeSet::from_indices(n, [vi]));
    }
    Decomposition::new(members)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonicalize_merges_equal_label_edges() {
        let g = LabeledGraph::from_strs(
            &[("a", 1), ("b", 2), ("c", 2), ("z", 0)],
            &[("a", "b"), ("c", "b"), ("z", "a")],
        );
        let c = canonicalize(&g).unwrap();
        assert_eq!(c.graph, LabeledGraph::from_strs(&[("a", 1), ("b", 2)], &[("a", "b")]));
        assert_eq!(c.map.image(&NodeId::new("c").unwrap()).unwrap().as_str(), "b");
        assert_eq!(c.map.forward[&NodeId::new("z").unwrap()], None);
    }

    #[test]
    fn canonicalize_zero_and_identity() {
        let z = LabeledGraph::from_strs(&[("x", 0)], &[]);
        assert_eq!(canonicalize(&z).unwrap().graph.node_count(), 0);
        let chain = LabeledGraph::from_strs(&[("a", 1), ("b", 2)], &[("a", "b")]);
        let c = canonicalize(&chain).unwrap();
        assert_eq!(c.graph, chain);
        assert!(c.map.is_identity());
        let bad = LabeledGraph::from_strs(&[("a", 2), ("b", 1)], &[("a", "b")]);
        assert!(matches!(canonicalize(&bad), Err(GraphError::NotStandard)));
    }

    #[test]
    fn closure_of_chain_with_shortcut() {
        let g = LabeledGraph::from_strs(
            &[("1", 1), ("2", 2), ("3", 3), ("4", 4)],
            &[("1", "2"), ("2", "3"), ("3", "4"), ("1", "4")],
        );
        let c = transitive_closure(&g);
        assert_eq!(c.edge_count(), 6);
        assert!(c.has_edge(0, 2) && c.has_edge(1, 3));
        assert_eq!(transitive_closure(&c), c);
    }

    #[test]
    fn augmentation_avoids_collisions() {
        let g = LabeledGraph::from_strs(&[("__max", 1), ("y", 1)], &[]);
        let (a, v) = augment_unique_max(&g);
        assert_eq!(v.as_str(), "__max1");
        assert_eq!(a.label_of("__max1"), Some(2));
        assert_eq!(a.edge_count(), 2);
        let (e, v) = augment_unique_max(&LabeledGraph::from_strs(&[], &[]));
        assert_eq!(e.label_of(v.as_str()), Some(1));
    }

    #[test]
    fn strip_and_pad_are_inverse() {
        let g = LabeledGraph::from_strs(&[("x", 1), ("y", 1)], &[]);
        let (a, v) = augment_unique_max(&g);
        let d = Decomposition::new(vec![g.node_set(["x"]).unwrap(), g.node_set(["y"]).unwrap()]);
        let padded = pad_augmented(&d, &v, &a, &g);
        assert_eq!(padded.len(), 2);
        assert!(padded.is_decomposition_of(&a));
        assert_eq!(strip_augmented(&padded, &v, &a, &g), d);
    }
}

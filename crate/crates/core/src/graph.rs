//! Labeled directed graphs, standardness and standard components.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::error::GraphError;

/// A node identifier: a nonempty token without whitespace.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(String);

impl NodeId {
    pub fn new(id: impl Into<String>) -> Result<Self, GraphError> {
        let id = id.into();
        if id.is_empty() || id.chars().any(char::is_whitespace) {
            return Err(GraphError::InvalidId(id));
        }
        Ok(NodeId(id))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A set of node indices into a host structure.
///
/// Ordered by the lexicographic order of the ascending index lists, which
/// coincides with the lexicographic order on sorted id lists because node
/// indices follow id order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NodeSet(FixedBitSet);

impl NodeSet {
    pub fn empty(n: usize) -> Self {
        NodeSet(FixedBitSet::with_capacity(n))
    }

    pub fn full(n: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(n);
        bits.insert_range(..);
        NodeSet(bits)
    }

    pub fn from_indices(n: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut set = NodeSet::empty(n);
        for i in indices {
            set.insert(i);
        }
        set
    }

    /// Size of the universe, not the number of members.
    pub fn universe(&self) -> usize {
        self.0.len()
    }

    pub fn insert(&mut self, i: usize) {
        self.0.insert(i);
    }

    pub fn remove(&mut self, i: usize) {
        self.0.set(i, false);
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.contains(i)
    }

    pub fn len(&self) -> usize {
        self.0.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_clear()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.ones()
    }

    pub fn is_subset(&self, other: &NodeSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn is_disjoint(&self, other: &NodeSet) -> bool {
        self.0.is_disjoint(&other.0)
    }

    pub fn union_with(&mut self, other: &NodeSet) {
        self.0.union_with(&other.0);
    }
}

impl Ord for NodeSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for NodeSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for NodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Node and edge structure shared between graphs that differ only in labels.
///
/// Nodes are indexed in increasing id order.
#[derive(Debug, PartialEq, Eq)]
pub struct Structure {
    ids: Vec<NodeId>,
    edges: BTreeSet<(usize, usize)>,
    succ: Vec<Vec<usize>>,
    pred: Vec<Vec<usize>>,
}

impl Structure {
    fn build(ids: Vec<NodeId>, edges: BTreeSet<(usize, usize)>) -> Self {
        let n = ids.len();
        let mut succ = vec![Vec::new(); n];
        let mut pred = vec![Vec::new(); n];
        for &(a, b) in &edges {
            succ[a].push(b);
            pred[b].push(a);
        }
        Structure { ids, edges, succ, pred }
    }

    pub fn node_count(&self) -> usize {
        self.ids.len()
    }

    pub fn ids(&self) -> &[NodeId] {
        &self.ids
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.ids.binary_search_by(|x| x.as_str().cmp(id)).ok()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a, b))
    }

    pub fn successors(&self, i: usize) -> &[usize] {
        &self.succ[i]
    }

    pub fn predecessors(&self, i: usize) -> &[usize] {
        &self.pred[i]
    }

    /// Whether `set` is closed under following edges forward.
    pub fn is_upward_closed(&self, set: &NodeSet) -> bool {
        self.edges.iter().all(|&(a, b)| !set.contains(a) || set.contains(b))
    }
}

/// A finite directed graph without loops or parallel edges, with integer node labels.
#[derive(Clone)]
pub struct LabeledGraph {
    structure: Arc<Structure>,
    labels: Vec<i64>,
}

impl LabeledGraph {
    /// Builds a graph, rejecting duplicate nodes, duplicate edges, loops and dangling endpoints.
    pub fn new<N, E>(nodes: N, edges: E) -> Result<Self, GraphError>
    where
        N: IntoIterator<Item = (NodeId, i64)>,
        E: IntoIterator<Item = (NodeId, NodeId)>,
    {
        let mut labels_by_id = BTreeMap::new();
        for (id, label) in nodes {
            if labels_by_id.insert(id.clone(), label).is_some() {
                return Err(GraphError::DuplicateNode(id));
            }
        }
        let ids: Vec<NodeId> = labels_by_id.keys().cloned().collect();
        let labels: Vec<i64> = labels_by_id.values().copied().collect();
        let index = |id: &NodeId| {
            ids.binary_search(id)
                .map_err(|_| GraphError::UnknownNode(id.clone()))
        };
        let mut edge_set = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(GraphError::Loop(a));
            }
            let (ia, ib) = (index(&a)?, index(&b)?);
            if !edge_set.insert((ia, ib)) {
                return Err(GraphError::DuplicateEdge(a, b));
            }
        }
        Ok(LabeledGraph {
            structure: Arc::new(Structure::build(ids, edge_set)),
            labels,
        })
    }

    /// Convenience constructor from string slices; panics on malformed input.
    pub fn from_strs(nodes: &[(&str, i64)], edges: &[(&str, &str)]) -> Self {
        let id = |s: &str| NodeId::new(s).expect("valid node id");
        LabeledGraph::new(
            nodes.iter().map(|&(n, l)| (id(n), l)),
            edges.iter().map(|&(a, b)| (id(a), id(b))),
        )
        .expect("well-formed graph")
    }

    /// The graph with the same structure and the given labels (indexed by node order).
    pub fn with_labels(&self, labels: Vec<i64>) -> Self {
        assert_eq!(labels.len(), self.labels.len(), "label vector length");
        LabeledGraph {
            structure: Arc::clone(&self.structure),
            labels,
        }
    }

    pub fn structure(&self) -> &Arc<Structure> {
        &self.structure
    }

    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.structure.edges.len()
    }

    pub fn ids(&self) -> &[NodeId] {
        &self.structure.ids
    }

    pub fn id(&self, i: usize) -> &NodeId {
        &self.structure.ids[i]
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.structure.index_of(id)
    }

    pub fn labels(&self) -> &[i64] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> i64 {
        self.labels[i]
    }

    pub fn label_of(&self, id: &str) -> Option<i64> {
        self.index_of(id).map(|i| self.labels[i])
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.structure.edges()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.structure.has_edge(a, b)
    }

    pub fn successors(&self, i: usize) -> &[usize] {
        self.structure.successors(i)
    }

    pub fn predecessors(&self, i: usize) -> &[usize] {
        self.structure.predecessors(i)
    }

    /// Whether both graphs have identical node and edge sets.
    pub fn same_structure(&self, other: &LabeledGraph) -> bool {
        Arc::ptr_eq(&self.structure, &other.structure) || self.structure == other.structure
    }

    /// All labels nonnegative and weakly increasing along every edge.
    pub fn is_standard(&self) -> bool {
        labels_standard(&self.structure, &self.labels)
    }

    pub fn max_label(&self) -> Option<i64> {
        self.labels.iter().copied().max()
    }

    /// Support of the 0-1 reading of the labels: nodes labeled exactly 1.
    /// Returns `None` unless every label is 0 or 1.
    pub fn support_if_zero_one(&self) -> Option<NodeSet> {
        if self.labels.iter().any(|&l| l != 0 && l != 1) {
            return None;
        }
        Some(NodeSet::from_indices(
            self.node_count(),
            (0..self.node_count()).filter(|&i| self.labels[i] == 1),
        ))
    }

    /// Edge list as id pairs in canonical order.
    pub fn edge_ids(&self) -> Vec<(&NodeId, &NodeId)> {
        self.edges().map(|(a, b)| (self.id(a), self.id(b))).collect()
    }

    /// Node ids of `set`, in increasing order.
    pub fn support_ids(&self, set: &NodeSet) -> Vec<NodeId> {
        set.iter().map(|i| self.id(i).clone()).collect()
    }

    /// Node set from ids; fails on unknown ids.
    pub fn node_set<'a>(&self, ids: impl IntoIterator<Item = &'a str>) -> Result<NodeSet, GraphError> {
        let mut set = NodeSet::empty(self.node_count());
        for id in ids {
            let i = self
                .index_of(id)
                .ok_or_else(|| GraphError::UnknownNode(NodeId(id.to_string())))?;
            set.insert(i);
        }
        Ok(set)
    }
}

impl PartialEq for LabeledGraph {
    fn eq(&self, other: &Self) -> bool {
        self.same_structure(other) && self.labels == other.labels
    }
}

impl Eq for LabeledGraph {}

impl fmt::Debug for LabeledGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nodes: Vec<String> = (0..self.node_count())
            .map(|i| format!("{}:{}", self.id(i), self.labels[i]))
            .collect();
        let edges: Vec<String> = self
            .edge_ids()
            .into_iter()
            .map(|(a, b)| format!("{a}->{b}"))
            .collect();
        f.debug_struct("LabeledGraph")
            .field("nodes", &nodes)
            .field("edges", &edges)
            .finish()
    }
}

pub(crate) fn labels_standard(s: &Structure, labels: &[i64]) -> bool {
    labels.iter().all(|&l| l >= 0) && s.edges.iter().all(|&(a, b)| labels[a] <= labels[b])
}

fn combine(g: &LabeledGraph, h: &LabeledGraph, sign: i64) -> LabeledGraph {
    if g.same_structure(h) {
        let labels = g
            .labels
            .iter()
            .zip(&h.labels)
            .map(|(a, b)| a + sign * b)
            .collect();
        return g.with_labels(labels);
    }
    let mut labels: BTreeMap<NodeId, i64> = BTreeMap::new();
    for i in 0..g.node_count() {
        *labels.entry(g.id(i).clone()).or_default() += g.label(i);
    }
    for i in 0..h.node_count() {
        *labels.entry(h.id(i).clone()).or_default() += sign * h.label(i);
    }
    let edges: BTreeSet<(NodeId, NodeId)> = g
        .edge_ids()
        .into_iter()
        .chain(h.edge_ids())
        .map(|(a, b)| (a.clone(), b.clone()))
        .collect();
    LabeledGraph::new(labels, edges).expect("union of well-formed graphs is well formed")
}

/// Union of nodes and edges; labels of shared nodes add.
pub fn add(g: &LabeledGraph, h: &LabeledGraph) -> LabeledGraph {
    combine(g, h, 1)
}

/// Union of nodes and edges; labels subtract, possibly going negative.
pub fn subtract(g: &LabeledGraph, h: &LabeledGraph) -> LabeledGraph {
    combine(g, h, -1)
}

/// A standard component of a host graph, identified with its support.
#[derive(Clone, Debug)]
pub struct Component {
    host: Arc<Structure>,
    support: NodeSet,
}

impl Component {
    /// Checks the component conditions against `g` and wraps the support.
    pub fn new(g: &LabeledGraph, support: NodeSet) -> Result<Self, GraphError> {
        if support.universe() != g.node_count() {
            return Err(GraphError::HostMismatch);
        }
        if !is_component(g, &support) {
            return Err(GraphError::NotAComponent);
        }
        Ok(Component {
            host: Arc::clone(g.structure()),
            support,
        })
    }

    pub fn support(&self) -> &NodeSet {
        &self.support
    }

    pub fn host(&self) -> &Arc<Structure> {
        &self.host
    }

    /// The 0-1 graph on the host structure with this support.
    pub fn as_graph(&self) -> LabeledGraph {
        zero_one_graph(&self.host, &self.support)
    }
}

impl PartialEq for Component {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.host, &other.host) || self.host == other.host)
            && self.support == other.support
    }
}

impl Eq for Component {}

pub(crate) fn zero_one_graph(host: &Arc<Structure>, support: &NodeSet) -> LabeledGraph {
    LabeledGraph {
        structure: Arc::clone(host),
        labels: (0..host.node_count())
            .map(|i| i64::from(support.contains(i)))
            .collect(),
    }
}

/// Nonempty, upward closed, and leaves `g` minus its indicator standard.
pub fn is_component(g: &LabeledGraph, support: &NodeSet) -> bool {
    if support.is_empty() || support.universe() != g.node_count() {
        return false;
    }
    if !g.structure.is_upward_closed(support) {
        return false;
    }
    let rest: Vec<i64> = (0..g.node_count())
        .map(|i| g.labels[i] - i64::from(support.contains(i)))
        .collect();
    labels_standard(&g.structure, &rest)
}

/// The component supported on all positively labeled nodes.
pub fn maximal_component(g: &LabeledGraph) -> Result<Component, GraphError> {
    if !g.is_standard() {
        return Err(GraphError::NotStandard);
    }
    let support = NodeSet::from_indices(
        g.node_count(),
        (0..g.node_count()).filter(|&i| g.labels[i] > 0),
    );
    if support.is_empty() {
        return Err(GraphError::AllZero);
    }
    Ok(Component {
        host: Arc::clone(&g.structure),
        support,
    })
}

/// Label-wise sum of the members over `host`'s structure.
pub fn sum_decomposition(host: &LabeledGraph, members: &[Component]) -> Result<LabeledGraph, GraphError> {
    let mut labels = vec![0i64; host.node_count()];
    for m in members {
        if !(Arc::ptr_eq(&m.host, &host.structure) || *m.host == *host.structure) {
            return Err(GraphError::HostMismatch);
        }
        for i in m.support.iter() {
            labels[i] += 1;
        }
    }
    Ok(host.with_labels(labels))
}

/// A multiset of component supports in canonical (sorted) order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Decomposition {
    members: Vec<NodeSet>,
}

impl Decomposition {
    pub fn new(mut members: Vec<NodeSet>) -> Self {
        members.sort();
        Decomposition { members }
    }

    pub fn empty() -> Self {
        Decomposition { members: Vec::new() }
    }

    pub fn members(&self) -> &[NodeSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Label-wise sum of the members on `host`'s structure.
    pub fn sum(&self, host: &LabeledGraph) -> LabeledGraph {
        let mut labels = vec![0i64; host.node_count()];
        for m in &self.members {
            for i in m.iter() {
                labels[i] += 1;
            }
        }
        host.with_labels(labels)
    }

    /// Whether this is a standard decomposition of `g`.
    pub fn is_decomposition_of(&self, g: &LabeledGraph) -> bool {
        self.members.iter().all(|m| m.universe() == g.node_count())
            && self.sum(g).labels == g.labels
            && self.members.iter().all(|m| is_component(g, m))
    }

    /// Sorted list of sorted id lists.
    pub fn encoding(&self, host: &LabeledGraph) -> Vec<Vec<String>> {
        let mut enc: Vec<Vec<String>> = self
            .members
            .iter()
            .map(|m| m.iter().map(|i| host.id(i).to_string()).collect())
            .collect();
        enc.sort();
        enc
    }

    pub fn components(&self, host: &LabeledGraph) -> Vec<Component> {
        self.members
            .iter()
            .map(|m| Component {
                host: Arc::clone(host.structure()),
                support: m.clone(),
            })
            .collect()
    }
}

/// Disjoint union; fails if the graphs share a node id.
pub fn disjoint_union(g: &LabeledGraph, h: &LabeledGraph) -> Result<LabeledGraph, GraphError> {
    if let Some(i) = (0..h.node_count()).find(|&i| g.index_of(h.id(i).as_str()).is_some()) {
        return Err(GraphError::DuplicateNode(h.id(i).clone()));
    }
    Ok(add(g, h))
}

/// A label-preserving isomorphism from `a` to `b`, as an index map, if one exists.
pub fn find_isomorphism(a: &LabeledGraph, b: &LabeledGraph) -> Option<Vec<usize>> {
    let n = a.node_count();
    if n != b.node_count() || a.edge_count() != b.edge_count() {
        return None;
    }
    let signature = |g: &LabeledGraph, i: usize| {
        (g.label(i), g.successors(i).len(), g.predecessors(i).len())
    };
    let mut sig_a: Vec<_> = (0..n).map(|i| signature(a, i)).collect();
    let mut sig_b: Vec<_> = (0..n).map(|i| signature(b, i)).collect();
    let (sa, sb) = (sig_a.clone(), sig_b.clone());
    sig_a.sort();
    sig_b.sort();
    if sig_a != sig_b {
        return None;
    }
    let mut order: Vec<usize> = (0..n).collect();
    // Most constrained first: rare signatures, then high degree.
    order.sort_by_key(|&i| {
        let count = sa.iter().filter(|s| **s == sa[i]).count();
        (count, usize::MAX - sa[i].1 - sa[i].2)
    });
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];

    fn extend(
        depth: usize,
        order: &[usize],
        a: &LabeledGraph,
        b: &LabeledGraph,
        sa: &[(i64, usize, usize)],
        sb: &[(i64, usize, usize)],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        let Some(&x) = order.get(depth) else {
            return true;
        };
        for y in 0..b.node_count() {
            if used[y] || sa[x] != sb[y] {
                continue;
            }
            let consistent = (0..a.node_count()).all(|z| {
                let w = map[z];
                w == usize::MAX || (a.has_edge(x, z) == b.has_edge(y, w) && a.has_edge(z, x) == b.has_edge(w, y))
            });
            if !consistent {
                continue;
            }
            map[x] = y;
            used[y] = true;
            if extend(depth + 1, order, a, b, sa, sb, map, used) {
                return true;
            }
            map[x] = usize::MAX;
            used[y] = false;
        }
        false
    }

    extend(0, &order, a, b, &sa, &sb, &mut map, &mut used).then_some(map)
}

/// Whether the index map `map` is a label-preserving isomorphism from `a` to `b`.
pub fn is_isomorphism(a: &LabeledGraph, b: &LabeledGraph, map: &[usize]) -> bool {
    let n = a.node_count();
    if n != b.node_count() || map.len() != n || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut hit = vec![false; n];
    for &j in map {
        if j >= n || std::mem::replace(&mut hit[j], true) {
            return false;
        }
    }
    (0..n).all(|i| a.label(i) == b.label(map[i])) && a.edges().all(|(x, y)| b.has_edge(map[x], map[y]))
}

pub fn is_isomorphic(a: &LabeledGraph, b: &LabeledGraph) -> bool {
    find_isomorphism(a, b).is_some()
}

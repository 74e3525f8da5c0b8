//! Transport of decompositions between staircases and labeled graphs.

use crate::decomposer::decompositions;
use crate::error::StaircaseError;
use crate::format::write_staircase;
use crate::graph::{is_isomorphism, Decomposition, LabeledGraph, NodeId, NodeSet};
use crate::staircase::{canonical_graph_of, c4_sum, set_of_graph, CanonicalStaircaseGraph, Point, Realization, StandardSet};
use crate::transform::{augment_for_transport, canonicalize, strip_augmented, transitive_closure, Canonicalization};

/// A multiset of staircases one dimension down, sorted by serialized form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct C4Decomposition {
    members: Vec<StandardSet>,
}

impl C4Decomposition {
    pub fn new(mut members: Vec<StandardSet>) -> Self {
        members.sort_by_cached_key(write_staircase);
        C4Decomposition { members }
    }

    pub fn members(&self) -> &[StandardSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Stacks the members (each lifted to height one) in dimension `dim`.
    pub fn sum(&self, dim: usize) -> Result<StandardSet, StaircaseError> {
        let mut acc = StandardSet::empty(dim);
        for m in &self.members {
            if m.dim() + 1 != dim {
                return Err(StaircaseError::DimensionMismatch(m.dim() + 1, dim));
            }
            acc = c4_sum(&acc, &lift_to_layer(m))?;
        }
        Ok(acc)
    }
}

/// The set `{(γ, 0) : γ ∈ m}`.
pub fn lift_to_layer(m: &StandardSet) -> StandardSet {
    let dim = m.dim() + 1;
    let mut corners: Vec<Point> = m.corners().iter().map(|c| c.with_last(0)).collect();
    corners.push(Point::unit(dim, dim - 1, 1));
    StandardSet::from_corners(dim, corners).expect("layer over a finite set is finite")
}

/// Union of the base cells of the chosen components.
pub fn component_to_standard_set(
    support: &NodeSet,
    cg: &CanonicalStaircaseGraph,
    delta: &StandardSet,
) -> Result<StandardSet, StaircaseError> {
    let cells = support.iter().flat_map(|i| cg.components[i].cells(delta));
    StandardSet::from_cells(delta.dim() - 1, cells)
        .map_err(|e| StaircaseError::NotAStandardSet(e.to_string()))
}

/// The graph decomposition of the canonical graph matching a C4 decomposition.
pub fn c4_to_graph_decomposition(
    c4: &C4Decomposition,
    cg: &CanonicalStaircaseGraph,
    delta: &StandardSet,
) -> Result<Decomposition, StaircaseError> {
    let n = cg.graph.node_count();
    let cells: Vec<Vec<Point>> = cg.components.iter().map(|c| c.cells(delta)).collect();
    let mut members = Vec::with_capacity(c4.len());
    for m in c4.members() {
        let mut support = NodeSet::empty(n);
        let mut covered = 0;
        for (i, cs) in cells.iter().enumerate() {
            let inside = cs.iter().filter(|p| m.contains(p)).count();
            if inside == cs.len() {
                support.insert(i);
                covered += inside;
            } else if inside != 0 {
                return Err(StaircaseError::NotAStandardSet(format!(
                    "member splits the component {}",
                    cg.graph.id(i)
                )));
            }
        }
        if covered != m.cardinality() {
            return Err(StaircaseError::NotAStandardSet("member leaves the base".into()));
        }
        members.push(support);
    }
    Ok(Decomposition::new(members))
}

/// Paired graph and C4 decompositions of a staircase.
#[derive(Clone, Debug)]
pub struct C4Transport {
    pub canonical: CanonicalStaircaseGraph,
    pub pairs: Vec<(Decomposition, C4Decomposition)>,
}

/// All C4 decompositions, each paired with its decomposition of the canonical graph.
pub fn c4_transport(delta: &StandardSet) -> Result<C4Transport, StaircaseError> {
    let canonical = canonical_graph_of(delta)?;
    let mut pairs = Vec::new();
    for d in decompositions(&canonical.graph) {
        let members = d
            .members()
            .iter()
            .map(|m| component_to_standard_set(m, &canonical, delta))
            .collect::<Result<Vec<_>, _>>()?;
        pairs.push((d, C4Decomposition::new(members)));
    }
    pairs.sort_by(|a, b| a.1.members.iter().map(write_staircase).cmp(b.1.members.iter().map(write_staircase)));
    Ok(C4Transport { canonical, pairs })
}

/// All C4 decompositions of `delta`, in canonical order.
pub fn c4_decompositions(delta: &StandardSet) -> Result<Vec<C4Decomposition>, StaircaseError> {
    Ok(c4_transport(delta)?.pairs.into_iter().map(|(_, c)| c).collect())
}

/// Every intermediate object of the reduction from a graph to a staircase.
#[derive(Clone, Debug)]
pub struct EquivalenceReport {
    pub canonical: Canonicalization,
    /// Augmented graph and its added node; absent when the canonical graph is empty.
    pub augmented: Option<(LabeledGraph, NodeId)>,
    pub closure: Option<LabeledGraph>,
    pub realization: Option<Realization>,
    pub set: StandardSet,
    /// Each C4 decomposition of `set` with the decomposition of the input graph it maps to.
    pub pairs: Vec<(C4Decomposition, Decomposition)>,
}

/// Canonicalizes, augments, closes and realizes `g`, and transports every C4
/// decomposition of the resulting staircase back to a decomposition of `g`.
pub fn graph_problem_to_set_problem(g: &LabeledGraph) -> Result<EquivalenceReport, StaircaseError> {
    let canonical = canonicalize(g).map_err(|_| StaircaseError::NotStandard)?;
    if canonical.graph.node_count() == 0 {
        let set = StandardSet::empty(2);
        let pairs = vec![(C4Decomposition::new(Vec::new()), Decomposition::empty())];
        return Ok(EquivalenceReport {
            canonical,
            augmented: None,
            closure: None,
            realization: None,
            set,
            pairs,
        });
    }
    let (augmented, apex) = augment_for_transport(&canonical.graph);
    let closure = transitive_closure(&augmented);
    let realization = set_of_graph(&closure)?;
    let transport = c4_transport(&realization.set)?;
    let cg = &transport.canonical;

    // Closure node -> canonical staircase node, checked to be a labeled isomorphism.
    let forward: Vec<usize> = realization
        .node_map(&closure, cg)
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| StaircaseError::Internal("witness outside every component".into()))?;
    if !is_isomorphism(&closure, &cg.graph, &forward) {
        return Err(StaircaseError::Internal("realization does not reproduce the graph".into()));
    }
    let mut backward = vec![0; forward.len()];
    for (i, &j) in forward.iter().enumerate() {
        backward[j] = i;
    }
    let n = closure.node_count();
    let mut pairs = Vec::with_capacity(transport.pairs.len());
    for (d, c4) in transport.pairs {
        let on_closure = Decomposition::new(
            d.members()
                .iter()
                .map(|m| NodeSet::from_indices(n, m.iter().map(|j| backward[j])))
                .collect(),
        );
        let on_canonical = strip_augmented(&on_closure, &apex, &augmented, &canonical.graph);
        pairs.push((c4, canonical.lift(&on_canonical, g)));
    }
    Ok(EquivalenceReport {
        canonical,
        augmented: Some((augmented, apex)),
        closure: Some(closure),
        set: realization.set.clone(),
        realization: Some(realization),
        pairs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn column_has_one_decomposition() {
        let col = StandardSet::from_corners(2, vec![Point(vec![1, 0]), Point(vec![0, 3])]).unwrap();
        let ds = c4_decompositions(&col).unwrap();
        assert_eq!(ds.len(), 1);
        assert_eq!(ds[0].len(), 3);
        assert_eq!(ds[0].sum(2).unwrap(), col);
    }

    #[test]
    fn empty_set_has_empty_decomposition() {
        let ds = c4_decompositions(&StandardSet::empty(3)).unwrap();
        assert_eq!(ds, vec![C4Decomposition::new(Vec::new())]);
    }

    #[test]
    fn two_isolated_nodes() {
        let g = LabeledGraph::from_strs(&[("x", 1), ("y", 1)], &[]);
        let report = graph_problem_to_set_problem(&g).unwrap();
        assert_eq!(report.pairs.len(), 2);
        for (c4, d) in &report.pairs {
            assert!(d.is_decomposition_of(&g));
            assert_eq!(c4.sum(report.set.dim()).unwrap(), report.set);
        }
        let zero = LabeledGraph::from_strs(&[("x", 0)], &[]);
        let report = graph_problem_to_set_problem(&zero).unwrap();
        assert_eq!(report.pairs, vec![(C4Decomposition::new(vec![]), Decomposition::empty())]);
    }
}

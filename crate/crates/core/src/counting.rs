//! Counting decompositions with the vector partition function of the
//! family of upward-closed node sets.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::graph::{LabeledGraph, NodeSet};

/// All upward-closed node sets of a graph structure, the empty and full set included.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitSubgraphFamily {
    pub members: Vec<NodeSet>,
}

/// Nonnegative label vector indexed by node order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelVector(pub Vec<u64>);

impl LabelVector {
    /// The labels of `g`, or `None` if some label is negative.
    pub fn from_graph(g: &LabeledGraph) -> Option<Self> {
        g.labels().iter().map(|&l| u64::try_from(l).ok()).collect::<Option<_>>().map(LabelVector)
    }
}

/// Enumerates the upward-closed sets of `f`'s structure, ignoring labels.
pub fn unit_subgraph_family(f: &LabeledGraph) -> UnitSubgraphFamily {
    let n = f.node_count();
    let mut members = Vec::new();

    // Nodes are decided in index order; a node may join only if all of its
    // decided successors joined, and may stay out only if all of its decided
    // predecessors stayed out.
    fn go(f: &LabeledGraph, i: usize, chosen: &mut NodeSet, decided: &mut Vec<bool>, out: &mut Vec<NodeSet>) {
        if i == f.node_count() {
            if f.structure().is_upward_closed(chosen) {
                out.push(chosen.clone());
            }
            return;
        }
        let can_join = f.successors(i).iter().all(|&s| !decided[s] || chosen.contains(s));
        let can_skip = f.predecessors(i).iter().all(|&p| !decided[p] || !chosen.contains(p));
        decided[i] = true;
        if can_skip {
            go(f, i + 1, chosen, decided, out);
        }
        if can_join {
            chosen.insert(i);
            go(f, i + 1, chosen, decided, out);
            chosen.remove(i);
        }
        decided[i] = false;
    }

    go(f, 0, &mut NodeSet::empty(n), &mut vec![false; n], &mut members);
    members.sort();
    UnitSubgraphFamily { members }
}

/// Number of multisets of nonempty upward-closed sets of `f` whose indicator
/// vectors sum to `w`.
pub fn phi(f: &LabeledGraph, w: &LabelVector) -> BigUint {
    assert_eq!(w.0.len(), f.node_count(), "label vector length");
    phi_of_family(&unit_subgraph_family(f), w)
}

/// Number of multisets of nonempty members of `family` whose indicator vectors sum to `w`.
pub fn phi_of_family(family: &UnitSubgraphFamily, w: &LabelVector) -> BigUint {
    let n = w.0.len();
    let mut strides = vec![1usize; n];
    let mut size = 1usize;
    for v in 0..n {
        strides[v] = size;
        size = size
            .checked_mul(w.0[v] as usize + 1)
            .expect("label box fits in memory");
    }
    let mut dp = vec![BigUint::zero(); size];
    dp[0] = BigUint::one();
    for m in family.members.iter().filter(|m| !m.is_empty()) {
        if m.iter().any(|v| w.0[v] == 0) {
            continue;
        }
        let offset: usize = m.iter().map(|v| strides[v]).sum();
        for idx in offset..size {
            let fits = m.iter().all(|v| (idx / strides[v]) % (w.0[v] as usize + 1) >= 1);
            if fits {
                let prev = dp[idx - offset].clone();
                if !prev.is_zero() {
                    dp[idx] += prev;
                }
            }
        }
    }
    dp.pop().expect("box is nonempty")
}

/// `phi` at the labels of `g`; zero if some label is negative.
pub fn phi_of_labels(g: &LabeledGraph) -> BigUint {
    match LabelVector::from_graph(g) {
        Some(w) => phi(g, &w),
        None => BigUint::zero(),
    }
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

    #[test]
    fn family_sizes() {
        assert_eq!(unit_subgraph_family(&diamond()).members.len(), 6);
        let two = LabeledGraph::from_strs(&[("a", 0), ("b", 0)], &[]);
        assert_eq!(unit_subgraph_family(&two).members.len(), 4);
        let one = LabeledGraph::from_strs(&[("a", 0)], &[]);
        assert_eq!(unit_subgraph_family(&one).members.len(), 2);
    }

    #[test]
    fn phi_values() {
        let g = diamond();
        assert_eq!(phi_of_labels(&g), BigUint::from(2u32));
        assert_eq!(phi(&g, &LabelVector(vec![0; 4])), BigUint::one());
        let bad = LabeledGraph::from_strs(&[("a", 2), ("b", 1)], &[("a", "b")]);
        assert!(phi_of_labels(&bad).is_zero());
        assert!(phi_of_labels(&LabeledGraph::from_strs(&[("x", -1)], &[])).is_zero());
    }
}

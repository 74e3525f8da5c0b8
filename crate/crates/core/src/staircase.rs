//! Finite standard sets (staircases) in `ℕ^d`, stored by the minimal
//! generators of their complement.
//!
//! The last coordinate is the height direction: `q(β)` drops it and the
//! height over a base point `γ` is the size of the fiber above `γ`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::OnceLock;

use crate::error::StaircaseError;
use crate::graph::{LabeledGraph, NodeId};
use crate::transform::{is_canonical, transitive_closure};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point(pub Vec<u32>);

impl Point {
    pub fn origin(dim: usize) -> Self {
        Point(vec![0; dim])
    }

    pub fn unit(dim: usize, i: usize, scale: u32) -> Self {
        let mut p = Point::origin(dim);
        p.0[i] = scale;
        p
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    /// Coordinatewise `≤`.
    pub fn le(&self, other: &Point) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Coordinatewise maximum (exponent vector of the lcm).
    pub fn lcm(&self, other: &Point) -> Point {
        Point(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    /// Drops the last coordinate.
    pub fn base(&self) -> Point {
        Point(self.0[..self.0.len() - 1].to_vec())
    }

    pub fn last(&self) -> u32 {
        *self.0.last().expect("nonempty point")
    }

    pub fn with_last(&self, h: u32) -> Point {
        let mut c = self.0.clone();
        c.push(h);
        Point(c)
    }

    pub fn plus_unit(&self, i: usize) -> Point {
        let mut c = self.0.clone();
        c[i] += 1;
        Point(c)
    }

    pub fn minus_unit(&self, i: usize) -> Option<Point> {
        let mut c = self.0.clone();
        c[i] = c[i].checked_sub(1)?;
        Some(Point(c))
    }

    /// Prepends a zero coordinate.
    pub fn embed(&self) -> Point {
        let mut c = Vec::with_capacity(self.0.len() + 1);
        c.push(0);
        c.extend_from_slice(&self.0);
        Point(c)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// Sorted antichain of the minimal elements of `points`.
pub fn minimalize(mut points: Vec<Point>) -> Vec<Point> {
    points.sort_by(|a, b| {
        let sa: u64 = a.0.iter().map(|&x| u64::from(x)).sum();
        let sb: u64 = b.0.iter().map(|&x| u64::from(x)).sum();
        sa.cmp(&sb).then_with(|| a.cmp(b))
    });
    points.dedup();
    let mut kept: Vec<Point> = Vec::with_capacity(points.len());
    // A point can only be dominated by one of smaller or equal coordinate sum.
    for p in points {
        if !kept.iter().any(|k| k.le(&p)) {
            kept.push(p);
        }
    }
    kept.sort();
    kept
}

/// A finite downward-closed subset of `ℕ^d`.
#[derive(Clone)]
pub struct StandardSet {
    dim: usize,
    corners: Vec<Point>,
    /// Corners in increasing order of the last coordinate, for height queries.
    by_height: Vec<Point>,
    cells: OnceLock<Vec<Point>>,
}

impl PartialEq for StandardSet {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.corners == other.corners
    }
}

impl Eq for StandardSet {}

impl PartialOrd for StandardSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for StandardSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.dim, &self.corners).cmp(&(other.dim, &other.corners))
    }
}

impl std::hash::Hash for StandardSet {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.dim.hash(state);
        self.corners.hash(state);
    }
}

impl fmt::Debug for StandardSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let corners: Vec<String> = self.corners.iter().map(ToString::to_string).collect();
        write!(f, "StandardSet(dim={}, corners=[{}])", self.dim, corners.join(" "))
    }
}

impl StandardSet {
    fn from_antichain(dim: usize, corners: Vec<Point>) -> Self {
        let mut by_height = corners.clone();
        if dim > 0 {
            by_height.sort_by_key(Point::last);
        }
        StandardSet {
            dim,
            corners,
            by_height,
            cells: OnceLock::new(),
        }
    }

    /// The set whose complement is generated by `corners`; redundant generators are dropped.
    pub fn from_corners(dim: usize, corners: Vec<Point>) -> Result<Self, StaircaseError> {
        if dim == 0 {
            return Err(StaircaseError::DimensionTooSmall(1));
        }
        if let Some(p) = corners.iter().find(|p| p.dim() != dim) {
            return Err(StaircaseError::BadPoint(p.to_string()));
        }
        let corners = minimalize(corners);
        for axis in 0..dim {
            let on_axis = corners
                .iter()
                .any(|c| c.0.iter().enumerate().all(|(j, &x)| j == axis || x == 0));
            if !on_axis {
                return Err(StaircaseError::Infinite(axis));
            }
        }
        Ok(StandardSet::from_antichain(dim, corners))
    }

    pub fn empty(dim: usize) -> Self {
        assert!(dim >= 1, "dimension must be positive");
        StandardSet::from_antichain(dim, vec![Point::origin(dim)])
    }

    /// Normalizes a downward-closed cell set to corner form.
    pub fn from_cells(dim: usize, cells: impl IntoIterator<Item = Point>) -> Result<Self, StaircaseError> {
        if dim == 0 {
            return Err(StaircaseError::DimensionTooSmall(1));
        }
        let cells: BTreeSet<Point> = cells.into_iter().collect();
        if let Some(p) = cells.iter().find(|p| p.dim() != dim) {
            return Err(StaircaseError::BadPoint(p.to_string()));
        }
        for c in &cells {
            for i in 0..dim {
                if let Some(below) = c.minus_unit(i) {
                    if !cells.contains(&below) {
                        return Err(StaircaseError::NotDownwardClosed(c.to_string(), below.to_string()));
                    }
                }
            }
        }
        if cells.is_empty() {
            return Ok(StandardSet::empty(dim));
        }
        let mut corners = BTreeSet::new();
        for c in &cells {
            for i in 0..dim {
                let x = c.plus_unit(i);
                if cells.contains(&x) {
                    continue;
                }
                let minimal = (0..dim).all(|j| x.minus_unit(j).is_none_or(|y| cells.contains(&y)));
                if minimal {
                    corners.insert(x);
                }
            }
        }
        let set = StandardSet::from_antichain(dim, corners.into_iter().collect());
        let _ = set.cells.set(cells.into_iter().collect());
        Ok(set)
    }

    /// Builds the set of cells `(γ, t)` with `t < heights[γ]`.
    pub fn from_heights(dim: usize, heights: &BTreeMap<Point, u32>) -> Result<Self, StaircaseError> {
        if dim < 2 {
            return Err(StaircaseError::DimensionTooSmall(2));
        }
        let cells = heights
            .iter()
            .flat_map(|(g, &h)| (0..h).map(move |t| g.with_last(t)));
        StandardSet::from_cells(dim, cells)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn corners(&self) -> &[Point] {
        &self.corners
    }

    pub fn contains(&self, p: &Point) -> bool {
        !self.corners.iter().any(|c| c.le(p))
    }

    pub fn is_empty(&self) -> bool {
        self.corners.len() == 1 && self.corners[0].0.iter().all(|&x| x == 0)
    }

    /// All cells in increasing lexicographic order.
    pub fn cells(&self) -> &[Point] {
        self.cells.get_or_init(|| {
            let mut seen = BTreeSet::new();
            let origin = Point::origin(self.dim);
            let mut stack = Vec::new();
            if self.contains(&origin) {
                stack.push(origin);
            }
            while let Some(p) = stack.pop() {
                if !seen.insert(p.clone()) {
                    continue;
                }
                for i in 0..self.dim {
                    let q = p.plus_unit(i);
                    if !seen.contains(&q) && self.contains(&q) {
                        stack.push(q);
                    }
                }
            }
            seen.into_iter().collect()
        })
    }

    pub fn cardinality(&self) -> usize {
        self.cells().len()
    }

    /// Union of two sets of the same dimension.
    pub fn union(&self, other: &StandardSet) -> Result<StandardSet, StaircaseError> {
        if self.dim != other.dim {
            return Err(StaircaseError::DimensionMismatch(self.dim, other.dim));
        }
        let lcms = self
            .corners
            .iter()
            .flat_map(|a| other.corners.iter().map(move |b| a.lcm(b)))
            .collect();
        Ok(StandardSet::from_antichain(self.dim, minimalize(lcms)))
    }

    /// The image of `β ↦ (0, β)` in one dimension higher.
    pub fn embed(&self) -> StandardSet {
        let dim = self.dim + 1;
        let mut corners: Vec<Point> = self.corners.iter().map(Point::embed).collect();
        corners.push(Point::unit(dim, 0, 1));
        StandardSet::from_antichain(dim, minimalize(corners))
    }

    /// Height over a base point: the number of cells above it.
    pub fn height_at(&self, gamma: &Point) -> u32 {
        debug_assert_eq!(gamma.dim() + 1, self.dim);
        for c in &self.by_height {
            if c.0[..self.dim - 1].iter().zip(&gamma.0).all(|(a, b)| a <= b) {
                return c.last();
            }
        }
        unreachable!("a finite set has a corner on the height axis")
    }

    /// The projection `q(Δ)` as a set in one dimension lower.
    pub fn base(&self) -> Result<StandardSet, StaircaseError> {
        if self.dim < 2 {
            return Err(StaircaseError::DimensionTooSmall(2));
        }
        let gens = self
            .corners
            .iter()
            .filter(|c| c.last() == 0)
            .map(Point::base)
            .collect();
        Ok(StandardSet::from_antichain(self.dim - 1, minimalize(gens)))
    }

    pub fn height_profile(&self) -> Result<HeightProfile, StaircaseError> {
        let base = self.base()?;
        let heights = base
            .cells()
            .iter()
            .map(|g| (g.clone(), self.height_at(g)))
            .collect();
        Ok(HeightProfile { base, heights })
    }
}

/// Base set and heights over it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeightProfile {
    pub base: StandardSet,
    pub heights: BTreeMap<Point, u32>,
}

/// Stacks two sets of the same dimension by adding heights.
pub fn c4_sum(a: &StandardSet, b: &StandardSet) -> Result<StandardSet, StaircaseError> {
    if a.dim() != b.dim() {
        return Err(StaircaseError::DimensionMismatch(a.dim(), b.dim()));
    }
    let (pa, pb) = (a.height_profile()?, b.height_profile()?);
    let mut heights = pa.heights;
    for (g, h) in pb.heights {
        *heights.entry(g).or_default() += h;
    }
    StandardSet::from_heights(a.dim(), &heights)
}

/// The graph on base points, labeled by heights, with edges `γ+e_i → γ`.
pub fn graph_of(delta: &StandardSet) -> Result<LabeledGraph, StaircaseError> {
    let profile = delta.height_profile()?;
    let id = |p: &Point| NodeId::new(p.to_string()).expect("rendered points are tokens");
    let nodes: Vec<(NodeId, i64)> = profile
        .heights
        .iter()
        .map(|(g, &h)| (id(g), i64::from(h)))
        .collect();
    let mut edges = Vec::new();
    for g in profile.heights.keys() {
        for i in 0..g.dim() {
            let up = g.plus_unit(i);
            if profile.heights.contains_key(&up) {
                edges.push((id(&up), id(g)));
            }
        }
    }
    Ok(LabeledGraph::new(nodes, edges).expect("staircase graph is well formed"))
}

/// A connected component of the base points of one fixed height.
///
/// Stored as the height together with the base projections of the corners
/// whose regions make up the component.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct IsohypseComponent {
    pub height: u32,
    pub generators: Vec<Point>,
}

impl IsohypseComponent {
    /// Whether `gamma` belongs to this component of `delta`.
    pub fn contains(&self, delta: &StandardSet, gamma: &Point) -> bool {
        self.generators.iter().any(|g| g.le(gamma)) && delta.height_at(gamma) == self.height
    }

    /// Base cells of this component, in increasing order.
    pub fn cells(&self, delta: &StandardSet) -> Vec<Point> {
        let base = delta.base().expect("component of a set of dimension at least 2");
        base.cells()
            .iter()
            .filter(|g| self.contains(delta, g))
            .cloned()
            .collect()
    }

    /// Corner form of the downward closure of this component.
    pub fn downward_closure(&self, delta: &StandardSet) -> StandardSet {
        let d = delta.dim();
        let lower: Vec<Point> = delta
            .corners()
            .iter()
            .filter(|c| c.last() < self.height)
            .map(Point::base)
            .collect();
        let mut acc: Option<StandardSet> = None;
        for p in &self.generators {
            let gens = lower
                .iter()
                .map(|g| Point(g.0.iter().zip(&p.0).map(|(&gi, &pi)| if gi > pi { gi } else { 0 }).collect()))
                .collect();
            let region = StandardSet::from_antichain(d - 1, minimalize(gens));
            acc = Some(match acc {
                None => region,
                Some(a) => a.union(&region).expect("same dimension"),
            });
        }
        acc.expect("component has a generator")
    }
}

/// The canonical graph of a staircase with the isohypse component behind each node.
#[derive(Clone, Debug)]
pub struct CanonicalStaircaseGraph {
    pub graph: LabeledGraph,
    /// Indexed like the nodes of `graph`.
    pub components: Vec<IsohypseComponent>,
}

impl CanonicalStaircaseGraph {
    /// Index of the node whose component contains the base point `gamma`.
    pub fn node_of_point(&self, delta: &StandardSet, gamma: &Point) -> Option<usize> {
        let h = delta.height_at(gamma);
        if h == 0 {
            return None;
        }
        self.components
            .iter()
            .position(|c| c.height == h && c.generators.iter().any(|g| g.le(gamma)))
    }
}

fn uf_find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Nodes are the connected components of the isohypses, computed from the
/// corners: each corner `α` of positive height `a` covers the region of base
/// points `≥ q(α)` of height exactly `a`, and two such regions of equal height
/// lie in one component iff the lcm of their base points still has height `a`.
pub fn canonical_graph_of(delta: &StandardSet) -> Result<CanonicalStaircaseGraph, StaircaseError> {
    if delta.dim() < 2 {
        return Err(StaircaseError::DimensionTooSmall(2));
    }
    let bd = delta.dim() - 1;
    let regions: Vec<(u32, Point)> = delta
        .corners()
        .iter()
        .filter(|c| c.last() > 0)
        .map(|c| (c.last(), c.base()))
        .collect();
    let r = regions.len();
    let mut parent: Vec<usize> = (0..r).collect();
    for i in 0..r {
        for j in i + 1..r {
            if regions[i].0 == regions[j].0 && delta.height_at(&regions[i].1.lcm(&regions[j].1)) == regions[i].0 {
                let (a, b) = (uf_find(&mut parent, i), uf_find(&mut parent, j));
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..r {
        let root = uf_find(&mut parent, i);
        classes.entry(root).or_default().push(i);
    }
    let mut components: Vec<IsohypseComponent> = classes
        .values()
        .map(|members| {
            let mut generators: Vec<Point> = members.iter().map(|&i| regions[i].1.clone()).collect();
            generators.sort();
            IsohypseComponent {
                height: regions[members[0]].0,
                generators,
            }
        })
        .collect();
    components.sort_by(|a, b| (a.height, &a.generators[0]).cmp(&(b.height, &b.generators[0])));
    let class_of_region: BTreeMap<Point, usize> = components
        .iter()
        .enumerate()
        .flat_map(|(k, c)| c.generators.iter().map(move |g| (g.clone(), k)))
        .collect();

    let mut edges = BTreeSet::new();
    for (a, p) in &regions {
        for (c, q) in &regions {
            if c <= a {
                continue;
            }
            let (from, to) = (class_of_region[p], class_of_region[q]);
            if edges.contains(&(from, to)) {
                continue;
            }
            let adjacent = (0..bd).any(|i| {
                let m = Point(
                    q.0.iter()
                        .zip(&p.0)
                        .enumerate()
                        .map(|(j, (&qj, &pj))| qj.max(if j == i { pj.saturating_sub(1) } else { pj }))
                        .collect(),
                );
                delta.height_at(&m) == *c && delta.height_at(&m.plus_unit(i)) == *a
            });
            if adjacent {
                edges.insert((from, to));
            }
        }
    }

    let ids: Vec<NodeId> = components
        .iter()
        .map(|c| NodeId::new(format!("{}@{}", c.height, c.generators[0])).expect("token"))
        .collect();
    let graph = LabeledGraph::new(
        ids.iter().cloned().zip(components.iter().map(|c| i64::from(c.height))),
        edges.iter().map(|&(a, b)| (ids[a].clone(), ids[b].clone())),
    )
    .expect("canonical staircase graph is well formed");
    // Graph nodes are ordered by id; reorder components to match.
    let by_id: BTreeMap<&NodeId, &IsohypseComponent> = ids.iter().zip(&components).collect();
    let components = by_id.into_values().cloned().collect();
    Ok(CanonicalStaircaseGraph { graph, components })
}

/// A staircase realizing a graph, with a base point inside each node's component.
#[derive(Clone, Debug)]
pub struct Realization {
    pub set: StandardSet,
    pub witnesses: BTreeMap<NodeId, Point>,
}

impl Realization {
    /// Graph node index to canonical-graph node index, via the witnesses.
    pub fn node_map(&self, g: &LabeledGraph, cg: &CanonicalStaircaseGraph) -> Vec<Option<usize>> {
        g.ids()
            .iter()
            .map(|id| {
                self.witnesses
                    .get(id)
                    .and_then(|w| cg.node_of_point(&self.set, w))
            })
            .collect()
    }
}

fn check_realizable(g: &LabeledGraph) -> Result<usize, StaircaseError> {
    let fail = |m: &str| Err(StaircaseError::PreconditionViolated(m.to_string()));
    if g.node_count() == 0 {
        return fail("graph is empty");
    }
    if !g.is_standard() || !is_canonical(g) {
        return fail("graph is not canonical");
    }
    if transitive_closure(g).edge_count() != g.edge_count() {
        return fail("graph is not transitive");
    }
    let top = g.max_label().expect("nonempty");
    let tops: Vec<usize> = (0..g.node_count()).filter(|&i| g.label(i) == top).collect();
    if tops.len() != 1 {
        return fail("no unique node of maximal label");
    }
    let m = tops[0];
    if (0..g.node_count()).any(|i| i != m && !g.has_edge(i, m)) {
        return fail("maximal node is not reachable from every node");
    }
    Ok(m)
}

/// The set `[0,2) × D × [0,h)` one dimension above `D`.
fn slab(lower: &StandardSet, h: u32) -> StandardSet {
    let dim = lower.dim() + 2;
    let mut corners = vec![Point::unit(dim, 0, 2), Point::unit(dim, dim - 1, h)];
    corners.extend(lower.corners().iter().map(|k| k.embed().with_last(0)));
    StandardSet::from_antichain(dim, minimalize(corners))
}

/// A staircase whose canonical graph is isomorphic to `g`.
///
/// Requires `g` canonical and transitive with a unique node of maximal label
/// that every other node points to. Nodes are inserted in decreasing label
/// order, each as a pillar next to the origin; then each further edge out of
/// the new node is added, targets in decreasing label order, by a slab in a
/// fresh coordinate over the downward closures of the two components. Each
/// step prepends one coordinate.
pub fn set_of_graph(g: &LabeledGraph) -> Result<Realization, StaircaseError> {
    let m = check_realizable(g)?;
    let label = |i: usize| u32::try_from(g.label(i)).expect("positive label fits");
    let mut set = StandardSet::from_antichain(2, vec![Point(vec![1, 0]), Point(vec![0, label(m)])]);
    let mut witness: BTreeMap<usize, Point> = BTreeMap::from([(m, Point(vec![0]))]);

    let mut order: Vec<usize> = (0..g.node_count()).filter(|&i| i != m).collect();
    order.sort_by_key(|&i| (std::cmp::Reverse(g.label(i)), i));

    let embed_all = |set: &mut StandardSet, witness: &mut BTreeMap<usize, Point>| {
        *set = set.embed();
        for w in witness.values_mut() {
            *w = w.embed();
        }
    };

    for v0 in order {
        embed_all(&mut set, &mut witness);
        let dim = set.dim();
        let mut pillar = vec![Point::unit(dim, 0, 2), Point::unit(dim, dim - 1, label(v0))];
        pillar.extend((1..dim - 1).map(|i| Point::unit(dim, i, 1)));
        set = set.union(&StandardSet::from_antichain(dim, minimalize(pillar)))?;
        witness.insert(v0, Point::unit(dim - 1, 0, 1));

        let mut targets: Vec<usize> = g.successors(v0).iter().copied().filter(|&t| t != m).collect();
        targets.sort_by_key(|&t| (std::cmp::Reverse(g.label(t)), t));
        for v1 in targets {
            let cg = canonical_graph_of(&set)?;
            let closure_of = |v: usize| {
                let node = cg
                    .node_of_point(&set, &witness[&v])
                    .expect("witness lies in a component");
                cg.components[node].downward_closure(&set)
            };
            let (d1, d0) = (closure_of(v1), closure_of(v0));
            embed_all(&mut set, &mut witness);
            set = set.union(&slab(&d1, label(v1)))?.union(&slab(&d0, label(v0)))?;
        }
    }
    let witnesses = witness.into_iter().map(|(i, p)| (g.id(i).clone(), p)).collect();
    Ok(Realization { set, witnesses })
}

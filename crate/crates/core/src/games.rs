//! Iterated partitions, C4 games and the bijection between them.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::GamesError;
use crate::staircase::{minimalize, Point, StandardSet};

/// A partition nested `depth` times; depth 0 is a bare positive integer.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IteratedPartition {
    Atom(u32),
    /// Members sorted in decreasing order.
    Multiset(Vec<IteratedPartition>),
}

impl IteratedPartition {
    pub fn multiset(mut members: Vec<IteratedPartition>) -> Self {
        members.sort_by(|a, b| b.cmp(a));
        IteratedPartition::Multiset(members)
    }

    pub fn total(&self) -> u32 {
        match self {
            IteratedPartition::Atom(n) => *n,
            IteratedPartition::Multiset(ms) => ms.iter().map(Self::total).sum(),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            IteratedPartition::Atom(_) => 0,
            IteratedPartition::Multiset(ms) => 1 + ms.first().map_or(0, Self::depth),
        }
    }
}

/// A staircase in dimension 1 or 2, or a multiset of games one dimension down.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum C4Game {
    Set(StandardSet),
    /// Games of dimension `dim - 1`, sorted.
    Multiset { dim: usize, members: Vec<C4Game> },
}

impl C4Game {
    pub fn multiset(dim: usize, mut members: Vec<C4Game>) -> Self {
        members.sort();
        C4Game::Multiset { dim, members }
    }

    pub fn dim(&self) -> usize {
        match self {
            C4Game::Set(s) => s.dim(),
            C4Game::Multiset { dim, .. } => *dim,
        }
    }

    pub fn size(&self) -> usize {
        match self {
            C4Game::Set(s) => s.cardinality(),
            C4Game::Multiset { members, .. } => members.iter().map(Self::size).sum(),
        }
    }
}

/// Multisets of items whose sizes sum to `n`; `items[k]` lists the items of size `k + 1`.
fn multisets_by_total<T: Clone>(n: usize, items: &[Vec<T>]) -> Vec<Vec<T>> {
    let flat: Vec<(usize, &T)> = items
        .iter()
        .enumerate()
        .flat_map(|(k, xs)| xs.iter().map(move |x| (k + 1, x)))
        .collect();
    let mut out = Vec::new();

    fn go<T: Clone>(flat: &[(usize, &T)], start: usize, left: usize, acc: &mut Vec<T>, out: &mut Vec<Vec<T>>) {
        if left == 0 {
            out.push(acc.clone());
            return;
        }
        for j in start..flat.len() {
            let (size, item) = flat[j];
            if size <= left {
                acc.push(item.clone());
                go(flat, j, left - size, acc, out);
                acc.pop();
            }
        }
    }

    go(&flat, 0, n, &mut Vec::new(), &mut out);
    out
}

/// All `q`-fold iterated partitions of `n`, sorted.
pub fn iterated_partitions(n: usize, q: usize) -> Result<Vec<IteratedPartition>, GamesError> {
    if n == 0 {
        return Err(GamesError::NonPositive);
    }
    let mut memo = BTreeMap::new();
    Ok(iterated_memo(n, q, &mut memo))
}

fn iterated_memo(
    n: usize,
    q: usize,
    memo: &mut BTreeMap<(usize, usize), Vec<IteratedPartition>>,
) -> Vec<IteratedPartition> {
    if let Some(v) = memo.get(&(n, q)) {
        return v.clone();
    }
    let result = if q == 0 {
        vec![IteratedPartition::Atom(n as u32)]
    } else {
        let items: Vec<Vec<IteratedPartition>> = (1..=n).map(|k| iterated_memo(k, q - 1, memo)).collect();
        let mut all: Vec<IteratedPartition> = multisets_by_total(n, &items)
            .into_iter()
            .map(IteratedPartition::multiset)
            .collect();
        all.sort();
        all
    };
    memo.insert((n, q), result.clone());
    result
}

/// Adds one cell at a corner; every corner of a finite set is addable.
fn add_cell(s: &StandardSet, corner: &Point) -> StandardSet {
    let mut corners: Vec<Point> = s.corners().iter().filter(|c| *c != corner).cloned().collect();
    corners.extend((0..s.dim()).map(|i| corner.plus_unit(i)));
    StandardSet::from_corners(s.dim(), minimalize(corners)).expect("adding a cell keeps the set finite")
}

/// All staircases of cardinality `n` in `ℕ^d`, sorted.
pub fn staircases_of_size(n: usize, d: usize) -> Vec<StandardSet> {
    let mut level: BTreeSet<StandardSet> = BTreeSet::from([StandardSet::empty(d)]);
    for _ in 0..n {
        level = level
            .iter()
            .flat_map(|s| s.corners().iter().map(move |c| add_cell(s, c)))
            .collect();
    }
    level.into_iter().collect()
}

/// All C4 games of size `n` in `ℕ^d`, sorted.
pub fn c4_games(n: usize, d: usize) -> Result<Vec<C4Game>, GamesError> {
    if n == 0 || d == 0 {
        return Err(GamesError::NonPositive);
    }
    let mut memo = BTreeMap::new();
    Ok(games_memo(n, d, &mut memo))
}

fn games_memo(n: usize, d: usize, memo: &mut BTreeMap<(usize, usize), Vec<C4Game>>) -> Vec<C4Game> {
    if let Some(v) = memo.get(&(n, d)) {
        return v.clone();
    }
    let result = if d <= 2 {
        staircases_of_size(n, d).into_iter().map(C4Game::Set).collect()
    } else {
        let items: Vec<Vec<C4Game>> = (1..=n).map(|k| games_memo(k, d - 1, memo)).collect();
        let mut all: Vec<C4Game> = multisets_by_total(n, &items)
            .into_iter()
            .map(|ms| C4Game::multiset(d, ms))
            .collect();
        all.sort();
        all
    };
    memo.insert((n, d), result.clone());
    result
}

/// Young diagram of a partition in French convention: row `y` has the
/// `y`-th largest part as its length along the first axis.
pub fn young_diagram(parts: &[u32]) -> StandardSet {
    let mut sorted = parts.to_vec();
    sorted.sort_by(|a, b| b.cmp(a));
    let cells = sorted
        .iter()
        .enumerate()
        .flat_map(|(y, &len)| (0..len).map(move |x| Point(vec![x, y as u32])));
    StandardSet::from_cells(2, cells).expect("Young diagrams are staircases")
}

/// Maps a `(d-1)`-fold iterated partition to a C4 game in `ℕ^d`.
pub fn f(p: &IteratedPartition, d: usize) -> Result<C4Game, GamesError> {
    if d == 0 || p.depth() + 1 != d {
        return Err(GamesError::DepthMismatch { depth: p.depth(), dim: d });
    }
    Ok(match (p, d) {
        (IteratedPartition::Atom(n), 1) => C4Game::Set(
            StandardSet::from_corners(1, vec![Point(vec![*n])]).expect("interval"),
        ),
        (IteratedPartition::Multiset(ms), 2) => {
            let parts: Vec<u32> = ms.iter().map(IteratedPartition::total).collect();
            C4Game::Set(young_diagram(&parts))
        }
        (IteratedPartition::Multiset(ms), _) => C4Game::multiset(
            d,
            ms.iter().map(|m| f(m, d - 1)).collect::<Result<Vec<_>, _>>()?,
        ),
        (IteratedPartition::Atom(_), _) => unreachable!("depth checked above"),
    })
}

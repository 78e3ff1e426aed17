//! List assignments, exact list colouring, and bad list assignments on Gallai trees.

mod gallai;
mod solver;
mod tiny;

pub use gallai::{block_degree, gallai_bad_certificate, is_gallai_tree, BadListCertificate};
pub use solver::{for_each_coloring, solve_list_coloring, verify_coloring, SolveStats, Solver};
pub use tiny::{is_f_choosable_tiny, TINY_CAP};

use std::fmt;

use thiserror::Error;

use crate::graph::PlaneGraph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChoosabilityError {
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph is not a Gallai tree (block {0:?})")]
    NotGallaiTree(Vec<usize>),
    #[error("vertex {vertex} has a list of size {size} below its degree {degree}")]
    ListTooSmall {
        vertex: usize,
        size: usize,
        degree: usize,
    },
    #[error("sum of demands {sum} exceeds the cap {cap}")]
    CapExceeded { sum: usize, cap: usize },
    #[error("colour universe {0} exceeds 64")]
    UniverseTooLarge(usize),
    #[error("colour {colour} at vertex {vertex} lies outside the universe {universe}")]
    ColourOutOfRange {
        vertex: usize,
        colour: usize,
        universe: usize,
    },
    #[error("list assignment covers {lists} vertices, graph has {n}")]
    SizeMismatch { lists: usize, n: usize },
}

/// A set of colours from `0..64`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColorSet(pub u64);

impl ColorSet {
    pub const EMPTY: ColorSet = ColorSet(0);

    pub fn singleton(c: usize) -> Self {
        ColorSet(1 << c)
    }

    /// `{0, .., k-1}`.
    pub fn range(k: usize) -> Self {
        if k >= 64 {
            ColorSet(u64::MAX)
        } else {
            ColorSet((1u64 << k) - 1)
        }
    }

    pub fn contains(self, c: usize) -> bool {
        c < 64 && self.0 >> c & 1 == 1
    }

    pub fn insert(&mut self, c: usize) {
        self.0 |= 1 << c;
    }

    pub fn remove(&mut self, c: usize) {
        self.0 &= !(1 << c);
    }

    pub fn with(self, c: usize) -> Self {
        ColorSet(self.0 | 1 << c)
    }

    pub fn without(self, c: usize) -> Self {
        ColorSet(self.0 & !(1 << c))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, o: Self) -> Self {
        ColorSet(self.0 | o.0)
    }

    pub fn intersection(self, o: Self) -> Self {
        ColorSet(self.0 & o.0)
    }

    pub fn difference(self, o: Self) -> Self {
        ColorSet(self.0 & !o.0)
    }

    pub fn is_subset(self, o: Self) -> bool {
        self.0 & !o.0 == 0
    }

    pub fn is_disjoint(self, o: Self) -> bool {
        self.0 & o.0 == 0
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let c = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(c)
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for ColorSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = ColorSet::EMPTY;
        for c in iter {
            s.insert(c);
        }
        s
    }
}

impl fmt::Debug for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, c) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("}")
    }
}

/// One colour list per vertex over the universe `0..universe`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListAssignment {
    universe: usize,
    lists: Vec<ColorSet>,
}

impl ListAssignment {
    pub fn new(universe: usize, lists: Vec<ColorSet>) -> Result<Self, ChoosabilityError> {
        if universe > 64 {
            return Err(ChoosabilityError::UniverseTooLarge(universe));
        }
        let all = ColorSet::range(universe);
        if let Some((v, l)) = lists.iter().enumerate().find(|(_, l)| !l.is_subset(all)) {
            let colour = l.difference(all).min().unwrap();
            return Err(ChoosabilityError::ColourOutOfRange {
                vertex: v,
                colour,
                universe,
            });
        }
        Ok(ListAssignment { universe, lists })
    }

    pub fn from_vecs(universe: usize, lists: &[Vec<usize>]) -> Result<Self, ChoosabilityError> {
        if let Some((v, &c)) = lists
            .iter()
            .enumerate()
            .find_map(|(v, l)| l.iter().find(|&&c| c >= universe.min(64)).map(|c| (v, c)))
        {
            return Err(ChoosabilityError::ColourOutOfRange {
                vertex: v,
                colour: c,
                universe,
            });
        }
        Self::new(
            universe,
            lists.iter().map(|l| l.iter().copied().collect()).collect(),
        )
    }

    /// Every vertex gets the whole universe.
    pub fn uniform(universe: usize, n: usize) -> Self {
        ListAssignment {
            universe,
            lists: vec![ColorSet::range(universe); n],
        }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }

    pub fn get(&self, v: usize) -> ColorSet {
        self.lists[v]
    }

    pub fn set(&mut self, v: usize, l: ColorSet) {
        self.lists[v] = l;
    }

    pub fn lists(&self) -> &[ColorSet] {
        &self.lists
    }

    pub fn to_vecs(&self) -> Vec<Vec<usize>> {
        self.lists.iter().map(|l| l.to_vec()).collect()
    }

    /// Lists of the vertices `map[0], map[1], ..` (as returned by [`PlaneGraph::induced`]).
    pub fn restrict(&self, map: &[usize]) -> ListAssignment {
        ListAssignment {
            universe: self.universe,
            lists: map.iter().map(|&v| self.lists[v]).collect(),
        }
    }

    /// Whether `self ⊆ other` pointwise.
    pub fn is_subassignment_of(&self, other: &ListAssignment) -> bool {
        self.lists.len() == other.lists.len()
            && self
                .lists
                .iter()
                .zip(&other.lists)
                .all(|(a, b)| a.is_subset(*b))
    }

    pub(crate) fn check_graph(&self, g: &PlaneGraph) -> Result<(), ChoosabilityError> {
        if self.lists.len() != g.n() {
            return Err(ChoosabilityError::SizeMismatch {
                lists: self.lists.len(),
                n: g.n(),
            });
        }
        Ok(())
    }
}

/// Required list size per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DemandFunction(pub Vec<usize>);

impl DemandFunction {
    pub fn get(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// Vertices whose list is smaller than demanded.
    pub fn violations(&self, l: &ListAssignment) -> Vec<usize> {
        (0..self.0.len())
            .filter(|&v| l.get(v).len() < self.0[v])
            .collect()
    }
}

/// `f(v) = min(k, d(v))`.
pub fn truncated_assignment_demand(g: &PlaneGraph, k: usize) -> DemandFunction {
    assert!(k >= 1, "k must be positive");
    DemandFunction((0..g.n()).map(|v| g.degree(v).min(k)).collect())
}

/// Colours on a subset `X` of the vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialColoring {
    color: Vec<Option<usize>>,
}

impl PartialColoring {
    pub fn empty(n: usize) -> Self {
        PartialColoring {
            color: vec![None; n],
        }
    }

    pub fn from_options(color: Vec<Option<usize>>) -> Self {
        PartialColoring { color }
    }

    pub fn get(&self, v: usize) -> Option<usize> {
        self.color[v]
    }

    pub fn is_colored(&self, v: usize) -> bool {
        self.color[v].is_some()
    }

    pub fn set(&mut self, v: usize, c: usize) {
        self.color[v] = Some(c);
    }

    pub fn unset(&mut self, v: usize) {
        self.color[v] = None;
    }

    pub fn colored(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.color.len()).filter(|&v| self.color[v].is_some())
    }

    pub fn count(&self) -> usize {
        self.color.iter().filter(|c| c.is_some()).count()
    }

    pub fn as_slice(&self) -> &[Option<usize>] {
        &self.color
    }

    /// Proper on `G[X]` and list-respecting.
    pub fn is_valid(&self, g: &PlaneGraph, l: &ListAssignment) -> bool {
        self.colored().all(|v| {
            let c = self.color[v].unwrap();
            l.get(v).contains(c) && g.neighbors(v).iter().all(|&w| self.color[w] != Some(c))
        })
    }
}

/// `L^φ`: for each uncoloured vertex, its list minus the colours of its coloured
/// neighbours. Entries of coloured vertices are empty; use
/// [`ListAssignment::restrict`] to drop them.
pub fn residual_lists(g: &PlaneGraph, l: &ListAssignment, pc: &PartialColoring) -> ListAssignment {
    let lists = (0..g.n())
        .map(|v| {
            if pc.is_colored(v) {
                return ColorSet::EMPTY;
            }
            g.neighbors(v)
                .iter()
                .filter_map(|&w| pc.get(w))
                .fold(l.get(v), |acc, c| acc.without(c))
        })
        .collect();
    ListAssignment {
        universe: l.universe,
        lists,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    fn sets(v: &[&[usize]]) -> Vec<ColorSet> {
        v.iter().map(|l| l.iter().copied().collect()).collect()
    }

    #[test]
    fn color_set_ops() {
        let a: ColorSet = [1, 3, 5].into_iter().collect();
        assert_eq!(a.len(), 3);
        assert_eq!(a.to_vec(), vec![1, 3, 5]);
        assert_eq!(a.min(), Some(1));
        assert!(a.without(3).is_subset(a));
        assert_eq!(format!("{a}"), "{1,3,5}");
        assert_eq!(ColorSet::range(64).len(), 64);
    }

    #[test]
    fn residual_on_an_edge() {
        let g = PlaneGraph::from_edges(2, &[(0, 1)]).unwrap();
        let l = ListAssignment::new(3, sets(&[&[1, 2], &[1, 2]])).unwrap();
        let mut pc = PartialColoring::empty(2);
        assert_eq!(residual_lists(&g, &l, &pc), l);
        pc.set(0, 1);
        assert_eq!(residual_lists(&g, &l, &pc).get(1).to_vec(), vec![2]);
    }

    #[test]
    fn residual_on_a_triangle() {
        let g = cycle(3);
        let l = ListAssignment::new(4, sets(&[&[1, 2, 3][..]; 3])).unwrap();
        let pc = PartialColoring::from_options(vec![Some(1), Some(2), None]);
        assert!(pc.is_valid(&g, &l));
        assert_eq!(residual_lists(&g, &l, &pc).get(2).to_vec(), vec![3]);
    }

    #[test]
    fn truncated_demand() {
        assert_eq!(truncated_assignment_demand(&k4(), 8).0, vec![3; 4]);
        let star: Vec<(usize, usize)> = (1..10).map(|i| (0, i)).collect();
        let g = PlaneGraph::from_edges(10, &star).unwrap();
        let f = truncated_assignment_demand(&g, 8);
        assert_eq!(f.get(0), 8);
        assert!((1..10).all(|v| f.get(v) == 1));
    }

    #[test]
    fn list_validation() {
        assert!(matches!(
            ListAssignment::from_vecs(3, &[vec![3]]),
            Err(ChoosabilityError::ColourOutOfRange { .. })
        ));
        assert_eq!(
            ListAssignment::new(65, vec![]),
            Err(ChoosabilityError::UniverseTooLarge(65))
        );
    }
}

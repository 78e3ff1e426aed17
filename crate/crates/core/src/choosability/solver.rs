use super::{ColorSet, ListAssignment};
use crate::graph::PlaneGraph;

const NONE: usize = usize::MAX;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SolveStats {
    /// Branching assignments tried (forced singletons are not counted).
    pub nodes: u64,
}

/// Exact backtracking list colouring.
///
/// Branches on an uncoloured vertex with the fewest remaining colours, trying
/// colours in increasing order. Singleton lists are propagated eagerly and an
/// empty list prunes immediately. Ties go to the lowest vertex id unless a
/// priority order is supplied.
#[derive(Debug, Clone)]
pub struct Solver<'a> {
    g: &'a PlaneGraph,
    rank: Vec<usize>,
}

impl<'a> Solver<'a> {
    pub fn new(g: &'a PlaneGraph) -> Self {
        Solver {
            g,
            rank: (0..g.n()).collect(),
        }
    }

    /// Ties are broken by position in `priority`, a permutation of the vertices.
    pub fn with_priority(mut self, priority: &[usize]) -> Self {
        assert_eq!(priority.len(), self.g.n());
        for (i, &v) in priority.iter().enumerate() {
            self.rank[v] = i;
        }
        self
    }

    pub fn solve(&self, l: &ListAssignment) -> (Option<Vec<usize>>, SolveStats) {
        let mut found = None;
        let stats = self.for_each(l, |c| {
            found = Some(c.to_vec());
            false
        });
        if let Some(c) = &found {
            assert!(
                verify_coloring(self.g, l, c),
                "solver returned an invalid colouring"
            );
        }
        (found, stats)
    }

    /// Calls `visit` on every `L`-colouring until it returns `false`.
    pub fn for_each<F: FnMut(&[usize]) -> bool>(
        &self,
        l: &ListAssignment,
        mut visit: F,
    ) -> SolveStats {
        assert_eq!(l.len(), self.g.n(), "list assignment size");
        let mut stats = SolveStats::default();
        let mut dom: Vec<ColorSet> = l.lists().to_vec();
        let mut col = vec![NONE; self.g.n()];
        if dom.iter().any(|d| d.is_empty()) {
            return stats;
        }
        let singles: Vec<usize> = (0..self.g.n()).filter(|&v| dom[v].len() == 1).collect();
        if self.propagate(&mut dom, &mut col, singles) {
            self.search(dom, col, &mut stats, &mut visit);
        }
        stats
    }

    /// Colours `v` with `c` and propagates forced singletons.
    fn assign(&self, dom: &mut [ColorSet], col: &mut [usize], v: usize, c: usize) -> bool {
        dom[v] = ColorSet::singleton(c);
        self.propagate(dom, col, vec![v])
    }

    fn propagate(&self, dom: &mut [ColorSet], col: &mut [usize], mut queue: Vec<usize>) -> bool {
        while let Some(v) = queue.pop() {
            if col[v] != NONE {
                continue;
            }
            let c = dom[v].min().expect("queued vertices have a singleton list");
            col[v] = c;
            for &w in self.g.neighbors(v) {
                if col[w] == NONE && dom[w].contains(c) {
                    dom[w].remove(c);
                    match dom[w].len() {
                        0 => return false,
                        1 => queue.push(w),
                        _ => {}
                    }
                } else if col[w] == c {
                    return false;
                }
            }
        }
        true
    }

    fn search<F: FnMut(&[usize]) -> bool>(
        &self,
        dom: Vec<ColorSet>,
        col: Vec<usize>,
        stats: &mut SolveStats,
        visit: &mut F,
    ) -> bool {
        let pick = (0..self.g.n())
            .filter(|&v| col[v] == NONE)
            .min_by_key(|&v| (dom[v].len(), self.rank[v]));
        let Some(v) = pick else {
            return visit(&col);
        };
        for c in dom[v].iter() {
            stats.nodes += 1;
            let (mut d2, mut c2) = (dom.clone(), col.clone());
            if self.assign(&mut d2, &mut c2, v, c) && !self.search(d2, c2, stats, visit) {
                return false;
            }
        }
        true
    }
}

/// An `L`-colouring of `g`, or `None` if there is none.
pub fn solve_list_coloring(g: &PlaneGraph, l: &ListAssignment) -> Option<Vec<usize>> {
    Solver::new(g).solve(l).0
}

/// Calls `visit` on every `L`-colouring of `g` until it returns `false`.
pub fn for_each_coloring<F: FnMut(&[usize]) -> bool>(
    g: &PlaneGraph,
    l: &ListAssignment,
    visit: F,
) -> SolveStats {
    Solver::new(g).for_each(l, visit)
}

/// Whether `col` is proper and respects `L`.
pub fn verify_coloring(g: &PlaneGraph, l: &ListAssignment, col: &[usize]) -> bool {
    col.len() == g.n()
        && (0..g.n()).all(|v| l.get(v).contains(col[v]))
        && g.edges().all(|(u, v)| col[u] != col[v])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use proptest::prelude::*;

    fn la(universe: usize, lists: &[&[usize]]) -> ListAssignment {
        ListAssignment::from_vecs(
            universe,
            &lists.iter().map(|l| l.to_vec()).collect::<Vec<_>>(),
        )
        .unwrap()
    }

    #[test]
    fn k4_forces_the_extra_colour() {
        let l = la(8, &[&[1, 2, 3], &[1, 2, 3], &[1, 2, 3], &[1, 2, 3, 7]]);
        assert!(solve_list_coloring(&k4(), &l).is_some());
        let mut count = 0;
        for_each_coloring(&k4(), &l, |c| {
            assert_eq!(c[3], 7);
            count += 1;
            true
        });
        assert_eq!(count, 6);
    }

    #[test]
    fn odd_cycle_two_lists() {
        let l = la(3, &[&[1, 2][..]; 5]);
        assert_eq!(solve_list_coloring(&cycle(5), &l), None);
    }

    #[test]
    fn single_vertex() {
        let g = PlaneGraph::empty(1);
        assert_eq!(solve_list_coloring(&g, &la(6, &[&[5]])), Some(vec![5]));
        assert_eq!(solve_list_coloring(&g, &la(6, &[&[]])), None);
    }

    #[test]
    fn priority_changes_search_not_answer() {
        let g = wheel(5);
        let l = ListAssignment::uniform(3, 6);
        let a = Solver::new(&g).solve(&l);
        let b = Solver::new(&g).with_priority(&[5, 4, 3, 2, 1, 0]).solve(&l);
        assert_eq!(a.0.is_some(), b.0.is_some());
        assert!(a.0.is_none());
    }

    fn brute_force(g: &PlaneGraph, l: &ListAssignment) -> usize {
        let n = g.n();
        let lists: Vec<Vec<usize>> = l.to_vecs();
        let mut count = 0;
        let mut col = vec![0; n];
        fn rec(
            v: usize,
            g: &PlaneGraph,
            lists: &[Vec<usize>],
            col: &mut Vec<usize>,
            count: &mut usize,
        ) {
            if v == g.n() {
                if g.edges().all(|(a, b)| col[a] != col[b]) {
                    *count += 1;
                }
                return;
            }
            for &c in &lists[v] {
                col[v] = c;
                rec(v + 1, g, lists, col, count);
            }
        }
        rec(0, g, &lists, &mut col, &mut count);
        count
    }

    fn random_instance() -> impl Strategy<Value = (PlaneGraph, ListAssignment)> {
        (1usize..=8).prop_flat_map(|n| {
            (
                proptest::collection::vec(any::<bool>(), n * (n - 1) / 2),
                proptest::collection::vec(proptest::collection::btree_set(0usize..4, 0..=3), n),
            )
                .prop_map(move |(bits, lists)| {
                    let mut edges = Vec::new();
                    let mut i = 0;
                    for u in 0..n {
                        for v in u + 1..n {
                            if bits[i] {
                                edges.push((u, v));
                            }
                            i += 1;
                        }
                    }
                    let g = PlaneGraph::from_edges(n, &edges).unwrap();
                    let lists: Vec<Vec<usize>> =
                        lists.into_iter().map(|s| s.into_iter().collect()).collect();
                    (g, ListAssignment::from_vecs(4, &lists).unwrap())
                })
        })
    }

    proptest! {
        #[test]
        fn agrees_with_exhaustive_enumeration((g, l) in random_instance()) {
            let expected = brute_force(&g, &l);
            let mut seen = 0;
            for_each_coloring(&g, &l, |c| {
                assert!(verify_coloring(&g, &l, c));
                seen += 1;
                true
            });
            prop_assert_eq!(seen, expected);
            prop_assert_eq!(solve_list_coloring(&g, &l).is_some(), expected > 0);
        }

        #[test]
        fn enlarging_lists_preserves_colourability((g, l) in random_instance(), extra in proptest::collection::vec(0usize..4, 8)) {
            let mut bigger = l.clone();
            for v in 0..g.n() {
                bigger.set(v, l.get(v).with(extra[v]));
            }
            prop_assert!(l.is_subassignment_of(&bigger));
            if solve_list_coloring(&g, &l).is_some() {
                prop_assert!(solve_list_coloring(&g, &bigger).is_some());
            }
        }
    }
}

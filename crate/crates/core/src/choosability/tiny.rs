use super::{ChoosabilityError, ColorSet, DemandFunction, ListAssignment, Solver};
use crate::graph::PlaneGraph;

/// Largest admissible `Σ f(v)` for [`is_f_choosable_tiny`].
pub const TINY_CAP: usize = 24;

/// Whether `g` is colourable from every assignment with `|L(v)| = f(v)`.
///
/// A universe of `Σ f(v)` colours suffices. Assignments are enumerated up to
/// renaming of colours: vertex `v` takes some colours already used by earlier
/// vertices plus a run of fresh colours, so every assignment is represented by
/// the one whose colours appear in first-use order.
pub fn is_f_choosable_tiny(g: &PlaneGraph, f: &DemandFunction) -> Result<bool, ChoosabilityError> {
    let sum = f.total();
    if sum > TINY_CAP {
        return Err(ChoosabilityError::CapExceeded { sum, cap: TINY_CAP });
    }
    let solver = Solver::new(g);
    let mut lists = vec![ColorSet::EMPTY; g.n()];
    Ok(extend(g, f, &solver, sum, 0, 0, &mut lists))
}

fn extend(
    g: &PlaneGraph,
    f: &DemandFunction,
    solver: &Solver,
    universe: usize,
    v: usize,
    used: usize,
    lists: &mut Vec<ColorSet>,
) -> bool {
    if v == g.n() {
        let l = ListAssignment::new(universe.max(1), lists.clone()).expect("universe within cap");
        return solver.solve(&l).0.is_some();
    }
    let need = f.get(v);
    for fresh in 0..=need {
        let old = need - fresh;
        if old > used {
            continue;
        }
        let fresh_set = ColorSet::range(used + fresh).difference(ColorSet::range(used));
        let mut ok = true;
        for_each_subset(used, old, &mut |sub| {
            lists[v] = sub.union(fresh_set);
            ok = extend(g, f, solver, universe, v + 1, used + fresh, lists);
            ok
        });
        if !ok {
            return false;
        }
    }
    true
}

/// Calls `visit` on every `k`-subset of `0..n` until it returns `false`.
fn for_each_subset(n: usize, k: usize, visit: &mut dyn FnMut(ColorSet) -> bool) -> bool {
    fn rec(
        start: usize,
        n: usize,
        k: usize,
        acc: ColorSet,
        visit: &mut dyn FnMut(ColorSet) -> bool,
    ) -> bool {
        if k == 0 {
            return visit(acc);
        }
        for c in start..=n - k {
            if !rec(c + 1, n, k - 1, acc.with(c), visit) {
                return false;
            }
        }
        true
    }
    rec(0, n, k, ColorSet::EMPTY, visit)
}

use super::{ProcedureError, TruncPartition};
use crate::choosability::{
    gallai_bad_certificate, is_gallai_tree, residual_lists, ColorSet, ListAssignment,
    PartialColoring, Solver,
};
use crate::graph::{block_cut_tree, PlaneGraph};

/// Shared inputs of the freeness oracles.
#[derive(Debug, Clone, Copy)]
pub struct OracleCtx<'a> {
    pub g: &'a PlaneGraph,
    pub p: &'a TruncPartition,
    pub l: &'a ListAssignment,
    /// Maximum number of extension tuples one oracle call may enumerate.
    pub cap: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FreeReason {
    /// Some vertex has more colours than uncoloured neighbours.
    SpareColor,
    /// Two non-cut vertices of one block see the same uncoloured high vertices
    /// but have different lists.
    TwinLists,
    /// No extension makes the lists bad.
    Exhaustive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Freeness {
    Free(FreeReason),
    NotFree,
}

impl Freeness {
    pub fn is_free(self) -> bool {
        matches!(self, Freeness::Free(_))
    }
}

/// Whether `r` is not colourable from `lists` (exact). Uses the block
/// certificate when every list is exactly as large as the degree.
pub fn is_bad(r: &PlaneGraph, lists: &ListAssignment) -> bool {
    let n = r.n();
    if n == 0 {
        return false;
    }
    let short = (0..n).any(|v| lists.get(v).len() < r.degree(v));
    if short || r.components().len() != 1 {
        return Solver::new(r).solve(lists).0.is_none();
    }
    if (0..n).any(|v| lists.get(v).len() > r.degree(v)) {
        return false;
    }
    if !is_gallai_tree(r).expect("connected") {
        return false;
    }
    gallai_bad_certificate(r, lists)
        .expect("preconditions checked")
        .is_some()
}

/// The uncoloured part `Q - X` of component `q`.
fn remaining(p: &TruncPartition, q: usize, pc: &PartialColoring) -> Vec<usize> {
    p.components[q]
        .iter()
        .copied()
        .filter(|&v| !pc.is_colored(v))
        .collect()
}

/// Cheap sufficient conditions for freeness, checked on `L^φ`.
pub fn fast_free(ctx: &OracleCtx, q: usize, pc: &PartialColoring) -> Option<FreeReason> {
    let g = ctx.g;
    let rest = remaining(ctx.p, q, pc);
    let lp = residual_lists(g, ctx.l, pc);
    let live_deg = |v: usize| {
        g.neighbors(v)
            .iter()
            .filter(|&&w| !pc.is_colored(w))
            .count()
    };
    if rest.iter().any(|&v| lp.get(v).len() > live_deg(v)) {
        return Some(FreeReason::SpareColor);
    }
    let mut keep = vec![false; g.n()];
    rest.iter().for_each(|&v| keep[v] = true);
    let (r, map) = g.induced(&keep);
    let tree = block_cut_tree(&r);
    let high_nbrs = |v: usize| -> Vec<usize> {
        g.neighbors(v)
            .iter()
            .copied()
            .filter(|&w| ctx.p.high[w] && !pc.is_colored(w))
            .collect()
    };
    for blk in &tree.blocks {
        let plain: Vec<usize> = blk
            .iter()
            .copied()
            .filter(|&v| !tree.is_cut_vertex(v))
            .map(|v| map[v])
            .collect();
        for (i, &a) in plain.iter().enumerate() {
            for &b in &plain[i + 1..] {
                if lp.get(a) != lp.get(b) && high_nbrs(a) == high_nbrs(b) {
                    return Some(FreeReason::TwinLists);
                }
            }
        }
    }
    None
}

/// Enumerates colourings `ψ` of the uncoloured high vertices that matter for
/// one component, looking for ones that make `Q - X` bad and extend to the
/// rest of `V2`.
struct Enumerator<'a> {
    ctx: &'a OracleCtx<'a>,
    lp: ListAssignment,
    /// Host ids of `Q - X`, and its induced graph.
    r_map: Vec<usize>,
    r: PlaneGraph,
    /// Enumerated high vertices (host ids).
    w: Vec<usize>,
    /// Uncoloured high vertices outside `w`, and their induced graph.
    rest_map: Vec<usize>,
    rest: PlaneGraph,
    tuples: u64,
}

impl<'a> Enumerator<'a> {
    fn new(ctx: &'a OracleCtx<'a>, q: usize, pc: &PartialColoring, extra: &[usize]) -> Self {
        let g = ctx.g;
        let lp = residual_lists(g, ctx.l, pc);
        let r_list = remaining(ctx.p, q, pc);
        let mut keep = vec![false; g.n()];
        r_list.iter().for_each(|&v| keep[v] = true);
        let (r, r_map) = g.induced(&keep);
        let mut w: Vec<usize> = r_list
            .iter()
            .flat_map(|&v| g.neighbors(v).iter().copied())
            .chain(extra.iter().copied())
            .filter(|&x| ctx.p.high[x] && !pc.is_colored(x))
            .collect();
        w.sort_unstable();
        w.dedup();
        let mut in_rest = vec![false; g.n()];
        for &v in &ctx.p.v2 {
            in_rest[v] = !pc.is_colored(v) && w.binary_search(&v).is_err();
        }
        let (rest, rest_map) = g.induced(&in_rest);
        Enumerator {
            ctx,
            lp,
            r_map,
            r,
            w,
            rest_map,
            rest,
            tuples: 0,
        }
    }

    /// Whether some extension with `pin` (vertex, colour) applied makes the
    /// component bad.
    fn exists_bad(&mut self, pin: Option<(usize, usize)>) -> Result<bool, ProcedureError> {
        let mut psi = vec![usize::MAX; self.w.len()];
        self.search(0, &mut psi, pin)
    }

    fn search(
        &mut self,
        i: usize,
        psi: &mut [usize],
        pin: Option<(usize, usize)>,
    ) -> Result<bool, ProcedureError> {
        let g = self.ctx.g;
        if i == self.w.len() {
            self.tuples += 1;
            if self.tuples > self.ctx.cap {
                return Err(ProcedureError::OracleCap(self.ctx.cap));
            }
            return Ok(self.bad_under(psi) && self.extends(psi));
        }
        let v = self.w[i];
        let mut choices = self.lp.get(v);
        for (j, &x) in self.w[..i].iter().enumerate() {
            if g.has_edge(v, x) {
                choices.remove(psi[j]);
            }
        }
        if let Some((pv, pcol)) = pin {
            if pv == v {
                choices = choices.intersection(ColorSet::singleton(pcol));
            }
        }
        for c in choices.iter() {
            psi[i] = c;
            if self.search(i + 1, psi, pin)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn bad_under(&self, psi: &[usize]) -> bool {
        let g = self.ctx.g;
        let lists: Vec<ColorSet> = self
            .r_map
            .iter()
            .map(|&v| {
                let mut l = self.lp.get(v);
                for (j, &x) in self.w.iter().enumerate() {
                    if g.has_edge(v, x) {
                        l.remove(psi[j]);
                    }
                }
                l
            })
            .collect();
        is_bad(
            &self.r,
            &ListAssignment::new(self.lp.universe(), lists).unwrap(),
        )
    }

    fn extends(&self, psi: &[usize]) -> bool {
        if self.rest.n() == 0 {
            return true;
        }
        let g = self.ctx.g;
        let lists: Vec<ColorSet> = self
            .rest_map
            .iter()
            .map(|&v| {
                let mut l = self.lp.get(v);
                for (j, &x) in self.w.iter().enumerate() {
                    if g.has_edge(v, x) {
                        l.remove(psi[j]);
                    }
                }
                l
            })
            .collect();
        Solver::new(&self.rest)
            .solve(&ListAssignment::new(self.lp.universe(), lists).unwrap())
            .0
            .is_some()
    }
}

/// Exact freeness by enumeration, without the sufficient conditions.
pub fn exact_free(ctx: &OracleCtx, q: usize, pc: &PartialColoring) -> Result<bool, ProcedureError> {
    Ok(!Enumerator::new(ctx, q, pc, &[]).exists_bad(None)?)
}

/// Whether every extension of `pc` to `V2` leaves `Q - X` colourable. The
/// sufficient conditions are tried first.
pub fn is_free(
    ctx: &OracleCtx,
    q: usize,
    pc: &PartialColoring,
) -> Result<Freeness, ProcedureError> {
    if let Some(r) = fast_free(ctx, q, pc) {
        return Ok(Freeness::Free(r));
    }
    Ok(if exact_free(ctx, q, pc)? {
        Freeness::Free(FreeReason::Exhaustive)
    } else {
        Freeness::NotFree
    })
}

/// `S*_{u,Q}`: the colours of `L^φ(u)` that some bad-making extension gives `u`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Savior {
    pub set: ColorSet,
}

impl Savior {
    pub fn is_savior(&self) -> bool {
        self.set.len() <= 3
    }
}

fn bad_colors_at(
    ctx: &OracleCtx,
    w: usize,
    q: usize,
    pc: &PartialColoring,
) -> Result<ColorSet, ProcedureError> {
    let mut e = Enumerator::new(ctx, q, pc, &[w]);
    let mut out = ColorSet::EMPTY;
    for c in e.lp.get(w).iter() {
        if e.exists_bad(Some((w, c)))? {
            out.insert(c);
        }
    }
    Ok(out)
}

pub fn savior_cost_set(
    ctx: &OracleCtx,
    u: usize,
    q: usize,
    pc: &PartialColoring,
) -> Result<Savior, ProcedureError> {
    if fast_free(ctx, q, pc).is_some() {
        return Ok(Savior {
            set: ColorSet::EMPTY,
        });
    }
    Ok(Savior {
        set: bad_colors_at(ctx, u, q, pc)?,
    })
}

/// The colour `w` is confined to for component `q`, if any: every extension
/// giving `w` another colour leaves `Q - X` colourable. A free component
/// confines nothing.
pub fn confined_colors(
    ctx: &OracleCtx,
    w: usize,
    q: usize,
    pc: &PartialColoring,
) -> Result<Option<usize>, ProcedureError> {
    let b = bad_colors_at(ctx, w, q, pc)?;
    Ok(if b.len() == 1 { b.min() } else { None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::procedure::partition_by_set;

    fn set(v: &[usize]) -> ColorSet {
        v.iter().copied().collect()
    }

    /// `K4` on `0..4` with `V2 = {0, 1}` and the edge `2 3` as the component.
    fn k2_in_face(l2: &[usize], l3: &[usize]) -> (PlaneGraph, ListAssignment, TruncPartition) {
        let g = crate::generate::embed_with_outer(
            &PlaneGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap(),
        );
        let lists = vec![
            set(&[1, 2, 3, 4, 5, 6]),
            set(&[1, 2, 3, 4, 5, 6]),
            set(l2),
            set(l3),
        ];
        let p = partition_by_set(&g, vec![true, true, false, false], 6).unwrap();
        (g, ListAssignment::new(8, lists).unwrap(), p)
    }

    #[test]
    fn bad_recognition() {
        let tri = PlaneGraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let same = ListAssignment::new(4, vec![set(&[1, 2]); 3]).unwrap();
        assert!(is_bad(&tri, &same));
        let diff = ListAssignment::new(4, vec![set(&[1, 2]), set(&[1, 2]), set(&[1, 3])]).unwrap();
        assert!(!is_bad(&tri, &diff));
        let c4 = PlaneGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(!is_bad(
            &c4,
            &ListAssignment::new(4, vec![set(&[1, 2]); 4]).unwrap()
        ));
    }

    #[test]
    fn k2_equal_lists_not_free() {
        let (g, l, p) = k2_in_face(&[1, 2, 3], &[1, 2, 3]);
        let ctx = OracleCtx {
            g: &g,
            p: &p,
            l: &l,
            cap: 1_000_000,
        };
        let pc = PartialColoring::empty(4);
        assert_eq!(fast_free(&ctx, 0, &pc), None);
        assert_eq!(is_free(&ctx, 0, &pc).unwrap(), Freeness::NotFree);
        // S* at vertex 0: colours 1, 2, 3 each allow a bad completion
        assert_eq!(
            savior_cost_set(&ctx, 0, 0, &pc).unwrap().set,
            set(&[1, 2, 3])
        );
    }

    #[test]
    fn spare_color_is_free() {
        let (g, l, p) = k2_in_face(&[1, 2, 3, 4], &[1, 2, 3]);
        let ctx = OracleCtx {
            g: &g,
            p: &p,
            l: &l,
            cap: 1_000_000,
        };
        let pc = PartialColoring::empty(4);
        assert_eq!(fast_free(&ctx, 0, &pc), Some(FreeReason::SpareColor));
        assert!(exact_free(&ctx, 0, &pc).unwrap());
        assert_eq!(
            savior_cost_set(&ctx, 0, 0, &pc).unwrap().set,
            ColorSet::EMPTY
        );
    }

    #[test]
    fn twin_lists_are_free() {
        let (g, l, p) = k2_in_face(&[1, 2, 3], &[1, 2, 4]);
        let ctx = OracleCtx {
            g: &g,
            p: &p,
            l: &l,
            cap: 1_000_000,
        };
        let pc = PartialColoring::empty(4);
        assert_eq!(fast_free(&ctx, 0, &pc), Some(FreeReason::TwinLists));
        assert!(exact_free(&ctx, 0, &pc).unwrap());
    }

    #[test]
    fn confinement() {
        // 2 ~ 0, 1, 3 and 3 ~ 0, 2: vertex 1 is confined to the colour 2 has and 3 lacks
        let g = crate::generate::embed_with_outer(
            &PlaneGraph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (2, 3), (0, 3)]).unwrap(),
        );
        let p = partition_by_set(&g, vec![true, true, false, false], 6).unwrap();
        let lists = vec![
            set(&[1, 2, 3, 4, 5, 6]),
            set(&[1, 2, 3, 4, 5, 6]),
            set(&[1, 2, 3]),
            set(&[1, 2]),
        ];
        let l = ListAssignment::new(8, lists).unwrap();
        let ctx = OracleCtx {
            g: &g,
            p: &p,
            l: &l,
            cap: 1_000_000,
        };
        let pc = PartialColoring::empty(4);
        assert_eq!(is_free(&ctx, 0, &pc).unwrap(), Freeness::NotFree);
        assert_eq!(confined_colors(&ctx, 1, 0, &pc).unwrap(), Some(3));
        assert_eq!(bad_colors_at(&ctx, 0, 0, &pc).unwrap(), set(&[1, 2]));
        assert_eq!(confined_colors(&ctx, 0, 0, &pc).unwrap(), None);
        // once 1 avoids 3 the component is free, and nothing is confined
        let mut pc = pc;
        pc.set(1, 4);
        assert!(exact_free(&ctx, 0, &pc).unwrap());
        assert_eq!(confined_colors(&ctx, 0, 0, &pc).unwrap(), None);
    }

    #[test]
    fn cap_is_reported() {
        let (g, l, p) = k2_in_face(&[1, 2, 3], &[1, 2, 4]);
        let ctx = OracleCtx {
            g: &g,
            p: &p,
            l: &l,
            cap: 3,
        };
        let pc = PartialColoring::empty(4);
        assert!(matches!(
            exact_free(&ctx, 0, &pc),
            Err(ProcedureError::OracleCap(3))
        ));
    }
}

use std::fmt;

use super::oracle::{
    confined_colors, exact_free, fast_free, savior_cost_set, FreeReason, Freeness, OracleCtx,
};
use super::{
    build_order, check_properly_connected, partition_by_degree, properly_connected_shortcut,
    ProcedureError, TruncPartition,
};
use crate::choosability::{
    residual_lists, verify_coloring, ColorSet, DemandFunction, ListAssignment, PartialColoring,
    Solver,
};
use crate::graph::{articulation_points, PlaneGraph};
use crate::theta::{very_nice, VeryNiceSubgraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProcedureConfig {
    /// Extension tuples allowed per oracle call.
    pub oracle_cap: u64,
    /// Re-check the invariants after every step.
    pub audit: bool,
    /// Record confinement of high vertices at every second-rule step.
    pub diagnostics: bool,
}

impl Default for ProcedureConfig {
    fn default() -> Self {
        ProcedureConfig {
            oracle_cap: 10_000_000,
            audit: true,
            diagnostics: false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rule {
    R1,
    R2,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TraceEvent {
    Step {
        i: usize,
        rule: Rule,
        vertex: usize,
        color: usize,
        avoid: ColorSet,
    },
    Free {
        component: usize,
        at: usize,
    },
    NonSavior {
        vertex: usize,
        component: usize,
        size: usize,
        at: usize,
    },
    Confined {
        vertex: usize,
        component: usize,
        color: usize,
        at: usize,
    },
}

impl fmt::Display for TraceEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TraceEvent::Step {
                i,
                rule,
                vertex,
                color,
                avoid,
            } => {
                let r = if *rule == Rule::R1 { "R1" } else { "R2" };
                write!(
                    f,
                    "STEP {i} RULE {r} VERTEX {vertex} COLOR {color} AVOID {avoid}"
                )
            }
            TraceEvent::Free { component, at } => write!(f, "FREE {component} AT {at}"),
            TraceEvent::NonSavior {
                vertex,
                component,
                size,
                at,
            } => {
                write!(
                    f,
                    "NONSAVIOR VERTEX {vertex} COMPONENT {component} SIZE {size} AT {at}"
                )
            }
            TraceEvent::Confined {
                vertex,
                component,
                color,
                at,
            } => {
                write!(
                    f,
                    "CONFINED VERTEX {vertex} COMPONENT {component} COLOR {color} AT {at}"
                )
            }
        }
    }
}

/// List and avoid-set sizes at one second-rule step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BudgetRecord {
    pub step: usize,
    pub vertex: usize,
    pub list_size: usize,
    pub avoid_size: usize,
    /// Already coloured high neighbours.
    pub back_neighbors: usize,
    pub protected: usize,
    /// Every protected component had a savior cost set of size at most 3.
    pub all_saviors: bool,
}

#[derive(Debug, Clone)]
pub struct ProcedureRun {
    pub coloring: Vec<usize>,
    pub trace: Vec<TraceEvent>,
    pub budget: Vec<BudgetRecord>,
    pub order: Vec<usize>,
    pub v_star: usize,
    /// Components each high vertex protects.
    pub protects: Vec<Vec<usize>>,
}

impl ProcedureRun {
    pub fn render_trace(&self) -> String {
        self.trace.iter().map(|e| format!("{e}\n")).collect()
    }
}

/// `f(v*) = 1` when `v*` has a high neighbour, `k` on the rest of `V2`, `d(v)`
/// on `V1`.
pub fn procedure_demand(g: &PlaneGraph, p: &TruncPartition, v_star: usize) -> DemandFunction {
    DemandFunction(
        (0..g.n())
            .map(
                |v| match (p.high[v], v == v_star && !p.isolated_in_v2(g, v)) {
                    (true, true) => 1,
                    (true, false) => p.k,
                    (false, _) => g.degree(v),
                },
            )
            .collect(),
    )
}

/// The very nice subgraph of `Θ(G[V2])` used for protectors, with `v*` given in
/// host ids.
pub fn very_nice_for(
    p: &TruncPartition,
    v_star: usize,
) -> Result<VeryNiceSubgraph, ProcedureError> {
    let s = p.sub_id[v_star].ok_or(ProcedureError::VStarNotOuter(v_star))?;
    if p.sub_faces
        .face_vertices(p.sub_faces.infinite())
        .binary_search(&s)
        .is_err()
    {
        return Err(ProcedureError::VStarNotOuter(v_star));
    }
    let vn = very_nice(&p.sub, &p.sub_faces, p.sub_faces.infinite(), s)?;
    vn.verify(&p.sub, &p.sub_faces)?;
    Ok(vn)
}

/// Each component minus `X` is connected, and coloured low vertices have all
/// their high neighbours coloured.
pub fn check_valid(g: &PlaneGraph, p: &TruncPartition, pc: &PartialColoring) -> Result<(), String> {
    for (q, comp) in p.components.iter().enumerate() {
        let keep: Vec<bool> = (0..g.n())
            .map(|v| p.component_of[v] == Some(q) && !pc.is_colored(v))
            .collect();
        if g.induced(&keep).0.components().len() > 1 {
            return Err(format!("component {q} minus X is disconnected"));
        }
        for &v in comp.iter().filter(|&&v| pc.is_colored(v)) {
            if g.neighbors(v)
                .iter()
                .any(|&w| p.high[w] && !pc.is_colored(w))
            {
                return Err(format!(
                    "coloured low vertex {v} has an uncoloured high neighbour"
                ));
            }
        }
    }
    Ok(())
}

struct Runner<'a> {
    g: &'a PlaneGraph,
    p: &'a TruncPartition,
    l: &'a ListAssignment,
    cfg: ProcedureConfig,
    pc: PartialColoring,
    free: Vec<bool>,
    trace: Vec<TraceEvent>,
    step: usize,
}

impl<'a> Runner<'a> {
    fn ctx(&self) -> OracleCtx<'a> {
        OracleCtx {
            g: self.g,
            p: self.p,
            l: self.l,
            cap: self.cfg.oracle_cap,
        }
    }

    fn fail(&self, reason: String) -> ProcedureError {
        ProcedureError::Failed {
            step: self.step,
            reason,
            trace: self.trace.clone(),
        }
    }

    fn capped(&self, e: ProcedureError) -> ProcedureError {
        match e {
            ProcedureError::OracleCap(cap) => ProcedureError::Capped {
                cap,
                step: self.step,
                trace: self.trace.clone(),
            },
            e => e,
        }
    }

    fn freeness(&self, q: usize) -> Result<Freeness, ProcedureError> {
        let ctx = self.ctx();
        if let Some(r) = fast_free(&ctx, q, &self.pc) {
            if self.cfg.audit && !exact_free(&ctx, q, &self.pc).map_err(|e| self.capped(e))? {
                return Err(self.fail(format!(
                    "audit: sufficient condition {r:?} fired on non-free component {q}"
                )));
            }
            return Ok(Freeness::Free(r));
        }
        let exact = exact_free(&ctx, q, &self.pc).map_err(|e| self.capped(e))?;
        Ok(if exact {
            Freeness::Free(FreeReason::Exhaustive)
        } else {
            Freeness::NotFree
        })
    }

    fn refresh(&mut self, comps: impl Iterator<Item = usize>) -> Result<(), ProcedureError> {
        for q in comps {
            if self.free[q] {
                if self.cfg.audit
                    && !exact_free(&self.ctx(), q, &self.pc).map_err(|e| self.capped(e))?
                {
                    return Err(self.fail(format!("audit: component {q} stopped being free")));
                }
                continue;
            }
            if self.freeness(q)?.is_free() {
                self.free[q] = true;
                self.trace.push(TraceEvent::Free {
                    component: q,
                    at: self.step,
                });
            }
        }
        Ok(())
    }

    fn audit(&self) -> Result<(), ProcedureError> {
        if !self.cfg.audit {
            return Ok(());
        }
        check_valid(self.g, self.p, &self.pc).map_err(|m| self.fail(format!("audit: {m}")))?;
        let lp = residual_lists(self.g, self.l, &self.pc);
        for v in (0..self.g.n()).filter(|&v| !self.pc.is_colored(v)) {
            let nb = self.g.neighbors(v);
            if self.p.high[v] {
                let lost = nb
                    .iter()
                    .filter(|&&w| self.p.high[w] && self.pc.is_colored(w))
                    .count();
                if lp.get(v).len() + lost < self.l.get(v).len() {
                    return Err(self.fail(format!(
                        "audit: high vertex {v} lost colours to low neighbours"
                    )));
                }
            } else {
                let live = nb.iter().filter(|&&w| !self.pc.is_colored(w)).count();
                if lp.get(v).len() < live {
                    return Err(self.fail(format!(
                        "audit: low vertex {v} has fewer colours than live neighbours"
                    )));
                }
            }
        }
        Ok(())
    }

    /// The first vertex the first rule may colour.
    fn r1_candidate(&self) -> Option<usize> {
        let g = self.g;
        for (q, comp) in self.p.components.iter().enumerate() {
            if self.free[q] {
                continue;
            }
            let keep: Vec<bool> = (0..g.n())
                .map(|v| self.p.component_of[v] == Some(q) && !self.pc.is_colored(v))
                .collect();
            let (r, map) = g.induced(&keep);
            if r.n() < 2 {
                continue;
            }
            let cuts: Vec<usize> = articulation_points(&r)
                .into_iter()
                .map(|v| map[v])
                .collect();
            let _ = comp;
            let pick = map.iter().copied().find(|&v| {
                !cuts.contains(&v)
                    && g.neighbors(v)
                        .iter()
                        .all(|&w| !self.p.high[w] || self.pc.is_colored(w))
            });
            if pick.is_some() {
                return pick;
            }
        }
        None
    }

    fn color(&mut self, rule: Rule, v: usize, c: usize, avoid: ColorSet) {
        self.pc.set(v, c);
        self.step += 1;
        self.trace.push(TraceEvent::Step {
            i: self.step,
            rule,
            vertex: v,
            color: c,
            avoid,
        });
    }
}

/// Colours `G` from `L`: the first rule colours removable low vertices of
/// non-free components, the second colours the next high vertex in the order,
/// avoiding the cost sets of the components it saves. Remaining components are
/// completed at the end.
pub fn run_procedure(
    g: &PlaneGraph,
    p: &TruncPartition,
    l: &ListAssignment,
    vn: &VeryNiceSubgraph,
    v_star: usize,
    cfg: ProcedureConfig,
) -> Result<ProcedureRun, ProcedureError> {
    let n = g.n();
    if p.sub_id[v_star] != Some(vn.v_star) {
        return Err(ProcedureError::VStarNotOuter(v_star));
    }
    let demand = procedure_demand(g, p, v_star);
    if let Some(v) = (0..n).find(|&v| l.get(v).len() < demand.get(v)) {
        return Err(ProcedureError::ShortList {
            vertex: v,
            size: l.get(v).len(),
            needed: demand.get(v),
        });
    }
    let order = build_order(p, v_star);
    let star_excluded = !p.isolated_in_v2(g, v_star);
    let mut protects = vec![Vec::new(); n];
    for (q, bound) in p.boundary.iter().enumerate() {
        for &u in bound {
            if vn.contains(p.sub_id[u].unwrap(), p.theta[q]) && !(u == v_star && star_excluded) {
                protects[u].push(q);
            }
        }
    }

    let nq = p.components.len();
    let mut run = Runner {
        g,
        p,
        l,
        cfg,
        pc: PartialColoring::empty(n),
        free: vec![false; nq],
        trace: Vec::new(),
        step: 0,
    };
    if cfg.audit {
        if let Some(u) = (0..n).find(|&u| protects[u].len() > 2) {
            return Err(run.fail(format!(
                "audit: vertex {u} protects {} components",
                protects[u].len()
            )));
        }
        for (q, bound) in p.boundary.iter().enumerate() {
            let non = bound.iter().filter(|&&u| !protects[u].contains(&q)).count();
            if non > 2 {
                return Err(run.fail(format!("audit: component {q} has {non} non-protectors")));
            }
        }
    }
    run.refresh(0..nq)?;
    run.audit()?;

    let mut budget = Vec::new();
    let mut next = 0;
    loop {
        if let Some(v) = run.r1_candidate() {
            let lp = residual_lists(g, l, &run.pc);
            let Some(c) = lp.get(v).min() else {
                return Err(run.fail(format!("first rule found no colour for {v}")));
            };
            run.color(Rule::R1, v, c, ColorSet::EMPTY);
            let q = p.component_of[v].unwrap();
            run.refresh(std::iter::once(q))?;
            run.audit()?;
            continue;
        }
        if next == order.len() {
            break;
        }
        let u = order[next];
        next += 1;
        let lp = residual_lists(g, l, &run.pc);
        let lu = lp.get(u);
        let mut avoid = ColorSet::EMPTY;
        let mut all_saviors = true;
        for &q in &protects[u] {
            if run.free[q] {
                continue;
            }
            let ctx = run.ctx();
            let s = savior_cost_set(&ctx, u, q, &run.pc).map_err(|e| run.capped(e))?;
            if cfg.diagnostics {
                if let Some(c) = confined_colors(&ctx, u, q, &run.pc).map_err(|e| run.capped(e))? {
                    if !s.set.is_subset(ColorSet::singleton(c)) {
                        return Err(run.fail(format!(
                            "audit: protector {u} confined to {c} has cost set {}",
                            s.set
                        )));
                    }
                }
                for &w in p.boundary[q]
                    .iter()
                    .filter(|&&w| w != u && !run.pc.is_colored(w))
                {
                    if protects[w].contains(&q) {
                        continue;
                    }
                    if let Some(c) =
                        confined_colors(&ctx, w, q, &run.pc).map_err(|e| run.capped(e))?
                    {
                        let nbr_ok = g
                            .neighbors(w)
                            .iter()
                            .filter(|&&v| p.component_of[v] == Some(q) && !run.pc.is_colored(v))
                            .all(|&v| lp.get(v).contains(c));
                        if !nbr_ok {
                            return Err(run.fail(format!(
                                "audit: {w} confined to {c} outside a neighbour's list"
                            )));
                        }
                        run.trace.push(TraceEvent::Confined {
                            vertex: w,
                            component: q,
                            color: c,
                            at: run.step + 1,
                        });
                    }
                }
            }
            if s.is_savior() {
                avoid = avoid.union(s.set);
            } else {
                all_saviors = false;
                run.trace.push(TraceEvent::NonSavior {
                    vertex: u,
                    component: q,
                    size: s.set.len(),
                    at: run.step + 1,
                });
            }
        }
        let back = g
            .neighbors(u)
            .iter()
            .filter(|&&w| p.high[w] && run.pc.is_colored(w))
            .count();
        let choice = lu.difference(avoid);
        budget.push(BudgetRecord {
            step: run.step + 1,
            vertex: u,
            list_size: lu.len(),
            avoid_size: avoid.len(),
            back_neighbors: back,
            protected: protects[u].len(),
            all_saviors,
        });
        let Some(c) = choice.min() else {
            return Err(run.fail(format!("no colour left for {u}: list {lu}, avoid {avoid}")));
        };
        run.color(Rule::R2, u, c, avoid);
        let open: Vec<usize> = (0..nq).collect();
        run.refresh(open.into_iter())?;
        run.audit()?;
    }

    let mut coloring: Vec<Option<usize>> = run.pc.as_slice().to_vec();
    let lp = residual_lists(g, l, &run.pc);
    for (q, comp) in p.components.iter().enumerate() {
        let rest: Vec<usize> = comp
            .iter()
            .copied()
            .filter(|&v| !run.pc.is_colored(v))
            .collect();
        if rest.is_empty() {
            continue;
        }
        let mut keep = vec![false; n];
        rest.iter().for_each(|&v| keep[v] = true);
        let (r, map) = g.induced(&keep);
        let (col, _) = Solver::new(&r).solve(&lp.restrict(&map));
        let Some(col) = col else {
            return Err(run.fail(format!(
                "component {q} is not colourable from its residual lists"
            )));
        };
        for (i, &v) in map.iter().enumerate() {
            coloring[v] = Some(col[i]);
        }
    }
    let coloring: Vec<usize> = match coloring.into_iter().collect::<Option<Vec<_>>>() {
        Some(c) => c,
        None => return Err(run.fail("vertices left uncoloured".into())),
    };
    if !verify_coloring(g, l, &coloring) {
        return Err(run.fail("final colouring is not a proper list colouring".into()));
    }
    Ok(ProcedureRun {
        coloring,
        trace: run.trace,
        budget,
        order,
        v_star,
        protects,
    })
}

/// Partition at `k`, check proper connectivity, build the very nice subgraph and
/// run the procedure. `v_star` defaults to the smallest vertex on the infinite
/// face of `G[V2]`.
pub fn color(
    g: &PlaneGraph,
    l: &ListAssignment,
    k: usize,
    v_star: Option<usize>,
    cfg: ProcedureConfig,
) -> Result<ProcedureRun, ProcedureError> {
    let p = partition_by_degree(g, k)?;
    let ok = match properly_connected_shortcut(g, &p) {
        Some(v) => v,
        None => check_properly_connected(g, &p, 100_000)?
            .iter()
            .map(|v| v.pass())
            .collect(),
    };
    if let Some(q) = ok.iter().position(|&b| !b) {
        return Err(ProcedureError::NotProperlyConnected(q));
    }
    let v_star = v_star.unwrap_or_else(|| p.default_v_star());
    if !p.high[v_star] {
        return Err(ProcedureError::VStarNotOuter(v_star));
    }
    let vn = very_nice_for(&p, v_star)?;
    run_procedure(g, &p, l, &vn, v_star, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{adversarial_truncated_lists, double_wheel, uniform_truncated_lists};
    use crate::procedure::partition_by_degree;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn run(g: &PlaneGraph, l: &ListAssignment) -> Result<ProcedureRun, ProcedureError> {
        let p = partition_by_degree(g, 12).unwrap();
        let v = p.default_v_star();
        let vn = very_nice_for(&p, v).unwrap();
        let cfg = ProcedureConfig {
            diagnostics: true,
            ..ProcedureConfig::default()
        };
        run_procedure(g, &p, l, &vn, v, cfg)
    }

    #[test]
    fn double_wheel_even_rim() {
        let g = double_wheel(12);
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let l = uniform_truncated_lists(&g, 12, 20, &mut rng);
        let r = run(&g, &l).unwrap();
        assert!(verify_coloring(&g, &l, &r.coloring));
        assert_eq!(r.order.len(), 2);
        // an even rim is never a Gallai tree
        assert_eq!(
            r.trace[0],
            TraceEvent::Free {
                component: 0,
                at: 0
            }
        );
    }

    #[test]
    fn double_wheel_odd_rim_adversarial() {
        for seed in 0..5 {
            let g = double_wheel(13);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let l = adversarial_truncated_lists(&g, 12, 20, &mut rng);
            let r = run(&g, &l).unwrap();
            assert!(verify_coloring(&g, &l, &r.coloring));
            for b in &r.budget {
                assert!(b.list_size >= 7);
                if b.all_saviors {
                    assert!(b.avoid_size <= 6);
                }
            }
        }
    }

    #[test]
    fn first_rule_fires() {
        // triangle 1 2 3 below a single high vertex 0 joined to 1 and 2
        let edges = [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)];
        let g = crate::generate::embed_with_outer(&PlaneGraph::from_edges(4, &edges).unwrap());
        let p = crate::procedure::partition_by_set(&g, vec![true, false, false, false], 2).unwrap();
        let l =
            ListAssignment::from_vecs(5, &[vec![3, 4], vec![1, 2, 3], vec![1, 2, 3], vec![1, 2]])
                .unwrap();
        let vn = very_nice_for(&p, 0).unwrap();
        let r = run_procedure(&g, &p, &l, &vn, 0, ProcedureConfig::default()).unwrap();
        let lines: Vec<String> = r.trace.iter().map(|e| e.to_string()).collect();
        assert_eq!(
            lines,
            [
                "STEP 1 RULE R1 VERTEX 3 COLOR 1 AVOID {}",
                "STEP 2 RULE R2 VERTEX 0 COLOR 4 AVOID {3}",
                "FREE 0 AT 2"
            ]
        );
        assert_eq!(r.coloring[3], 1);
    }

    #[test]
    fn short_lists_rejected() {
        let g = double_wheel(12);
        let l = ListAssignment::new(20, vec![ColorSet::range(3); g.n()]).unwrap();
        assert!(matches!(run(&g, &l), Err(ProcedureError::ShortList { .. })));
    }

    #[test]
    fn trace_grammar() {
        let e = TraceEvent::Step {
            i: 3,
            rule: Rule::R2,
            vertex: 7,
            color: 4,
            avoid: [1, 2].into_iter().collect(),
        };
        assert_eq!(e.to_string(), "STEP 3 RULE R2 VERTEX 7 COLOR 4 AVOID {1,2}");
        assert_eq!(
            TraceEvent::Free {
                component: 2,
                at: 5
            }
            .to_string(),
            "FREE 2 AT 5"
        );
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(40))]
        #[test]
        fn double_wheels_colour_within_budget(rim in 12usize..=40, seed: u64, adversarial: bool) {
            let g = double_wheel(rim);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let l = if adversarial {
                adversarial_truncated_lists(&g, 12, 20, &mut rng)
            } else {
                uniform_truncated_lists(&g, 12, 20, &mut rng)
            };
            let r = run(&g, &l).unwrap();
            proptest::prop_assert!(verify_coloring(&g, &l, &r.coloring));
            for b in r.budget.iter().filter(|b| b.all_saviors) {
                proptest::prop_assert!(b.list_size >= 7 && b.avoid_size <= 6);
            }
        }
    }
}

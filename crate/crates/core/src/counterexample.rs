//! The 3-connected planar graph that is not degree-truncated 8-choosable.
//!
//! Colour legend: the letters `a..h` are `0..7` and the digits `1..7` are `8..14`.

use std::fmt;
use std::time::Instant;

use crate::choosability::{
    for_each_coloring, solve_list_coloring, truncated_assignment_demand, ColorSet, ListAssignment,
    Solver,
};
use crate::graph::{connectivity_at_least, embed, PlaneGraph};

pub const UNIVERSE: usize = 15;
pub const LETTERS: usize = 8;

/// Colour id of a digit `1..=7`.
pub const fn digit(d: usize) -> usize {
    LETTERS - 1 + d
}

/// Printable name of a colour id.
pub fn color_name(c: usize) -> String {
    if c < LETTERS {
        ((b'a' + c as u8) as char).to_string()
    } else {
        (c + 1 - LETTERS).to_string()
    }
}

pub fn legend() -> String {
    (0..UNIVERSE)
        .map(|c| format!("{}={c}", color_name(c)))
        .collect::<Vec<_>>()
        .join(" ")
}

pub const X: usize = 0;
pub const Y: usize = 1;
pub const U1: usize = 2;
pub const U2: usize = 3;
pub const V1: usize = 4;
pub const V2: usize = 5;
pub const W1: usize = 6;
pub const W2: usize = 7;

pub const fn s(i: usize) -> usize {
    7 + i
}

pub const fn t(i: usize) -> usize {
    15 + i
}

pub const GADGET_N: usize = 24;
pub const COPIES: usize = 56;

pub fn gadget_labels() -> Vec<String> {
    let mut l: Vec<String> = ["x", "y", "u1", "u2", "v1", "v2", "w1", "w2"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    l.extend((1..=8).map(|i| format!("s{i}")));
    l.extend((1..=8).map(|i| format!("t{i}")));
    l
}

/// The seven induced `K4`s of the gadget.
pub fn gadget_k4s() -> [[usize; 4]; 7] {
    [
        [U1, V1, W1, W2],
        [U1, U2, s(1), s(2)],
        [U1, s(3), s(4), s(5)],
        [U2, s(6), s(7), s(8)],
        [V1, V2, t(1), t(2)],
        [V1, t(3), t(4), t(5)],
        [V2, t(6), t(7), t(8)],
    ]
}

pub fn gadget_edges() -> Vec<(usize, usize)> {
    let mut e = Vec::new();
    for k in gadget_k4s() {
        for i in 0..4 {
            for j in i + 1..4 {
                e.push((k[i], k[j]));
            }
        }
    }
    e.push((s(5), s(8)));
    e.push((t(5), t(8)));
    for w in [s(1), t(1), W1, U1, U2, V1, V2] {
        e.push((X, w));
    }
    for w in [
        s(4),
        s(5),
        s(7),
        s(8),
        t(4),
        t(5),
        t(7),
        t(8),
        U1,
        U2,
        V1,
        V2,
    ] {
        e.push((Y, w));
    }
    e
}

/// Gadget lists with `a` replaced by `alpha` and `b` by `beta`.
pub fn gadget_lists(alpha: usize, beta: usize) -> ListAssignment {
    let d = |ds: &[usize]| ds.iter().map(|&i| digit(i)).collect::<ColorSet>();
    let mut l = vec![ColorSet::EMPTY; GADGET_N];
    l[X] = ColorSet::singleton(alpha);
    l[Y] = ColorSet::singleton(beta);
    for v in [U1, U2, V1, V2] {
        l[v] = d(&[1, 2, 3, 4, 5, 6]).with(alpha).with(beta);
    }
    l[s(1)] = d(&[1, 2, 3]).with(alpha);
    l[t(1)] = l[s(1)];
    l[W1] = d(&[4, 5, 6]).with(alpha);
    for v in [s(2), t(2), s(3), t(3)] {
        l[v] = d(&[1, 2, 3]);
    }
    for v in [W2, s(6), t(6)] {
        l[v] = d(&[4, 5, 6]);
    }
    l[s(4)] = d(&[1, 2, 3]).with(beta);
    l[t(4)] = l[s(4)];
    l[s(7)] = d(&[4, 5, 6]).with(beta);
    l[t(7)] = l[s(7)];
    l[s(5)] = d(&[1, 2, 3, 7]).with(beta);
    l[t(5)] = l[s(5)];
    l[s(8)] = d(&[4, 5, 6, 7]).with(beta);
    l[t(8)] = l[s(8)];
    ListAssignment::new(UNIVERSE, l).unwrap()
}

#[derive(Debug, Clone)]
pub struct Gadget {
    pub graph: PlaneGraph,
    pub lists: ListAssignment,
}

/// Builds the gadget with `L(x) = {a}`, `L(y) = {b}` and checks its structural
/// invariants. The graph is embedded.
pub fn build_gadget() -> Gadget {
    let g = PlaneGraph::from_edges(GADGET_N, &gadget_edges()).unwrap();
    let g = embed(&g)
        .expect("gadget is planar")
        .with_labels(gadget_labels());
    let lists = gadget_lists(0, 1);
    for k in gadget_k4s() {
        let mut keep = vec![false; GADGET_N];
        k.iter().for_each(|&v| keep[v] = true);
        assert!(g.induced(&keep).0.is_complete());
    }
    for v in 2..GADGET_N {
        if lists.get(v).len() < 8 {
            assert_eq!(
                lists.get(v).len(),
                g.degree(v),
                "list size of {}",
                gadget_labels()[v]
            );
        }
    }
    Gadget { graph: g, lists }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cert {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Cert {
    pub fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Cert {
            name: name.into(),
            pass,
            detail: detail.into(),
        }
    }
}

impl fmt::Display for Cert {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "CERT {} {} {}",
            self.name,
            if self.pass { "PASS" } else { "FAIL" },
            self.detail
        )
    }
}

/// Every colouring of `K4` from the given lists, in solver order.
pub fn k4_colorings(lists: [ColorSet; 4]) -> Vec<[usize; 4]> {
    let k4 = PlaneGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
    let l = ListAssignment::new(UNIVERSE + 1, lists.to_vec()).unwrap();
    let mut out = Vec::new();
    for_each_coloring(&k4, &l, |c| {
        out.push([c[0], c[1], c[2], c[3]]);
        true
    });
    out
}

/// The residual lists on a set of gadget vertices once `x` and `y` are coloured.
fn residual_after_poles(g: &Gadget, vs: [usize; 4]) -> [ColorSet; 4] {
    let (a, b) = (g.lists.get(X).min().unwrap(), g.lists.get(Y).min().unwrap());
    vs.map(|v| {
        let mut l = g.lists.get(v);
        if g.graph.has_edge(v, X) {
            l.remove(a);
        }
        if g.graph.has_edge(v, Y) {
            l.remove(b);
        }
        l
    })
}

fn digits(ds: &[usize]) -> ColorSet {
    ds.iter().map(|&i| digit(i)).collect()
}

/// The forcing chain: the first `K4` claim and the three `K4` forcings, each
/// checked by enumerating all colourings of the relevant `K4`.
pub fn forcing_certs(g: &Gadget) -> Vec<Cert> {
    let low = digits(&[1, 2, 3]);
    let high = digits(&[4, 5, 6]);
    let mut out = Vec::new();

    let h1 = [U1, V1, W1, W2];
    let l1 = residual_after_poles(g, h1);
    let c1 = k4_colorings(l1);
    let ok =
        l1 == [
            digits(&[1, 2, 3, 4, 5, 6]),
            digits(&[1, 2, 3, 4, 5, 6]),
            high,
            high,
        ] && !c1.is_empty()
            && c1.iter().all(|c| low.contains(c[0]) || low.contains(c[1]));
    out.push(Cert::new(
        "claim-u1-or-v1-low",
        ok,
        format!("colorings={}", c1.len()),
    ));

    let mut l2 = residual_after_poles(g, [U1, U2, s(1), s(2)]);
    l2[0] = l2[0].intersection(low);
    let c2 = k4_colorings(l2);
    let ok = l2 == [low, digits(&[1, 2, 3, 4, 5, 6]), low, low]
        && !c2.is_empty()
        && c2.iter().all(|c| high.contains(c[1]));
    out.push(Cert::new(
        "force-u2-456",
        ok,
        format!("colorings={}", c2.len()),
    ));

    let mut l3 = residual_after_poles(g, [U1, s(3), s(4), s(5)]);
    l3[0] = l3[0].intersection(low);
    let c3 = k4_colorings(l3);
    let ok = l3 == [low, low, low, digits(&[1, 2, 3, 7])]
        && !c3.is_empty()
        && c3.iter().all(|c| c[3] == digit(7));
    out.push(Cert::new(
        "force-s5-7",
        ok,
        format!("colorings={}", c3.len()),
    ));

    let mut l4 = residual_after_poles(g, [U2, s(6), s(7), s(8)]);
    l4[0] = l4[0].intersection(high);
    let c4 = k4_colorings(l4);
    let ok = l4 == [high, high, high, digits(&[4, 5, 6, 7])]
        && !c4.is_empty()
        && c4.iter().all(|c| c[3] == digit(7));
    out.push(Cert::new(
        "force-s8-7",
        ok,
        format!("colorings={}", c4.len()),
    ));
    out
}

/// Exhaustive uncolourability of the gadget, the forcing chain and the two
/// sanity inversions.
pub fn verify_gadget_uncolorable(g: &Gadget) -> Vec<Cert> {
    let mut out = Vec::new();
    let (col, stats) = Solver::new(&g.graph).solve(&g.lists);
    out.push(Cert::new(
        "gadget-unsat",
        col.is_none(),
        format!("nodes={}", stats.nodes),
    ));
    out.push(Cert::new(
        "gadget-planar",
        embed(&g.graph).is_some(),
        format!("n={} m={}", g.graph.n(), g.graph.m()),
    ));
    let tight = (2..GADGET_N)
        .filter(|&v| g.lists.get(v).len() < 8)
        .all(|v| g.lists.get(v).len() == g.graph.degree(v));
    out.push(Cert::new("gadget-list-equals-degree", tight, "small lists"));
    out.extend(forcing_certs(g));

    let mut bigger = ListAssignment::new(UNIVERSE + 1, g.lists.lists().to_vec()).unwrap();
    bigger.set(s(5), g.lists.get(s(5)).with(UNIVERSE));
    let sat = solve_list_coloring(&g.graph, &bigger).is_some();
    out.push(Cert::new(
        "inversion-enlarged-s5",
        sat,
        "L(s5) + {8} is colourable",
    ));

    let fewer: Vec<_> = g.graph.edges().filter(|&e| e != (s(5), s(8))).collect();
    let cut = PlaneGraph::from_edges(GADGET_N, &fewer).unwrap();
    let sat = solve_list_coloring(&cut, &g.lists).is_some();
    out.push(Cert::new(
        "inversion-no-s5s8",
        sat,
        "H - s5s8 is colourable",
    ));
    out
}

#[derive(Debug, Clone)]
pub struct AssembledG {
    pub graph: PlaneGraph,
    pub lists: ListAssignment,
    /// `(α_i, β_i)` substituted for `(a, b)` in copy `i`.
    pub legend: Vec<(usize, usize)>,
}

impl AssembledG {
    /// Id in the assembled graph of gadget vertex `v` in copy `i`.
    pub fn vertex(i: usize, v: usize) -> usize {
        match v {
            X | Y => v,
            _ => 2 + 22 * i + (v - 2),
        }
    }
}

/// The 56-copy assembly sharing `x` and `y`, with the chain edges
/// `v2(i) u2(i+1)` and the edge `xy`. Not embedded.
pub fn assemble_g() -> AssembledG {
    let legend: Vec<(usize, usize)> = (0..LETTERS)
        .flat_map(|a| (0..LETTERS).filter(move |&b| b != a).map(move |b| (a, b)))
        .collect();
    assert_eq!(legend.len(), COPIES);
    let n = 2 + 22 * COPIES;
    let mut edges = vec![(X, Y)];
    let mut lists = vec![ColorSet::EMPTY; n];
    lists[X] = ColorSet::range(LETTERS);
    lists[Y] = ColorSet::range(LETTERS);
    let names = gadget_labels();
    let mut labels = vec![String::new(); n];
    labels[X] = "x".into();
    labels[Y] = "y".into();
    for (i, &(a, b)) in legend.iter().enumerate() {
        for (u, v) in gadget_edges() {
            edges.push((AssembledG::vertex(i, u), AssembledG::vertex(i, v)));
        }
        let gl = gadget_lists(a, b);
        for v in 2..GADGET_N {
            lists[AssembledG::vertex(i, v)] = gl.get(v);
            labels[AssembledG::vertex(i, v)] = format!("{}_{}", names[v], i + 1);
        }
        if i + 1 < COPIES {
            edges.push((AssembledG::vertex(i, V2), AssembledG::vertex(i + 1, U2)));
        }
    }
    let graph = PlaneGraph::from_edges(n, &edges)
        .unwrap()
        .with_labels(labels);
    AssembledG {
        graph,
        lists: ListAssignment::new(UNIVERSE, lists).unwrap(),
        legend,
    }
}

#[derive(Debug, Clone)]
pub struct CopyResult {
    pub index: usize,
    pub alpha: usize,
    pub beta: usize,
    pub unsat: bool,
    pub nodes: u64,
    /// Result and node count with ties broken by decreasing degree.
    pub unsat_alt: bool,
    pub nodes_alt: u64,
    pub micros: u128,
}

fn check_copy(index: usize, alpha: usize, beta: usize, h: &PlaneGraph) -> CopyResult {
    let start = Instant::now();
    let l = gadget_lists(alpha, beta);
    let (c, st) = Solver::new(h).solve(&l);
    let mut alt: Vec<usize> = (0..GADGET_N).collect();
    alt.sort_by_key(|&v| std::cmp::Reverse(h.degree(v)));
    let (c2, st2) = Solver::new(h).with_priority(&alt).solve(&l);
    CopyResult {
        index,
        alpha,
        beta,
        unsat: c.is_none(),
        nodes: st.nodes,
        unsat_alt: c2.is_none(),
        nodes_alt: st2.nodes,
        micros: start.elapsed().as_micros(),
    }
}

/// Solves the 56 per-copy gadget instances, `jobs` at a time.
pub fn check_copies(gg: &AssembledG, jobs: usize) -> Vec<CopyResult> {
    let h = PlaneGraph::from_edges(GADGET_N, &gadget_edges()).unwrap();
    let jobs = jobs.clamp(1, COPIES);
    let mut out: Vec<CopyResult> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..jobs)
            .map(|j| {
                let h = &h;
                let legend = &gg.legend;
                scope.spawn(move || {
                    (j..legend.len())
                        .step_by(jobs)
                        .map(|i| check_copy(i, legend[i].0, legend[i].1, h))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("copy worker panicked"))
            .collect()
    });
    out.sort_by_key(|r| r.index);
    out
}

/// Whether copy `i` of the assembled graph contains the gadget edges and lists
/// with `(a, b)` replaced by the copy's legend pair.
fn copy_embeds_gadget(gg: &AssembledG, i: usize) -> bool {
    let (a, b) = gg.legend[i];
    let gl = gadget_lists(a, b);
    gadget_edges().iter().all(|&(u, v)| {
        gg.graph
            .has_edge(AssembledG::vertex(i, u), AssembledG::vertex(i, v))
    }) && (2..GADGET_N).all(|v| gg.lists.get(AssembledG::vertex(i, v)) == gl.get(v))
        && gg.lists.get(X).contains(a)
        && gg.lists.get(Y).contains(b)
}

#[derive(Debug, Clone)]
pub struct CounterexampleReport {
    pub certs: Vec<Cert>,
    pub copies: Vec<CopyResult>,
}

impl CounterexampleReport {
    pub fn pass(&self) -> bool {
        self.certs.iter().all(|c| c.pass)
    }

    pub fn render(&self) -> String {
        let mut s = format!("# legend {}\n", legend());
        for c in &self.certs {
            s.push_str(&format!("{c}\n"));
        }
        s.push_str(&format!(
            "VERDICT {}\n",
            if self.pass() {
                "NOT-8-TRUNCATED-CHOOSABLE"
            } else {
                "UNVERIFIED"
            }
        ));
        s
    }
}

/// Certifies every claim about the assembled graph.
pub fn verify_counterexample(gg: &AssembledG, jobs: usize) -> CounterexampleReport {
    let g = &gg.graph;
    let mut certs = Vec::new();
    certs.push(Cert::new(
        "vertex-count",
        g.n() == 2 + 22 * COPIES,
        format!("n={} m={}", g.n(), g.m()),
    ));
    certs.push(Cert::new("planar", embed(g).is_some(), "embedding found"));
    certs.push(Cert::new(
        "3-connected",
        connectivity_at_least(g, 3),
        "no separating pair",
    ));
    certs.push(Cert::new(
        "non-complete",
        !g.is_complete(),
        format!("m={} < n(n-1)/2", g.m()),
    ));
    let demand = truncated_assignment_demand(g, 8);
    let short = demand.violations(&gg.lists);
    certs.push(Cert::new(
        "demand-feasible",
        short.is_empty(),
        format!("k=8 violations={}", short.len()),
    ));
    let exact = (0..g.n())
        .filter(|&v| gg.lists.get(v).len() != demand.get(v))
        .count();
    certs.push(Cert::new(
        "demand-exact",
        exact == 0,
        format!("|L(v)|!=min(d,8) at {exact} vertices"),
    ));
    let mut pairs = gg.legend.clone();
    pairs.sort_unstable();
    pairs.dedup();
    let cover = pairs.len() == COPIES
        && pairs
            .iter()
            .all(|&(a, b)| a != b && a < LETTERS && b < LETTERS);
    certs.push(Cert::new(
        "copies-cover-pairs",
        cover,
        format!("distinct={}", pairs.len()),
    ));
    let embedded = (0..COPIES).filter(|&i| copy_embeds_gadget(gg, i)).count();
    certs.push(Cert::new(
        "copies-contain-gadget",
        embedded == COPIES,
        format!("{embedded}/{COPIES}"),
    ));

    let copies = check_copies(gg, jobs);
    for r in &copies {
        certs.push(Cert::new(
            format!("copy-{}", r.index + 1),
            r.unsat,
            format!(
                "a={} b={} nodes={}",
                color_name(r.alpha),
                color_name(r.beta),
                r.nodes
            ),
        ));
    }
    let stable = copies.iter().all(|r| r.unsat_alt);
    certs.push(Cert::new(
        "order-stability",
        stable,
        "degree-first priority also UNSAT on all copies",
    ));
    let sym = copies
        .iter()
        .all(|r| r.nodes == copies[0].nodes && r.nodes_alt == copies[0].nodes_alt);
    certs.push(Cert::new(
        "copy-symmetry",
        sym,
        format!("nodes={} alt={}", copies[0].nodes, copies[0].nodes_alt),
    ));

    let v9 = truncated_assignment_demand(g, 9).violations(&gg.lists);
    let names: Vec<&str> = v9
        .iter()
        .take(6)
        .map(|&v| g.label(v).unwrap_or("?"))
        .collect();
    certs.push(Cert::new(
        "k9-infeasible",
        !v9.is_empty(),
        format!("violations={} first={}", v9.len(), names.join(",")),
    ));
    CounterexampleReport { certs, copies }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn legend_and_encoding() {
        assert_eq!(digit(1), 8);
        assert_eq!(digit(7), 14);
        assert_eq!(color_name(0), "a");
        assert_eq!(color_name(14), "7");
    }

    #[test]
    fn gadget_degrees() {
        let h = build_gadget();
        assert_eq!(h.graph.degree(s(5)), 5);
        assert_eq!(h.lists.get(s(5)).len(), 5);
        assert_eq!(h.graph.degree(W2), 3);
        assert_eq!(h.lists.get(W2).to_vec(), vec![digit(4), digit(5), digit(6)]);
        assert_eq!(h.graph.m(), 63);
    }

    #[test]
    fn observation_k4() {
        let abc = digits(&[1, 2, 3]);
        let cs = k4_colorings([abc, abc, abc, abc.with(digit(7)).with(digit(6))]);
        assert_eq!(cs.len(), 12);
        assert!(cs.iter().all(|c| !abc.contains(c[3])));
    }

    #[test]
    fn gadget_certificates() {
        let h = build_gadget();
        for c in verify_gadget_uncolorable(&h) {
            assert!(c.pass, "{c}");
        }
    }

    #[test]
    fn copy_lists_substitute_letters() {
        let l = gadget_lists(3, 5);
        assert_eq!(l.get(s(1)), digits(&[1, 2, 3]).with(3));
        assert_eq!(l.get(s(8)), digits(&[4, 5, 6, 7]).with(5));
        assert_eq!(l.get(U1).len(), 8);
    }
}

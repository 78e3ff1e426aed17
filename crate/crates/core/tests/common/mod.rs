//! Oracles shared by the integration suites. None of them call into the
//! library beyond reading graphs, rotations and face labels.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use rand::seq::SliceRandom;
use rand_chacha::ChaCha8Rng;

use trunc_choice::choosability::ListAssignment;
use trunc_choice::graph::{block_cut_tree, FaceSet, PlaneGraph};
use trunc_choice::theta::{BipolarOrientation, VeryNiceSubgraph};

pub const UNIVERSE: usize = 24;

fn backtrack(g: &PlaneGraph, lists: &[Vec<usize>], col: &mut Vec<Option<usize>>, v: usize) -> bool {
    if v == g.n() {
        return true;
    }
    for &c in &lists[v] {
        if g.neighbors(v).iter().all(|&w| col[w] != Some(c)) {
            col[v] = Some(c);
            if backtrack(g, lists, col, v + 1) {
                return true;
            }
            col[v] = None;
        }
    }
    false
}

/// Plain backtracking in vertex order.
pub fn colourable(g: &PlaneGraph, lists: &[Vec<usize>]) -> bool {
    backtrack(g, lists, &mut vec![None; g.n()], 0)
}

pub fn proper_from_lists(g: &PlaneGraph, l: &ListAssignment, col: &[usize]) -> bool {
    col.len() == g.n()
        && (0..g.n()).all(|v| l.to_vecs()[v].contains(&col[v]))
        && (0..g.n()).all(|v| g.neighbors(v).iter().all(|&w| col[v] != col[w]))
}

/// Lists built from random per-block colour sets, so bad by construction.
pub fn block_lists(g: &PlaneGraph, rng: &mut ChaCha8Rng) -> Vec<Vec<usize>> {
    let tree = block_cut_tree(g);
    let mut lists: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for (b, blk) in tree.blocks.iter().enumerate() {
        let k = blk.len();
        let complete = tree.block_edges(g, b).len() == k * (k - 1) / 2;
        let r = if complete { k - 1 } else { 2 };
        let mut free: Vec<usize> = (0..UNIVERSE)
            .filter(|c| blk.iter().all(|&v| !lists[v].contains(c)))
            .collect();
        free.shuffle(rng);
        for &v in blk {
            lists[v].extend_from_slice(&free[..r]);
        }
    }
    lists
}

/// Degree-size lists drawn from `0..palette`.
pub fn random_lists(g: &PlaneGraph, palette: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<usize>> {
    let all: Vec<usize> = (0..palette).collect();
    (0..g.n())
        .map(|v| all.choose_multiple(rng, g.degree(v)).copied().collect())
        .collect()
}

/// Directed face walks of the rotation system, as dart lists.
pub fn walks(g: &PlaneGraph) -> Vec<Vec<(usize, usize)>> {
    let rot = g.rotation().unwrap();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for u in 0..g.n() {
        for &v in &rot[u] {
            if seen.contains(&(u, v)) {
                continue;
            }
            let mut walk = Vec::new();
            let (mut a, mut b) = (u, v);
            while seen.insert((a, b)) {
                walk.push((a, b));
                let r = &rot[b];
                let i = r.iter().position(|&x| x == a).unwrap();
                (a, b) = (b, r[(i + 1) % r.len()]);
            }
            out.push(walk);
        }
    }
    out
}

/// Per library face index: boundary vertices and boundary edges.
pub fn faces_here(
    g: &PlaneGraph,
    fs: &FaceSet,
) -> Vec<(BTreeSet<usize>, BTreeSet<(usize, usize)>)> {
    let ws = walks(g);
    assert_eq!(ws.len(), fs.len(), "face count");
    let (u0, v0) = ws[0][0];
    let same = ws[0]
        .iter()
        .all(|&(u, v)| fs.face_of_dart(u, v) == fs.face_of_dart(u0, v0));
    let mut out = vec![(BTreeSet::new(), BTreeSet::new()); fs.len()];
    for w in &ws {
        let (u, v) = w[0];
        let f = if same {
            fs.face_of_dart(u, v)
        } else {
            fs.face_of_dart(v, u)
        }
        .unwrap();
        for &(a, b) in w {
            let g = if same {
                fs.face_of_dart(a, b)
            } else {
                fs.face_of_dart(b, a)
            };
            assert_eq!(g, Some(f), "walk splits across faces");
            out[f].0.insert(a);
            out[f].1.insert((a.min(b), a.max(b)));
        }
    }
    out
}

fn connected_without(
    edges: &BTreeSet<(usize, usize)>,
    a: usize,
    b: usize,
    gone: Option<usize>,
) -> bool {
    let mut reach = BTreeSet::from([a]);
    let mut stack = vec![a];
    while let Some(x) = stack.pop() {
        for &(p, q) in edges {
            let y = if p == x {
                q
            } else if q == x {
                p
            } else {
                continue;
            };
            if Some(y) != gone && reach.insert(y) {
                stack.push(y);
            }
        }
    }
    reach.contains(&b)
}

/// Two internally disjoint `a`–`b` paths in the graph on `edges`.
fn on_common_cycle(
    vs: &BTreeSet<usize>,
    edges: &BTreeSet<(usize, usize)>,
    a: usize,
    b: usize,
) -> bool {
    let mut rest = edges.clone();
    rest.remove(&(a.min(b), a.max(b)));
    let adjacent = rest.len() < edges.len();
    if adjacent {
        connected_without(&rest, a, b, None)
    } else {
        connected_without(&rest, a, b, None)
            && vs
                .iter()
                .filter(|&&c| c != a && c != b)
                .all(|&c| connected_without(&rest, a, b, Some(c)))
    }
}

pub fn check_very_nice(g: &PlaneGraph, fs: &FaceSet, vn: &VeryNiceSubgraph) {
    let faces = faces_here(g, fs);
    let star = fs.infinite();
    assert!(faces[star].0.contains(&vn.v_star));
    let mut vdeg = vec![0; g.n()];
    let mut kept = vec![BTreeSet::new(); faces.len()];
    for &(v, f) in &vn.incidences {
        assert!(faces[f].0.contains(&v), "({v}, {f}) is not an incidence");
        vdeg[v] += 1;
        kept[f].insert(v);
    }
    assert_eq!(vdeg[vn.v_star], 1);
    assert!(vdeg.iter().all(|&d| d <= 2));
    let mut total = 0;
    for (f, (vs, es)) in faces.iter().enumerate() {
        if f == star {
            assert_eq!(kept[f].len(), vs.len());
            total += vs.len();
        } else {
            assert_eq!(kept[f].len() + 2, vs.len(), "face {f}");
            total += vs.len() - 2;
            let missing: Vec<usize> = vs.difference(&kept[f]).copied().collect();
            assert!(
                on_common_cycle(vs, es, missing[0], missing[1]),
                "face {f} omits {missing:?}"
            );
        }
    }
    assert_eq!(vn.incidences.len(), total);
}

pub fn check_bipolar(g: &PlaneGraph, o: &BipolarOrientation) {
    let n = g.n();
    let arcs: Vec<(usize, usize)> = g
        .edges()
        .map(|(u, v)| if o.forward(u, v) { (u, v) } else { (v, u) })
        .collect();
    let sources: Vec<usize> = (0..n)
        .filter(|&v| arcs.iter().all(|&(_, b)| b != v))
        .collect();
    let sinks: Vec<usize> = (0..n)
        .filter(|&v| arcs.iter().all(|&(a, _)| a != v))
        .collect();
    assert_eq!((sources, sinks), (vec![o.s], vec![o.t]));
    // acyclic: repeatedly strip vertices without in-arcs
    let mut left: BTreeSet<usize> = (0..n).collect();
    while let Some(&v) = left
        .iter()
        .find(|&&v| arcs.iter().all(|&(a, b)| b != v || !left.contains(&a)))
    {
        left.remove(&v);
    }
    assert!(left.is_empty(), "directed cycle");
    for w in walks(g) {
        let k = w.len();
        let turns = (0..k)
            .filter(|&i| o.forward(w[i].0, w[i].1) != o.forward(w[(i + 1) % k].0, w[(i + 1) % k].1))
            .count();
        assert_eq!(turns, 2, "face walk {w:?}");
    }
    let rot = g.rotation().unwrap();
    for (v, r) in rot.iter().enumerate() {
        let k = r.len();
        let switches = (0..k)
            .filter(|&i| o.forward(v, r[i]) != o.forward(v, r[(i + 1) % k]))
            .count();
        assert!(switches <= 2, "in-arcs at {v}");
    }
}

pub fn outer_pair(fs: &FaceSet, rng: &mut ChaCha8Rng) -> (usize, usize) {
    let outer = fs.face_vertices(fs.infinite());
    let pick: Vec<usize> = outer.choose_multiple(rng, 2).copied().collect();
    (pick[0], pick[1])
}

//! Seeded random instance generators.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::choosability::{ColorSet, ListAssignment};
use crate::graph::{block_cut_tree, connectivity_at_least, embed, trace_faces, PlaneGraph};

/// Embeds `g` and designates its first traced walk as the infinite face.
pub fn embed_with_outer(g: &PlaneGraph) -> PlaneGraph {
    let e = embed(g).expect("generated graphs are planar");
    let fs = trace_faces(&e).expect("embedding is plane");
    let w = fs.walk(fs.face_walks(fs.infinite())[0]).to_vec();
    e.with_outer(w)
}

/// Double wheel: rim `1..=rim`, hub `0` inside and hub `rim + 1` outside, both
/// adjacent to every rim vertex. The outer face is a triangle at the outer hub.
pub fn double_wheel(rim: usize) -> PlaneGraph {
    assert!(rim >= 3);
    let outer_hub = rim + 1;
    let mut edges = Vec::new();
    for i in 0..rim {
        edges.push((0, 1 + i));
        edges.push((outer_hub, 1 + i));
        edges.push((1 + i, 1 + (i + 1) % rim));
    }
    let mut rot = vec![(1..=rim).collect::<Vec<_>>()];
    for i in 0..rim {
        rot.push(vec![
            1 + (i + 1) % rim,
            0,
            1 + (i + rim - 1) % rim,
            outer_hub,
        ]);
    }
    rot.push((1..=rim).rev().collect());
    let g = PlaneGraph::from_edges(rim + 2, &edges)
        .unwrap()
        .with_rotation(rot)
        .unwrap();
    g.with_outer(vec![outer_hub, 2, 1])
}

/// Triangles of a triangulation on `0..n`, grown by stacking a vertex into a
/// random face and then diversified by random edge flips.
pub fn random_triangulation_faces<R: Rng>(n: usize, flips: usize, rng: &mut R) -> Vec<[usize; 3]> {
    assert!(n >= 3);
    let mut tris = vec![[0, 1, 2], [0, 2, 1]];
    for v in 3..n {
        let i = rng.gen_range(0..tris.len());
        let [a, b, c] = tris.swap_remove(i);
        tris.extend([[a, b, v], [b, c, v], [c, a, v]]);
    }
    for _ in 0..flips {
        let i = rng.gen_range(0..tris.len());
        let e = rng.gen_range(0..3);
        try_flip(&mut tris, i, e);
    }
    tris
}

fn edge_set(tris: &[[usize; 3]]) -> HashSet<(usize, usize)> {
    let mut s = HashSet::new();
    for t in tris {
        for i in 0..3 {
            let (a, b) = (t[i], t[(i + 1) % 3]);
            s.insert((a.min(b), a.max(b)));
        }
    }
    s
}

fn tri_degrees(tris: &[[usize; 3]], n: usize) -> Vec<usize> {
    let mut d = vec![0; n];
    for &(a, b) in &edge_set(tris) {
        d[a] += 1;
        d[b] += 1;
    }
    d
}

/// Flips edge `e` of triangle `i` if the result is a simple triangulation with
/// minimum degree at least 3.
fn try_flip(tris: &mut [[usize; 3]], i: usize, e: usize) -> bool {
    let t = tris[i];
    let (a, b, c) = (t[e], t[(e + 1) % 3], t[(e + 2) % 3]);
    let Some(j) = (0..tris.len()).find(|&j| j != i && tris[j].contains(&a) && tris[j].contains(&b))
    else {
        return false;
    };
    let d = *tris[j].iter().find(|&&x| x != a && x != b).unwrap();
    if c == d {
        return false;
    }
    let edges = edge_set(tris);
    if edges.contains(&(c.min(d), c.max(d))) {
        return false;
    }
    let n = tris.iter().flatten().max().unwrap() + 1;
    let deg = tri_degrees(tris, n);
    if deg[a] <= 3 || deg[b] <= 3 {
        return false;
    }
    tris[i] = [a, d, c];
    tris[j] = [b, c, d];
    true
}

fn graph_of(n: usize, edges: &HashSet<(usize, usize)>) -> PlaneGraph {
    let mut e: Vec<_> = edges.iter().copied().collect();
    e.sort_unstable();
    PlaneGraph::from_edges(n, &e).unwrap()
}

/// A random embedded 2-connected planar graph on `n ≥ 3` vertices: a random
/// triangulation with random edges removed while 2-connectivity survives.
pub fn random_biconnected_planar<R: Rng>(n: usize, rng: &mut R) -> PlaneGraph {
    let tris = random_triangulation_faces(n, 2 * n, rng);
    let mut edges: Vec<(usize, usize)> = edge_set(&tris).into_iter().collect();
    edges.sort_unstable();
    edges.shuffle(rng);
    let deletions = rng.gen_range(0..=edges.len().saturating_sub(n));
    let mut kept: HashSet<(usize, usize)> = edges.iter().copied().collect();
    for e in edges.iter().take(deletions) {
        kept.remove(e);
        if !connectivity_at_least(&graph_of(n, &kept), 2) {
            kept.insert(*e);
        }
    }
    embed_with_outer(&graph_of(n, &kept))
}

/// A random connected graph glued from `2..=6` blocks (2-connected planar pieces
/// and bridges) at random cut vertices, embedded.
pub fn random_block_composition<R: Rng>(rng: &mut R) -> PlaneGraph {
    let blocks = rng.gen_range(2..=6);
    let mut n = 0;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for i in 0..blocks {
        let size = if rng.gen_bool(0.25) {
            2
        } else {
            rng.gen_range(3..=9)
        };
        let piece = if size == 2 {
            PlaneGraph::from_edges(2, &[(0, 1)]).unwrap()
        } else {
            random_biconnected_planar(size, rng)
        };
        // vertex 0 of the piece is identified with an existing vertex
        let anchor = if i == 0 {
            None
        } else {
            Some(rng.gen_range(0..n))
        };
        let base = n;
        let id = |v: usize| match anchor {
            Some(a) if v == 0 => a,
            Some(_) => base + v - 1,
            None => base + v,
        };
        for (u, v) in piece.edges() {
            edges.push((id(u), id(v)));
        }
        n += if anchor.is_some() { size - 1 } else { size };
    }
    embed_with_outer(&PlaneGraph::from_edges(n, &edges).unwrap())
}

/// A random connected Gallai tree on at most `max_n` vertices whose blocks are
/// `K2`, `K3`, `K4` or odd cycles, embedded.
pub fn random_gallai_tree<R: Rng>(max_n: usize, rng: &mut R) -> PlaneGraph {
    assert!(max_n >= 1);
    let mut n = 1;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let target = rng.gen_range(1..=max_n);
    while n < target {
        let room = target - n + 1;
        let mut kinds: Vec<usize> = vec![2];
        if room >= 3 {
            kinds.push(3);
        }
        if room >= 4 {
            kinds.push(4);
        }
        if room >= 5 {
            kinds.push(5);
        }
        if room >= 7 {
            kinds.push(7);
        }
        let kind = *kinds.choose(rng).unwrap();
        let anchor = rng.gen_range(0..n);
        let mut vs = vec![anchor];
        vs.extend(n..n + kind - 1);
        if kind <= 4 {
            for i in 0..kind {
                for j in i + 1..kind {
                    edges.push((vs[i], vs[j]));
                }
            }
        } else {
            for i in 0..kind {
                edges.push((vs[i], vs[(i + 1) % kind]));
            }
        }
        n += kind - 1;
    }
    embed_with_outer(&PlaneGraph::from_edges(n, &edges).unwrap())
}

/// A triangulation `T` on `6..=10` vertices with minimum degree at least 4, and
/// in each face of `T` one of three gadgets (a vertex, an edge, or a triangle
/// joined to the face) such that every vertex of `T` ends with degree at least
/// 12. `T` comes first in the vertex numbering. Retries until the constraints hold.
pub fn triangulation_variant<R: Rng>(rng: &mut R) -> PlaneGraph {
    loop {
        let t = rng.gen_range(6..=10);
        let mut tris = random_triangulation_faces(t, 4 * t, rng);
        for _ in 0..200 {
            let deg = tri_degrees(&tris, t);
            let Some(v) = (0..t).find(|&v| deg[v] < 4) else {
                break;
            };
            let i = (0..tris.len())
                .filter(|&i| tris[i].contains(&v))
                .collect::<Vec<_>>();
            let i = *i.choose(rng).unwrap();
            let e = (tris[i].iter().position(|&x| x == v).unwrap() + 1) % 3;
            if !try_flip(&mut tris, i, e) {
                let j = rng.gen_range(0..tris.len());
                try_flip(&mut tris, j, rng.gen_range(0..3));
            }
        }
        if tri_degrees(&tris, t).iter().any(|&d| d < 4) {
            continue;
        }
        // gadget size per face; a size-2 gadget gives two extra edges to the
        // first two face corners, so faces are rotated to favour deficient corners
        let mut size: Vec<usize> = (0..tris.len()).map(|_| rng.gen_range(0..3)).collect();
        let gain = |tris: &[[usize; 3]], size: &[usize], v: usize| -> usize {
            tris.iter()
                .zip(size)
                .map(|(f, &s)| match (f.iter().position(|&x| x == v), s) {
                    (None, _) => 0,
                    (Some(_), 0) => 1,
                    (Some(i), 1) => {
                        if i < 2 {
                            2
                        } else {
                            1
                        }
                    }
                    (Some(_), _) => 2,
                })
                .sum()
        };
        let tdeg = tri_degrees(&tris, t);
        for _ in 0..4 * tris.len() {
            let Some(v) = (0..t).find(|&v| tdeg[v] + gain(&tris, &size, v) < 12) else {
                break;
            };
            let open: Vec<usize> = (0..tris.len())
                .filter(|&i| tris[i].contains(&v) && size[i] < 2)
                .collect();
            let Some(&i) = open.choose(rng) else { break };
            size[i] += 1;
            if size[i] == 1 {
                while tris[i][2] == v {
                    tris[i].rotate_left(1);
                }
            }
        }
        let mut edges: HashSet<(usize, usize)> = edge_set(&tris);
        let mut n = t;
        let add = |edges: &mut HashSet<(usize, usize)>, a: usize, b: usize| {
            edges.insert((a.min(b), a.max(b)));
        };
        for (&[a, b, c], &sz) in tris.iter().zip(&size) {
            match sz {
                0 => {
                    let x = n;
                    n += 1;
                    for y in [a, b, c] {
                        add(&mut edges, x, y);
                    }
                }
                1 => {
                    let (p, q) = (n, n + 1);
                    n += 2;
                    for (u, v) in [(p, q), (p, a), (p, b), (q, b), (q, c), (q, a)] {
                        add(&mut edges, u, v);
                    }
                }
                _ => {
                    let (q1, q2, q3) = (n, n + 1, n + 2);
                    n += 3;
                    for (u, v) in [
                        (q1, q2),
                        (q2, q3),
                        (q3, q1),
                        (q1, a),
                        (q1, b),
                        (q2, b),
                        (q2, c),
                        (q3, c),
                        (q3, a),
                    ] {
                        add(&mut edges, u, v);
                    }
                }
            }
        }
        let g = graph_of(n, &edges);
        if n <= 60 && (0..t).all(|v| g.degree(v) >= 12) && (t..n).all(|v| g.degree(v) < 12) {
            return embed_with_outer(&g);
        }
    }
}

/// Lists with `|L(v)| = min(k, d(v))` drawn uniformly from `0..universe`.
pub fn uniform_truncated_lists<R: Rng>(
    g: &PlaneGraph,
    k: usize,
    universe: usize,
    rng: &mut R,
) -> ListAssignment {
    let all: Vec<usize> = (0..universe).collect();
    let lists = (0..g.n())
        .map(|v| {
            all.choose_multiple(rng, g.degree(v).min(k).min(universe))
                .copied()
                .collect()
        })
        .collect();
    ListAssignment::new(universe, lists).unwrap()
}

/// Truncated lists that make every low-degree component hostile: each
/// component `Q` of the vertices of degree below `k` gets per-block colour sets
/// forming a bad assignment on `Q`, and every edge `vw` from `Q` to a
/// high-degree `w` adds a colour `c_w` to `L(v)`, where `c_w ∈ L(w)`. Colouring
/// every such `w` with `c_w` would leave `Q` uncolourable. High-degree lists are
/// filled up to size `k` at random.
pub fn adversarial_truncated_lists<R: Rng>(
    g: &PlaneGraph,
    k: usize,
    universe: usize,
    rng: &mut R,
) -> ListAssignment {
    let n = g.n();
    let low: Vec<bool> = (0..n).map(|v| g.degree(v) < k).collect();
    let mut lists = vec![ColorSet::EMPTY; n];
    let palette: Vec<usize> = (0..universe).collect();
    // c_w per high vertex
    let c_of: Vec<usize> = (0..n).map(|_| *palette.choose(rng).unwrap()).collect();
    let (q, map) = g.induced(&low);
    let tree = block_cut_tree(&q);
    for (b, blk) in tree.blocks.iter().enumerate() {
        let r = blk.len() - 1;
        let r = if r >= 2 && tree.block_edges(&q, b).len() == blk.len() && blk.len() > 3 {
            2
        } else {
            r
        };
        let used: ColorSet = blk
            .iter()
            .fold(ColorSet::EMPTY, |acc, &v| acc.union(lists[map[v]]));
        let mut free: Vec<usize> = palette
            .iter()
            .copied()
            .filter(|&c| !used.contains(c))
            .collect();
        free.shuffle(rng);
        let set: ColorSet = free.into_iter().take(r).collect();
        for &v in blk {
            lists[map[v]] = lists[map[v]].union(set);
        }
    }
    for v in (0..n).filter(|&v| low[v]) {
        for &w in g.neighbors(v).iter().filter(|&&w| !low[w]) {
            lists[v].insert(c_of[w]);
            lists[w].insert(c_of[w]);
        }
        let want = g.degree(v).min(k);
        let mut spare: Vec<usize> = palette
            .iter()
            .copied()
            .filter(|&c| !lists[v].contains(c))
            .collect();
        spare.shuffle(rng);
        while lists[v].len() < want {
            lists[v].insert(spare.pop().unwrap());
        }
    }
    for w in (0..n).filter(|&w| !low[w]) {
        let mut spare: Vec<usize> = palette
            .iter()
            .copied()
            .filter(|&c| !lists[w].contains(c))
            .collect();
        spare.shuffle(rng);
        while lists[w].len() < g.degree(w).min(k) {
            lists[w].insert(spare.pop().unwrap());
        }
        while lists[w].len() > g.degree(w).min(k) {
            let c = lists[w].to_vec()[rng.gen_range(0..lists[w].len())];
            lists[w].remove(c);
        }
    }
    ListAssignment::new(universe, lists).unwrap()
}

#[derive(Debug, Clone)]
pub struct Instance {
    pub name: String,
    pub graph: PlaneGraph,
    pub lists: ListAssignment,
}

/// `count` instances with nonempty low and high parts and truncated-`k` lists
/// over 20 colours: double wheels and triangulation variants in turn, with
/// uniform and adversarial lists in turn.
pub fn procedure_suite(count: usize, k: usize, seed: u64) -> Vec<Instance> {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let (kind, graph) = if i % 2 == 0 {
                let rim = rng.gen_range(k.max(3)..=58);
                (format!("double-wheel-{rim}"), double_wheel(rim))
            } else {
                let g = triangulation_variant(&mut rng);
                (format!("triangulation-{}", g.n()), g)
            };
            let (style, lists) = if (i / 2) % 2 == 0 {
                ("uniform", uniform_truncated_lists(&graph, k, 20, &mut rng))
            } else {
                (
                    "adversarial",
                    adversarial_truncated_lists(&graph, k, 20, &mut rng),
                )
            };
            Instance {
                name: format!("{i:02}-{kind}-{style}"),
                graph,
                lists,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::choosability::is_gallai_tree;
    use crate::graph::is_planar;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn double_wheel_shape() {
        let g = double_wheel(12);
        let fs = trace_faces(&g).unwrap();
        assert_eq!(fs.len(), 24);
        assert_eq!(g.degree(0), 12);
        assert_eq!(g.degree(13), 12);
        assert!((1..=12).all(|v| g.degree(v) == 4));
        assert_eq!(fs.face_vertices(fs.infinite()), &[1, 2, 13]);
    }

    #[test]
    fn triangulations_are_three_connected() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for n in 4..20 {
            let tris = random_triangulation_faces(n, 3 * n, &mut rng);
            assert_eq!(tris.len(), 2 * n - 4);
            let g = graph_of(n, &edge_set(&tris));
            assert_eq!(g.m(), 3 * n - 6);
            assert!(connectivity_at_least(&g, 3));
        }
    }

    #[test]
    fn biconnected_and_compositions() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for n in 3..25 {
            let g = random_biconnected_planar(n, &mut rng);
            assert!(connectivity_at_least(&g, 2));
            trace_faces(&g).unwrap();
        }
        for _ in 0..20 {
            let g = random_block_composition(&mut rng);
            assert_eq!(g.components().len(), 1);
            assert!(!block_cut_tree(&g).cut_vertices.is_empty());
            trace_faces(&g).unwrap();
        }
    }

    #[test]
    fn gallai_trees() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let g = random_gallai_tree(12, &mut rng);
            assert!(g.n() <= 12);
            assert_eq!(is_gallai_tree(&g), Ok(true));
        }
    }

    #[test]
    fn triangulation_variants_meet_their_constraints() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..5 {
            let g = triangulation_variant(&mut rng);
            assert!(g.n() <= 60);
            assert!(is_planar(&g));
            assert!(connectivity_at_least(&g, 3));
            assert_eq!(g.m(), 3 * g.n() - 6);
        }
    }

    #[test]
    fn list_sizes() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let g = double_wheel(13);
        for l in [
            uniform_truncated_lists(&g, 12, 20, &mut rng),
            adversarial_truncated_lists(&g, 12, 20, &mut rng),
        ] {
            for v in 0..g.n() {
                assert_eq!(l.get(v).len(), g.degree(v).min(12), "vertex {v}");
            }
        }
    }
}

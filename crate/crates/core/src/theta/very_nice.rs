use std::collections::BTreeSet;

use super::{bipolar_orient, build_theta, BipolarOrientation, ThetaError, ThetaGraph};
use crate::graph::{block_cut_tree, trace_faces, FaceSet, PlaneGraph};

/// A set `F` of vertex–face incidences of `Θ(G)` with
/// `d_F(v*) = 1`, `d_F(v) ≤ 2`, `d_F(θ*) = d_Θ(θ*)`, `d_F(θ) = d_Θ(θ) − 2` on
/// finite faces, and the two vertices of a finite face missing from `F` lying on
/// a common cycle of its boundary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VeryNiceSubgraph {
    /// Sorted `(vertex, face)` pairs.
    pub incidences: Vec<(usize, usize)>,
    pub theta_star: usize,
    pub v_star: usize,
}

impl VeryNiceSubgraph {
    fn new(set: BTreeSet<(usize, usize)>, theta_star: usize, v_star: usize) -> Self {
        VeryNiceSubgraph {
            incidences: set.into_iter().collect(),
            theta_star,
            v_star,
        }
    }

    pub fn contains(&self, v: usize, f: usize) -> bool {
        self.incidences.binary_search(&(v, f)).is_ok()
    }

    /// Faces incident to `v` in `F`.
    pub fn faces_of(&self, v: usize) -> Vec<usize> {
        let start = self.incidences.partition_point(|&(x, _)| x < v);
        self.incidences[start..]
            .iter()
            .take_while(|&&(x, _)| x == v)
            .map(|&(_, f)| f)
            .collect()
    }

    pub fn vertex_degree(&self, v: usize) -> usize {
        self.faces_of(v).len()
    }

    pub fn face_degree(&self, f: usize) -> usize {
        self.incidences.iter().filter(|&&(_, x)| x == f).count()
    }

    /// `d_Θ(θ*) + Σ_{θ finite} (d_Θ(θ) − 2)`.
    pub fn expected_size(theta: &ThetaGraph, theta_star: usize) -> usize {
        (0..theta.face_vertices.len())
            .map(|f| {
                if f == theta_star {
                    theta.face_degree(f)
                } else {
                    theta.face_degree(f) - 2
                }
            })
            .sum()
    }

    /// Checks all four defining conditions and the counting identity.
    pub fn verify(&self, g: &PlaneGraph, faces: &FaceSet) -> Result<(), ThetaError> {
        let theta = build_theta(g, faces);
        let fail = |m: String| Err(ThetaError::Invariant(m));
        if self.theta_star != faces.infinite() {
            return fail(format!(
                "θ* = {} is not the infinite face {}",
                self.theta_star,
                faces.infinite()
            ));
        }
        if let Some(&(v, f)) = self
            .incidences
            .iter()
            .find(|&&(v, f)| !theta.contains(v, f))
        {
            return fail(format!("({v}, {f}) is not an incidence of Θ"));
        }
        let mut vdeg = vec![0usize; g.n()];
        let mut fdeg = vec![0usize; faces.len()];
        for &(v, f) in &self.incidences {
            vdeg[v] += 1;
            fdeg[f] += 1;
        }
        if vdeg[self.v_star] != 1 {
            return fail(format!("d_F(v*) = {}", vdeg[self.v_star]));
        }
        if let Some(v) = (0..g.n()).find(|&v| vdeg[v] > 2) {
            return fail(format!("d_F({v}) = {}", vdeg[v]));
        }
        for f in 0..faces.len() {
            let want = if f == self.theta_star {
                theta.face_degree(f)
            } else {
                theta.face_degree(f) - 2
            };
            if fdeg[f] != want {
                return fail(format!(
                    "d_F(θ{f}) = {} but d_Θ = {}",
                    fdeg[f],
                    theta.face_degree(f)
                ));
            }
            if f != self.theta_star {
                let missing: Vec<usize> = theta.face_vertices[f]
                    .iter()
                    .copied()
                    .filter(|&v| !self.contains(v, f))
                    .collect();
                if !on_common_cycle(faces, f, missing[0], missing[1]) {
                    return fail(format!(
                        "{missing:?} share no cycle of the boundary of θ{f}"
                    ));
                }
            }
        }
        if self.incidences.len() != Self::expected_size(&theta, self.theta_star) {
            return fail("counting identity".into());
        }
        Ok(())
    }

    /// `f <face> <v1> <v2> ...` per face.
    pub fn dump(&self, faces: usize) -> String {
        let mut per_face: Vec<Vec<usize>> = vec![Vec::new(); faces];
        for &(v, f) in &self.incidences {
            per_face[f].push(v);
        }
        let mut s = String::new();
        for (f, vs) in per_face.iter().enumerate() {
            s.push_str(&format!("f {f}"));
            for v in vs {
                s.push_str(&format!(" {v}"));
            }
            s.push('\n');
        }
        s
    }
}

/// Whether `a` and `b` lie in a common block with at least three vertices of the
/// boundary subgraph `B(θ)`, i.e. on a common cycle.
fn on_common_cycle(faces: &FaceSet, f: usize, a: usize, b: usize) -> bool {
    let vs = faces.face_vertices(f);
    let idx = |v: usize| vs.binary_search(&v).unwrap();
    let edges: Vec<(usize, usize)> = faces
        .boundary_edges(f)
        .into_iter()
        .map(|(u, v)| (idx(u), idx(v)))
        .collect();
    let bg = PlaneGraph::from_edges(vs.len(), &edges).expect("boundary is simple");
    let tree = block_cut_tree(&bg);
    let (ia, ib) = (idx(a), idx(b));
    tree.blocks.iter().any(|blk| {
        blk.len() >= 3 && blk.binary_search(&ia).is_ok() && blk.binary_search(&ib).is_ok()
    })
}

/// `F` for a 2-connected plane graph from a bipolar orientation: every vertex of
/// the infinite face, and on each finite face every vertex except its local
/// source and sink. `v*` is the sink.
pub fn very_nice_from_bipolar(
    g: &PlaneGraph,
    faces: &FaceSet,
    orient: &BipolarOrientation,
) -> Result<VeryNiceSubgraph, ThetaError> {
    let set = block_incidences(faces, orient, None)?;
    let vn = VeryNiceSubgraph::new(set, faces.infinite(), orient.t);
    vn.verify(g, faces)?;
    Ok(vn)
}

/// Incidences of one 2-connected block, as `(vertex, face)` in the block's own ids.
/// `skip` is left out of the infinite face.
fn block_incidences(
    faces: &FaceSet,
    orient: &BipolarOrientation,
    skip: Option<usize>,
) -> Result<BTreeSet<(usize, usize)>, ThetaError> {
    let mut set = BTreeSet::new();
    for &v in faces.face_vertices(faces.infinite()) {
        if Some(v) != skip {
            set.insert((v, faces.infinite()));
        }
    }
    for (w, src, snk) in orient.face_poles(faces)? {
        let f = faces.face_of_walk(w);
        if f == faces.infinite() {
            continue;
        }
        for &v in faces.walk(w) {
            if v != src && v != snk {
                set.insert((v, f));
            }
        }
    }
    Ok(set)
}

/// A very nice subgraph of `Θ(G)` for any plane graph, with `θ*` the infinite face
/// and `v* ∈ V(θ*)`.
///
/// Each component's block tree is rooted at the block holding the dart into its
/// start vertex along the component's outer walk (`v*` for its own component).
/// The root block is oriented from the dart's tail to `v*`; every other block `B`
/// hanging at cut vertex `c` is oriented towards `c`, with its infinite face taken
/// as the face of `B` containing its parent. A child block contributes nothing at
/// `c`.
pub fn very_nice(
    g: &PlaneGraph,
    faces: &FaceSet,
    theta_star: usize,
    v_star: usize,
) -> Result<VeryNiceSubgraph, ThetaError> {
    if theta_star != faces.infinite() {
        return Err(ThetaError::Invariant(format!(
            "θ* = {theta_star} is not the infinite face"
        )));
    }
    if faces
        .face_vertices(theta_star)
        .binary_search(&v_star)
        .is_err()
    {
        return Err(ThetaError::NotOnFace {
            vertex: v_star,
            face: theta_star,
        });
    }
    let rot = g
        .rotation()
        .ok_or(crate::graph::GraphError::MissingRotation)?;
    let tree = block_cut_tree(g);
    let mut set = BTreeSet::new();

    for comp in g.components() {
        let outer = faces.outer_walk_of(comp[0]);
        let root = if comp.binary_search(&v_star).is_ok() {
            v_star
        } else {
            faces.walk(outer)[0]
        };
        let walk = faces.walk(faces.outer_walk_of(root));
        if walk.len() == 1 {
            set.insert((root, faces.face_of_walk(outer)));
            continue;
        }
        let k = walk.len();
        let i = walk
            .iter()
            .position(|&x| x == root)
            .expect("root lies on the outer walk");
        let tail = walk[(i + k - 1) % k];
        let root_block = tree.block_of_edge(tail, root).expect("edge in a block");

        // (block, parent cut vertex, source, sink); the root's "parent cut" is none
        let mut stack = vec![(root_block, usize::MAX, tail, root)];
        let mut done = vec![false; tree.blocks.len()];
        done[root_block] = true;
        while let Some((b, cut, s, t)) = stack.pop() {
            add_block(g, faces, &tree.blocks[b], cut, s, t, &mut set)?;
            for &c in &tree.blocks[b] {
                if c == cut {
                    continue;
                }
                for &child in tree.blocks_of(c) {
                    if done[child] {
                        continue;
                    }
                    done[child] = true;
                    // first neighbour of c in the child block, scanning forward from an edge of b
                    let r = &rot[c];
                    let start = r
                        .iter()
                        .position(|w| tree.blocks[b].binary_search(w).is_ok())
                        .unwrap();
                    let bnb = (1..r.len())
                        .map(|j| r[(start + j) % r.len()])
                        .find(|w| tree.blocks[child].binary_search(w).is_ok())
                        .unwrap();
                    stack.push((child, c, bnb, c));
                }
            }
        }
    }
    let vn = VeryNiceSubgraph::new(set, theta_star, v_star);
    vn.verify(g, faces)?;
    Ok(vn)
}

/// Adds the incidences of one block. The block's infinite face is the one
/// containing the dart `s → t`.
fn add_block(
    g: &PlaneGraph,
    faces: &FaceSet,
    block: &[usize],
    cut: usize,
    s: usize,
    t: usize,
    set: &mut BTreeSet<(usize, usize)>,
) -> Result<(), ThetaError> {
    let g_face = |a: usize, b: usize| faces.face_of_dart(a, b).expect("dart of g");
    if block.len() == 2 {
        let f = g_face(s, t);
        for &v in block {
            if v != cut {
                set.insert((v, f));
            }
        }
        return Ok(());
    }
    let keep: Vec<bool> = (0..g.n())
        .map(|v| block.binary_search(&v).is_ok())
        .collect();
    let (sub, map) = g.induced(&keep);
    let local = |v: usize| map.binary_search(&v).unwrap();
    let probe = trace_faces(&sub)?;
    let outer_walk = probe
        .walk_of_dart(local(s), local(t))
        .expect("dart in block");
    let sub = sub.with_outer(probe.walk(outer_walk).to_vec());
    let bf = trace_faces(&sub)?;
    let orient = bipolar_orient(&sub, &bf, local(s), local(t))?;
    let skip = (cut != usize::MAX).then(|| local(cut));
    for (v, f) in block_incidences(&bf, &orient, skip)? {
        let w = bf.face_walks(f)[0];
        let walk = bf.walk(w);
        set.insert((map[v], g_face(map[walk[0]], map[walk[1]])));
    }
    Ok(())
}

use std::collections::HashMap;

use super::{GraphError, PlaneGraph};

/// The faces of an embedded graph.
///
/// A *walk* is one closed boundary walk traced from the rotation system: walk
/// `[w0, w1, .., wk-1]` uses the darts `w0→w1, .., wk-1→w0`. An isolated vertex
/// has the one-vertex walk `[v]` with no darts. A *face* is a set of walks (one
/// per boundary component); for connected graphs every face has exactly one walk.
///
/// Tracing rule: the dart following `u→v` is `v→w` where `w` precedes `u` in the
/// counterclockwise rotation at `v`. Finite faces are therefore traversed
/// counterclockwise.
#[derive(Debug, Clone)]
pub struct FaceSet {
    walks: Vec<Vec<usize>>,
    walk_face: Vec<usize>,
    faces: Vec<Vec<usize>>,
    infinite: usize,
    face_vertices: Vec<Vec<usize>>,
    dart_walk: HashMap<(usize, usize), usize>,
    isolated_walk: HashMap<usize, usize>,
    /// Per connected component: the walk bounding it from outside.
    component_outer: Vec<usize>,
    vertex_component: Vec<usize>,
}

impl FaceSet {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn infinite(&self) -> usize {
        self.infinite
    }

    pub fn walks(&self) -> &[Vec<usize>] {
        &self.walks
    }

    pub fn walk(&self, w: usize) -> &[usize] {
        &self.walks[w]
    }

    /// Number of darts on walk `w` (0 for an isolated vertex).
    pub fn walk_len(&self, w: usize) -> usize {
        if self.walks[w].len() == 1 {
            0
        } else {
            self.walks[w].len()
        }
    }

    pub fn face_walks(&self, f: usize) -> &[usize] {
        &self.faces[f]
    }

    pub fn face_of_walk(&self, w: usize) -> usize {
        self.walk_face[w]
    }

    /// `V(θ)`: sorted boundary vertex set of face `f`.
    pub fn face_vertices(&self, f: usize) -> &[usize] {
        &self.face_vertices[f]
    }

    pub fn walk_of_dart(&self, u: usize, v: usize) -> Option<usize> {
        self.dart_walk.get(&(u, v)).copied()
    }

    pub fn face_of_dart(&self, u: usize, v: usize) -> Option<usize> {
        self.walk_of_dart(u, v).map(|w| self.walk_face[w])
    }

    pub fn walk_of_isolated(&self, v: usize) -> Option<usize> {
        self.isolated_walk.get(&v).copied()
    }

    /// Faces whose boundary contains `v`, sorted.
    pub fn faces_at(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = (0..self.len())
            .filter(|&f| self.face_vertices[f].binary_search(&v).is_ok())
            .collect();
        out.dedup();
        out
    }

    /// Edges of `B(θ)` as `(u, v)` with `u < v`, sorted and deduplicated.
    pub fn boundary_edges(&self, f: usize) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for &w in &self.faces[f] {
            let walk = &self.walks[w];
            if walk.len() < 2 {
                continue;
            }
            for i in 0..walk.len() {
                let (a, b) = (walk[i], walk[(i + 1) % walk.len()]);
                out.push((a.min(b), a.max(b)));
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    /// The walk bounding the component containing vertex `v` from outside.
    pub fn outer_walk_of(&self, v: usize) -> usize {
        self.component_outer[self.vertex_component[v]]
    }

    pub fn component_outer_walks(&self) -> &[usize] {
        &self.component_outer
    }

    fn assemble(
        walks: Vec<Vec<usize>>,
        dart_walk: HashMap<(usize, usize), usize>,
        isolated_walk: HashMap<usize, usize>,
        group: Vec<usize>,
        infinite_group: usize,
        component_outer: Vec<usize>,
        components: &[(Vec<usize>, Vec<usize>)],
    ) -> FaceSet {
        let n = components.iter().map(|(c, _)| c.len()).sum();
        let mut vertex_component = vec![0; n];
        for (i, (comp, _)) in components.iter().enumerate() {
            for &v in comp {
                vertex_component[v] = i;
            }
        }
        let mut face_of_group: HashMap<usize, usize> = HashMap::new();
        let mut faces: Vec<Vec<usize>> = Vec::new();
        let mut walk_face = vec![0; walks.len()];
        for (w, &g) in group.iter().enumerate() {
            let f = *face_of_group.entry(g).or_insert_with(|| {
                faces.push(Vec::new());
                faces.len() - 1
            });
            faces[f].push(w);
            walk_face[w] = f;
        }
        let infinite = face_of_group[&infinite_group];
        let face_vertices = faces
            .iter()
            .map(|ws| {
                let mut vs: Vec<usize> =
                    ws.iter().flat_map(|&w| walks[w].iter().copied()).collect();
                vs.sort_unstable();
                vs.dedup();
                vs
            })
            .collect();
        FaceSet {
            walks,
            walk_face,
            faces,
            infinite,
            face_vertices,
            dart_walk,
            isolated_walk,
            component_outer,
            vertex_component,
        }
    }
}

struct Walks {
    walks: Vec<Vec<usize>>,
    dart_walk: HashMap<(usize, usize), usize>,
    isolated_walk: HashMap<usize, usize>,
    /// (component vertex list, walk indices)
    components: Vec<(Vec<usize>, Vec<usize>)>,
}

fn trace_walks(g: &PlaneGraph) -> Result<Walks, GraphError> {
    let rot = g.rotation().ok_or(GraphError::MissingRotation)?;
    let mut pos: HashMap<(usize, usize), usize> = HashMap::with_capacity(2 * g.m());
    for (v, list) in rot.iter().enumerate() {
        for (i, &w) in list.iter().enumerate() {
            pos.insert((v, w), i);
        }
    }
    let mut dart_walk = HashMap::with_capacity(2 * g.m());
    let mut isolated_walk = HashMap::new();
    let mut walks = Vec::new();
    let mut components = Vec::new();
    for comp in g.components() {
        let first = walks.len();
        if comp.len() == 1 && g.degree(comp[0]) == 0 {
            isolated_walk.insert(comp[0], walks.len());
            walks.push(vec![comp[0]]);
        }
        for &v in &comp {
            for &w in &rot[v] {
                if dart_walk.contains_key(&(v, w)) {
                    continue;
                }
                let id = walks.len();
                let mut walk = Vec::new();
                let (mut a, mut b) = (v, w);
                loop {
                    dart_walk.insert((a, b), id);
                    walk.push(a);
                    let deg = rot[b].len();
                    let i = pos[&(b, a)];
                    let c = rot[b][(i + deg - 1) % deg];
                    a = b;
                    b = c;
                    if (a, b) == (v, w) {
                        break;
                    }
                    if dart_walk.contains_key(&(a, b)) {
                        // rotation lists that are not permutations cannot reach here
                        return Err(GraphError::InconsistentRotation(a));
                    }
                }
                walks.push(walk);
            }
        }
        let ids: Vec<usize> = (first..walks.len()).collect();
        let m_c: usize = comp.iter().map(|&v| g.degree(v)).sum::<usize>() / 2;
        let euler = comp.len() as i64 - m_c as i64 + ids.len() as i64;
        if euler != 2 {
            return Err(GraphError::NotPlane {
                vertex: comp[0],
                euler,
            });
        }
        components.push((comp, ids));
    }
    Ok(Walks {
        walks,
        dart_walk,
        isolated_walk,
        components,
    })
}

fn cyclic_match(walk: &[usize], target: &[usize], reversed: bool) -> bool {
    if walk.len() != target.len() || walk.is_empty() {
        return false;
    }
    let k = walk.len();
    if reversed {
        (0..k).any(|s| (0..k).all(|i| walk[(s + k - i) % k] == target[i]))
    } else {
        (0..k).any(|s| (0..k).all(|i| walk[(s + i) % k] == target[i]))
    }
}

/// Traces all faces of an embedded graph.
///
/// Components are placed side by side: their outer walks together form the
/// infinite face. The outer walk of a component is the designated `outer` walk of
/// the graph if it lies in that component, otherwise the component's first traced
/// walk. A designated walk is matched in its traced direction first, then
/// reversed. Fails if the rotation system is not a plane embedding.
pub fn trace_faces(g: &PlaneGraph) -> Result<FaceSet, GraphError> {
    let Walks {
        walks,
        dart_walk,
        isolated_walk,
        components,
    } = trace_walks(g)?;
    let designated = match g.outer() {
        Some(target) => Some(
            (0..walks.len())
                .find(|&w| cyclic_match(&walks[w], target, false))
                .or_else(|| (0..walks.len()).find(|&w| cyclic_match(&walks[w], target, true)))
                .ok_or_else(|| GraphError::UnknownOuterWalk(target.to_vec()))?,
        ),
        None => None,
    };
    let mut component_outer = Vec::new();
    let mut is_outer = vec![false; walks.len()];
    for (_, ids) in &components {
        let w = designated.filter(|d| ids.contains(d)).unwrap_or(ids[0]);
        is_outer[w] = true;
        component_outer.push(w);
    }
    // group id: walks on the infinite face share group usize::MAX
    let group: Vec<usize> = (0..walks.len())
        .map(|w| if is_outer[w] { usize::MAX } else { w })
        .collect();
    Ok(FaceSet::assemble(
        walks,
        dart_walk,
        isolated_walk,
        group,
        usize::MAX,
        component_outer,
        &components,
    ))
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Host walks merged into the regions of the plane left after deleting every host
/// edge that is not inside `keep`.
fn host_regions(host: &PlaneGraph, hf: &FaceSet, keep: &[bool]) -> UnionFind {
    let mut uf = UnionFind::new(hf.walks.len());
    for ws in &hf.faces {
        for &w in &ws[1..] {
            uf.union(ws[0], w);
        }
    }
    for (a, b) in host.edges() {
        if !(keep[a] && keep[b]) {
            uf.union(hf.dart_walk[&(a, b)], hf.dart_walk[&(b, a)]);
        }
    }
    uf
}

/// A host walk touching host vertex `v` (used to locate isolated subgraph vertices).
fn host_walk_at(host: &PlaneGraph, hf: &FaceSet, v: usize) -> usize {
    match host.neighbors(v).first() {
        Some(&w) => hf.dart_walk[&(w, v)],
        None => hf.isolated_walk[&v],
    }
}

/// Faces of the induced plane subgraph `host[keep]`, with the nesting of its
/// components taken from the host embedding.
///
/// Returns the subgraph (relabelled as in [`PlaneGraph::induced`]), the map from
/// subgraph ids to host ids, and its faces. The infinite face is the region
/// containing the host's infinite face.
pub fn subgraph_faces(
    host: &PlaneGraph,
    host_faces: &FaceSet,
    keep: &[bool],
) -> Result<(PlaneGraph, Vec<usize>, FaceSet), GraphError> {
    subgraph_faces_locating(host, host_faces, keep).map(|(sub, map, fs, _)| (sub, map, fs))
}

/// As [`subgraph_faces`], and also the face of the subgraph containing each
/// host vertex outside `keep` (`None` for kept vertices).
pub fn subgraph_faces_locating(
    host: &PlaneGraph,
    host_faces: &FaceSet,
    keep: &[bool],
) -> Result<(PlaneGraph, Vec<usize>, FaceSet, Vec<Option<usize>>), GraphError> {
    let (sub, map) = host.induced(keep);
    let Walks {
        walks,
        dart_walk,
        isolated_walk,
        components,
    } = trace_walks(&sub)?;
    let mut uf = host_regions(host, host_faces, keep);
    let host_walk_of = |w: &Vec<usize>| -> usize {
        if w.len() == 1 {
            host_walk_at(host, host_faces, map[w[0]])
        } else {
            host_faces.dart_walk[&(map[w[0]], map[w[1]])]
        }
    };
    let group: Vec<usize> = walks.iter().map(|w| uf.find(host_walk_of(w))).collect();
    let host_inf = uf.find(host_faces.faces[host_faces.infinite][0]);

    let mut component_outer = Vec::new();
    if components.len() == 1 {
        let ids = &components[0].1;
        let w = ids
            .iter()
            .copied()
            .find(|&w| group[w] == host_inf)
            .unwrap_or(ids[0]);
        component_outer.push(w);
    } else {
        for (comp, ids) in &components {
            let mut keep_c = vec![false; host.n()];
            for &v in comp {
                keep_c[map[v]] = true;
            }
            let mut uc = host_regions(host, host_faces, &keep_c);
            let inf_c = uc.find(host_faces.faces[host_faces.infinite][0]);
            let w = ids
                .iter()
                .copied()
                .find(|&w| uc.find(host_walk_of(&walks[w])) == inf_c)
                .unwrap_or(ids[0]);
            component_outer.push(w);
        }
    }

    let regions = {
        let mut r = group.clone();
        r.sort_unstable();
        r.dedup();
        r.len()
    };
    let euler = sub.n() as i64 - sub.m() as i64 + regions as i64;
    if euler != 1 + components.len() as i64 {
        return Err(GraphError::NotPlane {
            vertex: map.first().copied().unwrap_or(0),
            euler,
        });
    }
    let fs = FaceSet::assemble(
        walks,
        dart_walk,
        isolated_walk,
        group.clone(),
        host_inf,
        component_outer,
        &components,
    );
    let located = (0..host.n())
        .map(|v| {
            if keep[v] {
                return None;
            }
            let r = uf.find(host_walk_at(host, host_faces, v));
            group
                .iter()
                .position(|&g| g == r)
                .map(|w| fs.face_of_walk(w))
        })
        .collect();
    Ok((sub, map, fs, located))
}

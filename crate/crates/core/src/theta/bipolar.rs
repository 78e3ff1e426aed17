use super::ThetaError;
use crate::graph::{connectivity_at_least, FaceSet, PlaneGraph};

/// An acyclic orientation with a single source `s` and a single sink `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipolarOrientation {
    pub s: usize,
    pub t: usize,
    /// st-number of each vertex; edges point from the lower to the higher number.
    pub number: Vec<usize>,
}

impl BipolarOrientation {
    /// Whether the edge `uv` is directed `u → v`.
    pub fn forward(&self, u: usize, v: usize) -> bool {
        self.number[u] < self.number[v]
    }

    pub fn arcs(&self, g: &PlaneGraph) -> Vec<(usize, usize)> {
        g.edges()
            .map(|(u, v)| if self.forward(u, v) { (u, v) } else { (v, u) })
            .collect()
    }

    /// Local source and sink of every walk of `faces`, as `(walk, source, sink)`.
    /// Fails if some walk is not split into exactly two directed paths.
    pub fn face_poles(&self, faces: &FaceSet) -> Result<Vec<(usize, usize, usize)>, ThetaError> {
        let mut out = Vec::new();
        for (w, walk) in faces.walks().iter().enumerate() {
            let k = walk.len();
            if k < 2 {
                continue;
            }
            let (mut sources, mut sinks) = (Vec::new(), Vec::new());
            for i in 0..k {
                let (prev, v, next) = (walk[(i + k - 1) % k], walk[i], walk[(i + 1) % k]);
                match (self.forward(v, prev), self.forward(v, next)) {
                    (true, true) => sources.push(v),
                    (false, false) => sinks.push(v),
                    _ => {}
                }
            }
            if sources.len() != 1 || sinks.len() != 1 {
                return Err(ThetaError::Invariant(format!(
                    "face walk {walk:?} has sources {sources:?} and sinks {sinks:?}"
                )));
            }
            out.push((w, sources[0], sinks[0]));
        }
        Ok(out)
    }

    /// Checks acyclicity, the unique source and sink, the two-path face property
    /// and consecutive in-edges in the rotation.
    pub fn verify(&self, g: &PlaneGraph, faces: &FaceSet) -> Result<(), ThetaError> {
        let n = g.n();
        let fail = |m: String| Err(ThetaError::Invariant(m));
        let mut indeg = vec![0usize; n];
        let arcs = self.arcs(g);
        for &(_, v) in &arcs {
            indeg[v] += 1;
        }
        let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(u, v) in &arcs {
            out[u].push(v);
        }
        let mut deg = indeg.clone();
        let mut stack: Vec<usize> = (0..n).filter(|&v| deg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = stack.pop() {
            seen += 1;
            for &w in &out[v] {
                deg[w] -= 1;
                if deg[w] == 0 {
                    stack.push(w);
                }
            }
        }
        if seen != n {
            return fail("orientation has a directed cycle".into());
        }
        let sources: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let sinks: Vec<usize> = (0..n).filter(|&v| out[v].is_empty()).collect();
        if sources != [self.s] || sinks != [self.t] {
            return fail(format!("sources {sources:?}, sinks {sinks:?}"));
        }
        self.face_poles(faces)?;
        let rot = g
            .rotation()
            .ok_or(crate::graph::GraphError::MissingRotation)?;
        for (v, r) in rot.iter().enumerate() {
            let k = r.len();
            let switches = (0..k)
                .filter(|&i| self.forward(v, r[i]) != self.forward(v, r[(i + 1) % k]))
                .count();
            if switches > 2 {
                return fail(format!("in-edges at {v} are not consecutive"));
            }
        }
        Ok(())
    }
}

/// A bipolar orientation of the 2-connected plane graph `g` with source `s` and
/// sink `t`, both on the infinite face.
///
/// Uses st-numbering: a depth-first search from `s` whose first edge goes to `t`
/// (a temporary edge `st` is assumed when absent), then the sign-and-list
/// insertion sweep in preorder.
pub fn bipolar_orient(
    g: &PlaneGraph,
    faces: &FaceSet,
    s: usize,
    t: usize,
) -> Result<BipolarOrientation, ThetaError> {
    let n = g.n();
    if s == t {
        return Err(ThetaError::EqualPoles);
    }
    let k2 = n == 2 && g.m() == 1;
    if !k2 && !connectivity_at_least(g, 2) {
        return Err(ThetaError::NotBiconnected);
    }
    let outer = faces.face_vertices(faces.infinite());
    for p in [s, t] {
        if outer.binary_search(&p).is_err() {
            return Err(ThetaError::PoleNotOnOuterFace(p));
        }
    }

    let has_st = g.has_edge(s, t);
    let nbrs = |v: usize| -> Vec<usize> {
        let mut list = g.neighbors(v).to_vec();
        if !has_st && (v == s || v == t) {
            list.push(if v == s { t } else { s });
        }
        if v == s {
            list.retain(|&w| w != t);
            list.insert(0, t);
        }
        list
    };

    const UNSEEN: usize = usize::MAX;
    let mut pre = vec![UNSEEN; n];
    let mut parent = vec![UNSEEN; n];
    let mut low = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    pre[s] = 0;
    low[s] = s;
    order.push(s);
    let mut stack: Vec<(usize, Vec<usize>, usize)> = vec![(s, nbrs(s), 0)];
    while let Some((v, list, idx)) = stack.last_mut() {
        let v = *v;
        if *idx < list.len() {
            let w = list[*idx];
            *idx += 1;
            if pre[w] == UNSEEN {
                pre[w] = order.len();
                order.push(w);
                parent[w] = v;
                low[w] = w;
                let l = nbrs(w);
                stack.push((w, l, 0));
            } else if w != parent[v] && pre[w] < pre[low[v]] {
                low[v] = w;
            }
        } else {
            stack.pop();
            if let Some(&(p, _, _)) = stack.last() {
                if pre[low[v]] < pre[low[p]] {
                    low[p] = low[v];
                }
            }
        }
    }

    // doubly linked list holding the st-order
    let mut next = vec![UNSEEN; n];
    let mut prev = vec![UNSEEN; n];
    next[s] = t;
    prev[t] = s;
    let mut minus = vec![false; n];
    minus[s] = true;
    for &v in &order[2..] {
        let p = parent[v];
        if minus[low[v]] {
            let before = prev[p];
            prev[v] = before;
            next[v] = p;
            prev[p] = v;
            if before != UNSEEN {
                next[before] = v;
            }
            minus[p] = false;
        } else {
            let after = next[p];
            next[v] = after;
            prev[v] = p;
            next[p] = v;
            if after != UNSEEN {
                prev[after] = v;
            }
            minus[p] = true;
        }
    }
    let mut number = vec![0; n];
    let mut head = s;
    while prev[head] != UNSEEN {
        head = prev[head];
    }
    let mut i = 0;
    let mut v = head;
    while v != UNSEEN {
        number[v] = i;
        i += 1;
        v = next[v];
    }
    let orient = BipolarOrientation { s, t, number };
    orient.verify(g, faces)?;
    Ok(orient)
}

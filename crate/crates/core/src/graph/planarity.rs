use std::collections::{HashSet, VecDeque};

use super::{block_cut_tree, PlaneGraph};

/// Whether `g` is planar.
pub fn is_planar(g: &PlaneGraph) -> bool {
    embed(g).is_some()
}

/// A plane embedding of `g` (the same graph with a rotation system attached),
/// or `None` if `g` is not planar.
///
/// Each block is embedded by the Demoucron–Malgrange–Pertuiset path-addition
/// algorithm; block rotations are concatenated at cut vertices.
pub fn embed(g: &PlaneGraph) -> Option<PlaneGraph> {
    let n = g.n();
    if n >= 3 && g.m() > 3 * n - 6 {
        return None;
    }
    let tree = block_cut_tree(g);
    let mut rot: Vec<Vec<usize>> = vec![Vec::new(); n];
    for b in 0..tree.blocks.len() {
        let vs = &tree.blocks[b];
        match vs.len() {
            1 => {}
            2 => {
                rot[vs[0]].push(vs[1]);
                rot[vs[1]].push(vs[0]);
            }
            _ => {
                let adj: Vec<Vec<usize>> = vs
                    .iter()
                    .map(|&v| {
                        g.neighbors(v)
                            .iter()
                            .filter_map(|&w| vs.binary_search(&w).ok())
                            .collect()
                    })
                    .collect();
                let block_rot = embed_biconnected(&adj)?;
                for (i, r) in block_rot.into_iter().enumerate() {
                    rot[vs[i]].extend(r.into_iter().map(|j| vs[j]));
                }
            }
        }
    }
    let out = g
        .clone()
        .without_rotation()
        .with_rotation(rot)
        .expect("rotation built from neighbours");
    Some(out)
}

struct Fragment {
    attachments: Vec<usize>,
    /// Empty for a chord.
    vertices: Vec<usize>,
}

fn embed_biconnected(adj: &[Vec<usize>]) -> Option<Vec<Vec<usize>>> {
    let n = adj.len();
    let m: usize = adj.iter().map(Vec::len).sum::<usize>() / 2;
    if m > 3 * n - 6 {
        return None;
    }
    let norm = |a: usize, b: usize| (a.min(b), a.max(b));

    let cycle = initial_cycle(adj);
    let mut in_h = vec![false; n];
    let mut h_edges: HashSet<(usize, usize)> = HashSet::new();
    for i in 0..cycle.len() {
        in_h[cycle[i]] = true;
        h_edges.insert(norm(cycle[i], cycle[(i + 1) % cycle.len()]));
    }
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), cycle.iter().rev().copied().collect()];

    while h_edges.len() < m {
        let fragments = fragments(adj, &in_h, &h_edges);
        let mut vertex_faces: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (f, face) in faces.iter().enumerate() {
            for &v in face {
                vertex_faces[v].push(f);
            }
        }
        let mut best: Option<(usize, Vec<usize>)> = None;
        for (i, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = vertex_faces[frag.attachments[0]]
                .iter()
                .copied()
                .filter(|&f| {
                    frag.attachments[1..]
                        .iter()
                        .all(|&a| vertex_faces[a].binary_search(&f).is_ok())
                })
                .collect();
            if admissible.is_empty() {
                return None;
            }
            let better = match &best {
                Some((_, adm)) => admissible.len() < adm.len(),
                None => true,
            };
            if better {
                let done = admissible.len() == 1;
                best = Some((i, admissible));
                if done {
                    break;
                }
            }
        }
        let (i, admissible) = best.expect("a fragment remains while edges are missing");
        let path = fragment_path(adj, &in_h, &fragments[i]);
        let f = admissible[0];
        let (face1, face2) = split_face(&faces[f], &path);
        faces[f] = face1;
        faces.push(face2);
        for w in path.windows(2) {
            h_edges.insert(norm(w[0], w[1]));
        }
        for &v in &path {
            in_h[v] = true;
        }
    }

    // face corner u→v→w gives succ_v(w) = u
    let mut succ: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for face in &faces {
        let k = face.len();
        for i in 0..k {
            let (u, v, w) = (face[i], face[(i + 1) % k], face[(i + 2) % k]);
            succ[v].push((w, u));
        }
    }
    let mut rot = Vec::with_capacity(n);
    for (v, pairs) in succ.iter().enumerate() {
        let start = pairs[0].0;
        let mut order = vec![start];
        let mut cur = start;
        loop {
            let next = pairs.iter().find(|p| p.0 == cur).expect("corner present").1;
            if next == start {
                break;
            }
            order.push(next);
            cur = next;
        }
        debug_assert_eq!(order.len(), adj[v].len());
        rot.push(order);
    }
    Some(rot)
}

/// A cycle through the first edge at vertex 0.
fn initial_cycle(adj: &[Vec<usize>]) -> Vec<usize> {
    let (s, t) = (0, adj[0][0]);
    let mut prev = vec![usize::MAX; adj.len()];
    prev[t] = t;
    let mut queue = VecDeque::from([t]);
    while let Some(v) = queue.pop_front() {
        if v == s {
            break;
        }
        for &w in &adj[v] {
            if prev[w] == usize::MAX && !(v == t && w == s) {
                prev[w] = v;
                queue.push_back(w);
            }
        }
    }
    let mut cycle = vec![s];
    let mut v = prev[s];
    while v != t {
        cycle.push(v);
        v = prev[v];
    }
    cycle.push(t);
    cycle
}

fn fragments(
    adj: &[Vec<usize>],
    in_h: &[bool],
    h_edges: &HashSet<(usize, usize)>,
) -> Vec<Fragment> {
    let n = adj.len();
    let mut out = Vec::new();
    for u in 0..n {
        if !in_h[u] {
            continue;
        }
        for &v in &adj[u] {
            if u < v && in_h[v] && !h_edges.contains(&(u, v)) {
                out.push(Fragment {
                    attachments: vec![u, v],
                    vertices: Vec::new(),
                });
            }
        }
    }
    let mut seen = vec![false; n];
    for s in 0..n {
        if in_h[s] || seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut att = Vec::new();
        let mut i = 0;
        while i < comp.len() {
            let v = comp[i];
            i += 1;
            for &w in &adj[v] {
                if in_h[w] {
                    att.push(w);
                } else if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
        }
        att.sort_unstable();
        att.dedup();
        out.push(Fragment {
            attachments: att,
            vertices: comp,
        });
    }
    out
}

/// A path between two distinct attachments through the fragment.
fn fragment_path(adj: &[Vec<usize>], in_h: &[bool], frag: &Fragment) -> Vec<usize> {
    if frag.vertices.is_empty() {
        return frag.attachments.clone();
    }
    let a = frag.attachments[0];
    let mut member = vec![false; adj.len()];
    for &v in &frag.vertices {
        member[v] = true;
    }
    let mut prev = vec![usize::MAX; adj.len()];
    let mut queue = VecDeque::new();
    for &w in &adj[a] {
        if member[w] {
            prev[w] = a;
            queue.push_back(w);
        }
    }
    while let Some(v) = queue.pop_front() {
        if let Some(&b) = adj[v].iter().find(|&&b| in_h[b] && b != a) {
            let mut path = vec![b, v];
            let mut x = v;
            while prev[x] != a {
                x = prev[x];
                path.push(x);
            }
            path.push(a);
            path.reverse();
            return path;
        }
        for &w in &adj[v] {
            if member[w] && prev[w] == usize::MAX {
                prev[w] = v;
                queue.push_back(w);
            }
        }
    }
    unreachable!("fragments of a 2-connected graph have two attachments")
}

/// Splits `face` along `path`, whose ends lie on the face.
fn split_face(face: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let k = face.len();
    let (a, b) = (path[0], path[path.len() - 1]);
    let i = face.iter().position(|&x| x == a).unwrap();
    let j = face.iter().position(|&x| x == b).unwrap();
    let interior = &path[1..path.len() - 1];
    let arc = |from: usize, to: usize| {
        let mut out = Vec::new();
        let mut x = from;
        loop {
            out.push(face[x]);
            if x == to {
                break;
            }
            x = (x + 1) % k;
        }
        out
    };
    let mut face1 = arc(i, j);
    face1.extend(interior.iter().rev());
    let mut face2 = arc(j, i);
    face2.extend(interior.iter());
    (face1, face2)
}

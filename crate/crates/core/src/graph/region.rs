use super::{FaceSet, GraphError, PlaneGraph};

/// A cycle together with the vertices strictly inside and strictly outside it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleRegion {
    pub cycle: Vec<usize>,
    /// Sorted.
    pub interior: Vec<usize>,
    /// Sorted.
    pub exterior: Vec<usize>,
}

/// Splits `V(G) - V(C)` into `int(C)` and `ext(C)`.
///
/// Walks are glued across every edge not on the cycle; the walks reachable from
/// the infinite face lie outside.
pub fn cycle_region(
    g: &PlaneGraph,
    faces: &FaceSet,
    cycle: &[usize],
) -> Result<CycleRegion, GraphError> {
    let k = cycle.len();
    let mut on_cycle = vec![false; g.n()];
    for &v in cycle {
        if v >= g.n() || on_cycle[v] {
            return Err(GraphError::NotACycle(cycle.to_vec()));
        }
        on_cycle[v] = true;
    }
    if k < 3 || (0..k).any(|i| !g.has_edge(cycle[i], cycle[(i + 1) % k])) {
        return Err(GraphError::NotACycle(cycle.to_vec()));
    }
    let cycle_edge = |a: usize, b: usize| {
        on_cycle[a]
            && on_cycle[b]
            && (0..k).any(|i| {
                let (x, y) = (cycle[i], cycle[(i + 1) % k]);
                (x, y) == (a, b) || (y, x) == (a, b)
            })
    };

    let nw = faces.walks().len();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); nw];
    for f in 0..faces.len() {
        let ws = faces.face_walks(f);
        for &w in &ws[1..] {
            adj[ws[0]].push(w);
            adj[w].push(ws[0]);
        }
    }
    for (a, b) in g.edges() {
        if !cycle_edge(a, b) {
            let (x, y) = (
                faces.walk_of_dart(a, b).unwrap(),
                faces.walk_of_dart(b, a).unwrap(),
            );
            adj[x].push(y);
            adj[y].push(x);
        }
    }
    let mut outside = vec![false; nw];
    let mut stack: Vec<usize> = faces.face_walks(faces.infinite()).to_vec();
    for &w in &stack {
        outside[w] = true;
    }
    while let Some(w) = stack.pop() {
        for &x in &adj[w] {
            if !outside[x] {
                outside[x] = true;
                stack.push(x);
            }
        }
    }

    let mut side = vec![None; g.n()];
    for (w, walk) in faces.walks().iter().enumerate() {
        for &v in walk {
            if !on_cycle[v] {
                side[v] = Some(outside[w]);
            }
        }
    }
    let mut interior = Vec::new();
    let mut exterior = Vec::new();
    for v in 0..g.n() {
        match side[v] {
            Some(true) => exterior.push(v),
            Some(false) => interior.push(v),
            None => {}
        }
    }
    Ok(CycleRegion {
        cycle: cycle.to_vec(),
        interior,
        exterior,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use crate::graph::trace_faces;

    #[test]
    fn wheel_rim_encloses_hub() {
        let g = wheel(4);
        let fs = trace_faces(&g).unwrap();
        // the first traced walk is a triangle containing the hub; pick the rim as outer
        let g = g.with_outer(vec![1, 4, 3, 2]);
        let fs2 = trace_faces(&g).unwrap();
        assert_eq!(fs.len(), fs2.len());
        let r = cycle_region(&g, &fs2, &[1, 2, 3, 4]).unwrap();
        assert_eq!(r.interior, vec![0]);
        assert!(r.exterior.is_empty());
    }

    #[test]
    fn k4_outer_triangle_has_one_interior_vertex() {
        let g = k4().with_outer(vec![1, 0, 2]);
        let fs = trace_faces(&g).unwrap();
        let r = cycle_region(&g, &fs, &[0, 1, 2]).unwrap();
        assert_eq!(r.interior, vec![3]);
        assert_eq!(r.cycle.len() + r.interior.len() + r.exterior.len(), 4);
    }

    #[test]
    fn double_wheel_splits_hubs() {
        // rim 1..=6, hub 0 inside, hub 7 outside
        let k = 6;
        let mut edges = Vec::new();
        for i in 0..k {
            edges.push((0, 1 + i));
            edges.push((7, 1 + i));
            edges.push((1 + i, 1 + (i + 1) % k));
        }
        let mut rot = vec![(1..=k).collect::<Vec<_>>()];
        for i in 0..k {
            rot.push(vec![1 + (i + 1) % k, 0, 1 + (i + k - 1) % k, 7]);
        }
        rot.push((1..=k).rev().collect());
        // outer face: triangle 7, 2, 1 traced with the face on the left
        let g = PlaneGraph::from_edges(k + 2, &edges)
            .unwrap()
            .with_rotation(rot)
            .unwrap();
        let fs = trace_faces(&g).unwrap();
        let inf_walk = fs.walks().iter().position(|w| w.contains(&7)).unwrap();
        let g = g.with_outer(fs.walk(inf_walk).to_vec());
        let fs = trace_faces(&g).unwrap();
        let r = cycle_region(&g, &fs, &[1, 2, 3, 4, 5, 6]).unwrap();
        assert_eq!(r.interior, vec![0]);
        assert_eq!(r.exterior, vec![7]);
    }

    #[test]
    fn rejects_non_cycles() {
        let g = k4();
        let fs = trace_faces(&g).unwrap();
        assert!(cycle_region(&g, &fs, &[0, 1]).is_err());
        assert!(cycle_region(&g, &fs, &[0, 1, 1]).is_err());
        let p = path(4);
        let fp = trace_faces(&p).unwrap();
        assert!(cycle_region(&p, &fp, &[0, 1, 2]).is_err());
    }
}

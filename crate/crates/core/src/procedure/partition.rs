use std::collections::VecDeque;

use super::ProcedureError;
use crate::graph::{
    connectivity_at_least, cycle_region, subgraph_faces_locating, trace_faces, FaceSet, PlaneGraph,
};

/// The split of `V(G)` into `V1 = {v : d(v) < k}` and `V2`, with the face of
/// `G[V2]` holding each component of `G[V1]`.
#[derive(Debug, Clone)]
pub struct TruncPartition {
    pub k: usize,
    pub high: Vec<bool>,
    pub v1: Vec<usize>,
    pub v2: Vec<usize>,
    /// Faces of `G`.
    pub faces: FaceSet,
    /// `G[V2]` with the inherited rotation.
    pub sub: PlaneGraph,
    /// Host id of each vertex of `sub`.
    pub sub_map: Vec<usize>,
    /// `sub` id of each host vertex in `V2`.
    pub sub_id: Vec<Option<usize>>,
    pub sub_faces: FaceSet,
    /// Components of `G[V1]`, each sorted, ordered by smallest vertex.
    pub components: Vec<Vec<usize>>,
    pub component_of: Vec<Option<usize>>,
    /// `θ_Q` as a face of `sub`.
    pub theta: Vec<usize>,
    /// `V(θ_Q)` in host ids, sorted.
    pub boundary: Vec<Vec<usize>>,
    /// `C_Q` in host ids when `θ_Q` is finite and bounded by one cycle.
    pub boundary_cycle: Vec<Option<Vec<usize>>>,
}

impl TruncPartition {
    pub fn is_infinite(&self, q: usize) -> bool {
        self.theta[q] == self.sub_faces.infinite()
    }

    /// `V(θ*)` in host ids.
    pub fn outer_boundary(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self
            .sub_faces
            .face_vertices(self.sub_faces.infinite())
            .iter()
            .map(|&x| self.sub_map[x])
            .collect();
        v.sort_unstable();
        v
    }

    /// The smallest vertex on `θ*`.
    pub fn default_v_star(&self) -> usize {
        self.outer_boundary()[0]
    }

    /// Whether `v` has no neighbour in `V2`.
    pub fn isolated_in_v2(&self, g: &PlaneGraph, v: usize) -> bool {
        g.neighbors(v).iter().all(|&w| !self.high[w])
    }
}

pub fn partition_by_degree(g: &PlaneGraph, k: usize) -> Result<TruncPartition, ProcedureError> {
    let high: Vec<bool> = (0..g.n()).map(|v| g.degree(v) >= k).collect();
    partition_by_set(g, high, k)
}

/// The partition with `V2 = {v : high[v]}`; `k` is recorded as the list size
/// demanded on `V2`.
pub fn partition_by_set(
    g: &PlaneGraph,
    high: Vec<bool>,
    k: usize,
) -> Result<TruncPartition, ProcedureError> {
    let n = g.n();
    let v2: Vec<usize> = (0..n).filter(|&v| high[v]).collect();
    if v2.is_empty() {
        return Err(ProcedureError::EmptyHighSet(k));
    }
    let v1: Vec<usize> = (0..n).filter(|&v| !high[v]).collect();
    let faces = trace_faces(g)?;
    let (sub, sub_map, sub_faces, located) = subgraph_faces_locating(g, &faces, &high)?;
    let mut sub_id = vec![None; n];
    for (i, &v) in sub_map.iter().enumerate() {
        sub_id[v] = Some(i);
    }

    let low: Vec<bool> = high.iter().map(|h| !h).collect();
    let (lg, lmap) = g.induced(&low);
    let components: Vec<Vec<usize>> = lg
        .components()
        .into_iter()
        .map(|c| c.into_iter().map(|v| lmap[v]).collect())
        .collect();
    let mut component_of = vec![None; n];
    let mut theta = Vec::new();
    let mut owner = vec![usize::MAX; sub_faces.len()];
    for (q, comp) in components.iter().enumerate() {
        for &v in comp {
            component_of[v] = Some(q);
        }
        let f = located[comp[0]].expect("low vertex located in a face");
        if owner[f] != usize::MAX {
            return Err(ProcedureError::SharedFace {
                face: f,
                a: owner[f],
                b: q,
            });
        }
        owner[f] = q;
        theta.push(f);
    }
    let boundary: Vec<Vec<usize>> = theta
        .iter()
        .map(|&f| {
            let mut b: Vec<usize> = sub_faces
                .face_vertices(f)
                .iter()
                .map(|&x| sub_map[x])
                .collect();
            b.sort_unstable();
            b
        })
        .collect();
    let boundary_cycle = theta
        .iter()
        .map(|&f| {
            let ws = sub_faces.face_walks(f);
            if f == sub_faces.infinite() || ws.len() != 1 {
                return None;
            }
            let w = sub_faces.walk(ws[0]);
            let mut sorted = w.to_vec();
            sorted.sort_unstable();
            sorted.dedup();
            (w.len() >= 3 && sorted.len() == w.len())
                .then(|| w.iter().map(|&x| sub_map[x]).collect())
        })
        .collect();
    Ok(TruncPartition {
        k,
        high,
        v1,
        v2,
        faces,
        sub,
        sub_map,
        sub_id,
        sub_faces,
        components,
        component_of,
        theta,
        boundary,
        boundary_cycle,
    })
}

/// The outcome of the proper-connectivity conditions for one component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentVerdict {
    pub component: usize,
    pub p1: bool,
    pub p2: bool,
    /// Enclosing cycles examined for the fan condition.
    pub cycles: usize,
    /// `(cycle, v, fan size)` for the first fan shortfall.
    pub witness: Option<(Vec<usize>, usize, usize)>,
}

impl ComponentVerdict {
    pub fn pass(&self) -> bool {
        self.p1 && self.p2
    }
}

/// Simple cycles of `G[vertices]` in host ids, each listed once, at most `cap`.
pub fn simple_cycles(
    g: &PlaneGraph,
    vertices: &[usize],
    cap: usize,
) -> Result<Vec<Vec<usize>>, ProcedureError> {
    let mut keep = vec![false; g.n()];
    vertices.iter().for_each(|&v| keep[v] = true);
    let (h, map) = g.induced(&keep);
    let mut out = Vec::new();
    for s in 0..h.n() {
        // (vertex, next neighbour index)
        let mut path = vec![s];
        let mut on = vec![false; h.n()];
        on[s] = true;
        let mut idx = vec![0usize];
        while let Some(&v) = path.last() {
            let i = *idx.last().unwrap();
            if i == h.neighbors(v).len() {
                path.pop();
                idx.pop();
                on[v] = false;
                continue;
            }
            *idx.last_mut().unwrap() += 1;
            let w = h.neighbors(v)[i];
            if w == s && path.len() >= 3 && path[1] < *path.last().unwrap() {
                out.push(path.iter().map(|&x| map[x]).collect());
                if out.len() > cap {
                    return Err(ProcedureError::CycleCap(cap));
                }
            } else if w > s && !on[w] {
                on[w] = true;
                path.push(w);
                idx.push(0);
            }
        }
    }
    Ok(out)
}

/// Maximum number of paths from `v` to `targets`, pairwise disjoint except at
/// `v`, using only `allowed` vertices. Stops counting at `want`.
pub(crate) fn fan_size(
    g: &PlaneGraph,
    v: usize,
    targets: &[bool],
    allowed: &[bool],
    want: usize,
) -> usize {
    let n = g.n();
    let sink = 2 * n;
    let mut to: Vec<usize> = Vec::new();
    let mut cap: Vec<i32> = Vec::new();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); 2 * n + 1];
    let mut add = |a: usize, b: usize, c: i32, to: &mut Vec<usize>, cap: &mut Vec<i32>| {
        adj[a].push(to.len());
        to.push(b);
        cap.push(c);
        adj[b].push(to.len());
        to.push(a);
        cap.push(0);
    };
    for x in (0..n).filter(|&x| allowed[x]) {
        add(
            2 * x,
            2 * x + 1,
            if x == v { want as i32 } else { 1 },
            &mut to,
            &mut cap,
        );
        if targets[x] {
            add(2 * x + 1, sink, 1, &mut to, &mut cap);
            continue;
        }
        for &y in g.neighbors(x) {
            if allowed[y] {
                add(2 * x + 1, 2 * y, 1, &mut to, &mut cap);
            }
        }
    }
    let mut flow = 0;
    while flow < want {
        let mut prev = vec![usize::MAX; 2 * n + 1];
        let mut queue = VecDeque::from([2 * v + 1]);
        prev[2 * v + 1] = usize::MAX - 1;
        while let Some(a) = queue.pop_front() {
            if a == sink {
                break;
            }
            for &e in &adj[a] {
                if cap[e] > 0 && prev[to[e]] == usize::MAX {
                    prev[to[e]] = e;
                    queue.push_back(to[e]);
                }
            }
        }
        if prev[sink] == usize::MAX {
            break;
        }
        let mut x = sink;
        while x != 2 * v + 1 {
            let e = prev[x];
            cap[e] -= 1;
            cap[e ^ 1] += 1;
            x = to[e ^ 1];
        }
        flow += 1;
    }
    flow
}

/// Checks both proper-connectivity conditions for every component: every
/// vertex of `V(θ_Q)` has a neighbour in `Q`, and for every cycle `C` of
/// `G[V(θ_Q)]` with `Q` inside, every `v ∈ Q` has a 3-fan to `V(C)` within
/// `V(C) ∪ int(C)`.
pub fn check_properly_connected(
    g: &PlaneGraph,
    p: &TruncPartition,
    cycle_cap: usize,
) -> Result<Vec<ComponentVerdict>, ProcedureError> {
    let mut out = Vec::new();
    for (q, comp) in p.components.iter().enumerate() {
        let p1 = p.boundary[q]
            .iter()
            .all(|&u| g.neighbors(u).iter().any(|&w| p.component_of[w] == Some(q)));
        let mut verdict = ComponentVerdict {
            component: q,
            p1,
            p2: true,
            cycles: 0,
            witness: None,
        };
        'cycles: for cycle in simple_cycles(g, &p.boundary[q], cycle_cap)? {
            let region = cycle_region(g, &p.faces, &cycle)?;
            if !comp
                .iter()
                .all(|v| region.interior.binary_search(v).is_ok())
            {
                continue;
            }
            verdict.cycles += 1;
            let mut targets = vec![false; g.n()];
            let mut allowed = vec![false; g.n()];
            for &c in &cycle {
                targets[c] = true;
                allowed[c] = true;
            }
            for &x in &region.interior {
                allowed[x] = true;
            }
            for &v in comp {
                let f = fan_size(g, v, &targets, &allowed, 3);
                if f < 3 {
                    verdict.p2 = false;
                    verdict.witness = Some((cycle.clone(), v, f));
                    break 'cycles;
                }
            }
        }
        out.push(verdict);
    }
    Ok(out)
}

/// For 3-connected `g` the fan condition always holds, so the verdict reduces
/// to the neighbour condition. `None` if `g` is not 3-connected.
pub fn properly_connected_shortcut(g: &PlaneGraph, p: &TruncPartition) -> Option<Vec<bool>> {
    if !connectivity_at_least(g, 3) {
        return None;
    }
    Some(
        (0..p.components.len())
            .map(|q| {
                p.boundary[q]
                    .iter()
                    .all(|&u| g.neighbors(u).iter().any(|&w| p.component_of[w] == Some(q)))
            })
            .collect(),
    )
}

/// An order of `V2` starting at `v_star` in which every vertex has few earlier
/// neighbours: minimum-degree vertices other than `v_star` are peeled from
/// `G[V2]` (ties to the lowest id) and the peeling order is reversed.
pub fn build_order(p: &TruncPartition, v_star: usize) -> Vec<usize> {
    let h = &p.sub;
    let star = p.sub_id[v_star].expect("v* lies in V2");
    let mut deg: Vec<usize> = (0..h.n()).map(|v| h.degree(v)).collect();
    let mut gone = vec![false; h.n()];
    let mut peel = Vec::with_capacity(h.n());
    for _ in 1..h.n() {
        let v = (0..h.n())
            .filter(|&v| !gone[v] && v != star)
            .min_by_key(|&v| (deg[v], p.sub_map[v]))
            .unwrap();
        gone[v] = true;
        peel.push(v);
        for &w in h.neighbors(v) {
            deg[w] -= 1;
        }
    }
    peel.push(star);
    peel.reverse();
    peel.into_iter().map(|v| p.sub_map[v]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{double_wheel, embed_with_outer};

    #[test]
    fn double_wheel_partition() {
        let g = double_wheel(12);
        let p = partition_by_degree(&g, 12).unwrap();
        assert_eq!(p.v2, vec![0, 13]);
        assert_eq!(p.components, vec![(1..=12).collect::<Vec<_>>()]);
        assert!(p.is_infinite(0));
        assert_eq!(p.boundary[0], vec![0, 13]);
        let v = check_properly_connected(&g, &p, 1000).unwrap();
        assert!(v[0].pass());
    }

    #[test]
    fn no_high_vertices() {
        let g = embed_with_outer(
            &PlaneGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap(),
        );
        assert!(matches!(
            partition_by_degree(&g, 12),
            Err(ProcedureError::EmptyHighSet(12))
        ));
    }

    #[test]
    fn pendant_path_with_one_attachment_fails() {
        // K4 on 0, 1, 2, 6 of high vertices; a path 4 3 5 attached only via 4 ~ 0
        let edges = [
            (0, 1),
            (1, 2),
            (2, 0),
            (6, 0),
            (6, 1),
            (6, 2),
            (4, 0),
            (3, 4),
            (3, 5),
        ];
        let g = embed_with_outer(&PlaneGraph::from_edges(7, &edges).unwrap());
        let g = g.clone().with_outer(outer_containing(&g, &[6, 1, 2]));
        let p = partition_by_degree(&g, 3).unwrap();
        assert_eq!(p.v2, vec![0, 1, 2, 6]);
        let q = p.component_of[3].unwrap();
        let v = &check_properly_connected(&g, &p, 100).unwrap()[q];
        assert!(!v.p1 && !v.p2);
        assert_eq!(v.witness.as_ref().unwrap().2, 1);
    }

    fn outer_containing(g: &PlaneGraph, vs: &[usize]) -> Vec<usize> {
        let fs = trace_faces(g).unwrap();
        fs.walks()
            .iter()
            .find(|w| w.len() == vs.len() && vs.iter().all(|v| w.contains(v)))
            .unwrap()
            .clone()
    }

    #[test]
    fn fan_in_wheel() {
        let g = crate::generate::double_wheel(6);
        let targets: Vec<bool> = (0..8).map(|v| (1..=6).contains(&v)).collect();
        let allowed: Vec<bool> = (0..8).map(|v| v != 7).collect();
        assert_eq!(fan_size(&g, 0, &targets, &allowed, 3), 3);
        assert_eq!(fan_size(&g, 0, &targets, &allowed, 10), 6);
    }

    #[test]
    fn cycles_of_k4() {
        let g =
            PlaneGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(simple_cycles(&g, &[0, 1, 2, 3], 100).unwrap().len(), 7);
        assert!(simple_cycles(&g, &[0, 1, 2, 3], 3).is_err());
    }

    #[test]
    fn order_back_degree() {
        let g = double_wheel(12);
        let p = partition_by_degree(&g, 4).unwrap();
        let order = build_order(&p, 13);
        assert_eq!(order[0], 13);
        let pos: Vec<usize> = {
            let mut pos = vec![usize::MAX; g.n()];
            order.iter().enumerate().for_each(|(i, &v)| pos[v] = i);
            pos
        };
        for &u in &order {
            let back = g
                .neighbors(u)
                .iter()
                .filter(|&&w| p.high[w] && pos[w] < pos[u])
                .count();
            assert!(back <= 5);
        }
    }
}

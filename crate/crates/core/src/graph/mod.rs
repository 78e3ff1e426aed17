//! Plane graphs: simple undirected graphs with an optional rotation system.
//!
//! Vertices are dense ids `0..n`. When a rotation system is present, `rotation(v)`
//! lists the neighbours of `v` in counterclockwise order, and faces are traced by
//! [`trace_faces`]. Everything in this module is immutable after construction.

mod blocks;
mod connectivity;
mod faces;
pub mod io;
mod planarity;
mod region;

pub use blocks::{block_cut_tree, BlockCutTree};
pub use connectivity::{articulation_points, connectivity_at_least, is_connected};
pub use faces::{subgraph_faces, subgraph_faces_locating, trace_faces, FaceSet};
pub use planarity::{embed, is_planar};
pub use region::{cycle_region, CycleRegion};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} out of range (n = {1})")]
    VertexOutOfRange(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("parallel edge {0}-{1}")]
    ParallelEdge(usize, usize),
    #[error("graph has no rotation system")]
    MissingRotation,
    #[error("rotation at vertex {0} is not a permutation of its neighbours")]
    InconsistentRotation(usize),
    #[error("rotation system is not a plane embedding (component of vertex {vertex}: n - m + f = {euler})")]
    NotPlane { vertex: usize, euler: i64 },
    #[error("outer walk {0:?} is not a face of the embedding")]
    UnknownOuterWalk(Vec<usize>),
    #[error("vertex sequence {0:?} is not a cycle of the graph")]
    NotACycle(Vec<usize>),
    #[error("graph is not connected")]
    Disconnected,
}

/// An undirected simple graph, optionally embedded in the plane.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneGraph {
    adj: Vec<Vec<usize>>,
    rotation: Option<Vec<Vec<usize>>>,
    outer: Option<Vec<usize>>,
    labels: Option<Vec<String>>,
}

impl PlaneGraph {
    /// Builds a graph from an edge list, rejecting loops and parallel edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange(u, n));
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange(v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let (a, b) = (u.min(w[0]), u.max(w[0]));
                return Err(GraphError::ParallelEdge(a, b));
            }
        }
        Ok(PlaneGraph {
            adj,
            rotation: None,
            outer: None,
            labels: None,
        })
    }

    pub fn empty(n: usize) -> Self {
        PlaneGraph {
            adj: vec![Vec::new(); n],
            rotation: None,
            outer: None,
            labels: None,
        }
    }

    /// Attaches a rotation system; `rotation[v]` must be a permutation of the neighbours of `v`.
    pub fn with_rotation(mut self, rotation: Vec<Vec<usize>>) -> Result<Self, GraphError> {
        if rotation.len() != self.n() {
            return Err(GraphError::InconsistentRotation(
                rotation.len().min(self.n()),
            ));
        }
        for (v, rot) in rotation.iter().enumerate() {
            let mut sorted = rot.clone();
            sorted.sort_unstable();
            if sorted != self.adj[v] {
                return Err(GraphError::InconsistentRotation(v));
            }
        }
        self.rotation = Some(rotation);
        Ok(self)
    }

    /// Designates the infinite face by one of its boundary walks.
    pub fn with_outer(mut self, walk: Vec<usize>) -> Self {
        self.outer = Some(walk);
        self
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        self.labels = Some(labels);
        self
    }

    pub fn without_rotation(mut self) -> Self {
        self.rotation = None;
        self.outer = None;
        self
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Sorted neighbour list.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn rotation(&self) -> Option<&[Vec<usize>]> {
        self.rotation.as_deref()
    }

    pub fn outer(&self) -> Option<&[usize]> {
        self.outer.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.m() == n * n.saturating_sub(1) / 2
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The subgraph induced by the vertices with `keep[v]`, relabelled densely in
    /// increasing order. Returns the subgraph and the map from new to old ids.
    /// The rotation system, if any, is inherited by restriction.
    pub fn induced(&self, keep: &[bool]) -> (PlaneGraph, Vec<usize>) {
        let old_of: Vec<usize> = (0..self.n()).filter(|&v| keep[v]).collect();
        let mut new_of = vec![usize::MAX; self.n()];
        for (i, &v) in old_of.iter().enumerate() {
            new_of[v] = i;
        }
        let adj = old_of
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter(|&&w| keep[w])
                    .map(|&w| new_of[w])
                    .collect()
            })
            .collect();
        let rotation = self.rotation.as_ref().map(|rot| {
            old_of
                .iter()
                .map(|&v| {
                    rot[v]
                        .iter()
                        .filter(|&&w| keep[w])
                        .map(|&w| new_of[w])
                        .collect()
                })
                .collect()
        });
        let labels = self
            .labels
            .as_ref()
            .map(|l| old_of.iter().map(|&v| l[v].clone()).collect());
        (
            PlaneGraph {
                adj,
                rotation,
                outer: None,
                labels,
            },
            old_of,
        )
    }

    /// Same vertex set, only the given edges (which must be edges of `self`), with
    /// the rotation restricted to them.
    pub fn edge_subgraph(&self, edges: &[(usize, usize)]) -> PlaneGraph {
        let mut g = PlaneGraph::from_edges(self.n(), edges).expect("edges of a simple graph");
        if let Some(rot) = &self.rotation {
            let r = rot
                .iter()
                .enumerate()
                .map(|(v, list)| list.iter().copied().filter(|&w| g.has_edge(v, w)).collect())
                .collect();
            g.rotation = Some(r);
        }
        g
    }
}

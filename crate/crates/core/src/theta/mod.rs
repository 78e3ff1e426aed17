//! The vertex–face incidence graph `Θ(G)`, bipolar orientations and very nice subgraphs.

mod bipolar;
mod very_nice;

pub use bipolar::{bipolar_orient, BipolarOrientation};
pub use very_nice::{very_nice, very_nice_from_bipolar, VeryNiceSubgraph};

use thiserror::Error;

use crate::graph::{FaceSet, GraphError, PlaneGraph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ThetaError {
    #[error("graph is not 2-connected")]
    NotBiconnected,
    #[error("pole {0} is not on the outer face")]
    PoleNotOnOuterFace(usize),
    #[error("source and sink coincide")]
    EqualPoles,
    #[error("vertex {vertex} is not on the boundary of face {face}")]
    NotOnFace { vertex: usize, face: usize },
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// `Θ(G)`: vertices on one side, faces on the other, `vθ` an edge iff `v ∈ V(θ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaGraph {
    /// Sorted faces at each vertex.
    pub vertex_faces: Vec<Vec<usize>>,
    /// Sorted boundary vertices of each face.
    pub face_vertices: Vec<Vec<usize>>,
}

impl ThetaGraph {
    pub fn incidences(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.face_vertices
            .iter()
            .enumerate()
            .flat_map(|(f, vs)| vs.iter().map(move |&v| (v, f)))
    }

    pub fn incidence_count(&self) -> usize {
        self.face_vertices.iter().map(Vec::len).sum()
    }

    pub fn face_degree(&self, f: usize) -> usize {
        self.face_vertices[f].len()
    }

    pub fn vertex_degree(&self, v: usize) -> usize {
        self.vertex_faces[v].len()
    }

    pub fn contains(&self, v: usize, f: usize) -> bool {
        self.face_vertices[f].binary_search(&v).is_ok()
    }
}

pub fn build_theta(g: &PlaneGraph, faces: &FaceSet) -> ThetaGraph {
    let face_vertices: Vec<Vec<usize>> = (0..faces.len())
        .map(|f| faces.face_vertices(f).to_vec())
        .collect();
    let mut vertex_faces = vec![Vec::new(); g.n()];
    for (f, vs) in face_vertices.iter().enumerate() {
        for &v in vs {
            vertex_faces[v].push(f);
        }
    }
    ThetaGraph {
        vertex_faces,
        face_vertices,
    }
}

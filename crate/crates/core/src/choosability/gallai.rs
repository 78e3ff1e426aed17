use std::collections::VecDeque;

use super::{ChoosabilityError, ColorSet, ListAssignment};
use crate::graph::{block_cut_tree, BlockCutTree, PlaneGraph};

/// Degree of a regular block, or `None` if the block is neither complete nor an odd cycle.
pub fn block_degree(g: &PlaneGraph, tree: &BlockCutTree, b: usize) -> Option<usize> {
    let k = tree.blocks[b].len();
    let m = tree.block_edges(g, b).len();
    if m == k * (k - 1) / 2 {
        Some(k - 1)
    } else if m == k
        && k % 2 == 1
        && tree.blocks[b].iter().all(|&v| {
            g.neighbors(v)
                .iter()
                .filter(|w| tree.blocks[b].binary_search(w).is_ok())
                .count()
                == 2
        })
    {
        Some(2)
    } else {
        None
    }
}

/// Whether every block of the connected graph `g` is complete or an odd cycle.
pub fn is_gallai_tree(g: &PlaneGraph) -> Result<bool, ChoosabilityError> {
    if g.components().len() != 1 {
        return Err(ChoosabilityError::Disconnected);
    }
    let tree = block_cut_tree(g);
    Ok((0..tree.blocks.len()).all(|b| block_degree(g, &tree, b).is_some()))
}

/// Per-block colour sets `C_B` witnessing that a list assignment on a Gallai
/// tree is bad.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BadListCertificate {
    pub blocks: Vec<Vec<usize>>,
    pub sets: Vec<ColorSet>,
}

impl BadListCertificate {
    /// Checks `|C_B| = r_B`, disjointness at shared vertices and `L(v) = ∪ C_B`.
    pub fn verify(&self, g: &PlaneGraph, l: &ListAssignment) -> bool {
        let tree = block_cut_tree(g);
        if tree.blocks != self.blocks || self.sets.len() != self.blocks.len() {
            return false;
        }
        for b in 0..self.blocks.len() {
            if block_degree(g, &tree, b) != Some(self.sets[b].len()) {
                return false;
            }
        }
        (0..g.n()).all(|v| {
            let bs = tree.blocks_of(v);
            let mut union = ColorSet::EMPTY;
            for &b in bs {
                if !union.is_disjoint(self.sets[b]) {
                    return false;
                }
                union = union.union(self.sets[b]);
            }
            union == l.get(v)
        })
    }
}

/// The certificate of badness of `L` on the connected Gallai tree `g`, or `None`
/// if `g` is `L`-colourable. Requires `|L(v)| ≥ d(v)`.
///
/// Blocks are peeled from the leaves of the block tree: the private vertices of a
/// block must share one residual list of size `r_B`, which becomes `C_B` and is
/// removed from the list of the parent cut vertex.
pub fn gallai_bad_certificate(
    g: &PlaneGraph,
    l: &ListAssignment,
) -> Result<Option<BadListCertificate>, ChoosabilityError> {
    l.check_graph(g)?;
    if g.components().len() != 1 {
        return Err(ChoosabilityError::Disconnected);
    }
    if let Some(v) = (0..g.n()).find(|&v| l.get(v).len() < g.degree(v)) {
        return Err(ChoosabilityError::ListTooSmall {
            vertex: v,
            size: l.get(v).len(),
            degree: g.degree(v),
        });
    }
    let tree = block_cut_tree(g);
    let mut degree = Vec::with_capacity(tree.blocks.len());
    for b in 0..tree.blocks.len() {
        degree.push(
            block_degree(g, &tree, b)
                .ok_or_else(|| ChoosabilityError::NotGallaiTree(tree.blocks[b].clone()))?,
        );
    }

    // BFS over the block tree from block 0
    let mut parent_cut = vec![usize::MAX; tree.blocks.len()];
    let mut visited = vec![false; tree.blocks.len()];
    let mut order = Vec::new();
    let mut queue = VecDeque::from([0]);
    visited[0] = true;
    while let Some(b) = queue.pop_front() {
        order.push(b);
        for &c in &tree.blocks[b] {
            if c == parent_cut[b] {
                continue;
            }
            for &child in tree.blocks_of(c) {
                if !visited[child] {
                    visited[child] = true;
                    parent_cut[child] = c;
                    queue.push_back(child);
                }
            }
        }
    }

    let mut residual: Vec<ColorSet> = l.lists().to_vec();
    let mut sets = vec![ColorSet::EMPTY; tree.blocks.len()];
    for &b in order.iter().rev() {
        let mut private = tree.blocks[b].iter().filter(|&&v| v != parent_cut[b]);
        let first = *private
            .next()
            .expect("every block has a vertex besides its parent cut");
        let c_b = residual[first];
        if c_b.len() != degree[b] || private.any(|&v| residual[v] != c_b) {
            return Ok(None);
        }
        let p = parent_cut[b];
        if p != usize::MAX {
            if !c_b.is_subset(residual[p]) {
                return Ok(None);
            }
            residual[p] = residual[p].difference(c_b);
        }
        sets[b] = c_b;
    }
    let cert = BadListCertificate {
        blocks: tree.blocks,
        sets,
    };
    debug_assert!(cert.verify(g, l));
    Ok(Some(cert))
}

use super::{block_cut_tree, PlaneGraph};

pub fn is_connected(g: &PlaneGraph) -> bool {
    g.components().len() <= 1
}

/// Articulation vertices of `g`.
pub fn articulation_points(g: &PlaneGraph) -> Vec<usize> {
    block_cut_tree(g).cut_vertices
}

fn is_two_connected(g: &PlaneGraph) -> bool {
    g.n() >= 3 && is_connected(g) && articulation_points(g).is_empty()
}

/// Whether `g` is `k`-connected for `k` in `1..=3`: more than `k` vertices and no
/// separating set of fewer than `k` vertices.
///
/// For `k = 3` every single vertex is deleted in turn and the rest is checked for
/// articulation points, which covers all vertex pairs.
pub fn connectivity_at_least(g: &PlaneGraph, k: usize) -> bool {
    assert!(
        (1..=3).contains(&k),
        "connectivity_at_least supports k in 1..=3"
    );
    match k {
        1 => g.n() >= 2 && is_connected(g),
        2 => is_two_connected(g),
        _ => {
            if g.n() < 4 || !is_two_connected(g) {
                return false;
            }
            (0..g.n()).all(|v| {
                let keep: Vec<bool> = (0..g.n()).map(|w| w != v).collect();
                is_two_connected(&g.induced(&keep).0)
            })
        }
    }
}

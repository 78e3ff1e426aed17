use super::PlaneGraph;

/// Blocks (maximal 2-connected subgraphs, bridges, isolated vertices) and cut vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockCutTree {
    /// Sorted vertex sets, ordered lexicographically (hence by minimum vertex).
    pub blocks: Vec<Vec<usize>>,
    /// Sorted.
    pub cut_vertices: Vec<usize>,
    /// `(block, cut vertex)` incidences.
    pub tree_edges: Vec<(usize, usize)>,
    pub root: Option<usize>,
    vertex_blocks: Vec<Vec<usize>>,
}

impl BlockCutTree {
    pub fn blocks_of(&self, v: usize) -> &[usize] {
        &self.vertex_blocks[v]
    }

    pub fn is_cut_vertex(&self, v: usize) -> bool {
        self.vertex_blocks[v].len() >= 2
    }

    /// The block containing edge `uv`.
    pub fn block_of_edge(&self, u: usize, v: usize) -> Option<usize> {
        self.vertex_blocks[u]
            .iter()
            .copied()
            .find(|&b| self.blocks[b].len() >= 2 && self.blocks[b].binary_search(&v).is_ok())
    }

    /// Edges of block `b` in `g`.
    pub fn block_edges(&self, g: &PlaneGraph, b: usize) -> Vec<(usize, usize)> {
        let vs = &self.blocks[b];
        let mut out = Vec::new();
        for &u in vs {
            for &w in g.neighbors(u) {
                if u < w && vs.binary_search(&w).is_ok() {
                    out.push((u, w));
                }
            }
        }
        out
    }

    /// Leaf blocks: blocks containing at most one cut vertex.
    pub fn leaf_blocks(&self) -> Vec<usize> {
        (0..self.blocks.len())
            .filter(|&b| {
                self.blocks[b]
                    .iter()
                    .filter(|&&v| self.is_cut_vertex(v))
                    .count()
                    <= 1
            })
            .collect()
    }

    pub fn with_root(mut self, root: usize) -> Self {
        self.root = Some(root);
        self
    }
}

/// Computes blocks and cut vertices with an iterative Hopcroft–Tarjan sweep.
pub fn block_cut_tree(g: &PlaneGraph) -> BlockCutTree {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut timer = 0;
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        if g.degree(root) == 0 {
            blocks.push(vec![root]);
            continue;
        }
        // frames: (vertex, parent, next neighbour index)
        let mut stack = vec![(root, usize::MAX, 0usize)];
        while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
            if *idx < g.degree(v) {
                let w = g.neighbors(v)[*idx];
                *idx += 1;
                if disc[w] == usize::MAX {
                    edge_stack.push((v, w));
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        let mut block = Vec::new();
                        while let Some((a, b)) = edge_stack.pop() {
                            block.push(a);
                            block.push(b);
                            if (a, b) == (p, v) {
                                break;
                            }
                        }
                        block.sort_unstable();
                        block.dedup();
                        blocks.push(block);
                    }
                }
            }
        }
    }

    blocks.sort();
    let mut vertex_blocks = vec![Vec::new(); n];
    for (b, vs) in blocks.iter().enumerate() {
        for &v in vs {
            vertex_blocks[v].push(b);
        }
    }
    let cut_vertices: Vec<usize> = (0..n).filter(|&v| vertex_blocks[v].len() >= 2).collect();
    let mut tree_edges = Vec::new();
    for &c in &cut_vertices {
        for &b in &vertex_blocks[c] {
            tree_edges.push((b, c));
        }
    }
    tree_edges.sort_unstable();
    BlockCutTree {
        blocks,
        cut_vertices,
        tree_edges,
        root: None,
        vertex_blocks,
    }
}

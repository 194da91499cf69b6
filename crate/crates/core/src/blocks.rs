//! Block decomposition (cut vertices, blocks, block-cut tree).
//!
//! This is Tarjan's depth-first scheme with an explicit vertex stack. The
//! search starts at vertex 0 and always takes the lowest-indexed unexplored
//! incident edge, so the output order is a function of the input order.
//! Each block lists its vertices in stack-pop order followed by the
//! articulation vertex that closed it.

use std::collections::{BTreeMap, VecDeque};

use crate::error::{input, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    /// Vertex indices of the parent graph, in discovery-pop order.
    pub vertices: Vec<usize>,
    /// The induced subgraph, with vertices in the same order as `vertices`.
    pub graph: Graph,
}

impl Block {
    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    /// Local index of parent vertex `v` inside this block.
    pub fn local_index(&self, v: usize) -> Option<usize> {
        self.vertices.iter().position(|&u| u == v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
    pub cut_vertices: VertexSet,
    /// For each cut vertex, the blocks containing it, ascending.
    pub cut_to_blocks: BTreeMap<usize, Vec<usize>>,
}

impl BlockDecomposition {
    /// Number of blocks, r.
    pub fn r(&self) -> usize {
        self.blocks.len()
    }

    /// Number of trivial (order-2) blocks, t.
    pub fn t(&self) -> usize {
        self.blocks.iter().filter(|b| b.order() == 2).count()
    }

    /// Cut vertices lying in block `b`, ascending.
    pub fn cuts_in_block(&self, b: usize) -> Vec<usize> {
        let mut cuts: Vec<usize> = self.blocks[b]
            .vertices
            .iter()
            .copied()
            .filter(|&v| self.cut_vertices.contains(v))
            .collect();
        cuts.sort_unstable();
        cuts
    }

    /// Index of the first block containing `v`.
    pub fn block_of(&self, v: usize) -> Option<usize> {
        self.blocks.iter().position(|b| b.contains(v))
    }

    /// Breadth-first order over the block-cut tree from `root`. Every block
    /// except the root is paired with the cut vertex it shares with its tree
    /// parent.
    pub fn block_cut_order(&self, root: usize) -> Result<Vec<(usize, Option<usize>)>> {
        if root >= self.r() {
            return input(format!("root block {root} out of range (r = {})", self.r()));
        }
        let mut seen = vec![false; self.r()];
        seen[root] = true;
        let mut out = vec![(root, None)];
        let mut queue = VecDeque::from([root]);
        while let Some(b) = queue.pop_front() {
            for c in self.cuts_in_block(b) {
                for &nb in &self.cut_to_blocks[&c] {
                    if !seen[nb] {
                        seen[nb] = true;
                        out.push((nb, Some(c)));
                        queue.push_back(nb);
                    }
                }
            }
        }
        Ok(out)
    }
}

/// Decomposes a connected graph into blocks.
pub fn decompose(g: &Graph) -> Result<BlockDecomposition> {
    g.require_connected()?;
    let n = g.n();
    let root = 0;
    if n == 1 {
        return Ok(BlockDecomposition {
            blocks: vec![Block {
                vertices: vec![0],
                graph: g.clone(),
            }],
            cut_vertices: VertexSet::new(),
            cut_to_blocks: BTreeMap::new(),
        });
    }

    let mut explored = vec![false; n * n];
    let mut cursor = vec![0usize; n];
    let mut depth = vec![0usize; n];
    let mut low = vec![0usize; n];
    let mut parent: Vec<Option<usize>> = vec![None; n];
    let mut stack = vec![root];
    let mut cut_vertices = VertexSet::new();
    let mut raw_blocks: Vec<Vec<usize>> = Vec::new();

    let next_unexplored = |v: usize, cursor: &mut [usize], explored: &[bool]| -> Option<usize> {
        let nb = g.neighbors(v);
        while cursor[v] < nb.len() {
            let w = nb[cursor[v]];
            if !explored[v * n + w] {
                return Some(w);
            }
            cursor[v] += 1;
        }
        None
    };

    let mut counter = 1;
    depth[root] = 1;
    low[root] = 1;
    let mut v = root;
    loop {
        if let Some(w) = next_unexplored(v, &mut cursor, &explored) {
            explored[v * n + w] = true;
            explored[w * n + v] = true;
            if depth[w] == 0 {
                stack.push(w);
                parent[w] = Some(v);
                counter += 1;
                depth[w] = counter;
                low[w] = counter;
                v = w;
            } else {
                low[v] = low[v].min(depth[w]);
            }
        } else if let Some(p) = parent[v] {
            if low[v] >= depth[p] {
                if p != root || next_unexplored(root, &mut cursor, &explored).is_some() {
                    cut_vertices.insert(p);
                }
                let mut block = Vec::new();
                while let Some(u) = stack.pop() {
                    block.push(u);
                    if u == v {
                        break;
                    }
                }
                block.push(p);
                raw_blocks.push(block);
            } else {
                low[p] = low[p].min(low[v]);
            }
            v = p;
        } else {
            break;
        }
    }

    let mut blocks = Vec::with_capacity(raw_blocks.len());
    for vertices in raw_blocks {
        let graph = g.induced_ordered(&vertices)?;
        blocks.push(Block { vertices, graph });
    }
    let mut cut_to_blocks: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for c in cut_vertices.iter() {
        cut_to_blocks.insert(c, blocks.iter().enumerate().filter(|(_, b)| b.contains(c)).map(|(i, _)| i).collect());
    }
    Ok(BlockDecomposition {
        blocks,
        cut_vertices,
        cut_to_blocks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labeled(n: usize, edges: &[(usize, usize)]) -> Graph {
        let labels: Vec<String> = (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect();
        Graph::from_index_edges(&labels, edges).unwrap()
    }

    #[test]
    fn triangle_is_one_block() {
        let d = decompose(&labeled(3, &[(0, 1), (1, 2), (0, 2)])).unwrap();
        assert_eq!(d.r(), 1);
        assert!(d.cut_vertices.is_empty());
        assert_eq!(d.t(), 0);
    }

    #[test]
    fn path_has_two_trivial_blocks() {
        let d = decompose(&labeled(3, &[(0, 1), (1, 2)])).unwrap();
        assert_eq!((d.r(), d.t()), (2, 2));
        assert_eq!(d.cut_vertices.to_vec(), vec![1]);
        let mut sets: Vec<Vec<usize>> = d
            .blocks
            .iter()
            .map(|b| {
                let mut v = b.vertices.clone();
                v.sort();
                v
            })
            .collect();
        sets.sort();
        assert_eq!(sets, vec![vec![0, 1], vec![1, 2]]);
    }

    #[test]
    fn path_block_cut_order() {
        let d = decompose(&labeled(3, &[(0, 1), (1, 2)])).unwrap();
        let root = d.block_of(0).unwrap();
        let order = d.block_cut_order(root).unwrap();
        assert_eq!(order.len(), 2);
        assert_eq!(order[0], (root, None));
        let (b, entry) = order[1];
        assert_eq!(entry, Some(1));
        assert!(d.blocks[b].contains(2));
        assert!(d.block_cut_order(5).is_err());
    }

    #[test]
    fn single_vertex_and_single_block() {
        let k1 = labeled(1, &[]);
        let d = decompose(&k1).unwrap();
        assert_eq!(d.r(), 1);
        assert_eq!(d.block_cut_order(0).unwrap(), vec![(0, None)]);
    }

    #[test]
    fn root_with_two_children_is_a_cut_vertex() {
        // b - a - c
        let d = decompose(&labeled(3, &[(0, 1), (0, 2)])).unwrap();
        assert_eq!(d.cut_vertices.to_vec(), vec![0]);
        assert_eq!(d.cut_to_blocks[&0].len(), 2);
    }

    #[test]
    fn disconnected_rejected() {
        assert!(decompose(&labeled(4, &[(0, 1), (2, 3)])).is_err());
    }
}

//! Local vertex connectivity via unit-capacity max flow on the vertex-split
//! digraph, and the connectivity parameter κ⁺.

use std::collections::VecDeque;

use crate::error::{input, MvdError, Result};
use crate::graph::Graph;

struct FlowNet {
    // adjacency list of edge ids; edge i and i^1 are a residual pair
    adj: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<u32>,
}

impl FlowNet {
    fn new(nodes: usize) -> Self {
        FlowNet {
            adj: vec![Vec::new(); nodes],
            to: Vec::new(),
            cap: Vec::new(),
        }
    }

    fn add(&mut self, u: usize, v: usize, c: u32) {
        self.adj[u].push(self.to.len());
        self.to.push(v);
        self.cap.push(c);
        self.adj[v].push(self.to.len());
        self.to.push(u);
        self.cap.push(0);
    }

    fn augment(&mut self, s: usize, t: usize) -> bool {
        let mut via = vec![usize::MAX; self.adj.len()];
        let mut seen = vec![false; self.adj.len()];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &e in &self.adj[u] {
                let w = self.to[e];
                if self.cap[e] > 0 && !seen[w] {
                    seen[w] = true;
                    via[w] = e;
                    if w == t {
                        let mut cur = t;
                        while cur != s {
                            let e = via[cur];
                            self.cap[e] -= 1;
                            self.cap[e ^ 1] += 1;
                            cur = self.to[e ^ 1];
                        }
                        return true;
                    }
                    queue.push_back(w);
                }
            }
        }
        false
    }
}

/// κ(x, y): the maximum number of internally vertex-disjoint x–y paths,
/// which equals the minimum size of an x–y vertex cut.
pub fn local_connectivity(g: &Graph, x: usize, y: usize) -> Result<usize> {
    let n = g.n();
    if x >= n || y >= n {
        return input("vertex index out of range");
    }
    if x == y {
        return input("local connectivity needs two distinct vertices");
    }
    if g.has_edge(x, y) {
        return input(format!(
            "'{}' and '{}' are adjacent; no vertex cut separates them",
            g.label(x),
            g.label(y)
        ));
    }
    // v_in = 2v, v_out = 2v + 1
    let big = n as u32;
    let mut net = FlowNet::new(2 * n);
    for v in 0..n {
        let c = if v == x || v == y { big } else { 1 };
        net.add(2 * v, 2 * v + 1, c);
    }
    for (u, v) in g.edges() {
        net.add(2 * u + 1, 2 * v, big);
        net.add(2 * v + 1, 2 * u, big);
    }
    let mut flow = 0;
    while net.augment(2 * x + 1, 2 * y) {
        flow += 1;
    }
    Ok(flow)
}

/// κ⁺(G): the maximum of κ(x, y) over all nonadjacent pairs.
pub fn kappa_plus(g: &Graph) -> Result<usize> {
    if g.is_complete() {
        return Err(MvdError::Domain("kappa_plus is undefined for complete graphs".into()));
    }
    let mut best = 0;
    for (x, y) in g.nonadjacent_pairs() {
        best = best.max(local_connectivity(g, x, y)?);
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexSet;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        let labels: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
        Graph::from_index_edges(&labels, edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        graph(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>())
    }

    fn petersen() -> Graph {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((5 + i, 5 + (i + 2) % 5));
        }
        graph(10, &e)
    }

    /// Smallest separating set found by trying every subset, smallest first.
    fn brute_min_cut(g: &Graph, x: usize, y: usize) -> usize {
        let others: Vec<usize> = (0..g.n()).filter(|&v| v != x && v != y).collect();
        let mut best = usize::MAX;
        for mask in 0u32..(1 << others.len()) {
            let size = mask.count_ones() as usize;
            if size >= best {
                continue;
            }
            let s: VertexSet = others
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &v)| v)
                .collect();
            if g.is_separated(&s, x, y).unwrap() {
                best = size;
            }
        }
        best
    }

    #[test]
    fn cycle_pair() {
        assert_eq!(local_connectivity(&cycle(5), 0, 2).unwrap(), 2);
    }

    #[test]
    fn petersen_pairs_match_brute_force() {
        let p = petersen();
        for (x, y) in p.nonadjacent_pairs() {
            assert_eq!(brute_min_cut(&p, x, y), 3);
            assert_eq!(local_connectivity(&p, x, y).unwrap(), 3);
        }
    }

    #[test]
    fn k23_small_side() {
        // parts {0,1} and {2,3,4}
        let g = graph(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]);
        assert_eq!(brute_min_cut(&g, 0, 1), 3);
        assert_eq!(local_connectivity(&g, 0, 1).unwrap(), 3);
        let brute_max = g.nonadjacent_pairs().map(|(x, y)| brute_min_cut(&g, x, y)).max().unwrap();
        assert_eq!(brute_max, 3);
        assert_eq!(kappa_plus(&g).unwrap(), 3);
    }

    #[test]
    fn kappa_plus_examples() {
        for n in 4..9 {
            assert_eq!(kappa_plus(&cycle(n)).unwrap(), 2);
        }
        let star = graph(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]);
        assert_eq!(kappa_plus(&star).unwrap(), 1);
        let k3 = cycle(3);
        assert!(matches!(kappa_plus(&k3), Err(MvdError::Domain(_))));
    }

    #[test]
    fn adjacent_or_equal_rejected() {
        let c = cycle(5);
        assert!(local_connectivity(&c, 0, 1).is_err());
        assert!(local_connectivity(&c, 2, 2).is_err());
    }
}

#![allow(dead_code)]

use std::collections::BTreeSet;

use mvd_core::Graph;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

pub fn labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("x{i}")).collect()
}

/// A random connected graph: a random spanning tree plus each remaining
/// pair with probability `p`, under a random vertex order.
pub fn random_connected(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut edges = BTreeSet::new();
    for i in 1..n {
        let j = rng.gen_range(0..i);
        let (a, b) = (perm[i], perm[j]);
        edges.insert((a.min(b), a.max(b)));
    }
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(p) {
                edges.insert((u, v));
            }
        }
    }
    Graph::from_index_edges(&labels(n), &edges.into_iter().collect::<Vec<_>>()).unwrap()
}

pub fn seeded(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Vertex sets inducing a connected subgraph, as bit masks.
pub fn connected_subsets(g: &Graph) -> Vec<u64> {
    let n = g.n();
    (1u64..(1 << n))
        .filter(|&mask| {
            let verts: Vec<usize> = (0..n).filter(|v| mask >> v & 1 == 1).collect();
            g.induced_subgraph(&verts.into_iter().collect()).unwrap().is_connected()
        })
        .collect()
}

/// Blocks as maximal vertex sets of order at least 2 whose induced
/// subgraph is connected and stays connected after deleting any one vertex.
pub fn brute_blocks(g: &Graph) -> BTreeSet<BTreeSet<usize>> {
    let n = g.n();
    if n == 1 {
        return BTreeSet::from([BTreeSet::from([0])]);
    }
    let nonseparable: Vec<u64> = connected_subsets(g)
        .into_iter()
        .filter(|&mask| {
            let verts: Vec<usize> = (0..n).filter(|v| mask >> v & 1 == 1).collect();
            verts.len() >= 2
                && (verts.len() == 2
                    || verts.iter().all(|&drop| {
                        let rest = verts.iter().copied().filter(|&v| v != drop).collect();
                        g.induced_subgraph(&rest).unwrap().is_connected()
                    }))
        })
        .collect();
    nonseparable
        .iter()
        .filter(|&&a| !nonseparable.iter().any(|&b| b != a && a & b == a))
        .map(|&mask| (0..n).filter(|v| mask >> v & 1 == 1).collect())
        .collect()
}

/// Vertices whose deletion disconnects the graph.
pub fn brute_cut_vertices(g: &Graph) -> BTreeSet<usize> {
    let n = g.n();
    (0..n)
        .filter(|&v| {
            let rest = (0..n).filter(|&u| u != v).collect();
            n > 2 && !g.induced_subgraph(&rest).unwrap().is_connected()
        })
        .collect()
}

/// Brute-force isomorphism test over all permutations.
pub fn brute_isomorphic(a: &Graph, b: &Graph) -> bool {
    fn rec(a: &Graph, b: &Graph, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let v = map.len();
        if v == a.n() {
            return a.edges().all(|(x, y)| b.has_edge(map[x], map[y]));
        }
        for w in 0..b.n() {
            if !used[w] {
                used[w] = true;
                map.push(w);
                if rec(a, b, map, used) {
                    return true;
                }
                map.pop();
                used[w] = false;
            }
        }
        false
    }
    a.n() == b.n() && a.m() == b.m() && rec(a, b, &mut Vec::new(), &mut vec![false; b.n()])
}

/// The same graph under a random vertex order, with fresh labels.
pub fn shuffled(rng: &mut StdRng, g: &Graph) -> Graph {
    let n = g.n();
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let edges: Vec<_> = g.edges().map(|(u, v)| (perm[u], perm[v])).collect();
    let names: Vec<String> = (0..n).map(|i| format!("s{i}")).collect();
    Graph::from_index_edges(&names, &edges).unwrap()
}

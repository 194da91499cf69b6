//! Backtracking isomorphism test for small graphs.
//!
//! Candidate images are filtered by degree, triangle count and the sorted
//! degree list of the neighborhood, then checked for adjacency consistency
//! against every vertex already mapped.

use crate::graph::Graph;

/// Isomorphism-invariant fingerprint: order, size, sorted degrees and sorted
/// per-vertex triangle counts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GraphKey {
    pub n: usize,
    pub m: usize,
    pub degrees: Vec<usize>,
    pub triangles: Vec<usize>,
}

impl GraphKey {
    pub fn of(g: &Graph) -> GraphKey {
        let mut degrees: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
        degrees.sort_unstable();
        let mut triangles = g.triangle_counts();
        triangles.sort_unstable();
        GraphKey {
            n: g.n(),
            m: g.m(),
            degrees,
            triangles,
        }
    }
}

struct Profile {
    degree: Vec<usize>,
    triangles: Vec<usize>,
    nbr_degrees: Vec<Vec<usize>>,
}

impl Profile {
    fn of(g: &Graph) -> Profile {
        let degree: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
        let nbr_degrees = (0..g.n())
            .map(|v| {
                let mut d: Vec<usize> = g.neighbors(v).iter().map(|&w| degree[w]).collect();
                d.sort_unstable();
                d
            })
            .collect();
        Profile {
            degree,
            triangles: g.triangle_counts(),
            nbr_degrees,
        }
    }

    fn compatible(&self, v: usize, other: &Profile, w: usize) -> bool {
        self.degree[v] == other.degree[w]
            && self.triangles[v] == other.triangles[w]
            && self.nbr_degrees[v] == other.nbr_degrees[w]
    }
}

/// Vertices of `g` in an order where each vertex after the first in its
/// component has an earlier neighbor, starting from the highest degree.
fn search_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let start = (0..n).filter(|&v| !placed[v]).max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v))).unwrap();
        placed[start] = true;
        order.push(start);
        loop {
            // most already-placed neighbors first, then degree, then index
            let next = (0..n)
                .filter(|&v| !placed[v])
                .map(|v| {
                    let links = g.neighbors(v).iter().filter(|&&w| placed[w]).count();
                    (v, links)
                })
                .filter(|&(_, links)| links > 0)
                .max_by_key(|&(v, links)| (links, g.degree(v), std::cmp::Reverse(v)));
            match next {
                Some((v, _)) => {
                    placed[v] = true;
                    order.push(v);
                }
                None => break,
            }
        }
    }
    order
}

/// Finds an isomorphism from `pattern` onto `target`: `map[v]` is the image
/// of pattern vertex `v`. The result is deterministic.
pub fn find_isomorphism(pattern: &Graph, target: &Graph) -> Option<Vec<usize>> {
    if GraphKey::of(pattern) != GraphKey::of(target) {
        return None;
    }
    let pp = Profile::of(pattern);
    let tp = Profile::of(target);
    let order = search_order(pattern);
    let n = pattern.n();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend(pattern, target, &pp, &tp, &order, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn extend(
    pattern: &Graph,
    target: &Graph,
    pp: &Profile,
    tp: &Profile,
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for w in 0..target.n() {
        if used[w] || !pp.compatible(v, tp, w) {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| pattern.has_edge(u, v) == target.has_edge(map[u], w));
        if !consistent {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if extend(pattern, target, pp, tp, order, depth + 1, map, used) {
            return true;
        }
        used[w] = false;
        map[v] = usize::MAX;
    }
    false
}

/// True iff `map` is a bijection preserving adjacency both ways.
pub fn is_isomorphism(pattern: &Graph, target: &Graph, map: &[usize]) -> bool {
    if pattern.n() != target.n() || map.len() != pattern.n() {
        return false;
    }
    let mut seen = vec![false; target.n()];
    for &w in map {
        if w >= target.n() || std::mem::replace(&mut seen[w], true) {
            return false;
        }
    }
    pattern.m() == target.m() && pattern.edges().all(|(u, v)| target.has_edge(map[u], map[v]))
}

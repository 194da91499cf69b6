//! Exhaustive checks over all labeled graphs of a small order.
//!
//! A labeled graph on `n` vertices is encoded as an integer whose bit `i`
//! is edge `i` in the lexicographic list of vertex pairs `(0,1), (0,2), ...,
//! (n-2,n-1)`. The code range is cut into contiguous chunks processed in
//! parallel; chunk tables merge by max or min with ties broken towards the
//! smaller code, so the result does not depend on scheduling.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::blocks::decompose;
use crate::catalog::Catalog;
use crate::coloring::Coloring;
use crate::compose::mvd_compose;
use crate::error::{input, MvdError, Result};
use crate::families::{block_bound, emax, f_v, Extremal};
use crate::flow::kappa_plus;
use crate::graph::{Graph, VertexSet};
use crate::solver::{is_mvd_coloring, mvd_exact, PartitionSearch};

/// Largest order accepted by [`scan_extremal`].
pub const MAX_EXTREMAL_ORDER: usize = 6;
/// Largest order accepted by [`scan_property`].
pub const MAX_PROPERTY_ORDER: usize = 7;

const CHUNK: u64 = 1 << 10;

/// Vertex pairs in code-bit order.
pub fn edge_order(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))).collect()
}

/// Adjacency masks of the graph with the given code.
pub fn masks_of_code(n: usize, code: u64) -> Vec<u64> {
    let mut adj = vec![0u64; n];
    for (i, (u, v)) in edge_order(n).into_iter().enumerate() {
        if code >> i & 1 == 1 {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
    }
    adj
}

/// The graph with the given code, on vertices `v1..vn`.
pub fn graph_of_code(n: usize, code: u64) -> Graph {
    let labels: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
    let edges: Vec<_> = edge_order(n)
        .into_iter()
        .enumerate()
        .filter(|(i, _)| code >> i & 1 == 1)
        .map(|(_, e)| e)
        .collect();
    Graph::from_index_edges(&labels, &edges).expect("generated labels are valid")
}

/// Code of `g` under its own vertex order.
pub fn code_of_graph(g: &Graph) -> Result<u64> {
    if g.n() > 11 {
        return input("codes are limited to order 11");
    }
    Ok(edge_order(g.n())
        .into_iter()
        .enumerate()
        .filter(|(_, (u, v))| g.has_edge(*u, *v))
        .fold(0u64, |acc, (i, _)| acc | 1 << i))
}

fn masks_connected(adj: &[u64]) -> bool {
    let n = adj.len();
    let all = if n == 64 { !0 } else { (1u64 << n) - 1 };
    let mut reach = 1u64;
    let mut frontier = 1u64;
    while frontier != 0 {
        let mut next = 0;
        let mut f = frontier;
        while f != 0 {
            next |= adj[f.trailing_zeros() as usize];
            f &= f - 1;
        }
        frontier = next & !reach;
        reach |= next;
    }
    reach == all
}

fn mvd_of_masks(adj: &[u64]) -> usize {
    PartitionSearch::new(adj.len(), adj).max_classes(adj.len())
}

fn total_codes(n: usize) -> u64 {
    1u64 << (n * n.saturating_sub(1) / 2)
}

/// A graph that breaks an expectation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub code: u64,
    pub detail: String,
}

/// One row of the extremal tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExtremalRow {
    pub k: usize,
    /// Largest size of a connected graph with mvd exactly k.
    pub emax_observed: Extremal,
    pub emax_expected: Extremal,
    /// Smallest m such that every connected graph with at least m edges has
    /// mvd at least k.
    pub fv_observed: usize,
    pub fv_expected: Extremal,
}

impl ExtremalRow {
    pub fn emax_ok(&self) -> bool {
        self.emax_observed == self.emax_expected
    }

    pub fn fv_ok(&self) -> bool {
        self.fv_expected == Extremal::Value(self.fv_observed)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanResult {
    pub n: usize,
    /// Labeled graphs visited.
    pub visited: u64,
    /// Connected labeled graphs among them.
    pub connected: u64,
    pub rows: Vec<ExtremalRow>,
    pub counterexamples: Vec<Counterexample>,
}

impl ScanResult {
    pub fn is_ok(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Per-chunk tables: for each mvd value, the largest size and the smallest
/// code reaching it.
#[derive(Clone)]
struct Tally {
    connected: u64,
    best: Vec<Option<(usize, u64)>>,
}

fn better(a: Option<(usize, u64)>, b: Option<(usize, u64)>) -> Option<(usize, u64)> {
    match (a, b) {
        (Some((ma, ca)), Some((mb, cb))) => Some(if ma > mb || (ma == mb && ca < cb) { (ma, ca) } else { (mb, cb) }),
        (x, None) | (None, x) => x,
    }
}

impl Tally {
    fn new(n: usize) -> Tally {
        Tally {
            connected: 0,
            best: vec![None; n + 1],
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.connected += other.connected;
        for (a, b) in self.best.iter_mut().zip(other.best) {
            *a = better(*a, b);
        }
        self
    }
}

fn chunks(n: usize) -> Vec<(u64, u64)> {
    let total = total_codes(n);
    (0..total.div_ceil(CHUNK))
        .map(|i| (i * CHUNK, ((i + 1) * CHUNK).min(total)))
        .collect()
}

/// Recomputes `emax(n, k)` and `f_v(n, k)` for every k by visiting all
/// labeled graphs on `n` vertices.
pub fn scan_extremal(n: usize, cap: usize) -> Result<ScanResult> {
    if n == 0 {
        return input("order must be positive");
    }
    if n > MAX_EXTREMAL_ORDER.min(cap) {
        return Err(MvdError::Capacity {
            what: "extremal scan".into(),
            n,
            cap: MAX_EXTREMAL_ORDER.min(cap),
        });
    }
    let tally = chunks(n)
        .into_par_iter()
        .map(|(lo, hi)| {
            let mut t = Tally::new(n);
            for code in lo..hi {
                let adj = masks_of_code(n, code);
                if !masks_connected(&adj) {
                    continue;
                }
                t.connected += 1;
                let k = mvd_of_masks(&adj);
                t.best[k] = better(t.best[k], Some((code.count_ones() as usize, code)));
            }
            t
        })
        .reduce(|| Tally::new(n), Tally::merge);

    let mut rows = Vec::new();
    let mut counterexamples = Vec::new();
    // largest size among graphs with mvd <= k - 1, with its code
    let mut below: Option<(usize, u64)> = None;
    for k in 1..=n {
        let emax_observed = tally.best[k].map_or(Extremal::Undefined, |(m, _)| Extremal::Value(m));
        let fv_observed = below.map_or(n - 1, |(m, _)| (m + 1).max(n - 1));
        let row = ExtremalRow {
            k,
            emax_observed,
            emax_expected: emax(n, k)?,
            fv_observed,
            fv_expected: f_v(n, k)?,
        };
        if !row.emax_ok() {
            counterexamples.push(Counterexample {
                code: tally.best[k].map_or(0, |(_, c)| c),
                detail: format!("k={k}: largest size with mvd k is {emax_observed}, expected {}", row.emax_expected),
            });
        }
        if !row.fv_ok() {
            counterexamples.push(Counterexample {
                code: below.map_or(0, |(_, c)| c),
                detail: format!("k={k}: size threshold is {fv_observed}, expected {}", row.fv_expected),
            });
        }
        rows.push(row);
        below = better(below, tally.best[k]);
    }
    Ok(ScanResult {
        n,
        visited: total_codes(n),
        connected: tally.connected,
        rows,
        counterexamples,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Property {
    /// `1 <= mvd <= n - κ⁺ + 1` for non-complete graphs.
    Bound,
    /// `mvd = n` exactly when every block is complete.
    BlocksCompleteIffN,
    /// Composition over blocks gives the exact value and a valid witness.
    ComposeAgreesExact,
    /// An mvd-coloring restricted to any connected induced subgraph is
    /// still an MVD-coloring of it.
    Restriction,
    /// `mvd <= ⌊n/2⌋` for minimally 2-connected graphs of order at least 4,
    /// and the block bound when all blocks are minimally 2-connected and
    /// triangle-free.
    MinBlockBound,
}

impl Property {
    pub const ALL: [Property; 5] = [
        Property::Bound,
        Property::BlocksCompleteIffN,
        Property::ComposeAgreesExact,
        Property::Restriction,
        Property::MinBlockBound,
    ];
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Property::Bound => "bound",
            Property::BlocksCompleteIffN => "blocks-complete-iff-n",
            Property::ComposeAgreesExact => "compose-agrees-exact",
            Property::Restriction => "restriction",
            Property::MinBlockBound => "min-block-bound",
        })
    }
}

impl FromStr for Property {
    type Err = MvdError;

    fn from_str(s: &str) -> Result<Self> {
        Property::ALL
            .into_iter()
            .find(|p| p.to_string() == s.trim())
            .ok_or_else(|| MvdError::Input(format!("unknown property '{s}'")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyResult {
    pub n: usize,
    pub property: Property,
    pub connected: u64,
    /// Graphs to which the property applied.
    pub checked: u64,
    pub violations: Vec<Counterexample>,
}

impl PropertyResult {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

fn triangle_free_masks(adj: &[u64]) -> bool {
    (0..adj.len()).all(|u| {
        let mut nb = adj[u] & !((1u64 << (u + 1)) - 1);
        while nb != 0 {
            let v = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            if adj[u] & adj[v] != 0 {
                return false;
            }
        }
        true
    })
}

/// Checks `prop` for one connected graph. `Ok(None)` means it does not
/// apply, `Ok(Some(None))` that it holds.
pub fn check_property(g: &Graph, prop: Property) -> Result<Option<Option<String>>> {
    let n = g.n();
    let verdict = match prop {
        Property::Bound => {
            let v = mvd_exact(g, n)?.value;
            let upper = if g.is_complete() { n } else { n - kappa_plus(g)? + 1 };
            (v < 1 || v > upper).then(|| format!("mvd {v} outside [1, {upper}]"))
        }
        Property::BlocksCompleteIffN => {
            let v = mvd_exact(g, n)?.value;
            let all_complete = decompose(g)?.blocks.iter().all(|b| b.graph.is_complete());
            (all_complete != (v == n)).then(|| format!("mvd {v}, all blocks complete: {all_complete}"))
        }
        Property::ComposeAgreesExact => {
            let exact = mvd_exact(g, n)?.value;
            let r = mvd_compose(g, &Catalog::default(), n)?;
            if r.value != exact {
                Some(format!("compose {} but exact {exact}", r.value))
            } else if r.witness.num_colors() != r.value || !is_mvd_coloring(g, &r.witness)? {
                Some("composed witness does not verify".into())
            } else {
                None
            }
        }
        Property::Restriction => {
            let w = mvd_exact(g, n)?.witness;
            restriction_failure(g, &w)?
        }
        Property::MinBlockBound => {
            let d = decompose(g)?;
            let qualifying = d
                .blocks
                .iter()
                .all(|b| b.order() == 2 || (b.graph.is_minimally_2_connected() && b.graph.is_triangle_free()));
            let min2 = n >= 4 && g.is_minimally_2_connected();
            if !qualifying && !min2 {
                return Ok(None);
            }
            let v = mvd_exact(g, n)?.value;
            if min2 && v > n / 2 {
                Some(format!("minimally 2-connected with mvd {v} > {}", n / 2))
            } else if qualifying && v as i64 > block_bound(n, d.r(), d.t())? {
                Some(format!("mvd {v} above block bound {}", block_bound(n, d.r(), d.t())?))
            } else {
                None
            }
        }
    };
    Ok(Some(verdict))
}

/// The first connected induced subgraph (by vertex mask) on which the
/// restriction of `c` is not an MVD-coloring.
pub fn restriction_failure(g: &Graph, c: &Coloring) -> Result<Option<String>> {
    let n = g.n();
    for mask in 1u64..(1 << n) {
        if mask.count_ones() < 3 {
            continue;
        }
        let verts: Vec<usize> = (0..n).filter(|v| mask >> v & 1 == 1).collect();
        let sub = g.induced_subgraph(&verts.iter().copied().collect::<VertexSet>())?;
        if !sub.is_connected() {
            continue;
        }
        if !is_mvd_coloring(&sub, &c.restricted(&verts))? {
            return Ok(Some(format!("restriction to {{{}}} fails", sub.labels().join(","))));
        }
    }
    Ok(None)
}

/// Checks `prop` over every connected labeled graph on `n` vertices.
pub fn scan_property(n: usize, prop: Property) -> Result<PropertyResult> {
    if n == 0 {
        return input("order must be positive");
    }
    if n > MAX_PROPERTY_ORDER {
        return Err(MvdError::Capacity {
            what: "property scan".into(),
            n,
            cap: MAX_PROPERTY_ORDER,
        });
    }
    let parts = chunks(n)
        .into_par_iter()
        .map(|(lo, hi)| -> Result<(u64, u64, Vec<Counterexample>)> {
            let (mut connected, mut checked, mut bad) = (0, 0, Vec::new());
            for code in lo..hi {
                let adj = masks_of_code(n, code);
                if !masks_connected(&adj) {
                    continue;
                }
                connected += 1;
                // cheap prefilter: the block property only concerns graphs
                // whose blocks are triangle-free
                if prop == Property::MinBlockBound && !triangle_free_masks(&adj) {
                    continue;
                }
                if let Some(verdict) = check_property(&graph_of_code(n, code), prop)? {
                    checked += 1;
                    if let Some(detail) = verdict {
                        bad.push(Counterexample { code, detail });
                    }
                }
            }
            Ok((connected, checked, bad))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut result = PropertyResult {
        n,
        property: prop,
        connected: 0,
        checked: 0,
        violations: Vec::new(),
    };
    for (c, k, bad) in parts {
        result.connected += c;
        result.checked += k;
        result.violations.extend(bad);
    }
    Ok(result)
}

//! MVD-coloring verification and exact mvd by set-partition search.
//!
//! A pair `x, y` has a monochromatic cut under a coloring iff removing some
//! whole color class (minus `x` and `y`) separates them: any monochromatic
//! cut lies inside one class, and enlarging a cut while avoiding `x` and
//! `y` keeps it a cut. The same monotonicity drives the exact search:
//! after coloring a prefix of the vertices, class `c` can still end up
//! separating `x` and `y` only if removing class `c` together with every
//! uncolored vertex already does, so a prefix with no such class for some
//! pair is abandoned.

use std::fmt;

use crate::coloring::Coloring;
use crate::error::{input, MvdError, Result};
use crate::flow::kappa_plus;
use crate::graph::{Graph, VertexSet};

/// Default largest order handed to the exhaustive search. Bell(11) is
/// 678,570 partitions.
pub const DEFAULT_CAP: usize = 11;

/// The search works on 64-bit vertex masks.
pub const MAX_EXACT_ORDER: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Exact,
    Compose,
    Formula,
    Catalog,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Exact => "exact",
            Method::Compose => "compose",
            Method::Formula => "formula",
            Method::Catalog => "catalog",
        })
    }
}

/// How a single block's value was obtained.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Source {
    Complete,
    Cycle,
    /// Transferred from the named catalog entry.
    Catalog(String),
    Exact,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Source::Complete => f.write_str("complete"),
            Source::Cycle => f.write_str("cycle"),
            Source::Catalog(name) => write!(f, "catalog:{name}"),
            Source::Exact => f.write_str("exact"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockReport {
    pub block: usize,
    pub order: usize,
    pub value: usize,
    pub source: Source,
}

/// The mvd of a graph together with a witness coloring using exactly
/// `value` colors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveReport {
    pub value: usize,
    pub witness: Coloring,
    pub method: Method,
    pub per_block: Option<Vec<BlockReport>>,
}

fn check_domain(g: &Graph, c: &Coloring) -> Result<()> {
    if c.len() != g.n() {
        return input(format!(
            "coloring covers {} vertices but the graph has {}",
            c.len(),
            g.n()
        ));
    }
    Ok(())
}

/// Returns a monochromatic x–y vertex cut if one exists: the first color
/// class (in class order) whose removal, minus `x` and `y`, separates them.
pub fn has_monochromatic_cut(g: &Graph, c: &Coloring, x: usize, y: usize) -> Result<Option<VertexSet>> {
    check_domain(g, c)?;
    if x >= g.n() || y >= g.n() {
        return input("vertex index out of range");
    }
    if x == y || g.has_edge(x, y) {
        return input(format!(
            "'{}' and '{}' must be distinct and nonadjacent",
            g.label(x),
            g.label(y)
        ));
    }
    for mut class in c.classes() {
        class.remove(x);
        class.remove(y);
        if g.is_separated(&class, x, y)? {
            return Ok(Some(class));
        }
    }
    Ok(None)
}

/// Finds a nonadjacent pair without a monochromatic cut, or `None` when the
/// coloring is an MVD-coloring.
pub fn find_failing_pair(g: &Graph, c: &Coloring) -> Result<Option<(usize, usize)>> {
    check_domain(g, c)?;
    if let Some(adj) = g.adjacency_masks() {
        let classes: Vec<u64> = c
            .classes()
            .iter()
            .map(|s| s.iter().fold(0u64, |m, v| m | (1 << v)))
            .collect();
        for (x, y) in g.nonadjacent_pairs() {
            let keep = !((1u64 << x) | (1u64 << y));
            if !classes.iter().any(|&cls| separated(&adj, cls & keep, x, y)) {
                return Ok(Some((x, y)));
            }
        }
        return Ok(None);
    }
    for (x, y) in g.nonadjacent_pairs() {
        if has_monochromatic_cut(g, c, x, y)?.is_none() {
            return Ok(Some((x, y)));
        }
    }
    Ok(None)
}

/// True iff every nonadjacent pair has a monochromatic cut.
pub fn is_mvd_coloring(g: &Graph, c: &Coloring) -> Result<bool> {
    Ok(find_failing_pair(g, c)?.is_none())
}

/// `n` for complete graphs, otherwise `n - κ⁺ + 1`.
pub fn mvd_upper_bound(g: &Graph) -> Result<usize> {
    if g.is_complete() {
        return Ok(g.n());
    }
    Ok(g.n() - kappa_plus(g)? + 1)
}

/// True iff `x` cannot reach `y` once `removed` is deleted.
pub(crate) fn separated(adj: &[u64], removed: u64, x: usize, y: usize) -> bool {
    let allowed = !removed;
    let target = 1u64 << y;
    let mut reach = 1u64 << x;
    let mut frontier = reach;
    while frontier != 0 {
        let mut next = 0u64;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= adj[v];
        }
        next &= allowed & !reach;
        if next & target != 0 {
            return false;
        }
        reach |= next;
        frontier = next;
    }
    true
}

/// Depth-first search over restricted-growth strings.
pub(crate) struct PartitionSearch<'a> {
    n: usize,
    adj: &'a [u64],
    pairs: Vec<(usize, usize)>,
    hint: Vec<usize>,
    assign: Vec<u8>,
    classes: Vec<u64>,
    best: usize,
    best_assign: Vec<u8>,
    stop_at: usize,
}

impl<'a> PartitionSearch<'a> {
    pub(crate) fn new(n: usize, adj: &'a [u64]) -> Self {
        let mut pairs = Vec::new();
        for (x, row) in adj.iter().enumerate().take(n) {
            for y in (x + 1)..n {
                if row >> y & 1 == 0 {
                    pairs.push((x, y));
                }
            }
        }
        let hint = vec![0; pairs.len()];
        PartitionSearch {
            n,
            adj,
            pairs,
            hint,
            assign: vec![0; n],
            classes: Vec::with_capacity(n),
            best: 0,
            best_assign: Vec::new(),
            stop_at: usize::MAX,
        }
    }

    /// Can every nonadjacent pair still be cut by some class, given that
    /// the vertices in `open` are not yet colored?
    fn feasible(&mut self, open: u64) -> bool {
        for (p, &(x, y)) in self.pairs.iter().enumerate() {
            let keep = !((1u64 << x) | (1u64 << y));
            let h = self.hint[p];
            if h < self.classes.len() && separated(self.adj, (self.classes[h] | open) & keep, x, y) {
                continue;
            }
            let found = (0..self.classes.len())
                .find(|&c| c != h && separated(self.adj, (self.classes[c] | open) & keep, x, y));
            match found {
                Some(c) => self.hint[p] = c,
                None => return false,
            }
        }
        true
    }

    fn place(&mut self, v: usize, c: usize) {
        if c == self.classes.len() {
            self.classes.push(0);
        }
        self.classes[c] |= 1 << v;
        self.assign[v] = c as u8;
    }

    fn unplace(&mut self, v: usize, c: usize) {
        self.classes[c] &= !(1u64 << v);
        if self.classes[c] == 0 {
            self.classes.pop();
        }
    }

    fn open_after(&self, v: usize) -> u64 {
        if v + 1 >= 64 {
            0
        } else {
            (!0u64 << (v + 1)) & low_bits(self.n)
        }
    }

    /// Maximum class count; new classes are tried first so large partitions
    /// are found early and the count bound prunes hard.
    fn maximize(&mut self, v: usize) -> bool {
        let k = self.classes.len();
        if v == self.n {
            if k > self.best {
                self.best = k;
                self.best_assign = self.assign.clone();
            }
            return self.best >= self.stop_at;
        }
        if k + (self.n - v) <= self.best {
            return false;
        }
        let open = self.open_after(v);
        for c in (0..=k).rev() {
            self.place(v, c);
            let stop = self.feasible(open) && self.maximize(v + 1);
            self.unplace(v, c);
            if stop {
                return true;
            }
        }
        false
    }

    /// First partition in lexicographic restricted-growth order that has
    /// exactly `target` classes and passes the cut condition.
    fn first_with(&mut self, v: usize, target: usize) -> bool {
        let k = self.classes.len();
        if k > target || k + (self.n - v) < target {
            return false;
        }
        if v == self.n {
            self.best = k;
            self.best_assign = self.assign.clone();
            return true;
        }
        let open = self.open_after(v);
        for c in 0..=k {
            self.place(v, c);
            let found = self.feasible(open) && self.first_with(v + 1, target);
            self.unplace(v, c);
            if found {
                return true;
            }
        }
        false
    }

    /// Maximum number of classes, stopping early once `upper` is reached.
    pub(crate) fn max_classes(mut self, upper: usize) -> usize {
        self.stop_at = upper;
        self.maximize(0);
        self.best
    }

    pub(crate) fn lex_first(mut self, target: usize) -> Option<Vec<u8>> {
        if self.first_with(0, target) {
            Some(self.best_assign)
        } else {
            None
        }
    }
}

fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        !0
    } else {
        (1u64 << n) - 1
    }
}

fn exact_masks(g: &Graph, cap: usize, what: &str) -> Result<Vec<u64>> {
    let cap = cap.min(MAX_EXACT_ORDER);
    if g.n() > cap {
        return Err(MvdError::Capacity {
            what: what.to_string(),
            n: g.n(),
            cap,
        });
    }
    Ok(g.adjacency_masks().expect("order checked against cap"))
}

/// Exact mvd by exhaustive search over vertex partitions. The witness is
/// the first maximum partition in lexicographic restricted-growth order.
pub fn mvd_exact(g: &Graph, cap: usize) -> Result<SolveReport> {
    g.require_connected()?;
    let adj = exact_masks(g, cap, "graph")?;
    let upper = mvd_upper_bound(g)?;
    let value = PartitionSearch::new(g.n(), &adj).max_classes(upper);
    let assign = PartitionSearch::new(g.n(), &adj)
        .lex_first(value)
        .expect("a partition with the maximum class count exists");
    Ok(SolveReport {
        value,
        witness: Coloring::from_classes(&assign),
        method: Method::Exact,
        per_block: None,
    })
}

/// The lexicographically first MVD-coloring with exactly `k` colors, if any.
pub fn find_coloring_with(g: &Graph, k: usize, cap: usize) -> Result<Option<Coloring>> {
    let adj = exact_masks(g, cap, "graph")?;
    Ok(PartitionSearch::new(g.n(), &adj)
        .lex_first(k)
        .map(|a| Coloring::from_classes(&a)))
}

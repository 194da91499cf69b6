//! Named graph families, their closed-form mvd values and witness
//! colorings, and the extremal functions `f_v(n, k)` and `emax(n, k)`.

use std::fmt;
use std::str::FromStr;

use crate::coloring::Coloring;
use crate::error::{input, MvdError, Result};
use crate::graph::Graph;
use crate::iso::find_isomorphism;
use crate::solver::find_coloring_with;

/// Edge sets removed from `K_n` for the near-complete family. Vertices are
/// `v1, v2, ...` and the removed edges always sit on the first few of them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgePattern {
    /// `j` edges at `v1`: `K_{n-1}` plus `v1` joined to `n - 1 - j` vertices.
    Star(usize),
    /// `v1v2`, `v3v4`.
    TwoDisjoint,
    /// `v1v2`, `v2v3`, `v1v3`.
    Triangle,
    /// The path `v1v2v3v4`.
    PathP4,
    /// `v1v2`, `v1v3` and `v4v5`.
    PathP3PlusEdge,
    /// `v1v2`, `v3v4`, `v5v6`.
    ThreeDisjoint,
    /// The path `v1v2v3v4v5`.
    PathP5,
}

impl EdgePattern {
    fn removed(&self) -> Vec<(usize, usize)> {
        match *self {
            EdgePattern::Star(j) => (1..=j).map(|w| (0, w)).collect(),
            EdgePattern::TwoDisjoint => vec![(0, 1), (2, 3)],
            EdgePattern::Triangle => vec![(0, 1), (1, 2), (0, 2)],
            EdgePattern::PathP4 => vec![(0, 1), (1, 2), (2, 3)],
            EdgePattern::PathP3PlusEdge => vec![(0, 1), (0, 2), (3, 4)],
            EdgePattern::ThreeDisjoint => vec![(0, 1), (2, 3), (4, 5)],
            EdgePattern::PathP5 => vec![(0, 1), (1, 2), (2, 3), (3, 4)],
        }
    }

    /// Smallest order for which the pattern fits and leaves a connected graph.
    pub fn min_order(&self) -> usize {
        match *self {
            EdgePattern::Star(j) => j + 2,
            EdgePattern::TwoDisjoint | EdgePattern::Triangle | EdgePattern::PathP4 => 4,
            EdgePattern::PathP3PlusEdge | EdgePattern::PathP5 => 5,
            EdgePattern::ThreeDisjoint => 6,
        }
    }

    /// Patterns with at most four removed edges, for recognition.
    fn small(n: usize) -> Vec<EdgePattern> {
        let mut v: Vec<EdgePattern> = (1..=4).map(EdgePattern::Star).collect();
        v.extend([
            EdgePattern::TwoDisjoint,
            EdgePattern::Triangle,
            EdgePattern::PathP4,
            EdgePattern::PathP3PlusEdge,
            EdgePattern::ThreeDisjoint,
            EdgePattern::PathP5,
        ]);
        v.retain(|p| p.min_order() <= n);
        v
    }
}

impl fmt::Display for EdgePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgePattern::Star(j) => write!(f, "star{j}"),
            EdgePattern::TwoDisjoint => f.write_str("2dis"),
            EdgePattern::Triangle => f.write_str("g2"),
            EdgePattern::PathP4 => f.write_str("g3"),
            EdgePattern::PathP3PlusEdge => f.write_str("g4"),
            EdgePattern::ThreeDisjoint => f.write_str("g5"),
            EdgePattern::PathP5 => f.write_str("g6"),
        }
    }
}

impl FromStr for EdgePattern {
    type Err = MvdError;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim() {
            "e" => EdgePattern::Star(1),
            "2adj" => EdgePattern::Star(2),
            "g1" => EdgePattern::Star(3),
            "2dis" => EdgePattern::TwoDisjoint,
            "g2" => EdgePattern::Triangle,
            "g3" => EdgePattern::PathP4,
            "g4" => EdgePattern::PathP3PlusEdge,
            "g5" => EdgePattern::ThreeDisjoint,
            "g6" => EdgePattern::PathP5,
            other => match other.strip_prefix("star").map(str::parse::<usize>) {
                Some(Ok(j)) => EdgePattern::Star(j),
                _ => return input(format!("unknown edge pattern '{other}'")),
            },
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Cycle(usize),
    Path(usize),
    Complete(usize),
    CompleteMultipartite(Vec<usize>),
    /// `W_n = C_{n-1} ∨ K_1`, of order `n`.
    Wheel(usize),
    /// `P_rows □ P_cols`.
    Grid(usize, usize),
    Petersen,
    /// Generalized theta graph: hubs `u`, `v` joined by paths with the given
    /// numbers of internal vertices.
    Theta(Vec<usize>),
    CompleteMinusEdges { n: usize, pattern: EdgePattern },
    Join(Box<FamilySpec>, Box<FamilySpec>),
    CartesianProduct(Box<FamilySpec>, Box<FamilySpec>),
}

fn numbered(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("v{i}")).collect()
}

fn complete_edges(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))).collect()
}

fn combine_labels(a: &Graph, b: &Graph) -> Vec<String> {
    let clash = a.labels().iter().any(|l| b.index_of(l).is_some());
    a.labels()
        .iter()
        .map(|l| if clash { format!("l.{l}") } else { l.clone() })
        .chain(b.labels().iter().map(|l| if clash { format!("r.{l}") } else { l.clone() }))
        .collect()
}

impl FamilySpec {
    pub fn generate(&self) -> Result<Graph> {
        let g = match self {
            FamilySpec::Cycle(n) => {
                if *n < 3 {
                    return input("a cycle needs at least 3 vertices");
                }
                Graph::from_index_edges(&numbered(*n), &(0..*n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>())?
            }
            FamilySpec::Path(n) => {
                Graph::from_index_edges(&numbered(*n), &(1..*n).map(|i| (i - 1, i)).collect::<Vec<_>>())?
            }
            FamilySpec::Complete(n) => Graph::from_index_edges(&numbered(*n), &complete_edges(*n))?,
            FamilySpec::CompleteMultipartite(parts) => {
                if parts.len() < 2 || parts.contains(&0) {
                    return input("a complete multipartite graph needs at least two nonempty parts");
                }
                let part_of: Vec<usize> = parts.iter().enumerate().flat_map(|(p, &s)| std::iter::repeat_n(p, s)).collect();
                let n = part_of.len();
                let edges: Vec<_> = complete_edges(n).into_iter().filter(|&(u, v)| part_of[u] != part_of[v]).collect();
                Graph::from_index_edges(&numbered(n), &edges)?
            }
            FamilySpec::Wheel(n) => {
                if *n < 4 {
                    return input("a wheel needs at least 4 vertices");
                }
                let rim = n - 1;
                let mut labels = numbered(rim);
                labels.push("hub".into());
                let mut edges: Vec<_> = (0..rim).map(|i| (i, (i + 1) % rim)).collect();
                edges.extend((0..rim).map(|i| (i, rim)));
                Graph::from_index_edges(&labels, &edges)?
            }
            FamilySpec::Grid(rows, cols) => {
                if *rows == 0 || *cols == 0 {
                    return input("grid dimensions must be positive");
                }
                let at = |i: usize, j: usize| i * cols + j;
                let labels: Vec<String> = (0..*rows)
                    .flat_map(|i| (0..*cols).map(move |j| format!("x{}_{}", i + 1, j + 1)))
                    .collect();
                let mut edges = Vec::new();
                for i in 0..*rows {
                    for j in 0..*cols {
                        if j + 1 < *cols {
                            edges.push((at(i, j), at(i, j + 1)));
                        }
                        if i + 1 < *rows {
                            edges.push((at(i, j), at(i + 1, j)));
                        }
                    }
                }
                Graph::from_index_edges(&labels, &edges)?
            }
            FamilySpec::Petersen => {
                let labels: Vec<String> =
                    (1..=5).map(|i| format!("o{i}")).chain((1..=5).map(|i| format!("i{i}"))).collect();
                let mut edges = Vec::new();
                for i in 0..5 {
                    edges.push((i, (i + 1) % 5));
                    edges.push((i, i + 5));
                    edges.push((5 + i, 5 + (i + 2) % 5));
                }
                Graph::from_index_edges(&labels, &edges)?
            }
            FamilySpec::Theta(paths) => {
                if paths.is_empty() || paths.contains(&0) {
                    return input("theta paths need at least one internal vertex each");
                }
                let mut labels = vec!["u".to_string(), "v".to_string()];
                let mut edges = Vec::new();
                for (i, &len) in paths.iter().enumerate() {
                    let mut prev = 0;
                    for j in 0..len {
                        let id = labels.len();
                        labels.push(format!("p{}_{}", i + 1, j + 1));
                        edges.push((prev, id));
                        prev = id;
                    }
                    edges.push((prev, 1));
                }
                Graph::from_index_edges(&labels, &edges)?
            }
            FamilySpec::CompleteMinusEdges { n, pattern } => {
                if *n < pattern.min_order() {
                    return input(format!("pattern {pattern} needs at least {} vertices", pattern.min_order()));
                }
                let removed = pattern.removed();
                let edges: Vec<_> = complete_edges(*n).into_iter().filter(|e| !removed.contains(e)).collect();
                Graph::from_index_edges(&numbered(*n), &edges)?
            }
            FamilySpec::Join(a, b) => {
                let (ga, gb) = (a.generate()?, b.generate()?);
                let off = ga.n();
                let mut edges: Vec<_> = ga.edges().collect();
                edges.extend(gb.edges().map(|(u, v)| (u + off, v + off)));
                edges.extend((0..off).flat_map(|u| (0..gb.n()).map(move |v| (u, v + off))));
                Graph::from_index_edges(&combine_labels(&ga, &gb), &edges)?
            }
            FamilySpec::CartesianProduct(a, b) => {
                let (ga, gb) = (a.generate()?, b.generate()?);
                let nb = gb.n();
                let labels: Vec<String> = ga
                    .labels()
                    .iter()
                    .flat_map(|x| gb.labels().iter().map(move |y| format!("{x}.{y}")))
                    .collect();
                let mut edges = Vec::new();
                for u in 0..ga.n() {
                    for (y1, y2) in gb.edges() {
                        edges.push((u * nb + y1, u * nb + y2));
                    }
                }
                for (x1, x2) in ga.edges() {
                    for v in 0..nb {
                        edges.push((x1 * nb + v, x2 * nb + v));
                    }
                }
                Graph::from_index_edges(&labels, &edges)?
            }
        };
        if matches!(self, FamilySpec::CompleteMinusEdges { .. }) {
            g.require_connected()?;
        }
        Ok(g)
    }

    /// Closed-form mvd, where one is known.
    pub fn mvd_formula(&self) -> Option<usize> {
        match self {
            FamilySpec::Cycle(n) => Some(if *n == 3 { 3 } else { n / 2 }),
            FamilySpec::Path(n) | FamilySpec::Complete(n) => Some(*n),
            FamilySpec::Wheel(n) => Some(if *n == 4 { 4 } else { 1 }),
            FamilySpec::CompleteMultipartite(parts) => multipartite_mvd(parts),
            FamilySpec::Grid(r, c) => Some(if *r == 1 || *c == 1 { r * c } else { 2 }),
            FamilySpec::Petersen => Some(2),
            FamilySpec::Theta(paths) => match paths.len() {
                1 => Some(paths[0] + 2),
                2 => Some((paths[0] + paths[1] + 2) / 2),
                _ => None,
            },
            FamilySpec::CompleteMinusEdges { n, pattern } => near_complete_mvd(*n, *pattern),
            FamilySpec::Join(a, b) => match (a.as_ref(), b.as_ref()) {
                (FamilySpec::Cycle(m), FamilySpec::Complete(1)) | (FamilySpec::Complete(1), FamilySpec::Cycle(m)) => {
                    FamilySpec::Wheel(m + 1).mvd_formula()
                }
                _ => None,
            },
            FamilySpec::CartesianProduct(a, b) => match (a.as_ref(), b.as_ref()) {
                (FamilySpec::Path(r), FamilySpec::Path(c)) => FamilySpec::Grid(*r, *c).mvd_formula(),
                _ => None,
            },
        }
    }

    /// An MVD-coloring of `self.generate()` with `mvd_formula()` colors.
    /// Families without a direct construction fall back to a targeted
    /// search, which is bounded by `cap`.
    pub fn witness(&self, cap: usize) -> Result<Option<Coloring>> {
        let Some(k) = self.mvd_formula() else {
            return Ok(None);
        };
        let g = self.generate()?;
        let n = g.n();
        let direct = match self {
            FamilySpec::Path(_) | FamilySpec::Complete(_) => Some(Coloring::distinct(n)),
            FamilySpec::Cycle(_) => cycle_scheme(&g),
            FamilySpec::Theta(paths) if paths.len() == 1 => Some(Coloring::distinct(n)),
            FamilySpec::Theta(_) => cycle_scheme(&g),
            FamilySpec::Wheel(_) if k == n => Some(Coloring::distinct(n)),
            FamilySpec::Wheel(_) => Some(Coloring::uniform(n)),
            FamilySpec::Grid(r, c) if *r == 1 || *c == 1 => Some(Coloring::distinct(n)),
            FamilySpec::Grid(_, c) => Some(Coloring::new((0..n).map(|v| 1 + ((v / c + v % c) % 2) as u32).collect())?),
            FamilySpec::CompleteMultipartite(parts) => Some(multipartite_witness(parts)),
            FamilySpec::CompleteMinusEdges { n, pattern } => near_complete_witness(*n, *pattern),
            _ => None,
        };
        match direct {
            Some(c) => Ok(Some(c)),
            None => find_coloring_with(&g, k, cap),
        }
    }
}

fn multipartite_mvd(parts: &[usize]) -> Option<usize> {
    let mut sorted = parts.to_vec();
    sorted.sort_unstable();
    let k = sorted.len();
    let n: usize = sorted.iter().sum();
    let big = sorted.iter().filter(|&&s| s >= 2).count();
    match (k, big) {
        (_, 0) => Some(n),
        (_, 1) => Some(n - k + 2),
        (2, _) => Some(2),
        _ => Some(1),
    }
}

fn multipartite_witness(parts: &[usize]) -> Coloring {
    let n: usize = parts.iter().sum();
    let big: Vec<usize> = (0..parts.len()).filter(|&p| parts[p] >= 2).collect();
    let part_of: Vec<usize> = parts.iter().enumerate().flat_map(|(p, &s)| std::iter::repeat_n(p, s)).collect();
    match big.len() {
        0 => Coloring::distinct(n),
        1 => {
            // the large part gets distinct colors, all other vertices share one
            let mut next = 0;
            let size = parts[big[0]] as u32;
            let colors = part_of
                .iter()
                .map(|&p| {
                    if p == big[0] {
                        next += 1;
                        next
                    } else {
                        size + 1
                    }
                })
                .collect();
            Coloring::new(colors).expect("positive colors")
        }
        _ if parts.len() == 2 => Coloring::new(part_of.iter().map(|&p| p as u32 + 1).collect()).expect("positive colors"),
        _ => Coloring::uniform(n),
    }
}

fn near_complete_mvd(n: usize, pattern: EdgePattern) -> Option<usize> {
    if n < pattern.min_order() {
        return None;
    }
    match pattern {
        EdgePattern::Star(0) => Some(n),
        EdgePattern::Star(j) => Some(j + 2),
        EdgePattern::TwoDisjoint => Some(if n == 4 { 2 } else { 1 }),
        EdgePattern::Triangle => Some(4),
        EdgePattern::PathP4 => None,
        EdgePattern::PathP3PlusEdge => Some(if n == 5 { 2 } else { 1 }),
        EdgePattern::ThreeDisjoint => Some(1),
        EdgePattern::PathP5 => (n >= 6).then_some(2),
    }
}

fn near_complete_witness(n: usize, pattern: EdgePattern) -> Option<Coloring> {
    let colors: Vec<u32> = match pattern {
        EdgePattern::Star(0) => return Some(Coloring::distinct(n)),
        // v1..v_{j+1} distinct, the neighborhood of v1 shares one color
        EdgePattern::Star(j) => (0..n).map(|v| if v <= j { v as u32 + 1 } else { j as u32 + 2 }).collect(),
        EdgePattern::TwoDisjoint if n == 4 => vec![1, 1, 2, 2],
        EdgePattern::Triangle => (0..n).map(|v| if v < 3 { v as u32 + 2 } else { 1 }).collect(),
        EdgePattern::PathP3PlusEdge if n == 5 => vec![1, 1, 1, 2, 2],
        EdgePattern::PathP5 => (0..n).map(|v| if v == 2 { 2 } else { 1 }).collect(),
        EdgePattern::PathP4 => return None,
        _ => vec![1; n],
    };
    Coloring::new(colors).ok()
}

/// The cycle coloring `v_j ↦ ((j - 1) mod ⌊n/2⌋) + 1`, walking the cycle
/// from vertex 0 towards its smaller neighbor. `None` unless `g` is a cycle
/// of order at least 4.
pub fn cycle_scheme(g: &Graph) -> Option<Coloring> {
    let n = g.n();
    if n < 4 || g.m() != n || (0..n).any(|v| g.degree(v) != 2) || !g.is_connected() {
        return None;
    }
    let q = (n / 2) as u32;
    let mut colors = vec![0u32; n];
    let (mut prev, mut cur) = (usize::MAX, 0);
    for j in 0..n {
        colors[cur] = (j as u32 % q) + 1;
        let next = *g.neighbors(cur).iter().find(|&&w| w != prev).expect("degree 2");
        prev = cur;
        cur = next;
    }
    Coloring::new(colors).ok()
}

fn candidate_specs(g: &Graph) -> Vec<FamilySpec> {
    let n = g.n();
    let m = g.m();
    let max_deg = (0..n).map(|v| g.degree(v)).max().unwrap_or(0);
    let mut out = Vec::new();
    if g.is_complete() {
        out.push(FamilySpec::Complete(n));
        return out;
    }
    if m + 1 == n && max_deg <= 2 {
        out.push(FamilySpec::Path(n));
    }
    if m == n && max_deg == 2 {
        out.push(FamilySpec::Cycle(n));
    }
    if n >= 5 && m == 2 * (n - 1) && max_deg == n - 1 {
        out.push(FamilySpec::Wheel(n));
    }
    if n == 10 && m == 15 {
        out.push(FamilySpec::Petersen);
    }
    for rows in 2..n {
        if rows * rows > n {
            break;
        }
        if n.is_multiple_of(rows) {
            let cols = n / rows;
            if m == rows * (cols - 1) + cols * (rows - 1) {
                out.push(FamilySpec::Grid(rows, cols));
            }
        }
    }
    let comp = g.complement();
    let parts: Vec<usize> = comp.components().iter().map(|c| c.len()).collect();
    let cliques = comp
        .components()
        .iter()
        .all(|c| comp.induced_subgraph(c).map(|s| s.is_complete()).unwrap_or(false));
    if parts.len() >= 2 && cliques {
        out.push(FamilySpec::CompleteMultipartite(parts));
    }
    if comp.m() <= 4 {
        for pattern in EdgePattern::small(n) {
            if pattern.removed().len() == comp.m() {
                out.push(FamilySpec::CompleteMinusEdges { n, pattern });
            }
        }
    }
    out
}

/// Identifies `g` as a member of a family with a closed-form mvd. Returns
/// the family and an isomorphism from the generated member onto `g`.
pub fn recognize(g: &Graph) -> Option<(FamilySpec, Vec<usize>)> {
    for spec in candidate_specs(g) {
        if spec.mvd_formula().is_none() {
            continue;
        }
        let Ok(h) = spec.generate() else { continue };
        if let Some(map) = find_isomorphism(&h, g) {
            return Some((spec, map));
        }
    }
    None
}

fn parse_usize(s: &str) -> Result<usize> {
    s.trim()
        .parse()
        .map_err(|_| MvdError::Input(format!("'{}' is not a nonnegative integer", s.trim())))
}

/// Splits `a, b(c, d), e` at top-level commas.
fn split_args(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    let last = s[start..].trim();
    if !last.is_empty() {
        out.push(last);
    }
    out
}

impl FromStr for FamilySpec {
    type Err = MvdError;

    /// Parses `name(args)`, e.g. `theta(3,1,1)`, `kminus(6,g6)` or
    /// `join(cycle(4),complete(1))`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (name, args) = match s.find('(') {
            Some(open) if s.ends_with(')') => (&s[..open], split_args(&s[open + 1..s.len() - 1])),
            Some(_) => return input(format!("unbalanced parentheses in '{s}'")),
            None => (s, Vec::new()),
        };
        let nums = || args.iter().map(|a| parse_usize(a)).collect::<Result<Vec<usize>>>();
        let one = || -> Result<usize> {
            match nums()?.as_slice() {
                [x] => Ok(*x),
                _ => input(format!("{name} takes exactly one integer")),
            }
        };
        let two_specs = || -> Result<(Box<FamilySpec>, Box<FamilySpec>)> {
            match args.as_slice() {
                [a, b] => Ok((Box::new(a.parse()?), Box::new(b.parse()?))),
                _ => input(format!("{name} takes two families")),
            }
        };
        Ok(match name.trim() {
            "cycle" => FamilySpec::Cycle(one()?),
            "path" => FamilySpec::Path(one()?),
            "complete" => FamilySpec::Complete(one()?),
            "wheel" => FamilySpec::Wheel(one()?),
            "petersen" => FamilySpec::Petersen,
            "multipartite" => FamilySpec::CompleteMultipartite(nums()?),
            "theta" => FamilySpec::Theta(nums()?),
            "grid" => match nums()?.as_slice() {
                [r, c] => FamilySpec::Grid(*r, *c),
                _ => return input("grid takes two integers"),
            },
            "kminus" => match args.as_slice() {
                [n, p] => FamilySpec::CompleteMinusEdges {
                    n: parse_usize(n)?,
                    pattern: p.parse()?,
                },
                _ => return input("kminus takes an order and a pattern"),
            },
            "join" => {
                let (a, b) = two_specs()?;
                FamilySpec::Join(a, b)
            }
            "product" => {
                let (a, b) = two_specs()?;
                FamilySpec::CartesianProduct(a, b)
            }
            other => return input(format!("unknown family '{other}'")),
        })
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        match self {
            FamilySpec::Cycle(n) => write!(f, "cycle({n})"),
            FamilySpec::Path(n) => write!(f, "path({n})"),
            FamilySpec::Complete(n) => write!(f, "complete({n})"),
            FamilySpec::CompleteMultipartite(p) => write!(f, "multipartite({})", list(p)),
            FamilySpec::Wheel(n) => write!(f, "wheel({n})"),
            FamilySpec::Grid(r, c) => write!(f, "grid({r},{c})"),
            FamilySpec::Petersen => f.write_str("petersen"),
            FamilySpec::Theta(p) => write!(f, "theta({})", list(p)),
            FamilySpec::CompleteMinusEdges { n, pattern } => write!(f, "kminus({n},{pattern})"),
            FamilySpec::Join(a, b) => write!(f, "join({a},{b})"),
            FamilySpec::CartesianProduct(a, b) => write!(f, "product({a},{b})"),
        }
    }
}

/// An extremal function value; `Undefined` marks parameter pairs for which
/// no graph exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Extremal {
    Value(usize),
    Undefined,
}

impl fmt::Display for Extremal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extremal::Value(v) => write!(f, "{v}"),
            Extremal::Undefined => f.write_str("undefined"),
        }
    }
}

fn check_nk(n: usize, k: usize) -> Result<()> {
    if k < 1 || k > n {
        return input(format!("need 1 <= k <= n, got n = {n}, k = {k}"));
    }
    Ok(())
}

// Small-order tables, indexed [n - 1][k - 1].
const FV_SMALL: [[Option<usize>; 4]; 4] = [
    [Some(0), None, None, None],
    [Some(1), Some(1), None, None],
    [Some(2), Some(2), Some(2), None],
    [Some(3), Some(3), Some(5), Some(6)],
];
const EMAX_SMALL: [[Option<usize>; 4]; 4] = [
    [Some(0), None, None, None],
    [None, Some(1), None, None],
    [None, None, Some(3), None],
    [None, Some(4), Some(5), Some(6)],
];

fn small_table(table: &[[Option<usize>; 4]; 4], n: usize, k: usize) -> Extremal {
    table[n - 1][k - 1].map_or(Extremal::Undefined, Extremal::Value)
}

/// Minimum size forcing mvd ≥ k among connected graphs of order n.
pub fn f_v(n: usize, k: usize) -> Result<Extremal> {
    check_nk(n, k)?;
    if n <= 4 {
        return Ok(small_table(&FV_SMALL, n, k));
    }
    let full = n * (n - 1) / 2;
    Ok(Extremal::Value(match k {
        1 => n - 1,
        2 | 3 => full - 1,
        _ => full,
    }))
}

/// Maximum size of a connected graph of order n with mvd exactly k.
pub fn emax(n: usize, k: usize) -> Result<Extremal> {
    check_nk(n, k)?;
    if n <= 4 {
        return Ok(small_table(&EMAX_SMALL, n, k));
    }
    let full = n * (n - 1) / 2;
    Ok(Extremal::Value(match k {
        1 => full - 2,
        2 if n == 5 => 7,
        2 => full - 4,
        _ if k == n => full,
        _ => full - k + 2,
    }))
}

/// `⌊(n + 2t - r + 1) / 2⌋`, the mvd bound for graphs whose blocks are all
/// minimally 2-connected and triangle-free (`r` blocks, `t` of them `K_2`).
pub fn block_bound(n: usize, r: usize, t: usize) -> Result<i64> {
    if r == 0 || t > r {
        return input(format!("need r >= 1 and t <= r, got r = {r}, t = {t}"));
    }
    Ok((n as i64 + 2 * t as i64 - r as i64 + 1).div_euclid(2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::is_isomorphism;
    use crate::solver::is_mvd_coloring;

    #[test]
    fn theta_shape() {
        let g = FamilySpec::Theta(vec![3, 1, 1]).generate().unwrap();
        assert_eq!(g.n(), 2 + 5);
        assert_eq!(g.m(), 4 + 2 + 2);
        assert_eq!(&g.labels()[..3], ["u", "v", "p1_1"]);
    }

    #[test]
    fn theta_111_is_k23() {
        let t = FamilySpec::Theta(vec![1, 1, 1]).generate().unwrap();
        let k = FamilySpec::CompleteMultipartite(vec![2, 3]).generate().unwrap();
        let map = find_isomorphism(&t, &k).unwrap();
        assert!(is_isomorphism(&t, &k, &map));
    }

    #[test]
    fn wheel_four_is_k4_and_thin_grid_is_path() {
        let w4 = FamilySpec::Wheel(4).generate().unwrap();
        assert!(w4.is_complete());
        assert_eq!(w4.n(), 4);
        let grid = FamilySpec::Grid(1, 6).generate().unwrap();
        let path = FamilySpec::Path(6).generate().unwrap();
        assert!(find_isomorphism(&grid, &path).is_some());
        assert_eq!(FamilySpec::Grid(3, 4).generate().unwrap().n(), 12);
    }

    #[test]
    fn generator_errors() {
        assert!(FamilySpec::Cycle(2).generate().is_err());
        assert!(FamilySpec::Theta(vec![2, 0]).generate().is_err());
        assert!(FamilySpec::Wheel(3).generate().is_err());
        assert!(FamilySpec::CompleteMinusEdges { n: 5, pattern: EdgePattern::ThreeDisjoint }.generate().is_err());
        assert!(FamilySpec::CompleteMinusEdges { n: 4, pattern: EdgePattern::Star(3) }.generate().is_err());
    }

    #[test]
    fn join_and_product_routes() {
        let w = FamilySpec::Join(Box::new(FamilySpec::Cycle(5)), Box::new(FamilySpec::Complete(1)));
        let g = w.generate().unwrap();
        assert!(find_isomorphism(&FamilySpec::Wheel(6).generate().unwrap(), &g).is_some());
        assert_eq!(w.mvd_formula(), Some(1));
        let p = FamilySpec::CartesianProduct(Box::new(FamilySpec::Path(2)), Box::new(FamilySpec::Path(3)));
        assert!(find_isomorphism(&FamilySpec::Grid(2, 3).generate().unwrap(), &p.generate().unwrap()).is_some());
    }

    #[test]
    fn formula_examples() {
        assert_eq!(FamilySpec::Wheel(6).mvd_formula(), Some(1));
        assert_eq!(FamilySpec::CompleteMultipartite(vec![1, 1, 3]).mvd_formula(), Some(4));
        assert_eq!(FamilySpec::CompleteMultipartite(vec![2, 2, 2]).mvd_formula(), Some(1));
        assert_eq!(FamilySpec::CompleteMultipartite(vec![3, 2]).mvd_formula(), Some(2));
        assert_eq!(FamilySpec::CompleteMultipartite(vec![1, 1, 1]).mvd_formula(), Some(3));
        assert_eq!(FamilySpec::Cycle(7).mvd_formula(), Some(3));
        assert_eq!(FamilySpec::Grid(3, 3).mvd_formula(), Some(2));
        assert_eq!(FamilySpec::CompleteMinusEdges { n: 7, pattern: EdgePattern::Star(1) }.mvd_formula(), Some(3));
        assert_eq!(FamilySpec::Theta(vec![2, 2, 2]).mvd_formula(), None);
    }

    #[test]
    fn witnesses_verify() {
        let specs = [
            FamilySpec::Cycle(9),
            FamilySpec::Path(4),
            FamilySpec::Wheel(4),
            FamilySpec::Wheel(7),
            FamilySpec::Grid(3, 3),
            FamilySpec::Grid(1, 4),
            FamilySpec::Petersen,
            FamilySpec::CompleteMultipartite(vec![1, 1, 3]),
            FamilySpec::CompleteMultipartite(vec![3, 2]),
            FamilySpec::CompleteMultipartite(vec![2, 1, 2]),
            FamilySpec::CompleteMinusEdges { n: 6, pattern: EdgePattern::Star(3) },
            FamilySpec::CompleteMinusEdges { n: 6, pattern: EdgePattern::Triangle },
            FamilySpec::CompleteMinusEdges { n: 4, pattern: EdgePattern::TwoDisjoint },
            FamilySpec::CompleteMinusEdges { n: 5, pattern: EdgePattern::PathP3PlusEdge },
            FamilySpec::CompleteMinusEdges { n: 7, pattern: EdgePattern::PathP5 },
            FamilySpec::Theta(vec![3, 2]),
        ];
        for spec in &specs {
            let g = spec.generate().unwrap();
            let w = spec.witness(11).unwrap().unwrap();
            assert_eq!(w.num_colors(), spec.mvd_formula().unwrap(), "{spec}");
            assert!(is_mvd_coloring(&g, &w).unwrap(), "{spec}");
        }
    }

    #[test]
    fn spec_text_round_trip() {
        for s in ["theta(3,1,1)", "kminus(6,g6)", "join(cycle(4),complete(1))", "petersen", "grid(2,5)"] {
            let spec: FamilySpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert_eq!("kminus(5,e)".parse::<FamilySpec>().unwrap().to_string(), "kminus(5,star1)");
        assert!("blob(3)".parse::<FamilySpec>().is_err());
        assert!("grid(3)".parse::<FamilySpec>().is_err());
    }

    #[test]
    fn recognition_of_relabeled_members() {
        let g = FamilySpec::Wheel(7).generate().unwrap();
        let shuffled: Vec<String> = (0..g.n()).map(|i| format!("q{i}")).collect();
        let g = g.relabeled(&shuffled).unwrap();
        let (spec, map) = recognize(&g).unwrap();
        assert_eq!(spec, FamilySpec::Wheel(7));
        assert!(is_isomorphism(&spec.generate().unwrap(), &g, &map));
        let k = FamilySpec::CompleteMinusEdges { n: 6, pattern: EdgePattern::PathP5 }.generate().unwrap();
        assert_eq!(recognize(&k).unwrap().0.mvd_formula(), Some(2));
        let theta = FamilySpec::Theta(vec![2, 2, 2]).generate().unwrap();
        assert!(recognize(&theta).is_none());
    }

    #[test]
    fn extremal_examples() {
        assert_eq!(f_v(5, 1).unwrap(), Extremal::Value(4));
        assert_eq!(f_v(6, 3).unwrap(), Extremal::Value(14));
        assert_eq!(f_v(4, 3).unwrap(), Extremal::Value(5));
        assert_eq!(emax(5, 2).unwrap(), Extremal::Value(7));
        assert_eq!(emax(6, 2).unwrap(), Extremal::Value(11));
        assert_eq!(emax(4, 2).unwrap(), Extremal::Value(4));
        assert_eq!(emax(3, 2).unwrap(), Extremal::Undefined);
        assert!(f_v(4, 5).is_err());
        assert!(emax(4, 0).is_err());
    }

    #[test]
    fn threshold_identity_for_larger_orders() {
        // f_v(n, k) = s_v(n, k - 1) + 1 with s_v(n, j) = max_{i <= j} emax(n, i)
        for n in 5..=12 {
            for k in 2..=n {
                let s = (1..k)
                    .filter_map(|i| match emax(n, i).unwrap() {
                        Extremal::Value(v) => Some(v),
                        Extremal::Undefined => None,
                    })
                    .max()
                    .unwrap();
                assert_eq!(f_v(n, k).unwrap(), Extremal::Value(s + 1), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn block_bound_examples() {
        assert_eq!(block_bound(6, 5, 5).unwrap(), 6);
        assert_eq!(block_bound(4, 1, 0).unwrap(), 2);
        assert_eq!(block_bound(9, 2, 1).unwrap(), 5);
        assert!(block_bound(4, 0, 0).is_err());
        assert!(block_bound(4, 1, 2).is_err());
    }
}

//! Undirected simple graphs with stable vertex labels.
//!
//! A [`Graph`] is immutable once built. Vertices are addressed by index
//! internally, but every index maps to a fixed, unique label; the text
//! formats and the CLI talk in labels.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use crate::error::{input, MvdError, Result};

/// A set of vertex indices of one particular graph.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(BTreeSet<usize>);

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    pub fn insert(&mut self, v: usize) -> bool {
        self.0.insert(v)
    }

    pub fn remove(&mut self, v: usize) -> bool {
        self.0.remove(&v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn first(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.0.iter().copied().collect()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.is_subset(&other.0)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = std::iter::Copied<std::collections::btree_set::Iter<'a, usize>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

/// Undirected simple graph on labeled vertices.
#[derive(Clone)]
pub struct Graph {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    matrix: Vec<bool>,
    neighbors: Vec<Vec<usize>>,
    m: usize,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.matrix == other.matrix
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edges()
            .map(|(u, v)| format!("{}-{}", self.labels[u], self.labels[v]))
            .collect();
        f.debug_struct("Graph")
            .field("vertices", &self.labels)
            .field("edges", &edges)
            .finish()
    }
}

fn check_labels(labels: &[String]) -> Result<HashMap<String, usize>> {
    if labels.is_empty() {
        return input("a graph needs at least one vertex");
    }
    let mut index = HashMap::with_capacity(labels.len());
    for (i, l) in labels.iter().enumerate() {
        if l.is_empty() {
            return input("empty vertex label");
        }
        if index.insert(l.clone(), i).is_some() {
            return input(format!("duplicate vertex label '{l}'"));
        }
    }
    Ok(index)
}

impl Graph {
    fn build(labels: Vec<String>, index: HashMap<String, usize>, matrix: Vec<bool>) -> Graph {
        let n = labels.len();
        let neighbors: Vec<Vec<usize>> = (0..n)
            .map(|u| (0..n).filter(|&v| matrix[u * n + v]).collect())
            .collect();
        let m = neighbors.iter().map(Vec::len).sum::<usize>() / 2;
        Graph {
            labels,
            index,
            matrix,
            neighbors,
            m,
        }
    }

    /// Builds a graph from labels and index pairs. Duplicate pairs collapse.
    pub fn from_index_edges<S: AsRef<str>>(labels: &[S], edges: &[(usize, usize)]) -> Result<Graph> {
        let labels: Vec<String> = labels.iter().map(|s| s.as_ref().to_string()).collect();
        let index = check_labels(&labels)?;
        let n = labels.len();
        let mut matrix = vec![false; n * n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return input(format!("edge ({u}, {v}) out of range for {n} vertices"));
            }
            if u == v {
                return input(format!("self-loop at '{}'", labels[u]));
            }
            matrix[u * n + v] = true;
            matrix[v * n + u] = true;
        }
        Ok(Graph::build(labels, index, matrix))
    }

    /// Builds a graph from labels and label pairs. Duplicate pairs collapse.
    pub fn from_edge_list<S: AsRef<str>, T: AsRef<str>>(
        labels: &[S],
        edges: &[(T, T)],
    ) -> Result<Graph> {
        let names: Vec<String> = labels.iter().map(|s| s.as_ref().to_string()).collect();
        let index = check_labels(&names)?;
        let mut pairs = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            let (a, b) = (a.as_ref(), b.as_ref());
            let u = *index
                .get(a)
                .ok_or_else(|| MvdError::Input(format!("edge endpoint '{a}' is not a vertex")))?;
            let v = *index
                .get(b)
                .ok_or_else(|| MvdError::Input(format!("edge endpoint '{b}' is not a vertex")))?;
            if u == v {
                return input(format!("self-loop at '{a}'"));
            }
            pairs.push((u, v));
        }
        Graph::from_index_edges(&names, &pairs)
    }

    /// Builds a graph from a square 0/1 matrix, which must be symmetric with
    /// a zero diagonal.
    pub fn from_adjacency_matrix<S: AsRef<str>>(labels: &[S], matrix: &[Vec<u8>]) -> Result<Graph> {
        let names: Vec<String> = labels.iter().map(|s| s.as_ref().to_string()).collect();
        let index = check_labels(&names)?;
        let n = names.len();
        if matrix.len() != n {
            return input(format!("matrix has {} rows but there are {n} labels", matrix.len()));
        }
        let mut flat = vec![false; n * n];
        for (i, row) in matrix.iter().enumerate() {
            if row.len() != n {
                return input(format!("matrix row {} has {} entries, expected {n}", i + 1, row.len()));
            }
            for (j, &x) in row.iter().enumerate() {
                match x {
                    0 => {}
                    1 => flat[i * n + j] = true,
                    _ => return input(format!("matrix entry ({}, {}) is {x}, expected 0 or 1", i + 1, j + 1)),
                }
            }
        }
        for i in 0..n {
            if flat[i * n + i] {
                return input(format!("nonzero diagonal at '{}'", names[i]));
            }
            for j in (i + 1)..n {
                if flat[i * n + j] != flat[j * n + i] {
                    return input(format!("matrix is not symmetric at ('{}', '{}')", names[i], names[j]));
                }
            }
        }
        Ok(Graph::build(names, index, flat))
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// Like [`Graph::index_of`] but reports a missing label as an input error.
    pub fn vertex(&self, label: &str) -> Result<usize> {
        self.index_of(label)
            .ok_or_else(|| MvdError::Input(format!("no vertex named '{label}'")))
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.matrix[u * self.n() + v]
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    /// Edges as index pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.neighbors[u].iter().copied().filter(move |&v| v > u).map(move |v| (u, v))
        })
    }

    /// Nonadjacent pairs `(x, y)` with `x < y`.
    pub fn nonadjacent_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.n();
        (0..n).flat_map(move |x| ((x + 1)..n).filter(move |&y| !self.has_edge(x, y)).map(move |y| (x, y)))
    }

    /// Adjacency rows as 0/1 values.
    pub fn matrix_rows(&self) -> Vec<Vec<u8>> {
        let n = self.n();
        (0..n)
            .map(|i| (0..n).map(|j| u8::from(self.matrix[i * n + j])).collect())
            .collect()
    }

    /// Adjacency as one bitmask per vertex, available for graphs with at
    /// most 64 vertices.
    pub fn adjacency_masks(&self) -> Option<Vec<u64>> {
        if self.n() > 64 {
            return None;
        }
        Some(
            self.neighbors
                .iter()
                .map(|nb| nb.iter().fold(0u64, |acc, &v| acc | (1 << v)))
                .collect(),
        )
    }

    pub fn all_vertices(&self) -> VertexSet {
        (0..self.n()).collect()
    }

    /// The subgraph induced by `s`, keeping labels. Vertices keep their
    /// relative order from `self`.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Graph> {
        self.induced_ordered(&s.to_vec())
    }

    /// The subgraph induced by `order`, with vertices in exactly that order.
    pub fn induced_ordered(&self, order: &[usize]) -> Result<Graph> {
        if order.is_empty() {
            return input("induced subgraph of an empty vertex set");
        }
        let n = self.n();
        if let Some(&bad) = order.iter().find(|&&v| v >= n) {
            return input(format!("vertex index {bad} out of range"));
        }
        let labels: Vec<String> = order.iter().map(|&v| self.labels[v].clone()).collect();
        let index = check_labels(&labels)?;
        let k = order.len();
        let mut matrix = vec![false; k * k];
        for (i, &u) in order.iter().enumerate() {
            for (j, &v) in order.iter().enumerate() {
                matrix[i * k + j] = self.has_edge(u, v);
            }
        }
        Ok(Graph::build(labels, index, matrix))
    }

    /// A copy of this graph with the edge `uv` removed.
    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let n = self.n();
        let mut matrix = self.matrix.clone();
        matrix[u * n + v] = false;
        matrix[v * n + u] = false;
        Graph::build(self.labels.clone(), self.index.clone(), matrix)
    }

    /// The complement graph on the same labels.
    pub fn complement(&self) -> Graph {
        let n = self.n();
        let matrix = (0..n * n)
            .map(|i| i / n != i % n && !self.matrix[i])
            .collect();
        Graph::build(self.labels.clone(), self.index.clone(), matrix)
    }

    /// A copy with vertices renamed; `labels` must be distinct.
    pub fn relabeled<S: AsRef<str>>(&self, labels: &[S]) -> Result<Graph> {
        if labels.len() != self.n() {
            return input("relabeling needs one label per vertex");
        }
        let labels: Vec<String> = labels.iter().map(|s| s.as_ref().to_string()).collect();
        let index = check_labels(&labels)?;
        Ok(Graph::build(labels, index, self.matrix.clone()))
    }

    /// Vertices reachable from `start` without entering `removed`.
    fn reach(&self, start: usize, removed: &[bool]) -> Vec<bool> {
        let mut seen = vec![false; self.n()];
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(u) = queue.pop_front() {
            for &w in &self.neighbors[u] {
                if !seen[w] && !removed[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    pub fn components(&self) -> Vec<VertexSet> {
        let removed = vec![false; self.n()];
        let mut assigned = vec![false; self.n()];
        let mut out = Vec::new();
        for v in 0..self.n() {
            if assigned[v] {
                continue;
            }
            let seen = self.reach(v, &removed);
            let comp: VertexSet = (0..self.n()).filter(|&u| seen[u]).collect();
            for u in comp.iter() {
                assigned[u] = true;
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        let removed = vec![false; self.n()];
        self.reach(0, &removed).into_iter().all(|b| b)
    }

    /// Errors with the component list unless the graph is connected.
    pub fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            return Ok(());
        }
        let components = self
            .components()
            .iter()
            .map(|c| c.iter().map(|v| self.labels[v].clone()).collect())
            .collect();
        Err(MvdError::Disconnected { components })
    }

    /// True iff `g - s` has no path between `x` and `y`.
    pub fn is_separated(&self, s: &VertexSet, x: usize, y: usize) -> Result<bool> {
        if x == y {
            return input("separation needs two distinct vertices");
        }
        if s.contains(x) || s.contains(y) {
            return input("separated vertices must lie outside the cut set");
        }
        let mut removed = vec![false; self.n()];
        for v in s {
            removed[v] = true;
        }
        Ok(!self.reach(x, &removed)[y])
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.m == n * (n - 1) / 2
    }

    fn is_connected_without(&self, v: usize) -> bool {
        let n = self.n();
        if n <= 2 {
            return true;
        }
        let mut removed = vec![false; n];
        removed[v] = true;
        let start = if v == 0 { 1 } else { 0 };
        let seen = self.reach(start, &removed);
        (0..n).all(|u| u == v || seen[u])
    }

    /// Connected, at least three vertices, and no cut vertex.
    pub fn is_2_connected(&self) -> bool {
        self.n() >= 3 && self.is_connected() && (0..self.n()).all(|v| self.is_connected_without(v))
    }

    pub fn is_minimally_2_connected(&self) -> bool {
        self.is_2_connected() && self.edges().all(|(u, v)| !self.without_edge(u, v).is_2_connected())
    }

    /// Number of triangles through each vertex.
    pub fn triangle_counts(&self) -> Vec<usize> {
        (0..self.n())
            .map(|v| {
                let nb = &self.neighbors[v];
                let mut count = 0;
                for (i, &a) in nb.iter().enumerate() {
                    for &b in &nb[i + 1..] {
                        if self.has_edge(a, b) {
                            count += 1;
                        }
                    }
                }
                count
            })
            .collect()
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges()
            .all(|(u, v)| !self.neighbors[u].iter().any(|&w| w != v && self.has_edge(v, w)))
    }

    /// The `.mvdg` edge-list text for this graph.
    pub fn to_mvdg(&self) -> String {
        let edges: Vec<String> = self
            .edges()
            .map(|(u, v)| format!("{}-{}", self.labels[u], self.labels[v]))
            .collect();
        format!("vertices: {}\nedges: {}\n", self.labels.join(","), edges.join(","))
    }

    /// Adjacency rows in the comma-separated layout of the catalog format.
    pub fn matrix_text(&self) -> String {
        let mut out = String::new();
        for row in self.matrix_rows() {
            let cells: Vec<String> = row.iter().map(u8::to_string).collect();
            out.push_str(&cells.join(", "));
            out.push('\n');
        }
        out
    }
}

fn valid_mvdg_label(l: &str) -> bool {
    !l.is_empty() && !l.chars().any(|c| c.is_whitespace() || matches!(c, ',' | '-' | ':' | '#'))
}

/// Parses the `.mvdg` edge-list format:
///
/// ```text
/// # comment
/// vertices: a,b,c
/// edges: a-b,b-c
/// ```
///
/// `edges:` may be repeated or empty. Whitespace around tokens is ignored.
pub fn parse_mvdg(text: &str) -> Result<Graph> {
    let mut labels: Option<Vec<String>> = None;
    let mut edges: Vec<(String, String)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fmt_err = |message: String| MvdError::Format { line: line_no, message };
        let (key, rest) = line
            .split_once(':')
            .ok_or_else(|| fmt_err(format!("expected 'vertices:' or 'edges:', got '{line}'")))?;
        let items = rest.split(',').map(str::trim).filter(|s| !s.is_empty());
        match key.trim() {
            "vertices" => {
                if labels.is_some() {
                    return Err(fmt_err("duplicate 'vertices:' line".into()));
                }
                let ls: Vec<String> = items.map(String::from).collect();
                if let Some(bad) = ls.iter().find(|l| !valid_mvdg_label(l)) {
                    return Err(fmt_err(format!("invalid vertex label '{bad}'")));
                }
                labels = Some(ls);
            }
            "edges" => {
                for item in items {
                    let (a, b) = item
                        .split_once('-')
                        .ok_or_else(|| fmt_err(format!("edge '{item}' is not of the form a-b")))?;
                    edges.push((a.trim().to_string(), b.trim().to_string()));
                }
            }
            other => return Err(fmt_err(format!("unknown key '{other}'"))),
        }
    }
    let labels = labels.ok_or(MvdError::Format {
        line: 0,
        message: "missing 'vertices:' line".into(),
    })?;
    Graph::from_edge_list(&labels, &edges)
}

pub(crate) type MatrixSections = (usize, String, Vec<(usize, Vec<u8>)>);

/// Splits catalog-style text into its header line and matrix rows, skipping
/// blank lines and `#` comment lines. Line numbers are 1-based.
pub(crate) fn matrix_sections(text: &str) -> Result<MatrixSections> {
    let mut header: Option<(usize, String)> = None;
    let mut rows = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if header.is_none() {
            header = Some((i + 1, line.to_string()));
            continue;
        }
        let row: std::result::Result<Vec<u8>, _> = line.split(',').map(|c| c.trim().parse::<u8>()).collect();
        let row = row.map_err(|_| MvdError::Format {
            line: i + 1,
            message: format!("matrix row '{line}' is not a comma-separated 0/1 list"),
        })?;
        rows.push((i + 1, row));
    }
    let (line, header) = header.ok_or(MvdError::Format {
        line: 0,
        message: "empty file".into(),
    })?;
    Ok((line, header, rows))
}

/// Checks row count, row widths, entries and symmetry of a parsed matrix.
pub(crate) fn matrix_from_rows(labels: &[String], header_line: usize, rows: &[(usize, Vec<u8>)]) -> Result<Graph> {
    let n = labels.len();
    if rows.len() != n {
        return Err(MvdError::Format {
            line: header_line,
            message: format!("header names {n} vertices but there are {} matrix rows", rows.len()),
        });
    }
    if let Some((line, row)) = rows.iter().find(|(_, row)| row.len() != n) {
        return Err(MvdError::Format {
            line: *line,
            message: format!("row has {} entries, expected {n}", row.len()),
        });
    }
    for (idx, (line, row)) in rows.iter().enumerate() {
        if let Some(j) = row.iter().position(|&x| x > 1) {
            return Err(MvdError::Format {
                line: *line,
                message: format!("entry {} is not 0 or 1", j + 1),
            });
        }
        if row[idx] != 0 {
            return Err(MvdError::Format {
                line: *line,
                message: "nonzero diagonal entry".into(),
            });
        }
        for (j, &x) in row.iter().enumerate() {
            if x != rows[j].1[idx] {
                return Err(MvdError::Format {
                    line: *line,
                    message: format!("matrix is not symmetric at ({}, {})", labels[idx], labels[j]),
                });
            }
        }
    }
    let matrix: Vec<Vec<u8>> = rows.iter().map(|(_, r)| r.clone()).collect();
    Graph::from_adjacency_matrix(labels, &matrix).map_err(|e| MvdError::Format {
        line: header_line,
        message: e.to_string(),
    })
}

/// Parses a matrix file: a header line of comma-separated names (an optional
/// `:color` suffix on each is ignored) followed by the adjacency rows.
pub fn parse_matrix_text(text: &str) -> Result<Graph> {
    let (line, header, rows) = matrix_sections(text)?;
    let labels: Vec<String> = header
        .split(',')
        .map(|item| item.split(':').next().unwrap_or("").trim().to_string())
        .collect();
    matrix_from_rows(&labels, line, &rows)
}

/// Parses either graph format, deciding by the first meaningful line.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .unwrap_or("");
    if first.starts_with("vertices") || first.starts_with("edges") {
        parse_mvdg(text)
    } else {
        parse_matrix_text(text)
    }
}

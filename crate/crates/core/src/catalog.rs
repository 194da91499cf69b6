//! Store of small graphs with known MVD-colorings.
//!
//! One entry per file. The first meaningful line lists `label:color` pairs,
//! the following lines are the 0/1 adjacency rows in header order. Leading
//! `# tags: a, b` comment lines carry free-form tags; other `#` lines and
//! blank lines are ignored.

use std::fs;
use std::path::Path;

use rayon::prelude::*;

use crate::coloring::Coloring;
use crate::error::{input, MvdError, Result};
use crate::families::FamilySpec;
use crate::graph::{matrix_from_rows, matrix_sections, Graph};
use crate::iso::{find_isomorphism, GraphKey};
use crate::solver::{find_failing_pair, mvd_exact};

pub const MIN2_TAG: &str = "minimally-2-connected";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    name: String,
    graph: Graph,
    coloring: Coloring,
    mvd_value: usize,
    tags: Vec<String>,
    key: GraphKey,
}

impl CatalogEntry {
    /// Validates that `coloring` is an MVD-coloring of `graph`; the entry's
    /// value is its number of colors.
    pub fn new(name: impl Into<String>, graph: Graph, coloring: Coloring, tags: Vec<String>) -> Result<CatalogEntry> {
        if let Some((x, y)) = find_failing_pair(&graph, &coloring)? {
            return Err(MvdError::Integrity {
                x: graph.label(x).to_string(),
                y: graph.label(y).to_string(),
            });
        }
        Ok(CatalogEntry {
            name: name.into(),
            key: GraphKey::of(&graph),
            mvd_value: coloring.num_colors(),
            graph,
            coloring,
            tags,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn coloring(&self) -> &Coloring {
        &self.coloring
    }

    pub fn mvd_value(&self) -> usize {
        self.mvd_value
    }

    pub fn tags(&self) -> &[String] {
        &self.tags
    }

    pub fn key(&self) -> &GraphKey {
        &self.key
    }

    pub fn has_tag(&self, tag: &str) -> bool {
        self.tags.iter().any(|t| t == tag)
    }
}

/// Parses one entry file.
pub fn load_entry(name: &str, text: &str) -> Result<CatalogEntry> {
    let tags: Vec<String> = text
        .lines()
        .filter_map(|l| l.trim().strip_prefix('#'))
        .filter_map(|l| l.trim().strip_prefix("tags:"))
        .flat_map(|l| l.split(','))
        .map(|t| t.trim().to_string())
        .filter(|t| !t.is_empty())
        .collect();
    let (line, header, rows) = matrix_sections(text)?;
    let mut labels = Vec::new();
    let mut colors = Vec::new();
    for item in header.split(',').map(str::trim) {
        let (label, color) = item.split_once(':').ok_or_else(|| MvdError::Format {
            line,
            message: format!("header item '{item}' is not of the form name:color"),
        })?;
        let color: u32 = color.trim().parse().ok().filter(|&c| c > 0).ok_or_else(|| MvdError::Format {
            line,
            message: format!("color of '{}' is not a positive integer", label.trim()),
        })?;
        labels.push(label.trim().to_string());
        colors.push(color);
    }
    let graph = matrix_from_rows(&labels, line, &rows)?;
    CatalogEntry::new(name, graph, Coloring::new(colors)?, tags)
}

/// Renders an entry in the file format read by [`load_entry`].
pub fn save_entry(e: &CatalogEntry) -> String {
    let mut out = String::new();
    if !e.tags.is_empty() {
        out.push_str(&format!("# tags: {}\n", e.tags.join(", ")));
    }
    out.push_str(&e.coloring.to_text(&e.graph));
    out.push('\n');
    out.push_str(&e.graph.matrix_text());
    out
}

/// Colors the target of `mapping` (entry vertex ↦ target vertex) with the
/// entry's colors shifted by `offset`.
pub fn transfer_coloring(e: &CatalogEntry, mapping: &[usize], offset: u32) -> Result<Coloring> {
    let n = e.graph.n();
    if mapping.len() != n {
        return input(format!("mapping has {} entries, entry has {n} vertices", mapping.len()));
    }
    let mut colors = vec![0u32; n];
    for (v, &w) in mapping.iter().enumerate() {
        if w >= n || colors[w] != 0 {
            return input("mapping is not a bijection");
        }
        colors[w] = e.coloring.color(v) + offset;
    }
    Coloring::new(colors)
}

/// A file that could not be loaded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoadFailure {
    pub name: String,
    pub error: MvdError,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Catalog {
    entries: Vec<CatalogEntry>,
}

fn io_error(path: &Path, e: std::io::Error) -> MvdError {
    MvdError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    }
}

impl Catalog {
    pub fn new(mut entries: Vec<CatalogEntry>) -> Catalog {
        entries.sort_by(|a, b| a.name.cmp(&b.name));
        Catalog { entries }
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, name: &str) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    /// Loads every `*.txt` file in `dir`, collecting per-file failures
    /// instead of stopping at the first one.
    pub fn scan_dir(dir: impl AsRef<Path>) -> Result<(Catalog, Vec<LoadFailure>)> {
        let dir = dir.as_ref();
        let mut files: Vec<_> = fs::read_dir(dir)
            .map_err(|e| io_error(dir, e))?
            .filter_map(|d| d.ok().map(|d| d.path()))
            .filter(|p| p.is_file() && p.extension().is_some_and(|x| x == "txt"))
            .collect();
        files.sort();
        let mut entries = Vec::new();
        let mut failures = Vec::new();
        for path in files {
            let name = path.file_stem().unwrap_or_default().to_string_lossy().into_owned();
            let loaded = fs::read_to_string(&path)
                .map_err(|e| io_error(&path, e))
                .and_then(|text| load_entry(&name, &text));
            match loaded {
                Ok(e) => entries.push(e),
                Err(error) => failures.push(LoadFailure { name, error }),
            }
        }
        Ok((Catalog::new(entries), failures))
    }

    /// Loads every `*.txt` file in `dir`; any bad file is an error.
    pub fn load_dir(dir: impl AsRef<Path>) -> Result<Catalog> {
        let (catalog, failures) = Catalog::scan_dir(dir)?;
        match failures.into_iter().next() {
            Some(f) => Err(f.error),
            None => Ok(catalog),
        }
    }

    /// Writes every entry to `dir/<name>.txt`.
    pub fn save_dir(&self, dir: impl AsRef<Path>) -> Result<()> {
        let dir = dir.as_ref();
        fs::create_dir_all(dir).map_err(|e| io_error(dir, e))?;
        for e in &self.entries {
            let path = dir.join(format!("{}.txt", e.name));
            fs::write(&path, save_entry(e)).map_err(|err| io_error(&path, err))?;
        }
        Ok(())
    }

    /// The first entry (in store order) isomorphic to `g`, with a mapping
    /// from entry vertices to vertices of `g`.
    pub fn find_isomorphic(&self, g: &Graph) -> Option<(&CatalogEntry, Vec<usize>)> {
        let key = GraphKey::of(g);
        self.entries
            .iter()
            .filter(|e| e.key == key)
            .find_map(|e| find_isomorphism(&e.graph, g).map(|m| (e, m)))
    }

    /// Audits every entry: exact recomputation up to `cap`, the
    /// minimally-2-connected tag, triangle-freeness of tagged entries of
    /// order at least 4, and duplicate isomorphs.
    pub fn check(&self, cap: usize) -> CatalogReport {
        let entries = self
            .entries
            .par_iter()
            .map(|e| {
                let mut problems = Vec::new();
                let exact = if e.graph.n() <= cap {
                    match mvd_exact(&e.graph, cap) {
                        Ok(r) => {
                            if r.value != e.mvd_value {
                                problems.push(format!("stored value {} but exact value {}", e.mvd_value, r.value));
                            }
                            Some(r.value)
                        }
                        Err(err) => {
                            problems.push(err.to_string());
                            None
                        }
                    }
                } else {
                    None
                };
                if e.has_tag(MIN2_TAG) {
                    if !e.graph.is_minimally_2_connected() {
                        problems.push(format!("tagged {MIN2_TAG} but is not"));
                    } else if e.graph.n() >= 4 && !e.graph.is_triangle_free() {
                        problems.push(format!("tagged {MIN2_TAG} but contains a triangle"));
                    }
                }
                EntryCheck {
                    name: e.name.clone(),
                    order: e.graph.n(),
                    value: e.mvd_value,
                    exact,
                    problems,
                }
            })
            .collect();
        let mut duplicates = Vec::new();
        for (i, a) in self.entries.iter().enumerate() {
            for b in &self.entries[i + 1..] {
                if a.key == b.key && find_isomorphism(&a.graph, &b.graph).is_some() {
                    duplicates.push((a.name.clone(), b.name.clone()));
                }
            }
        }
        CatalogReport { entries, duplicates }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EntryCheck {
    pub name: String,
    pub order: usize,
    pub value: usize,
    /// Exact value, when the entry is within the cap.
    pub exact: Option<usize>,
    pub problems: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogReport {
    pub entries: Vec<EntryCheck>,
    /// Pairs of isomorphic entries; warnings, not failures.
    pub duplicates: Vec<(String, String)>,
}

impl CatalogReport {
    pub fn is_ok(&self) -> bool {
        self.entries.iter().all(|e| e.problems.is_empty())
    }
}

/// The first of the two nine-vertex entries used by the worked example.
pub const NINE_VERTEX_9: &str = "\
a:1, b:2, c:1, d:2, e:1, f:2, g:1, h:1, i:2
0, 1, 0, 0, 0, 1, 0, 0, 0
1, 0, 1, 0, 0, 0, 1, 0, 0
0, 1, 0, 1, 0, 0, 0, 1, 1
0, 0, 1, 0, 1, 0, 0, 0, 0
0, 0, 0, 1, 0, 1, 0, 0, 1
1, 0, 0, 0, 1, 0, 1, 1, 0
0, 1, 0, 0, 0, 1, 0, 0, 0
0, 0, 1, 0, 0, 1, 0, 0, 0
0, 0, 1, 0, 1, 0, 0, 0, 0
";

pub const NINE_VERTEX_11: &str = "\
a:1, b:2, c:1, d:2, e:1, f:2, g:2, h:1, i:2
0, 1, 0, 0, 0, 1, 1, 0, 1
1, 0, 1, 0, 0, 0, 0, 0, 0
0, 1, 0, 1, 0, 0, 0, 0, 0
0, 0, 1, 0, 1, 0, 0, 1, 0
0, 0, 0, 1, 0, 1, 0, 0, 0
1, 0, 0, 0, 1, 0, 0, 0, 0
1, 0, 0, 0, 0, 0, 0, 1, 0
0, 0, 0, 1, 0, 0, 1, 0, 1
1, 0, 0, 0, 0, 0, 0, 1, 0
";

/// Part-size lists of theta graphs with at least three paths and at most
/// `max_internal` internal vertices, each list in descending order.
pub fn theta_partitions(max_internal: usize) -> Vec<Vec<usize>> {
    fn rec(remaining: usize, largest: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() >= 3 {
            out.push(cur.clone());
        }
        for p in (1..=largest.min(remaining)).rev() {
            cur.push(p);
            rec(remaining - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(max_internal, max_internal, &mut Vec::new(), &mut out);
    out.sort();
    out
}

fn exact_entry(name: String, spec: &FamilySpec, tags: Vec<String>, cap: usize) -> Result<CatalogEntry> {
    let g = spec.generate()?;
    let report = mvd_exact(&g, cap)?;
    CatalogEntry::new(name, g, report.witness, tags)
}

/// The shipped store: cycles of order 4 to 11, theta graphs with at least
/// three paths up to order 10, and the two nine-vertex entries of the
/// worked example. Every generated coloring comes from the exact solver.
pub fn shipped_entries(cap: usize) -> Result<Vec<CatalogEntry>> {
    let mut jobs: Vec<(String, FamilySpec, Vec<String>)> = Vec::new();
    for n in 4..=11 {
        let mut tags = vec!["cycle".to_string(), MIN2_TAG.to_string()];
        // a cycle is also the two-path theta graph with n - 2 internal vertices
        for a in ((n - 1) / 2)..=(n - 3) {
            let b = n - 2 - a;
            if b >= 1 && a >= b {
                tags.push(format!("theta_{a}_{b}"));
            }
        }
        jobs.push((format!("cycle_{n:02}"), FamilySpec::Cycle(n), tags));
    }
    for parts in theta_partitions(8) {
        let spec = FamilySpec::Theta(parts.clone());
        let name = format!("theta_{}", parts.iter().map(usize::to_string).collect::<Vec<_>>().join("_"));
        jobs.push((name.clone(), spec, vec![name, MIN2_TAG.to_string()]));
    }
    let mut entries = jobs
        .par_iter()
        .map(|(name, spec, tags)| exact_entry(name.clone(), spec, tags.clone(), cap))
        .collect::<Result<Vec<_>>>()?;
    entries.push(load_entry("graph_9Vertex-9", NINE_VERTEX_9)?);
    entries.push(load_entry("graph_9Vertex-11", NINE_VERTEX_11)?);
    Ok(entries)
}

//! Vertex colorings and their `label:color` text form.

use std::collections::BTreeMap;

use crate::error::{input, Result};
use crate::graph::{Graph, VertexSet};

/// A total assignment of positive color ids to the vertices `0..n` of one
/// graph. Color ids are names only; two colorings with the same partition
/// are equivalent.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    colors: Vec<u32>,
}

impl Coloring {
    pub fn new(colors: Vec<u32>) -> Result<Coloring> {
        if colors.contains(&0) {
            return input("color ids must be positive");
        }
        Ok(Coloring { colors })
    }

    /// Every vertex in one class.
    pub fn uniform(n: usize) -> Coloring {
        Coloring { colors: vec![1; n] }
    }

    /// Every vertex in its own class.
    pub fn distinct(n: usize) -> Coloring {
        Coloring {
            colors: (1..=n as u32).collect(),
        }
    }

    /// Builds a coloring from 0-based class ids such as a restricted-growth
    /// string; class `c` becomes color `c + 1`.
    pub fn from_classes(assignment: &[u8]) -> Coloring {
        Coloring {
            colors: assignment.iter().map(|&c| u32::from(c) + 1).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn color(&self, v: usize) -> u32 {
        self.colors[v]
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    /// Distinct color ids, ascending.
    pub fn palette(&self) -> Vec<u32> {
        let mut p = self.colors.clone();
        p.sort_unstable();
        p.dedup();
        p
    }

    pub fn num_colors(&self) -> usize {
        self.palette().len()
    }

    /// Color classes, ordered by their smallest vertex.
    pub fn classes(&self) -> Vec<VertexSet> {
        let mut by_color: BTreeMap<u32, VertexSet> = BTreeMap::new();
        for (v, &c) in self.colors.iter().enumerate() {
            by_color.entry(c).or_default().insert(v);
        }
        let mut classes: Vec<VertexSet> = by_color.into_values().collect();
        classes.sort_by_key(|c| c.first());
        classes
    }

    /// The same partition with colors renumbered 1, 2, ... by first
    /// appearance.
    pub fn normalized(&self) -> Coloring {
        let mut map = BTreeMap::new();
        let colors = self
            .colors
            .iter()
            .map(|c| {
                let next = map.len() as u32 + 1;
                *map.entry(*c).or_insert(next)
            })
            .collect();
        Coloring { colors }
    }

    pub fn same_partition(&self, other: &Coloring) -> bool {
        self.normalized() == other.normalized()
    }

    /// The coloring restricted to `vertices`, in that order.
    pub fn restricted(&self, vertices: &[usize]) -> Coloring {
        Coloring {
            colors: vertices.iter().map(|&v| self.colors[v]).collect(),
        }
    }

    /// Parses `a:1, b:2, ...`; every vertex of `g` must appear exactly once.
    pub fn parse(g: &Graph, text: &str) -> Result<Coloring> {
        let mut colors = vec![0u32; g.n()];
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (label, color) = item
                .split_once(':')
                .ok_or_else(|| crate::MvdError::Input(format!("'{item}' is not of the form label:color")))?;
            let v = g.vertex(label.trim())?;
            let c: u32 = color
                .trim()
                .parse()
                .map_err(|_| crate::MvdError::Input(format!("color '{}' is not a positive integer", color.trim())))?;
            if c == 0 {
                return input(format!("color of '{}' must be positive", label.trim()));
            }
            if colors[v] != 0 {
                return input(format!("vertex '{}' colored twice", label.trim()));
            }
            colors[v] = c;
        }
        if let Some(v) = colors.iter().position(|&c| c == 0) {
            return input(format!("vertex '{}' has no color", g.label(v)));
        }
        Ok(Coloring { colors })
    }

    /// `a:1, b:2, ...` in vertex order.
    pub fn to_text(&self, g: &Graph) -> String {
        self.colors
            .iter()
            .enumerate()
            .map(|(v, c)| format!("{}:{c}", g.label(v)))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

//! mvd from the block decomposition: solve every block, then glue the block
//! colorings along the block-cut tree.
//!
//! Blocks are glued in breadth-first order from the block containing
//! vertex 0. When a block is reached, exactly one of its vertices (the cut
//! vertex shared with its tree parent) is already colored, so its class is
//! renamed to that color and every other class gets a fresh id.

use rayon::prelude::*;

use crate::blocks::decompose;
use crate::catalog::{transfer_coloring, Catalog};
use crate::coloring::Coloring;
use crate::error::{MvdError, Result};
use crate::families::{cycle_scheme, recognize};
use crate::graph::Graph;
use crate::solver::{mvd_exact, mvd_upper_bound, BlockReport, Method, SolveReport, Source};

fn block_name(b: &Graph) -> String {
    format!("block {{{}}}", b.labels().join(","))
}

/// Value and witness of a single block (`K_2` or 2-connected), taking the
/// first rung that applies: complete, cycle, catalog isomorph, exact search.
pub fn solve_block(b: &Graph, store: &Catalog, cap: usize) -> Result<(usize, Coloring, Source)> {
    let n = b.n();
    if b.is_complete() {
        return Ok((n, Coloring::distinct(n), Source::Complete));
    }
    if let Some(c) = cycle_scheme(b) {
        return Ok((n / 2, c, Source::Cycle));
    }
    if let Some((entry, map)) = store.find_isomorphic(b) {
        let c = transfer_coloring(entry, &map, 0)?;
        return Ok((entry.mvd_value(), c, Source::Catalog(entry.name().to_string())));
    }
    if n <= cap {
        let r = mvd_exact(b, cap)?;
        return Ok((r.value, r.witness, Source::Exact));
    }
    Err(MvdError::Capacity {
        what: block_name(b),
        n,
        cap,
    })
}

/// mvd as the sum of the block values minus `r - 1`, with a witness
/// assembled from the block colorings.
pub fn mvd_compose(g: &Graph, store: &Catalog, cap: usize) -> Result<SolveReport> {
    let d = decompose(g)?;
    let solved = d
        .blocks
        .par_iter()
        .map(|b| solve_block(&b.graph, store, cap))
        .collect::<Result<Vec<_>>>()?;

    let mut colors = vec![0u32; g.n()];
    let mut next = 1u32;
    let root = d.block_of(0).expect("vertex 0 lies in some block");
    for (bi, entry) in d.block_cut_order(root)? {
        let block = &d.blocks[bi];
        let coloring = &solved[bi].1;
        let inherited = entry.map(|v| {
            let local = block.local_index(v).expect("cut vertex lies in the block");
            (coloring.color(local), colors[v])
        });
        for class in coloring.classes() {
            let class_color = coloring.color(class.first().expect("classes are nonempty"));
            let id = match inherited {
                Some((own, established)) if own == class_color => established,
                _ => {
                    next += 1;
                    next - 1
                }
            };
            for local in class.iter() {
                colors[block.vertices[local]] = id;
            }
        }
    }

    let value = solved.iter().map(|s| s.0).sum::<usize>() + 1 - d.r();
    let per_block = solved
        .into_iter()
        .enumerate()
        .map(|(i, (v, _, source))| BlockReport {
            block: i,
            order: d.blocks[i].order(),
            value: v,
            source,
        })
        .collect();
    Ok(SolveReport {
        value,
        witness: Coloring::new(colors)?,
        method: Method::Compose,
        per_block: Some(per_block),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialBlock {
    pub block: usize,
    pub order: usize,
    /// `None` when the block exceeded the cap.
    pub value: Option<usize>,
    pub source: Option<Source>,
    /// Exact value if known, otherwise `order - κ⁺ + 1`.
    pub upper: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialReport {
    pub lower: usize,
    pub upper: usize,
    pub blocks: Vec<PartialBlock>,
}

impl PartialReport {
    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }
}

/// Bounds on mvd when some blocks are beyond the cap. An unresolved block
/// contributes at least 1 and at most its connectivity bound.
pub fn mvd_compose_partial(g: &Graph, store: &Catalog, cap: usize) -> Result<PartialReport> {
    let d = decompose(g)?;
    let blocks = d
        .blocks
        .par_iter()
        .enumerate()
        .map(|(i, b)| match solve_block(&b.graph, store, cap) {
            Ok((v, _, source)) => Ok(PartialBlock {
                block: i,
                order: b.order(),
                value: Some(v),
                source: Some(source),
                upper: v,
            }),
            Err(MvdError::Capacity { .. }) => Ok(PartialBlock {
                block: i,
                order: b.order(),
                value: None,
                source: None,
                upper: mvd_upper_bound(&b.graph)?,
            }),
            Err(e) => Err(e),
        })
        .collect::<Result<Vec<_>>>()?;
    let lower = blocks.iter().map(|b| b.value.unwrap_or(1)).sum::<usize>() + 1 - d.r();
    let upper = blocks.iter().map(|b| b.upper).sum::<usize>() + 1 - d.r();
    Ok(PartialReport { lower, upper, blocks })
}

/// Closed form for a recognized family, then composition, then exact
/// search on the whole graph.
pub fn solve_auto(g: &Graph, store: &Catalog, cap: usize) -> Result<SolveReport> {
    g.require_connected()?;
    if let Some((spec, map)) = recognize(g) {
        let value = spec.mvd_formula().expect("recognized families have a formula");
        match spec.witness(cap) {
            Ok(Some(w)) => {
                let mut colors = vec![0u32; g.n()];
                for (v, &t) in map.iter().enumerate() {
                    colors[t] = w.color(v);
                }
                return Ok(SolveReport {
                    value,
                    witness: Coloring::new(colors)?,
                    method: Method::Formula,
                    per_block: None,
                });
            }
            Ok(None) | Err(MvdError::Capacity { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    match mvd_compose(g, store, cap) {
        Err(MvdError::Capacity { .. }) => mvd_exact(g, cap),
        other => other,
    }
}

//! Monochromatic vertex-disconnection number (mvd) of graphs.
//!
//! A vertex coloring is an MVD-coloring when every two nonadjacent vertices
//! are separated by a vertex cut whose vertices all share one color; mvd is
//! the largest number of colors such a coloring can use. This crate has an
//! exact solver, block-by-block composition backed by a catalog of known
//! colorings, closed forms for named families, and exhaustive scans over
//! small labeled graphs.

pub mod blocks;
pub mod catalog;
pub mod coloring;
pub mod compose;
pub mod error;
pub mod example;
pub mod families;
pub mod flow;
pub mod graph;
pub mod iso;
pub mod scan;
pub mod solver;

pub use blocks::{decompose, Block, BlockDecomposition};
pub use catalog::{load_entry, save_entry, shipped_entries, transfer_coloring, Catalog, CatalogEntry, CatalogReport};
pub use coloring::Coloring;
pub use compose::{mvd_compose, mvd_compose_partial, solve_auto, solve_block, PartialReport};
pub use error::{MvdError, Result};
pub use families::{block_bound, emax, f_v, recognize, EdgePattern, Extremal, FamilySpec};
pub use flow::{kappa_plus, local_connectivity};
pub use graph::{parse_graph, parse_matrix_text, parse_mvdg, Graph, VertexSet};
pub use iso::{find_isomorphism, is_isomorphism, GraphKey};
pub use scan::{scan_extremal, scan_property, Property, PropertyResult, ScanResult};
pub use solver::{
    find_coloring_with, find_failing_pair, has_monochromatic_cut, is_mvd_coloring, mvd_exact, mvd_upper_bound,
    BlockReport, Method, SolveReport, Source, DEFAULT_CAP,
};

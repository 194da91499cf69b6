use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use mvd_core::catalog::{load_entry, shipped_entries};
use mvd_core::scan::graph_of_code;
use mvd_core::{
    block_bound, decompose, emax, f_v, find_failing_pair, mvd_compose, mvd_compose_partial, mvd_exact, parse_graph,
    scan_extremal, scan_property, solve_auto, Catalog, Coloring, FamilySpec, Graph, MvdError, Property, SolveReport,
    DEFAULT_CAP,
};
use serde_json::json;

#[derive(Parser)]
#[command(name = "mvd", version, about = "Monochromatic vertex-disconnection number of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a family member as an edge-list file.
    Gen {
        /// Family name: cycle, path, complete, multipartite, wheel, grid,
        /// petersen, theta, kminus, join, product.
        family: String,
        /// Family parameters, e.g. `theta 3 1 1` or `kminus 6 g6`.
        params: Vec<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print cut vertices and blocks.
    Blocks { graph: PathBuf },
    /// Check whether a coloring such as `a:1, b:2` is an MVD-coloring.
    Verify { graph: PathBuf, coloring: String },
    /// Compute mvd and a witness coloring.
    Solve {
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = SolveMethod::Auto)]
        method: SolveMethod,
        /// Largest order handed to the exhaustive search.
        #[arg(long, default_value_t = DEFAULT_CAP, value_parser = cap_parser())]
        cap: usize,
        #[arg(long, default_value = "catalog")]
        catalog: PathBuf,
        /// Report lower and upper bounds when some block exceeds the cap.
        #[arg(long)]
        partial: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Manage the catalog of known colorings.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
        #[arg(long, default_value = "catalog", global = true)]
        catalog: PathBuf,
        #[arg(long, default_value_t = DEFAULT_CAP, global = true, value_parser = cap_parser())]
        cap: usize,
    },
    /// Evaluate closed forms.
    Formula {
        #[command(subcommand)]
        which: FormulaKind,
    },
    /// Exhaustive checks over all labeled graphs of one order.
    Scan {
        #[command(subcommand)]
        which: ScanKind,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// List entries with order, size, value and tags.
    List,
    /// Audit every entry.
    Check,
    /// Validate an entry file and copy it into the catalog.
    Add { file: PathBuf },
    /// Regenerate the shipped entries into the catalog directory.
    Build,
}

#[derive(Subcommand)]
enum FormulaKind {
    /// Closed-form mvd of a family member, e.g. `wheel 6`.
    Mvd { family: String, params: Vec<String> },
    Fv { n: usize, k: usize },
    Emax { n: usize, k: usize },
    Blockbound { n: usize, r: usize, t: usize },
}

#[derive(Subcommand)]
enum ScanKind {
    Extremal {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_CAP, value_parser = cap_parser())]
        cap: usize,
        /// Also print one `k=.. emax=.. expect=.. ok|FAIL` line per row.
        #[arg(long)]
        machine: bool,
    },
    Property {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        prop: String,
    },
}

fn cap_parser() -> clap::builder::RangedU64ValueParser<usize> {
    clap::builder::RangedU64ValueParser::new().range(1..=64)
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SolveMethod {
    Auto,
    Exact,
    Compose,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    JsonLines,
}

/// Either a library error or a plain failed check (exit code 1).
enum Failure {
    Error(MvdError),
    Check(String),
}

impl From<MvdError> for Failure {
    fn from(e: MvdError) -> Self {
        Failure::Error(e)
    }
}

type Outcome = Result<String, Failure>;

fn exit_code(e: &MvdError) -> u8 {
    match e {
        MvdError::Capacity { .. } => 3,
        MvdError::Integrity { .. } => 1,
        _ => 2,
    }
}

fn read_text(path: &Path) -> Result<String, MvdError> {
    fs::read_to_string(path).map_err(|e| MvdError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

fn with_path(path: &Path, e: MvdError) -> MvdError {
    match e {
        MvdError::Format { line, message } => MvdError::Format {
            line,
            message: format!("{}: {message}", path.display()),
        },
        MvdError::Input(m) => MvdError::Input(format!("{}: {m}", path.display())),
        other => other,
    }
}

fn read_graph(path: &Path) -> Result<Graph, MvdError> {
    parse_graph(&read_text(path)?).map_err(|e| with_path(path, e))
}

fn write_out(output: Option<&Path>, text: &str) -> Outcome {
    match output {
        Some(p) => {
            fs::write(p, text).map_err(|e| MvdError::Io {
                path: p.display().to_string(),
                message: e.to_string(),
            })?;
            Ok(String::new())
        }
        None => Ok(text.to_string()),
    }
}

fn family_spec(family: &str, params: &[String]) -> Result<FamilySpec, MvdError> {
    if params.is_empty() {
        family.parse()
    } else {
        format!("{family}({})", params.join(",")).parse()
    }
}

/// The default catalog directory may be absent; an explicit one may not.
fn open_catalog(dir: &Path) -> Result<Catalog, MvdError> {
    if dir == Path::new("catalog") && !dir.exists() {
        eprintln!("note: no ./catalog directory, continuing with an empty catalog");
        return Ok(Catalog::default());
    }
    Catalog::load_dir(dir)
}

fn braces(g: &Graph, vs: impl IntoIterator<Item = usize>) -> String {
    let items: Vec<String> = vs.into_iter().map(|v| format!("{{'{}'}}", g.label(v))).collect();
    format!("[{}]", items.join(", "))
}

fn blocks_section(g: &Graph) -> Result<String, MvdError> {
    let d = decompose(g)?;
    let mut out = String::from("### CutVertices and Blocks  ###\n");
    out.push_str(&format!("cutVerticesSet:{}\n", braces(g, d.cut_vertices.iter())));
    out.push_str("Block generated from Graph:\n");
    for (i, b) in d.blocks.iter().enumerate() {
        out.push_str(&format!("Block num {}\n{}\n", i + 1, braces(g, b.vertices.iter().copied())));
        for row in b.graph.matrix_rows() {
            for x in row {
                out.push_str(&format!("{x}\t"));
            }
            out.push('\n');
        }
    }
    Ok(out)
}

fn coloring_section(g: &Graph, c: &Coloring) -> String {
    let items: Vec<String> = (0..g.n()).map(|v| format!("{{'{}':{}}}", g.label(v), c.color(v))).collect();
    format!("### Coloring Vertices Results ###\n{}\n", items.join(" "))
}

fn report_text(g: &Graph, r: &SolveReport) -> Result<String, MvdError> {
    let mut out = blocks_section(g)?;
    if let Some(per_block) = &r.per_block {
        out.push_str("block\torder\tvalue\tsource\n");
        for b in per_block {
            out.push_str(&format!("{}\t{}\t{}\t{}\n", b.block + 1, b.order, b.value, b.source));
        }
    }
    out.push_str(&format!("mvd = {} (method: {})\n", r.value, r.method));
    out.push_str(&coloring_section(g, &r.witness));
    out.push_str(&format!("coloring: {}\n", r.witness.to_text(g)));
    Ok(out)
}

fn report_json(g: &Graph, r: &SolveReport) -> String {
    let mut out = String::new();
    for b in r.per_block.iter().flatten() {
        let line = json!({
            "type": "block",
            "block": b.block + 1,
            "order": b.order,
            "value": b.value,
            "source": b.source.to_string(),
        });
        out.push_str(&format!("{line}\n"));
    }
    let line = json!({
        "type": "result",
        "value": r.value,
        "method": r.method.to_string(),
        "coloring": r.witness.to_text(g),
    });
    out.push_str(&format!("{line}\n"));
    out
}

fn partial_text(g: &Graph, store: &Catalog, cap: usize) -> Outcome {
    let p = mvd_compose_partial(g, store, cap)?;
    let mut out = blocks_section(g)?;
    out.push_str("block\torder\tvalue\tupper\tsource\n");
    for b in &p.blocks {
        let value = b.value.map_or("?".to_string(), |v| v.to_string());
        let source = b.source.as_ref().map_or("over cap".to_string(), |s| s.to_string());
        out.push_str(&format!("{}\t{}\t{value}\t{}\t{source}\n", b.block + 1, b.order, b.upper));
    }
    out.push_str(&format!("{} <= mvd <= {}\n", p.lower, p.upper));
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn solve(
    path: &Path,
    method: SolveMethod,
    cap: usize,
    catalog: &Path,
    partial: bool,
    format: Format,
    output: Option<&Path>,
) -> Outcome {
    let g = read_graph(path)?;
    g.require_connected()?;
    let store = if method == SolveMethod::Exact {
        Catalog::default()
    } else {
        open_catalog(catalog)?
    };
    let result = match method {
        SolveMethod::Auto => solve_auto(&g, &store, cap),
        SolveMethod::Exact => mvd_exact(&g, cap),
        SolveMethod::Compose => mvd_compose(&g, &store, cap),
    };
    let report = match result {
        Err(MvdError::Capacity { .. }) if partial && method != SolveMethod::Exact => {
            return write_out(output, &partial_text(&g, &store, cap)?);
        }
        other => other?,
    };
    let text = match format {
        Format::Text => report_text(&g, &report)?,
        Format::JsonLines => report_json(&g, &report),
    };
    write_out(output, &text)
}

fn verify(path: &Path, coloring: &str) -> Outcome {
    let g = read_graph(path)?;
    g.require_connected()?;
    let c = Coloring::parse(&g, coloring)?;
    match find_failing_pair(&g, &c)? {
        None => Ok(format!("MVD-coloring with {} colors\n", c.num_colors())),
        Some((x, y)) => Err(Failure::Check(format!(
            "not an MVD-coloring: no monochromatic cut separates {} and {}",
            g.label(x),
            g.label(y)
        ))),
    }
}

fn catalog_cmd(action: CatalogAction, dir: &Path, cap: usize) -> Outcome {
    match action {
        CatalogAction::List => {
            let store = Catalog::load_dir(dir)?;
            let mut out = String::from("name\tn\tm\tmvd\ttags\n");
            for e in store.entries() {
                out.push_str(&format!(
                    "{}\t{}\t{}\t{}\t{}\n",
                    e.name(),
                    e.graph().n(),
                    e.graph().m(),
                    e.mvd_value(),
                    e.tags().join(", ")
                ));
            }
            Ok(out)
        }
        CatalogAction::Check => {
            let (store, failures) = Catalog::scan_dir(dir)?;
            let report = store.check(cap);
            let mut out = String::new();
            for f in &failures {
                out.push_str(&format!("FAIL {}: {}\n", f.name, f.error));
            }
            for e in &report.entries {
                let exact = e.exact.map_or("skipped".to_string(), |v| v.to_string());
                if e.problems.is_empty() {
                    out.push_str(&format!("ok   {} (n={}, mvd={}, exact={exact})\n", e.name, e.order, e.value));
                } else {
                    out.push_str(&format!("FAIL {}: {}\n", e.name, e.problems.join("; ")));
                }
            }
            for (a, b) in &report.duplicates {
                out.push_str(&format!("warning: {a} and {b} are isomorphic\n"));
            }
            if failures.is_empty() && report.is_ok() {
                out.push_str(&format!("{} entries checked, all pass\n", report.entries.len()));
                Ok(out)
            } else {
                print!("{out}");
                Err(Failure::Check("catalog check found problems".into()))
            }
        }
        CatalogAction::Add { file } => {
            let name = file
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .ok_or_else(|| MvdError::Input(format!("{} has no file name", file.display())))?;
            let entry = load_entry(&name, &read_text(&file)?).map_err(|e| with_path(&file, e))?;
            if entry.graph().n() <= cap {
                let exact = mvd_exact(entry.graph(), cap)?.value;
                if exact != entry.mvd_value() {
                    return Err(Failure::Check(format!(
                        "{name}: stored coloring has {} colors but mvd is {exact}",
                        entry.mvd_value()
                    )));
                }
            }
            let store = if dir.exists() { Catalog::load_dir(dir)? } else { Catalog::default() };
            let mut out = String::new();
            if let Some((other, _)) = store.find_isomorphic(entry.graph()) {
                out.push_str(&format!("warning: isomorphic to existing entry {}\n", other.name()));
            }
            Catalog::new(vec![entry]).save_dir(dir)?;
            out.push_str(&format!("added {name}\n"));
            Ok(out)
        }
        CatalogAction::Build => {
            let entries = shipped_entries(cap)?;
            let count = entries.len();
            Catalog::new(entries).save_dir(dir)?;
            Ok(format!("wrote {count} entries to {}\n", dir.display()))
        }
    }
}

fn formula(which: FormulaKind) -> Outcome {
    Ok(match which {
        FormulaKind::Mvd { family, params } => {
            let spec = family_spec(&family, &params)?;
            spec.generate()?;
            match spec.mvd_formula() {
                Some(v) => format!("{v}\n"),
                None => "none\n".into(),
            }
        }
        FormulaKind::Fv { n, k } => format!("{}\n", f_v(n, k)?),
        FormulaKind::Emax { n, k } => format!("{}\n", emax(n, k)?),
        FormulaKind::Blockbound { n, r, t } => format!("{}\n", block_bound(n, r, t)?),
    })
}

fn edges_text(n: usize, code: u64) -> String {
    let g = graph_of_code(n, code);
    g.edges()
        .map(|(u, v)| format!("{}-{}", g.label(u), g.label(v)))
        .collect::<Vec<_>>()
        .join(",")
}

fn scan(which: ScanKind) -> Outcome {
    match which {
        ScanKind::Extremal { n, cap, machine } => {
            let r = scan_extremal(n, cap)?;
            let mut out = format!("n = {}: {} labeled graphs, {} connected\n", n, r.visited, r.connected);
            out.push_str("k\temax\texpected\tf_v\texpected\n");
            for row in &r.rows {
                out.push_str(&format!(
                    "{}\t{}\t{}\t{}\t{}\n",
                    row.k, row.emax_observed, row.emax_expected, row.fv_observed, row.fv_expected
                ));
            }
            if machine {
                for row in &r.rows {
                    let ok = |b: bool| if b { "ok" } else { "FAIL" };
                    out.push_str(&format!(
                        "k={} emax={} expect={} {}\n",
                        row.k,
                        row.emax_observed,
                        row.emax_expected,
                        ok(row.emax_ok())
                    ));
                    out.push_str(&format!(
                        "k={} fv={} expect={} {}\n",
                        row.k,
                        row.fv_observed,
                        row.fv_expected,
                        ok(row.fv_ok())
                    ));
                }
            }
            for c in &r.counterexamples {
                out.push_str(&format!("counterexample {} [{}]: {}\n", c.code, edges_text(n, c.code), c.detail));
            }
            if r.is_ok() {
                Ok(out)
            } else {
                print!("{out}");
                Err(Failure::Check(format!("{} mismatches", r.counterexamples.len())))
            }
        }
        ScanKind::Property { n, prop } => {
            let prop: Property = prop.parse()?;
            let r = scan_property(n, prop)?;
            let mut out = format!(
                "property {prop}, n = {n}: {} connected graphs, {} checked, {} violations\n",
                r.connected,
                r.checked,
                r.violations.len()
            );
            for c in &r.violations {
                out.push_str(&format!("violation {} [{}]: {}\n", c.code, edges_text(n, c.code), c.detail));
            }
            if r.is_ok() {
                Ok(out)
            } else {
                print!("{out}");
                Err(Failure::Check("property violated".into()))
            }
        }
    }
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Gen {
            family,
            params,
            output,
        } => {
            let g = family_spec(&family, &params)?.generate()?;
            write_out(output.as_deref(), &g.to_mvdg())
        }
        Command::Blocks { graph } => Ok(blocks_section(&read_graph(&graph)?)?),
        Command::Verify { graph, coloring } => verify(&graph, &coloring),
        Command::Solve {
            graph,
            method,
            cap,
            catalog,
            partial,
            format,
            output,
        } => solve(&graph, method, cap, &catalog, partial, format, output.as_deref()),
        Command::Catalog { action, catalog, cap } => catalog_cmd(action, &catalog, cap),
        Command::Formula { which } => formula(which),
        Command::Scan { which } => scan(which),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(text) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(text.as_bytes());
            ExitCode::SUCCESS
        }
        Err(Failure::Check(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Error(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

mod common;

use std::path::PathBuf;

use common::{random_connected, seeded, shuffled};
use mvd_core::catalog::{save_entry, MIN2_TAG};
use mvd_core::{
    block_bound, load_entry, mvd_exact, recognize, shipped_entries, solve_auto, Catalog, EdgePattern, FamilySpec,
    Graph, Method, DEFAULT_CAP,
};

fn exact(g: &Graph) -> usize {
    mvd_exact(g, DEFAULT_CAP).unwrap().value
}

fn check_formula(spec: &FamilySpec) {
    let g = spec.generate().unwrap();
    let formula = spec.mvd_formula().unwrap_or_else(|| panic!("{spec} has no closed form"));
    assert_eq!(formula, exact(&g), "{spec}");
    let w = spec.witness(DEFAULT_CAP).unwrap().unwrap();
    assert!(mvd_core::is_mvd_coloring(&g, &w).unwrap(), "{spec}");
    assert_eq!(w.num_colors(), formula, "{spec}");
}

fn shipped_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../catalog")
}

#[test]
fn cycle_and_wheel_formulas() {
    for n in 3..=10 {
        check_formula(&FamilySpec::Cycle(n));
    }
    for n in 4..=10 {
        check_formula(&FamilySpec::Wheel(n));
    }
}

#[test]
fn path_complete_and_grid_formulas() {
    for n in 1..=7 {
        check_formula(&FamilySpec::Path(n));
        check_formula(&FamilySpec::Complete(n));
    }
    for (r, c) in [(1, 1), (1, 5), (4, 1), (2, 2), (2, 3), (2, 4), (2, 5), (3, 3)] {
        check_formula(&FamilySpec::Grid(r, c));
    }
    check_formula(&FamilySpec::Petersen);
}

#[test]
fn multipartite_formulas_up_to_eight_vertices() {
    fn parts(total: usize, largest: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() >= 2 {
            out.push(cur.clone());
        }
        for p in 1..=largest.min(total) {
            cur.push(p);
            parts(total - p, p, cur, out);
            cur.pop();
        }
    }
    let mut all = Vec::new();
    parts(8, 8, &mut Vec::new(), &mut all);
    assert!(all.len() > 50);
    for p in all {
        check_formula(&FamilySpec::CompleteMultipartite(p));
    }
    // part order does not matter
    check_formula(&FamilySpec::CompleteMultipartite(vec![1, 3, 1]));
    check_formula(&FamilySpec::CompleteMultipartite(vec![2, 1, 3]));
}

#[test]
fn near_complete_formulas() {
    for n in 3..=8 {
        for j in 0..=n - 2 {
            check_formula(&FamilySpec::CompleteMinusEdges { n, pattern: EdgePattern::Star(j) });
        }
    }
    for n in 4..=8 {
        check_formula(&FamilySpec::CompleteMinusEdges { n, pattern: EdgePattern::TwoDisjoint });
        check_formula(&FamilySpec::CompleteMinusEdges { n, pattern: EdgePattern::Triangle });
        let p4 = FamilySpec::CompleteMinusEdges { n, pattern: EdgePattern::PathP4 };
        assert_eq!(p4.mvd_formula(), None);
        assert!(exact(&p4.generate().unwrap()) >= 3);
    }
    for n in 5..=8 {
        check_formula(&FamilySpec::CompleteMinusEdges { n, pattern: EdgePattern::PathP3PlusEdge });
    }
    for n in 6..=8 {
        check_formula(&FamilySpec::CompleteMinusEdges { n, pattern: EdgePattern::ThreeDisjoint });
        check_formula(&FamilySpec::CompleteMinusEdges { n, pattern: EdgePattern::PathP5 });
    }
}

#[test]
fn two_path_thetas_and_routes() {
    for (a, b) in [(1, 1), (2, 1), (3, 2), (4, 4), (5, 1)] {
        check_formula(&FamilySpec::Theta(vec![a, b]));
    }
    check_formula(&FamilySpec::Theta(vec![4]));
    check_formula(&"join(cycle(6),complete(1))".parse().unwrap());
    check_formula(&"product(path(2),path(4))".parse().unwrap());
    assert_eq!("join(cycle(4),cycle(4))".parse::<FamilySpec>().unwrap().mvd_formula(), None);
}

#[test]
fn block_bound_on_square_with_tail() {
    // C4 plus a pendant path of five vertices: n = 9, r = 6, t = 5
    let labels: Vec<String> = (0..9).map(|i| format!("q{i}")).collect();
    let mut edges = vec![(0, 1), (1, 2), (2, 3), (3, 0)];
    edges.extend((3..8).map(|i| (i, i + 1)));
    let g = Graph::from_index_edges(&labels, &edges).unwrap();
    let d = mvd_core::decompose(&g).unwrap();
    assert_eq!((d.r(), d.t()), (6, 5));
    let v = exact(&g);
    assert_eq!(v, 2 + 5 * 2 - 5);
    assert!(v as i64 <= block_bound(9, d.r(), d.t()).unwrap());
    // the stated instance of the bound: one C4 block and one trivial block
    let short = Graph::from_index_edges(&labels[..5], &[(0, 1), (1, 2), (2, 3), (3, 0), (3, 4)]).unwrap();
    let d = mvd_core::decompose(&short).unwrap();
    assert!(exact(&short) as i64 <= block_bound(5, d.r(), d.t()).unwrap());
    assert_eq!(block_bound(9, 2, 1).unwrap(), 5);
}

#[test]
fn recognition_and_auto_agree_with_exact() {
    let mut rng = seeded(7);
    let specs = [
        "wheel(6)",
        "petersen",
        "grid(2,4)",
        "multipartite(1,1,3)",
        "multipartite(2,2,2)",
        "kminus(6,g6)",
        "kminus(7,star2)",
        "cycle(8)",
        "path(5)",
    ];
    let store = Catalog::default();
    for s in specs {
        let spec: FamilySpec = s.parse().unwrap();
        let g = shuffled(&mut rng, &spec.generate().unwrap());
        let (found, _) = recognize(&g).unwrap_or_else(|| panic!("{s} not recognized"));
        assert_eq!(found.mvd_formula(), spec.mvd_formula(), "{s}");
        let r = solve_auto(&g, &store, DEFAULT_CAP).unwrap();
        assert_eq!(r.method, Method::Formula, "{s}");
        assert_eq!(r.value, exact(&g), "{s}");
        assert!(mvd_core::is_mvd_coloring(&g, &r.witness).unwrap(), "{s}");
    }
    for seed in 0..60 {
        let mut rng = seeded(seed);
        let n = 3 + (seed as usize % 7);
        let g = random_connected(&mut rng, n, 0.35);
        let r = solve_auto(&g, &store, DEFAULT_CAP).unwrap();
        assert_eq!(r.value, exact(&g));
        assert!(mvd_core::is_mvd_coloring(&g, &r.witness).unwrap());
    }
}

#[test]
fn shipped_directory_is_current() {
    let on_disk = Catalog::load_dir(shipped_dir()).unwrap();
    let generated = Catalog::new(shipped_entries(DEFAULT_CAP).unwrap());
    assert_eq!(on_disk.len(), 52);
    assert_eq!(on_disk, generated);
    for e in on_disk.entries() {
        assert_eq!(load_entry(e.name(), &save_entry(e)).unwrap(), *e);
    }
}

#[test]
fn shipped_catalog_passes_audit() {
    let store = Catalog::load_dir(shipped_dir()).unwrap();
    let report = store.check(DEFAULT_CAP);
    assert!(report.is_ok(), "{:?}", report.entries.iter().filter(|e| !e.problems.is_empty()).collect::<Vec<_>>());
    assert!(report.duplicates.is_empty(), "{:?}", report.duplicates);
    for e in store.entries() {
        if e.has_tag(MIN2_TAG) && e.graph().n() >= 4 {
            assert!(e.graph().is_triangle_free(), "{}", e.name());
        }
    }
}

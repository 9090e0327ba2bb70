//! End-to-end runs of the `treex` binary.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;
use treex_core::harness::format::{parse_witness, read_graph_file};

fn treex(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_treex")).args(args).output().expect("spawn treex")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn gen(dir: &Path, name: &str, args: &[&str]) -> PathBuf {
    let path = dir.join(name);
    let mut full = vec!["gen"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--out", path.to_str().unwrap()]);
    let o = treex(&full);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    path
}

fn check(tree: &Path, host: &Path, extra: &[&str]) -> Output {
    let mut args = vec!["check", "--tree", tree.to_str().unwrap(), "--host", host.to_str().unwrap()];
    args.extend_from_slice(extra);
    treex(&args)
}

#[test]
fn gen_reports_degrees_and_writes_files() {
    let dir = TempDir::new().unwrap();
    let h = dir.path().join("h.json");
    let o = treex(&["gen", "--family", "h", "--ell", "3", "--c", "1", "--k", "12", "--format", "json", "--out", h.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("δ=6 Δ=12"), "{}", stdout(&o));
    assert_eq!(read_graph_file(&h).unwrap().graph.n(), 23);

    let t = gen(dir.path(), "t.json", &["--family", "broom", "--stars", "4,4,4"]);
    let tree = read_graph_file(&t).unwrap().into_tree().unwrap();
    assert_eq!(tree.n(), 13);

    let b = gen(dir.path(), "b.json", &["--family", "kbip", "--n1", "3", "--n2", "3"]);
    let g = read_graph_file(&b).unwrap().graph;
    assert_eq!((g.n(), g.edge_count()), (6, 9));

    let d = gen(dir.path(), "h.dimacs", &["--family", "h", "--ell", "3", "--c", "1", "--format", "dimacs"]);
    let again = read_graph_file(&d).unwrap();
    assert_eq!(again.graph, read_graph_file(&h).unwrap().graph);
    assert_eq!(again.meta, read_graph_file(&h).unwrap().meta);
}

#[test]
fn gen_rejects_bad_parameters() {
    let o = treex(&["gen", "--family", "h", "--ell", "4", "--c", "1"]);
    assert_eq!(code(&o), 2);
    assert!(!o.stderr.is_empty());
    assert_eq!(code(&treex(&["gen", "--family", "nope"])), 2);
}

#[test]
fn check_exit_codes_and_witness() {
    let dir = TempDir::new().unwrap();
    let t = gen(dir.path(), "t.json", &["--family", "broom", "--stars", "4,4,4"]);
    let h = gen(dir.path(), "h.json", &["--family", "h", "--ell", "3", "--c", "1"]);
    let o = check(&t, &h, &["--solver", "exact"]);
    assert_eq!(code(&o), 1);
    assert_eq!(stdout(&o).lines().next(), Some("NotEmbedded"));

    let k13 = gen(dir.path(), "k13.json", &["--family", "complete", "--n", "13"]);
    let w = dir.path().join("w.txt");
    let o = check(&t, &k13, &["--solver", "exact", "--witness-out", w.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().next(), Some("Embedded"));
    let tree = read_graph_file(&t).unwrap().into_tree().unwrap();
    let host = read_graph_file(&k13).unwrap().graph;
    let map = parse_witness(&std::fs::read_to_string(&w).unwrap()).unwrap();
    treex_core::embedding::validate_embedding(&tree, &host, &map).unwrap();

    for solver in ["greedy", "strategy", "auto"] {
        assert_eq!(code(&check(&t, &k13, &["--solver", solver])), 0, "{solver}");
    }
    // heuristics alone cannot refute
    assert_eq!(code(&check(&t, &h, &["--solver", "greedy"])), 3);
    assert_eq!(code(&check(&t, &h, &["--solver", "auto"])), 1);
}

#[test]
fn check_rejects_non_tree_input() {
    let dir = TempDir::new().unwrap();
    let k4 = gen(dir.path(), "k4.json", &["--family", "complete", "--n", "4"]);
    let o = check(&k4, &k4, &[]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("tree"));
    let missing = dir.path().join("missing.json");
    assert_eq!(code(&check(&missing, &k4, &[])), 2);
}

#[test]
fn check_budget_exhaustion_is_inconclusive() {
    let dir = TempDir::new().unwrap();
    let p = gen(dir.path(), "p.json", &["--family", "path", "--path-edges", "12"]);
    let apex = gen(dir.path(), "apex.json", &["--family", "apex", "--clique-order", "5", "--cliques", "3"]);
    let o = check(&p, &apex, &["--solver", "exact", "--max-nodes", "1000"]);
    assert_eq!(code(&o), 3);
    assert_eq!(stdout(&o).lines().next(), Some("Timeout"));
    let o = treex(&[
        "check",
        "--timeout-ms",
        "1",
        "--tree",
        p.to_str().unwrap(),
        "--host",
        apex.to_str().unwrap(),
        "--solver",
        "exact",
    ]);
    assert_eq!(code(&o), 3);
    assert_eq!(code(&check(&p, &apex, &["--solver", "exact"])), 1);
}

#[test]
fn verify_example_confirms_all_three_families() {
    let o = treex(&["verify-example", "--family", "h", "--ell", "3", "--c", "1"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("certificate holds; oracle: NotEmbedded; CONFIRMED"), "{}", stdout(&o));
    for family in ["g", "hprime"] {
        let o = treex(&["verify-example", "--family", family, "--ell", "3", "--c", "1"]);
        assert_eq!(code(&o), 0, "{family}");
        assert!(stdout(&o).contains("oracle: NotEmbedded; CONFIRMED"));
    }
    let o = treex(&["verify-example", "--family", "h", "--ell", "3", "--c", "1", "--max-nodes", "5"]);
    assert_eq!(code(&o), 3);
    assert!(stdout(&o).contains("certificate-only"));
}

#[test]
fn sweep_writes_csv() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("sweep.csv");
    let o = treex(&["sweep", "--ell-list", "3,5,7", "--c-list", "1,2,3", "--out", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let text = std::fs::read_to_string(&out).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 10);
    assert!(lines[0].starts_with("family,ell,c,k,n,delta,Delta,"));
    assert!(lines[1..].iter().all(|l| l.contains(",true,true,holds,")));
    let bad = dir.path().join("no/such/dir/sweep.csv");
    assert_eq!(code(&treex(&["sweep", "--ell-list", "3", "--c-list", "1", "--out", bad.to_str().unwrap()])), 2);
}

#[test]
fn stress_is_deterministic() {
    let args = ["stress", "--k", "10", "--n", "24", "--alpha", "0", "--trials", "50", "--seed", "7"];
    let a = treex(&args);
    let b = treex(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert_eq!(text.lines().count(), 50);
    for line in text.lines() {
        let row: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(row["counterexample"], false);
        assert!(row.get("elapsed_ms").is_none());
    }
    let timed = treex(&["stress", "--k", "10", "--n", "24", "--trials", "3", "--with-timings"]);
    assert!(stdout(&timed).lines().all(|l| l.contains("\"elapsed_ms\"")));
}

#[test]
fn stress_rejects_infeasible_bounds() {
    let o = treex(&["stress", "--k", "10", "--n", "10"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("k + 1"));
    assert_eq!(code(&treex(&["stress", "--k", "10", "--n", "15", "--alpha", "0"])), 2);
}

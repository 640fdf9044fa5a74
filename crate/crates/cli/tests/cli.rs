use std::fs;
use std::path::{Path, PathBuf};

use dirburn_cli::{run, CommandResult, EXIT_ERROR, EXIT_NO, EXIT_YES};
use serde_json::Value;
use tempfile::TempDir;

fn dirburn(args: &[&str]) -> CommandResult {
    run(std::iter::once("dirburn").chain(args.iter().copied()))
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const SIX_ELEMENTS_K2: &str = "universe: 1 2 3 4 5 6\nset: 1 3 4\nset: 1 4 5 6\nset: 2\nk: 2\n";

#[test]
fn minimum_on_path10() {
    let dir = TempDir::new().unwrap();
    let p = dir.path().join("path10.graph");
    assert_eq!(
        dirburn(&["generate", "path", "10", "-o", s(&p)]).exit_code,
        EXIT_YES
    );
    let r = dirburn(&["solve", s(&p)]);
    assert_eq!(r.exit_code, EXIT_YES, "{}", r.stderr);
    assert!(r.stdout.starts_with("burning number: 4\n"), "{}", r.stdout);
    for algorithm in ["brute", "tree", "branching", "branching-plain"] {
        let r = dirburn(&["solve", s(&p), "--algorithm", algorithm]);
        assert!(
            r.stdout.starts_with("burning number: 4\n"),
            "{algorithm}: {}",
            r.stdout
        );
    }
}

#[test]
fn six_element_gadget_is_a_no_instance() {
    let dir = TempDir::new().unwrap();
    let sc = write(&dir, "six.sc", SIX_ELEMENTS_K2);
    let g = dir.path().join("six-k2.graph");
    assert_eq!(
        dirburn(&["reduce", "set-cover-to-dag", s(&sc), "-o", s(&g)]).exit_code,
        EXIT_YES
    );
    let text = fs::read_to_string(&g).unwrap();
    assert!(text.starts_with("# budget: 4\n"));
    let r = dirburn(&["solve", s(&g), "--budget", "4"]);
    assert_eq!(r.exit_code, EXIT_NO);
    assert!(r.stdout.starts_with("NO\n"));
    assert_eq!(dirburn(&["oracle", "set-cover", s(&sc)]).stdout, "NO\n");
    let yes = write(&dir, "six-k3.sc", &SIX_ELEMENTS_K2.replace("k: 2", "k: 3"));
    assert_eq!(
        dirburn(&["oracle", "set-cover", s(&yes)]).stdout,
        "YES: sets 1,2,3\n"
    );
}

#[test]
fn verify_reports_already_burning() {
    let dir = TempDir::new().unwrap();
    let p3 = write(&dir, "p3.graph", "v1 -> v2\nv2 -> v3\n");
    let r = dirburn(&["verify", s(&p3), "--sequence", "v1,v2"]);
    assert_eq!(r.exit_code, EXIT_NO);
    assert_eq!(r.stdout, "INVALID: v2 already burning at step 2\n");
    let lenient = dirburn(&["verify", s(&p3), "--sequence", "v1,v2", "--lenient"]);
    assert_eq!(lenient.stdout, "INVALID: unburned v3\n");
    assert_eq!(
        dirburn(&["verify", s(&p3), "--sequence", "v1,v3"]).stdout,
        "VALID\n"
    );
    let partial = dirburn(&[
        "verify",
        s(&p3),
        "--sequence",
        "v1,v2",
        "--lenient",
        "--target",
        "v2",
    ]);
    assert_eq!(partial.exit_code, EXIT_YES);
    let phi = dirburn(&["verify", s(&p3), "--assignment", "2:v1,1:v3"]);
    assert_eq!(phi.stdout, "VALID\n");
    assert_eq!(
        dirburn(&["verify", s(&p3), "--assignment", "1:v1"]).exit_code,
        EXIT_NO
    );
}

#[test]
fn json_witnesses_feed_back_into_verify() {
    let dir = TempDir::new().unwrap();
    let g = dir.path().join("g.graph");
    dirburn(&["generate", "digraph", "7", "12", "--seed", "3", "-o", s(&g)]);
    for extra in [
        &[][..],
        &["--budget", "4"],
        &["--ranges", "3,2,2"],
        &["--target", "v1,v4"],
    ] {
        let mut args = vec!["solve", s(&g), "--json"];
        args.extend_from_slice(extra);
        let r = dirburn(&args);
        let report: Value = serde_json::from_str(&r.stdout).unwrap();
        if report["answer"] != "yes" {
            assert_eq!(r.exit_code, EXIT_NO);
            continue;
        }
        let kind = report["witness"]["kind"].as_str().unwrap();
        let text = report["witness"]["text"].as_str().unwrap();
        let flag = format!("--{kind}");
        let mut check = vec!["verify", s(&g), flag.as_str(), text];
        if let Some(t) = extra.iter().position(|&a| a == "--target") {
            check.extend_from_slice(&["--target", extra[t + 1]]);
        }
        let v = dirburn(&check);
        assert_eq!(v.stdout, "VALID\n", "{extra:?}: {}", r.stdout);
    }
}

#[test]
fn solve_json_schema() {
    let dir = TempDir::new().unwrap();
    let c = dir.path().join("c6.graph");
    dirburn(&["generate", "cycle", "6", "-o", s(&c)]);
    let report: Value = serde_json::from_str(&dirburn(&["solve", s(&c), "--json"]).stdout).unwrap();
    assert_eq!(report["mode"], "minimum");
    assert_eq!(report["burning_number"], 3);
    assert_eq!(report["solver"], "branching");
    assert!(report["nodes_explored"].as_u64().unwrap() > 0);
    let no: Value =
        serde_json::from_str(&dirburn(&["solve", s(&c), "--budget", "2", "--json"]).stdout)
            .unwrap();
    assert_eq!(no["answer"], "no");
    assert!(no["witness"].is_null());
    assert_eq!(no["ranges"], serde_json::json!([2, 1]));
}

#[test]
fn parallel_mode_gives_the_same_answers() {
    let dir = TempDir::new().unwrap();
    let g = dir.path().join("g.graph");
    dirburn(&[
        "generate",
        "strongly-connected",
        "9",
        "6",
        "--seed",
        "1",
        "-o",
        s(&g),
    ]);
    for alg in ["brute", "branching"] {
        let a = dirburn(&["solve", s(&g), "--algorithm", alg]);
        let b = dirburn(&["solve", s(&g), "--algorithm", alg, "--parallel"]);
        assert_eq!(a.stdout.lines().next(), b.stdout.lines().next());
        assert_eq!(a.stdout, b.stdout, "first-found order is kept");
    }
}

#[test]
fn bound_report() {
    let dir = TempDir::new().unwrap();
    let star = dir.path().join("star.graph");
    dirburn(&["generate", "source-star", "5", "-o", s(&star)]);
    let text = dirburn(&["bound", s(&star)]).stdout;
    assert!(text.contains("reticulation number: 3\n"), "{text}");
    assert!(
        text.ends_with("upper bound: 4 (weakly_connected_upper, sharp)\n"),
        "{text}"
    );
    let json: Value =
        serde_json::from_str(&dirburn(&["bound", s(&star), "--json"]).stdout).unwrap();
    assert_eq!(json["upper_bound"]["rule"], "weakly_connected_upper");
    assert_eq!(json["sources"], 4);
}

#[test]
fn simulate_prints_each_step() {
    let dir = TempDir::new().unwrap();
    let p3 = write(&dir, "p3.graph", "v1 -> v2\nv2 -> v3\n");
    let r = dirburn(&["simulate", s(&p3), "--sequence", "v1,v3"]);
    assert_eq!(
        r.stdout,
        "step 1: light v1; burning v1\nstep 2: light v3; burning v1,v2,v3\nburned 3/3 nodes\n"
    );
}

#[test]
fn generate_is_deterministic() {
    for family in [
        &["arborescence", "12"][..],
        &["single-source-dag", "12", "8"],
        &["strongly-connected", "12", "8"],
        &["digraph", "12", "20"],
    ] {
        let mut args = vec!["generate"];
        args.extend_from_slice(family);
        args.extend_from_slice(&["--seed", "42"]);
        let a = dirburn(&args);
        assert_eq!(a.exit_code, EXIT_YES, "{}", a.stderr);
        assert_eq!(a.stdout, dirburn(&args).stdout);
    }
    let golden = include_str!("../../core/tests/data/arborescence_5_seed42.txt");
    assert_eq!(
        dirburn(&["generate", "arborescence", "5", "--seed", "42"]).stdout,
        golden
    );
}

#[test]
fn other_reductions_and_oracles() {
    let dir = TempDir::new().unwrap();
    let tp = write(&dir, "tp.txt", "values: 10 11 12 13 14 18\n");
    let r = dirburn(&["oracle", "3partition", s(&tp)]);
    assert_eq!(r.stdout, "YES: {10,11,18} {12,13,14}\n");
    let tree = dirburn(&["reduce", "3partition-to-tree", s(&tp)]).stdout;
    assert!(tree.starts_with("# budget: 31\n"));
    let bad = write(&dir, "bad.txt", "values: 3 5 7\n");
    assert_eq!(
        dirburn(&["reduce", "3partition-to-tree", s(&bad)]).exit_code,
        EXIT_ERROR
    );

    let edges = write(&dir, "p4.edges", "a b\nb c\nc d\n");
    let sym = dir.path().join("p4.graph");
    dirburn(&["reduce", "symmetrize", s(&edges), "-o", s(&sym)]);
    assert!(dirburn(&["solve", s(&sym)])
        .stdout
        .starts_with("burning number: 2\n"));

    let p3 = write(&dir, "p3.graph", "v1 -> v2\nv2 -> v3\n");
    let sc = dirburn(&["reduce", "dag-to-set-cover", s(&p3), "--budget", "2"]).stdout;
    assert!(
        sc.starts_with("universe: node:v1 node:v2 node:v3 step:1 step:2\n"),
        "{sc}"
    );
    let sc_path = write(&dir, "p3.sc", &sc);
    assert_eq!(
        dirburn(&["oracle", "set-cover", s(&sc_path)]).exit_code,
        EXIT_YES
    );

    let c4 = write(&dir, "c4.graph", "a -> b\nb -> c\nc -> d\nd -> a\n");
    assert_eq!(
        dirburn(&["oracle", "dominating-set", s(&c4), "-k", "2"]).stdout,
        "YES: a,c\n"
    );
    assert_eq!(
        dirburn(&["oracle", "dominating-set", s(&c4), "-k", "1"]).exit_code,
        EXIT_NO
    );
}

#[test]
fn errors_exit_with_two() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.graph", "a -> b\na -> a\n");
    let r = dirburn(&["solve", s(&bad)]);
    assert_eq!(r.exit_code, EXIT_ERROR);
    assert!(r.stderr.contains("line 2"), "{}", r.stderr);
    assert_eq!(
        dirburn(&["solve", "/nonexistent/file"]).exit_code,
        EXIT_ERROR
    );
    assert_eq!(dirburn(&["frobnicate"]).exit_code, EXIT_ERROR);
    let ok = write(&dir, "ok.graph", "a -> b\n");
    assert_eq!(
        dirburn(&["solve", s(&ok), "--algorithm", "sat"]).exit_code,
        EXIT_ERROR
    );
    assert_eq!(
        dirburn(&["solve", s(&ok), "--budget", "2", "--ranges", "2,1"]).exit_code,
        EXIT_ERROR
    );
    assert_eq!(
        dirburn(&["solve", s(&ok), "--target", "zz"]).exit_code,
        EXIT_ERROR
    );
    assert_eq!(
        dirburn(&["solve", s(&ok), "--ranges", "2,0"]).exit_code,
        EXIT_ERROR
    );
    // the tree solver refuses graphs that are not arborescences
    let c = write(&dir, "c.graph", "a -> b\nb -> a\n");
    assert_eq!(
        dirburn(&["solve", s(&c), "--algorithm", "tree"]).exit_code,
        EXIT_ERROR
    );
    assert_eq!(dirburn(&["verify", s(&ok)]).exit_code, EXIT_ERROR);
    assert_eq!(dirburn(&["generate", "cycle", "1"]).exit_code, EXIT_ERROR);
    assert_eq!(dirburn(&["generate", "digraph", "4"]).exit_code, EXIT_ERROR);
    let help = dirburn(&["--help"]);
    assert_eq!(help.exit_code, EXIT_YES);
    assert!(help.stdout.contains("solve"));
}

#[test]
fn binary_passes_exit_codes_through() {
    let dir = TempDir::new().unwrap();
    let p3 = write(&dir, "p3.graph", "v1 -> v2\nv2 -> v3\n");
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_dirburn"))
        .args(["verify", s(&p3), "--sequence", "v1,v2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(EXIT_NO));
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "INVALID: v2 already burning at step 2\n"
    );
}

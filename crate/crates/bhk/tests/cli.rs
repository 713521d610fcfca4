//! Integration tests for the command-line front end.

use std::io::Write;

use bhk::cli::run;
use bhk::pipeline::revalidate_link_json;

fn run_vec(args: &[&str]) -> bhk::cli::CliOutcome {
    run(args.iter().map(|s| s.to_string()))
}

fn temp_file(name: &str, contents: &str) -> tempfile::TempPath {
    let mut f = tempfile::Builder::new()
        .prefix(name)
        .suffix(".txt")
        .tempfile()
        .unwrap();
    write!(f, "{contents}").unwrap();
    f.into_temp_path()
}

#[test]
fn example_cubic_matches_the_checked_in_fixture() {
    let out = run_vec(&["example", "cubic"]);
    assert_eq!(out.code, 0, "stderr: {}", out.stderr);
    let fixture = include_str!("fixtures/cubic_example.txt");
    assert_eq!(out.stdout, fixture, "golden output drifted");
}

#[test]
fn classify_rejects_shape_errors_with_exit_one() {
    let bad = temp_file("bad", "x0^2+x1^2+x0*x1");
    let out = run_vec(&["classify", "--poly-a", bad.to_str().unwrap()]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("shape"), "stderr: {}", out.stderr);
}

#[test]
fn classify_and_weights_on_matrix_input() {
    let m = temp_file("mat", "3 0 0\n0 2 1\n0 0 3\n");
    let out = run_vec(&["classify", "--matrix", m.to_str().unwrap()]);
    assert_eq!(out.code, 0, "stderr: {}", out.stderr);
    assert!(out.stdout.contains("Fermat(x0; 3)"));
    assert!(out.stdout.contains("Chain(x1,x2; 2,3)"));
    assert!(out.stdout.contains("digraph"));
    let out = run_vec(&["weights", "--matrix", m.to_str().unwrap()]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("q=(1,1,1) d=3"));
    assert!(out.stdout.contains("Calabi-Yau"));
}

#[test]
fn verify_certifies_the_quintic_chain_pair() {
    let quintic = temp_file("quintic", "x0^5+x1^5+x2^5+x3^5+x4^5");
    let chain = temp_file("chain", "x0^4*x1+x1^4*x2+x2^4*x3+x3^4*x4+x4^5");
    let json_path = std::env::temp_dir().join("bhk_verify_report_test.json");
    let out = run_vec(&[
        "verify",
        "--poly-a",
        quintic.to_str().unwrap(),
        "--poly-b",
        chain.to_str().unwrap(),
        "--group",
        "J",
        "--b",
        "1,1,1,1,1",
        "--c",
        "0",
        "--json",
        json_path.to_str().unwrap(),
    ]);
    assert_eq!(out.code, 0, "stderr: {}", out.stderr);
    assert!(out.stdout.contains("links: 4"));
    assert!(out.stdout.contains("status: equivalent"));
    // the JSON report re-validates without recomputation
    let text = std::fs::read_to_string(&json_path).unwrap();
    let report: serde_json::Value = serde_json::from_str(&text).unwrap();
    let links = report.get("links").unwrap().as_array().unwrap();
    assert_eq!(links.len(), 4);
    for link in links {
        assert!(revalidate_link_json(link).unwrap());
    }
    // byte-identical reruns, including the JSON file
    let out2 = run_vec(&[
        "verify",
        "--poly-a",
        quintic.to_str().unwrap(),
        "--poly-b",
        chain.to_str().unwrap(),
        "--group",
        "J",
        "--b",
        "1,1,1,1,1",
        "--c",
        "0",
        "--json",
        json_path.to_str().unwrap(),
    ]);
    assert_eq!(out.stdout, out2.stdout);
    let text2 = std::fs::read_to_string(&json_path).unwrap();
    assert_eq!(text, text2);
    std::fs::remove_file(&json_path).ok();
}

#[test]
fn verify_reports_uncertified_with_exit_two() {
    let p = temp_file("cubchain", "x0^3+x1^2*x2+x2^3");
    let q = temp_file("cubferm", "x0^3+x1^3+x2^3");
    let out = run_vec(&[
        "verify",
        "--poly-a",
        p.to_str().unwrap(),
        "--poly-b",
        q.to_str().unwrap(),
        "--b",
        "1,1,0",
    ]);
    assert_eq!(out.code, 2, "stdout: {}", out.stdout);
    assert!(out.stdout.contains("status: not-certified"));
}

#[test]
fn group_file_input_and_dual_group() {
    let quintic = temp_file("quintic2", "x0^5+x1^5+x2^5+x3^5+x4^5");
    let group = temp_file("jgroup", "1/5,1/5,1/5,1/5,1/5\n");
    let spec = format!("@{}", group.to_str().unwrap());
    let out = run_vec(&[
        "dual-group",
        "--poly-a",
        quintic.to_str().unwrap(),
        "--group",
        &spec,
    ]);
    assert_eq!(out.code, 0, "stderr: {}", out.stderr);
    assert!(out.stdout.contains("|G|   = 5"));
    assert!(out.stdout.contains("|G^T| = 625"));
}

#[test]
fn mirror_and_gorenstein_verbs() {
    let chain = temp_file("chain2", "x0^4*x1+x1^4*x2+x2^4*x3+x3^4*x4+x4^5");
    let out = run_vec(&["mirror", "--poly-a", chain.to_str().unwrap()]);
    assert_eq!(out.code, 0, "stderr: {}", out.stderr);
    assert!(out.stdout.contains("mirror weights: q=(64,48,52,51,41) d=256"));
    let out = run_vec(&["gorenstein", "--poly-a", chain.to_str().unwrap()]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("gorenstein: true"));
    // transpose of the chain lives in a non-Gorenstein ambient
    let t = temp_file("chain_t", "x0^4+x0*x1^4+x1*x2^4+x2*x3^4+x3*x4^5");
    let out = run_vec(&["gorenstein", "--poly-a", t.to_str().unwrap()]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("gorenstein: false"));
}

#[test]
fn cleave_path_lists_the_route() {
    let quintic = temp_file("quintic3", "x0^5+x1^5+x2^5+x3^5+x4^5");
    let chain = temp_file("chain3", "x0^4*x1+x1^4*x2+x2^4*x3+x3^4*x4+x4^5");
    let out = run_vec(&[
        "cleave-path",
        "--poly-a",
        quintic.to_str().unwrap(),
        "--poly-b",
        chain.to_str().unwrap(),
    ]);
    assert_eq!(out.code, 0, "stderr: {}", out.stderr);
    assert!(out.stdout.contains("4 cleave(s)"));
    assert!(out.stdout.contains("arrow-added"));
}

#[test]
fn json_outputs_parse() {
    let json_path = std::env::temp_dir().join("bhk_groups_test.json");
    let quintic = temp_file("quintic4", "x0^5+x1^5+x2^5+x3^5+x4^5");
    let out = run_vec(&[
        "groups",
        "--poly-a",
        quintic.to_str().unwrap(),
        "--json",
        json_path.to_str().unwrap(),
    ]);
    assert_eq!(out.code, 0);
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&json_path).unwrap()).unwrap();
    assert_eq!(v["aut_order"], "3125");
    assert_eq!(v["sl_order"], "625");
    assert_eq!(v["j_order"], "5");
    std::fs::remove_file(&json_path).ok();
}

use std::path::PathBuf;
use std::process::{Command, Output};

use splitcycles::format::{parse_rotmap, write_rotmap};
use splitcycles::voltage::{bundled_base, gross_tucker_base};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_splitcycles")).args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "core", "data", name].iter().collect();
    p.to_str().unwrap().to_string()
}

#[test]
fn build_writes_a_rotmap_that_parses_back() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("b.rot");
    let out = run(&["build", "--gross-tucker", "1", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "V = 19, E = 171, F = 114, genus 20");
    let parsed = parse_rotmap(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(parsed, gross_tucker_base(1).unwrap().derive().unwrap());
}

#[test]
fn build_from_voltmap_file() {
    let out = run(&["build", "--voltmap", &data("k19_a.volt")]);
    assert!(out.status.success());
    let map = parse_rotmap(&stdout(&out)).unwrap();
    assert_eq!(map, bundled_base("A").unwrap().derive().unwrap());
    assert!(String::from_utf8_lossy(&out.stderr).contains("genus 20"));
}

#[test]
fn bad_parameters_exit_with_one() {
    assert_eq!(run(&["build", "--gross-tucker", "0"]).status.code(), Some(1));
    assert_eq!(run(&["search"]).status.code(), Some(1));
    assert_eq!(run(&["genus", "/nonexistent/map.rot"]).status.code(), Some(1));
    assert_eq!(run(&["search", "--base", "B", "--workers", "0"]).status.code(), Some(1));
}

#[test]
fn genus_of_a_rotmap_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m.rot");
    std::fs::write(&path, write_rotmap(&gross_tucker_base(2).unwrap().derive().unwrap())).unwrap();
    let out = run(&["genus", path.to_str().unwrap()]);
    assert_eq!(stdout(&out).trim(), "V = 31, E = 465, F = 310, genus 63");
}

#[test]
fn search_up_to_length_10_on_b() {
    let out = run(&["search", "--base", "B", "--max-length", "10", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["report_version"], 1);
    assert_eq!(v["genus"], 20);
    assert_eq!(v["rows"][0]["min_length"], 10);
    assert!(v["rows"][0]["nsc"].as_u64().unwrap() > 0);
    for row in v["rows"].as_array().unwrap()[1..].iter() {
        assert_eq!(row["nsc"], 0);
    }
    assert_eq!(v["options"]["max_length"], 10);
    assert_eq!(v["options"]["assume_transitive"], true);
}

#[test]
fn torus_search_is_empty() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k7.volt");
    std::fs::write(&path, "voltmap 1\nn 7\nrotation: 1 3 2 6 4 5\n").unwrap();
    let out = run(&["search", path.to_str().unwrap(), "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["genus"], 1);
    assert_eq!(v["splitting_directed"], 0);
}

#[test]
fn reports_do_not_depend_on_worker_count() {
    for format in ["csv", "json"] {
        let args = |w: &'static str| ["search", "--base", "C", "--max-length", "11", "--format", format, "--workers", w];
        let one = run(&args("1"));
        let three = run(&args("3"));
        assert!(one.status.success());
        assert_eq!(one.stdout, three.stdout, "{format}");
    }
}

#[test]
fn search_rejects_non_triangulations() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k4.rot");
    std::fs::write(&path, "rotmap 1\nvertices 4\n0: 1 2 3\n1: 0 2 3\n2: 0 1 3\n3: 0 1 2\n").unwrap();
    let out = run(&["search", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("simplicial triangulation"));
}

#[test]
fn verify_cycle_verdicts() {
    let link: Vec<String> = bundled_base("B").unwrap().derive().unwrap().rotation(5).iter().map(|v| v.to_string()).collect();
    let out = run(&["verify-cycle", "--base", "B", "--cycle", &link.join(",")]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("fast:   separating, type 0 (contractible)"), "{text}");
    assert!(text.contains("oracle: separating, type 0 (contractible)"), "{text}");

    let out = run(&["verify-cycle", "--gross-tucker", "3", "--cycle", "0,5,2,35,6,1,4,21"]);
    let text = stdout(&out);
    assert!(text.contains("fast:   splitting, type 1"), "{text}");
    assert!(text.contains("oracle: splitting, type 1"), "{text}");

    // a face of B: rejected by the path rules, still answered by the cut
    let out = run(&["verify-cycle", "--base", "B", "--cycle", "0,1,15"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("fast:   rejected"), "{text}");
    assert!(text.contains("oracle: separating, type 0"), "{text}");

    assert_eq!(run(&["verify-cycle", "--base", "B", "--cycle", "0,1,99"]).status.code(), Some(1));
    assert_eq!(run(&["verify-cycle", "--base", "B", "--cycle", "0,1"]).status.code(), Some(1));
}

#[test]
fn bound_values() {
    for (g, k) in [("10", "14"), ("0", "3"), ("1", "6")] {
        assert_eq!(stdout(&run(&["bound", g])).trim(), k);
    }
}

#[test]
fn verify_families_report() {
    let out = run(&["verify-families", "4"]);
    let text = stdout(&out);
    assert!(text.contains("pass Gamma [0, 5, 2, 44, 6, 1, 4, 26] claimed type 1 computed type 1"), "{text}");
    assert!(text.contains("family: 220 of 330 verified, 330 distinct (claimed 330)"), "{text}");
    assert!(text.contains("irreducible: true"));
    // members with i = s - 1 do not split, so the run reports failure
    assert_eq!(out.status.code(), Some(1));

    let out = run(&["verify-families", "5", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["type_j"][1]["check"]["oracle_type"], 2);
    assert_eq!(v["gamma_empty_side"], serde_json::json!([10, 11]));

    assert_eq!(run(&["verify-families", "1"]).status.code(), Some(1));
}

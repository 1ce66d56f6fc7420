use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn tractlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tractlab"))
        .args(args)
        .env_remove("TRACTLAB_JOBS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("tractlab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn sign_strong_fusion_holds() {
    let o = tractlab(&["axioms", "--tract", "builtin:sign", "--bound", "5", "--check", "SF"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("SF holds (bound 5)"));
}

#[test]
fn sign_product_strong_fusion_fails_with_witness() {
    let o = tractlab(&[
        "axioms",
        "--tract",
        "builtin:sign_product",
        "--bound",
        "5",
        "--check",
        "SF",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert_eq!(v["holds"], false);
    let w = &v["reports"][0]["witness"];
    for part in ["alpha", "beta", "gamma"] {
        assert!(w[part].is_array(), "{part}");
    }
}

#[test]
fn usage_and_input_errors_exit_2() {
    for args in [
        &["axioms", "--tract", "builtin:nope"][..],
        &["axioms", "--tract", "builtin:sign", "--bound", "0"],
        &["axioms", "--bound", "3"],
        &["axioms", "--tract", "builtin:sign", "--hyperfield", "builtin:sign"],
        &["axioms", "--tract", "builtin:sign", "--check", "HG1"],
        &["frobnicate"],
        &["sigma", "--tract", "builtin:sign", "--bound", "3"],
        &["perfect", "--fmatroid", "fixture:U23/Q"],
        &["axioms", "--tract", "/nonexistent/tract.json"],
        &["demo", "--criterion", "14"],
    ] {
        let o = tractlab(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn bounded_oracles_are_refused() {
    let path = scratch(
        "listed.json",
        r#"{"elements": ["0", "1", "-1"], "zero": "0", "one": "1", "epsilon": "-1",
            "mul": [["0","0","0"],["0","1","-1"],["0","-1","1"]],
            "null": {"kind": "explicit", "bound": 3, "sums": [["1", "-1"], ["1", "1", "-1"], ["1", "-1", "-1"]]}}"#,
    );
    let p = path.to_str().unwrap();
    assert_eq!(
        tractlab(&["axioms", "--tract", p, "--bound", "3"]).status.code(),
        Some(0)
    );
    let o = tractlab(&["axioms", "--tract", p, "--bound", "4"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains('4'));
}

#[test]
fn hyperfield_axioms_and_stringency() {
    let o = tractlab(&["axioms", "--hyperfield", "builtin:sign", "--bound", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 17);
    let o = tractlab(&["axioms", "--hyperfield", "builtin:broken", "--check", "HG4,HG5,HG6"]);
    assert_eq!(o.status.code(), Some(1));

    let o = tractlab(&["stringent", "--hyperfield", "builtin:sign_product", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["stringent"], false);
    let o = tractlab(&["hap", "--hyperfield", "builtin:sign", "--bound", "6"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn closures() {
    let o = tractlab(&["closure", "--tract", "builtin:sign", "--bound", "6", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["members"], 16);
    assert_eq!(v["comparison"]["holds"], true);

    let o = tractlab(&[
        "sigma",
        "--tract",
        "builtin:sign_product",
        "--bound",
        "6",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["closure_msf"]["holds"], true);
    assert_eq!(v["fixed_point_claimed"], false);
}

#[test]
fn certificates() {
    let o = tractlab(&[
        "strong-perfect",
        "--fmatroid",
        "fixture:U23/S",
        "--coord-bound",
        "2",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["claim"], "strong-perfection");
    assert_eq!(v["verdict"], "certified");
    assert_eq!(v["coord_bound"], 2);
    assert_eq!(v["pairs_checked"], 9840);
    assert_eq!(v["oracle_bound"], 12);
    assert!(v["witness"].is_null());

    let o = tractlab(&["perfect", "--fmatroid", "fixture:U12/S"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("9 pairs checked"));

    for verb in ["wedge-check", "minors-check"] {
        assert_eq!(
            tractlab(&[verb, "--fmatroid", "fixture:U23/GF3"]).status.code(),
            Some(0),
            "{verb}"
        );
    }
    let o = tractlab(&["minors-check", "--fmatroid", "fixture:U12/S", "--check", "lower-term"]);
    assert!(stdout(&o).starts_with("lower-term holds"));
}

#[test]
fn fmatroid_files() {
    let good = scratch(
        "u12.json",
        r#"{"tract": "builtin:sign", "ground": ["a", "b"],
            "circuits": [{"values": {"a": "1", "b": "-1"}}],
            "cocircuits": [{"support": ["a", "b"], "values": {"a": "1", "b": "1"}}]}"#,
    );
    let o = tractlab(&["axioms", "--fmatroid", good.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let o = tractlab(&[
        "strong-perfect",
        "--fmatroid",
        good.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(json(&o)["pairs_checked"], 400);

    let bad = scratch(
        "bad.json",
        r#"{"tract": "builtin:sign", "ground": ["a", "b"],
            "circuits": [{"values": {"a": "1", "b": "1"}}],
            "cocircuits": [{"values": {"a": "1", "b": "1"}}]}"#,
    );
    let o = tractlab(&["strong-perfect", "--fmatroid", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("nothing certified"));
    let o = tractlab(&["axioms", "--fmatroid", bad.to_str().unwrap(), "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["reports"][0]["axiom"], "DP3");

    let malformed = scratch("malformed.json", "{\"tract\": ");
    assert_eq!(
        tractlab(&["perfect", "--fmatroid", malformed.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn output_is_deterministic_across_job_counts() {
    let args = ["strong-perfect", "--fmatroid", "fixture:U23/GF3", "--format", "json"];
    let base = tractlab(&args);
    for jobs in ["1", "3"] {
        let o = Command::new(env!("CARGO_BIN_EXE_tractlab"))
            .args(args)
            .env("TRACTLAB_JOBS", jobs)
            .output()
            .unwrap();
        assert_eq!(o.stdout, base.stdout);
        assert_eq!(o.status.code(), base.status.code());
    }
    let a = tractlab(&["axioms", "--tract", "builtin:sign_product", "--jobs", "2"]);
    let b = tractlab(&["axioms", "--tract", "builtin:sign_product"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn demo_runs_selected_criteria() {
    let o = tractlab(&["demo", "--criterion", "5,9"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("[PASS]  5."));
    assert!(out.contains("[PASS]  9."));
    assert!(out.ends_with("scorecard: 2/2 criteria pass\n"));

    let o = tractlab(&["demo", "--criterion", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["criteria"][0]["pass"], false);
}

use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chordweave")).args(args).env_remove("CHORDWEAVE_CACHE").output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let out = run(&all);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

const TREFOIL: &str = "# right trefoil\nX[4,2,5,1]\nX[6,4,1,3]\nX[2,6,3,5]\n";

#[test]
fn enumerate_counts() {
    assert_eq!(json(&["enumerate", "--degree", "1"])["results"]["diagrams"], serde_json::json!(["11"]));
    assert_eq!(json(&["enumerate", "--degree", "2"])["results"]["count"], 2);
    assert_eq!(json(&["enumerate", "--degree", "3"])["results"]["count"], 5);
    assert_eq!(run(&["enumerate", "--degree", "7"]).status.code(), Some(2));
}

#[test]
fn weights_examples() {
    let v = json(&["weights", "--diagram", "1212", "--systems", "chrom,w21,wrx", "--r", "2"]);
    assert_eq!(v["results"]["chrom"], "s1^2 - s2");
    assert_eq!(v["results"]["w21"], "2");
    assert_eq!(v["results"]["wrx"], "2*x1*x2");
    assert_eq!(json(&["weights", "--diagram", "1122", "--systems", "gl"])["results"]["gl"], "t^2");
    assert_eq!(run(&["weights", "--diagram", "1212", "--systems", "wrx"]).status.code(), Some(2));
    assert_eq!(run(&["weights", "--diagram", "12", "--systems", "gl"]).status.code(), Some(2));
}

#[test]
fn knot_from_pd_file() {
    let dir = tempfile::tempdir().unwrap();
    let t = dir.path().join("trefoil.pd");
    std::fs::write(&t, TREFOIL).unwrap();
    let t = t.to_str().unwrap();
    let v = json(&["knot", "--pd", t, "--invariant", "upsilon"]);
    assert_eq!(v["results"], serde_json::json!({"invariant": "upsilon", "value": "2*y - y^-1"}));
    assert_eq!(v["inputs"]["writhe"], 3);
    let v = json(&["knot", "--pd", t, "--invariant", "homfly", "--diagonal", "4"]);
    assert_eq!(v["checks"][0]["passed"], true);
    let u = dir.path().join("unknot.pd");
    std::fs::write(&u, "# no crossings\n").unwrap();
    assert_eq!(json(&["knot", "--pd", u.to_str().unwrap(), "--invariant", "homfly"])["results"]["value"], "1");
    let bad = dir.path().join("bad.pd");
    std::fs::write(&bad, "X[1,2,3]\n").unwrap();
    assert_eq!(run(&["knot", "--pd", bad.to_str().unwrap(), "--invariant", "homfly"]).status.code(), Some(2));
    let hopf = dir.path().join("hopf.pd");
    std::fs::write(&hopf, "X[1,3,2,4]\nX[3,1,4,2]\n").unwrap();
    assert_eq!(run(&["knot", "--pd", hopf.to_str().unwrap(), "--invariant", "upsilon"]).status.code(), Some(2));
    let v = json(&["knot", "--pd", hopf.to_str().unwrap(), "--invariant", "homfly"]);
    assert_eq!(v["inputs"]["components"], 2);
}

#[test]
fn builtin_knots() {
    let v = json(&["knot", "--builtin", "figure-eight", "--invariant", "kauffman", "--diagonal", "4"]);
    assert_eq!(v["checks"][0]["passed"], true);
    assert_eq!(run(&["knot", "--builtin", "nope", "--invariant", "homfly"]).status.code(), Some(2));
}

#[test]
fn graph_reduce_file_and_cache() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("p3.json");
    std::fs::write(
        &g,
        r#"{"vertices":[{"id":"a","weight":1},{"id":"b","weight":1},{"id":"c","weight":1}],"edges":[["a","b"],["b","c"]]}"#,
    )
    .unwrap();
    let g = g.to_str().unwrap();
    assert_eq!(json(&["graph-reduce", "--file", g])["results"]["value"], "s1^3 - 2*s1*s2 + s3");
    let cache = dir.path().join("cache");
    for _ in 0..2 {
        let out = Command::new(env!("CARGO_BIN_EXE_chordweave"))
            .args(["graph-reduce", "--file", g])
            .env("CHORDWEAVE_CACHE", &cache)
            .output()
            .unwrap();
        assert!(out.status.success());
        assert!(String::from_utf8_lossy(&out.stdout).contains("s1^3 - 2*s1*s2 + s3"));
    }
    assert!(cache.exists());
}

#[test]
fn verify_suites_and_exit_codes() {
    let v = json(&["verify", "--suite", "chi"]);
    assert_eq!(v["results"]["passed"], true);
    let v = json(&["verify", "--suite", "fourT", "--max-degree", "3"]);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
    let v = json(&["verify", "--suite", "oracle", "--max-degree", "3", "--n", "2,3"]);
    assert_eq!(v["results"]["passed"], true);
    assert_eq!(run(&["verify", "--suite", "fourT", "--max-degree", "9"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--suite", "bogus"]).status.code(), Some(2));
}

#[test]
fn reports_do_not_depend_on_jobs() {
    let args = ["verify", "--suite", "chromrel", "--samples", "40"];
    let one = run(&[&["--json", "--jobs", "1"][..], &args].concat());
    let four = run(&[&["--json", "--jobs", "4"][..], &args].concat());
    let again = run(&[&["--json", "--jobs", "4"][..], &args].concat());
    assert!(one.status.success());
    assert_eq!(one.stdout, four.stdout);
    assert_eq!(four.stdout, again.stdout);
}

#[test]
fn chi_command() {
    assert_eq!(json(&["chi", "--expr", "3*x3 - 7*t^3", "--algebra", "F4"])["results"]["value"], "0");
    assert_eq!(json(&["chi", "--expr", "x5", "--algebra", "G3"])["results"]["value"], "12*t^5");
    assert_eq!(run(&["chi", "--expr", "x2", "--algebra", "G3"]).status.code(), Some(2));
}

//! End-to-end checks of the `confstudy` binary: deterministic output,
//! JSON schemas that re-parse into equal values, and the factorization
//! fixture reaching its full count of twelve. Prints a `[PASS]` line (run
//! with `-- --nocapture`).

use std::path::PathBuf;
use std::process::{Command, Output};

use confstudy::json::{
    factorizations_from_json, factorizations_to_json, fourquat_from_json, fourquat_to_json,
    motion_from_json, motion_to_json, mv_from_json, mv_to_json,
};
use confstudy::rational::parse_rational;
use serde_json::Value;

fn fixture(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("tests/fixtures");
    p.push(name);
    p.to_str().unwrap().to_owned()
}

fn run_env(args: &[&str], envs: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_confstudy"));
    cmd.args(args);
    for (k, v) in envs {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn run(args: &[&str]) -> Output {
    run_env(args, &[])
}

fn stdout_json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

/// Runs the command twice and checks byte-for-byte identical output.
fn run_deterministic(args: &[&str]) -> Output {
    let first = run(args);
    let second = run(args);
    assert_eq!(first.stdout, second.stdout, "stdout differs between runs of {args:?}");
    assert_eq!(first.stderr, second.stderr, "stderr differs between runs of {args:?}");
    assert_eq!(first.status.code(), second.status.code());
    first
}

#[test]
fn criterion_10_cli_determinism_schema_roundtrip_and_fixture_count() {
    let quat_fixtures = ["h1.json", "h2.json", "h3.json", "identity.json"];

    // classify: every fixture, deterministic, residual list of ten
    // labelled exact rationals.
    for f in &quat_fixtures {
        let out = run_deterministic(&["classify", &fixture(f)]);
        let v = stdout_json(&out);
        assert!(v["on_study"].as_bool().unwrap());
        let generators = v["generators"].as_array().unwrap();
        assert_eq!(generators.len(), 10);
        for g in generators {
            assert!(g["label"].is_string());
            parse_rational(g["value"].as_str().unwrap()).unwrap();
        }
        parse_rational(v["null_value"].as_str().unwrap()).unwrap();
    }

    // decompose: emitted blades re-parse as motions and re-serialize to
    // the same JSON.
    for f in &["h1.json", "h2.json", "h3.json"] {
        let out = run_deterministic(&["decompose", &fixture(f)]);
        let v = stdout_json(&out);
        let motion = motion_from_json(&v).unwrap();
        assert_eq!(motion_to_json(&motion), v);
    }

    // factor: full fixture count of 12, round-trip, and thread-count
    // independence.
    let factor_args = ["factor", &fixture("cubic.json"), "--require-count", "12"];
    let out = run_deterministic(&factor_args);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    let parsed = factorizations_from_json(&v).unwrap();
    assert_eq!(parsed.len(), 12);
    assert_eq!(factorizations_to_json(&parsed), v);
    for threads in ["1", "4"] {
        let threaded = run_env(&factor_args, &[("CONFSTUDY_THREADS", threads)]);
        assert_eq!(threaded.stdout, out.stdout, "output depends on thread count");
    }

    // act: image re-parses and re-serializes identically; the normalized
    // identity action returns the embedded point.
    let out = run_deterministic(&[
        "act",
        &fixture("identity.json"),
        "--point",
        "1,2,3",
        "--normalize",
    ]);
    let v = stdout_json(&out);
    let image = mv_from_json(&v["image"]).unwrap();
    assert_eq!(mv_to_json(&image), v["image"]);
    assert_eq!(v["kind"]["tag"], "point");
    assert_eq!(
        v["kind"]["center"],
        serde_json::json!(["1", "2", "3"]),
        "identity acts trivially"
    );

    // mul: four-quaternion output keeps the canonical four-key schema.
    let out = run_deterministic(&["mul", &fixture("h1.json"), &fixture("h2.json")]);
    let v = stdout_json(&out);
    let product = fourquat_from_json(&v).unwrap();
    assert_eq!(fourquat_to_json(&product), v);

    // trajectory: each sample's parameter and image re-parse exactly.
    let out = run_deterministic(&[
        "trajectory",
        &fixture("scaling_line.json"),
        "--point",
        "1,0,0",
        "--t",
        "3,1,5/3",
    ]);
    let v = stdout_json(&out);
    let samples = v.as_array().unwrap();
    assert_eq!(samples.len(), 3);
    for s in samples {
        parse_rational(s["t"].as_str().unwrap()).unwrap();
        let image = mv_from_json(&s["image"]).unwrap();
        assert_eq!(mv_to_json(&image), s["image"]);
    }

    println!(
        "[PASS] 10: CLI output is byte-deterministic (including across thread counts), all \
         emitted JSON re-parses to equal values, and the cubic fixture factors 12 ways with \
         exit 0"
    );
}

#[test]
fn error_paths_use_stable_codes_and_exit_classes() {
    // Schema and usage problems exit 1.
    let out = run(&["classify", &fixture("missing.json")]);
    assert_eq!(out.status.code(), Some(1));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"], "io_error");

    let dir = tempfile::tempdir().unwrap();
    let malformed = dir.path().join("broken.json");
    std::fs::write(&malformed, b"{ not json").unwrap();
    let out = run(&["classify", malformed.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"], "parse_error");

    let out = run(&["act", &fixture("identity.json"), "--point", "1,2"]);
    assert_eq!(out.status.code(), Some(1));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"], "parse_error");

    let out = run(&["classify"]);
    assert_eq!(out.status.code(), Some(1));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"], "usage");

    // Domain errors exit 2.
    let out = run(&["decompose", &fixture("identity.json")]);
    assert_eq!(out.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"], "zero_direction");

    let out = run(&["factor", &fixture("cubic.json"), "--require-count", "11"]);
    assert_eq!(out.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"], "require_count_mismatch");
}

#[test]
fn trajectory_csv_has_the_documented_shape() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("out.csv");
    let out = run(&[
        "trajectory",
        &fixture("scaling_line.json"),
        "--point",
        "1,0,0",
        "--t",
        "3,1,5/3",
        "--csv",
        csv.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(
        std::fs::read_to_string(&csv).unwrap(),
        "t,x,y,z,kind\n3,2,0,0,point\n1,,,,point_at_infinity\n1.6666666666666667,4,0,0,point\n"
    );

    let exact = dir.path().join("exact.csv");
    let out = run(&[
        "trajectory",
        &fixture("scaling_line.json"),
        "--point",
        "1,0,0",
        "--t",
        "3,1,5/3",
        "--csv",
        exact.to_str().unwrap(),
        "--exact",
    ]);
    assert!(out.status.success());
    assert_eq!(
        std::fs::read_to_string(&exact).unwrap(),
        "t,x,y,z,kind\n3,2,0,0,point\n1,,,,point_at_infinity\n5/3,4,0,0,point\n"
    );
}

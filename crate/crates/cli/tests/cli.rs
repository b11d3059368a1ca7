//! End-to-end checks of the binary: fixture files in a temp directory, one
//! process per invocation.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::{json, Value};

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_djspace")
}

struct Fixtures {
    dir: PathBuf,
}

impl Fixtures {
    fn new(tag: &str) -> Self {
        let dir = std::env::temp_dir().join(format!("djspace-cli-{tag}-{}", std::process::id()));
        std::fs::create_dir_all(&dir).expect("create fixture dir");
        Fixtures { dir }
    }

    fn write(&self, name: &str, value: &Value) -> PathBuf {
        let path = self.dir.join(name);
        std::fs::write(&path, serde_json::to_string_pretty(value).unwrap()).unwrap();
        path
    }

    fn triangle(&self) -> PathBuf {
        self.write("triangle.json", &json!({"m": 3, "facets": [[1,2],[1,3],[2,3]]}))
    }

    fn square(&self) -> PathBuf {
        self.write(
            "square.json",
            &json!({"m": 4, "facets": [[1,2],[2,3],[3,4],[1,4]]}),
        )
    }
}

impl Drop for Fixtures {
    fn drop(&mut self) {
        let _ = std::fs::remove_dir_all(&self.dir);
    }
}

fn run(args: &[&str]) -> Output {
    Command::new(bin()).args(args).output().expect("spawn djspace")
}

fn run_json(args: &[&str]) -> (Value, i32) {
    let out = run(args);
    let code = out.status.code().expect("exit code");
    let stdout = String::from_utf8(out.stdout).expect("utf-8 output");
    let value = serde_json::from_str(stdout.trim()).unwrap_or_else(|e| {
        panic!("non-JSON output for {args:?}: {e}\nstdout: {stdout}");
    });
    (value, code)
}

fn path_str(p: &Path) -> &str {
    p.to_str().expect("utf-8 path")
}

#[test]
fn classes_emits_both_total_classes() {
    let fx = Fixtures::new("classes");
    let triangle = fx.triangle();
    let (v, code) = run_json(&["classes", path_str(&triangle)]);
    assert_eq!(code, 0);
    assert_eq!(v["m"], json!(3));
    assert_eq!(v["n"], json!(2));
    assert_eq!(v["pure"], json!(true));
    assert_eq!(v["c"].as_array().unwrap().len(), 7);
    assert_eq!(v["p"][0], json!([1, [0, 0, 0]]));
}

#[test]
fn sqrt_enum_counts_roots() {
    let fx = Fixtures::new("sqrt");
    let triangle = fx.triangle();
    let (v, code) = run_json(&["sqrt-enum", path_str(&triangle)]);
    assert_eq!(code, 0);
    assert_eq!(v["count"], json!(8));
    assert_eq!(v["roots"].as_array().unwrap().len(), 8);
    assert_eq!(v["top_faces"], json!([[1, 2], [1, 3], [2, 3]]));

    let square = fx.square();
    let (v, _) = run_json(&["sqrt-enum", path_str(&square), "--threads", "3"]);
    assert_eq!(v["count"], json!(16));
}

#[test]
fn structures_reports_the_odd_square_pattern_as_refused() {
    let fx = Fixtures::new("structures");
    let square = fx.square();
    let (v, code) = run_json(&["structures", path_str(&square), "--omega", "-,+,+,+"]);
    assert_eq!(code, 0);
    assert_eq!(v["realizable"], json!(false));
    assert_eq!(v["count"], json!(0));
    assert_eq!(v["oriented_count"], json!(0));

    let (v, code) = run_json(&[
        "structures",
        path_str(&square),
        "--omega",
        "-,-,+,+",
        "--brute",
        "--explain",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["realizable"], json!(true));
    assert_eq!(v["count"], v["brute_count"]);
    assert_eq!(v["oriented_count"], json!(2));
    assert_eq!(v["top_faces"], json!([[1, 2], [1, 4], [2, 3], [3, 4]]));
}

#[test]
fn stable_count_requires_the_stable_range() {
    let fx = Fixtures::new("stable");
    let square = fx.square();
    let (v, code) = run_json(&["stable-count", path_str(&square), "-s", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["count"], json!(16));

    let out = run(&["stable-count", path_str(&square), "-s", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn admissible_and_vandermonde() {
    let fx = Fixtures::new("admissible");
    let triangle = fx.triangle();
    let matrix = fx.write("a.json", &json!([[1, 2, 3]]));
    let (v, code) = run_json(&["admissible", path_str(&triangle), path_str(&matrix)]);
    assert_eq!(code, 0);
    assert_eq!(v["admissible"], json!(true));

    let (v2, _) = run_json(&[
        "admissible",
        path_str(&triangle),
        path_str(&matrix),
        "--all-faces",
    ]);
    assert_eq!(v["admissible"], v2["admissible"]);

    let (v, code) = run_json(&["vandermonde", "-m", "4", "-n", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["rows"], json!([["1", "1", "1", "1"], ["2", "4", "8", "16"]]));

    // Rank-deficient submatrix: witness face reported.
    let points = fx.write("points.json", &json!({"m": 3, "facets": [[1],[2],[3]]}));
    let bad = fx.write("bad.json", &json!([[1, 1, 1], [0, 2, 2]]));
    let (v, code) = run_json(&["admissible", path_str(&points), path_str(&bad)]);
    assert_eq!(code, 0);
    assert_eq!(v["admissible"], json!(false));
    assert_eq!(v["witness"], json!([1]));
}

#[test]
fn limits_and_link_cohomology() {
    let fx = Fixtures::new("limits");
    let triangle = fx.triangle();
    let atomic = fx.write(
        "atomic.json",
        &json!({"ring": "Z", "values": [{"face": [], "rank": 1}], "maps": []}),
    );
    let (v, code) = run_json(&["limits", path_str(&triangle), path_str(&atomic)]);
    assert_eq!(code, 0);
    assert_eq!(
        v["limits"],
        json!([
            {"rank": 0, "torsion": []},
            {"rank": 0, "torsion": []},
            {"rank": 1, "torsion": []},
            {"rank": 0, "torsion": []},
        ])
    );

    let (v, code) = run_json(&[
        "link-cohomology",
        path_str(&triangle),
        "--alpha",
        "",
        "--ring",
        "Z",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["cohomology"][2], json!({"degree": 1, "rank": 1, "torsion": []}));

    let (v, code) = run_json(&[
        "link-cohomology",
        path_str(&triangle),
        "--alpha",
        "1,2",
        "--ring",
        "F2",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["cohomology"], json!([{"degree": -1, "rank": 1, "torsion": []}]));
}

#[test]
fn color_distinguishes_absence_by_exit_status() {
    let fx = Fixtures::new("color");
    let square = fx.square();
    let (v, code) = run_json(&["color", path_str(&square), "-r", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["colors"], json!([1, 2, 1, 2]));

    let triangle = fx.triangle();
    let (v, code) = run_json(&["color", path_str(&triangle), "-r", "2"]);
    assert_eq!(code, 1);
    assert_eq!(v["colors"], Value::Null);

    let (v, code) = run_json(&["color", path_str(&triangle), "--chromatic"]);
    assert_eq!(code, 0);
    assert_eq!(v["chromatic_number"], json!(3));

    let (v, code) = run_json(&["color", path_str(&square), "-r", "2", "--splitting"]);
    assert_eq!(code, 0);
    assert_eq!(v["splitting"].as_array().unwrap().len(), 2);
}

#[test]
fn quasitoric_validates_pairs() {
    let fx = Fixtures::new("quasitoric");
    let pair = fx.write(
        "pair.json",
        &json!({
            "complex": {"m": 3, "facets": [[1,2],[1,3],[2,3]]},
            "oriented_facets": [[1,2],[2,3],[3,1]],
            "lambda": [[1,0,-1],[0,1,-1]],
        }),
    );
    let (v, code) = run_json(&["quasitoric", path_str(&pair)]);
    assert_eq!(code, 0);
    assert_eq!(v["valid"], json!(true));
    assert_eq!(v["dets"], json!([1, 1, 1]));
    assert_eq!(v["admits_complex_structure"], json!(true));

    let bad = fx.write(
        "bad_pair.json",
        &json!({
            "complex": {"m": 3, "facets": [[1,2],[1,3],[2,3]]},
            "oriented_facets": [[1,2],[2,3],[3,1]],
            "lambda": [[2,0,-1],[0,1,-1]],
        }),
    );
    let (v, code) = run_json(&["quasitoric", path_str(&bad)]);
    assert_eq!(code, 1);
    assert_eq!(v["valid"], json!(false));
    assert_eq!(v["face"], json!([1, 2]));
}

#[test]
fn malformed_input_exits_two() {
    let fx = Fixtures::new("malformed");
    let broken = fx.dir.join("broken.json");
    std::fs::write(&broken, "{\"m\": 3").unwrap();
    let out = run(&["classes", path_str(&broken)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.starts_with("error:"), "stderr: {stderr}");

    // Wrong sign count names the problem.
    let triangle = fx.triangle();
    let out = run(&["structures", path_str(&triangle), "--omega", "-,+"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn output_is_deterministic_and_reparses() {
    let fx = Fixtures::new("determinism");
    let square = fx.square();
    let first = run(&["sqrt-enum", path_str(&square)]);
    let second = run(&["sqrt-enum", path_str(&square)]);
    assert_eq!(first.stdout, second.stdout);

    // Round-trip: the emitted complex-independent polynomial list re-parses
    // to an equal value through the public schema.
    let (v, _) = run_json(&["classes", path_str(&square)]);
    let k = djspace::SimplicialComplex::from_facets(4, &[vec![1, 2], vec![2, 3], vec![3, 4], vec![1, 4]])
        .unwrap();
    let c = djspace::json::poly_from_json(&k, &v["c"]).unwrap();
    assert_eq!(c, djspace::classes::total_chern(&k));
}

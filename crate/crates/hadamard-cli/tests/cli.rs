//! End-to-end tests against the built binary: exit codes, JSON output,
//! and byte-identical reproducibility.

use std::path::Path;
use std::process::{Command, Output};

use hadamard_algebra::json::MatrixJson;
use hadamard_algebra::{RingContext, RingMatrix};

fn hadamard(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hadamard"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is utf-8")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

fn write_matrix(path: &Path, m: &RingMatrix) {
    let text = serde_json::to_string(&MatrixJson::from_matrix(m)).unwrap();
    std::fs::write(path, text).unwrap();
}

#[test]
fn verify_passes_over_a_field() {
    let out = hadamard(&[
        "verify",
        "--ring",
        "gf2:8:0x11b",
        "--k",
        "2",
        "--s",
        "3",
        "--trials",
        "50",
        "--seed",
        "1",
    ]);
    assert_eq!(exit_code(&out), 0, "{out:?}");
    let report: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(report["violations_total"], 0);
    assert_eq!(report["charpoly_square"]["trials"], 50);
}

#[test]
fn verify_passes_over_a_ring_with_nilpotents() {
    let out = hadamard(&[
        "verify",
        "--ring",
        "quot:0b10000",
        "--k",
        "1",
        "--s",
        "2",
        "--trials",
        "50",
        "--seed",
        "7",
    ]);
    assert_eq!(exit_code(&out), 0, "{out:?}");
}

#[test]
fn unknown_ring_kind_exits_two() {
    let out = hadamard(&[
        "verify", "--ring", "gf3:5", "--k", "1", "--s", "1", "--trials", "1", "--seed", "0",
    ]);
    assert_eq!(exit_code(&out), 2);
    assert!(stdout_of(&out).is_empty());
}

#[test]
fn same_seed_means_byte_identical_reports() {
    let args = [
        "verify",
        "--ring",
        "gf2:2:0x7",
        "--k",
        "2",
        "--s",
        "2",
        "--trials",
        "10",
        "--seed",
        "99",
    ];
    let a = hadamard(&args);
    let b = hadamard(&args);
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.is_empty());

    // --out writes the same bytes that go to stdout (plus trailing newline)
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let mut with_out: Vec<&str> = args.to_vec();
    let path_str = path.to_str().unwrap();
    with_out.extend(["--out", path_str]);
    let c = hadamard(&with_out);
    assert_eq!(exit_code(&c), 0);
    let written = std::fs::read(&path).unwrap();
    assert_eq!(
        stdout_of(&c).trim_end(),
        String::from_utf8(written).unwrap()
    );
}

#[test]
fn charpoly_of_identity_over_gf2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("id2.json");
    let ctx = RingContext::gf(1).unwrap();
    write_matrix(&path, &RingMatrix::identity(ctx, 2));

    let out = hadamard(&["charpoly", "--in", path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0);
    let poly: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(poly["coeffs"], serde_json::json!(["1", "0", "1"]));
}

#[test]
fn charpoly_algorithms_agree_byte_for_byte() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m.json");
    let ctx = RingContext::binary_field(4, 0x13).unwrap();
    let mut rng = hadamard_algebra::SeedStream::new(5);
    write_matrix(&path, &RingMatrix::random(&ctx, 4, 4, &mut rng));

    let a = hadamard(&[
        "charpoly",
        "--in",
        path.to_str().unwrap(),
        "--algo",
        "berkowitz",
    ]);
    let b = hadamard(&[
        "charpoly",
        "--in",
        path.to_str().unwrap(),
        "--algo",
        "minors",
    ]);
    assert_eq!(exit_code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn oversize_minors_request_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("big.json");
    let ctx = RingContext::gf(1).unwrap();
    write_matrix(&path, &RingMatrix::identity(ctx, 7));

    let out = hadamard(&[
        "charpoly",
        "--in",
        path.to_str().unwrap(),
        "--algo",
        "minors",
    ]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn missing_input_file_exits_two() {
    let out = hadamard(&["charpoly", "--in", "/nonexistent/m.json"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn analyze_starkad_like_stays_within_bound() {
    let out = hadamard(&[
        "analyze",
        "--starkad-like",
        "--ring",
        "gf2:8:0x11b",
        "--t",
        "16",
        "--k",
        "2",
    ]);
    assert_eq!(exit_code(&out), 0, "{out:?}");
    let report: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(report["s"], 4);
    assert_eq!(report["bound_new"], 8);
    assert_eq!(report["bound_old"], 12);
    assert!(report["l"].as_u64().unwrap() <= 8);
}

#[test]
fn analyze_identity_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("id16.json");
    let ctx = RingContext::binary_field(8, 0x11B).unwrap();
    write_matrix(&path, &RingMatrix::identity(ctx, 16));

    let out = hadamard(&["analyze", "--in", path.to_str().unwrap(), "--k", "1"]);
    assert_eq!(exit_code(&out), 0);
    let report: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(report["l"], 1);
    assert_eq!(report["dim_lower_bound"], 15);
}

#[test]
fn analyze_non_block_matrix_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("notblock.json");
    let ctx = RingContext::gf(1).unwrap();
    let mut m = RingMatrix::identity(ctx.clone(), 4);
    m.set(0, 1, ctx.one()).unwrap();
    write_matrix(&path, &m);

    let out = hadamard(&["analyze", "--in", path.to_str().unwrap(), "--k", "2"]);
    assert_eq!(exit_code(&out), 1);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("block (0,0)"), "stderr: {err}");
}

#[test]
fn nilpotency_campaign_passes() {
    let out = hadamard(&[
        "nilpotency",
        "--ring",
        "quot:0x4",
        "--k",
        "3",
        "--samples",
        "25",
        "--seed",
        "3",
    ]);
    assert_eq!(exit_code(&out), 0, "{out:?}");
    let report: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(report["canonical_product_ok"], true);
    assert_eq!(report["violations_total"], 0);
}

#[test]
fn cauchy_builds_and_detects() {
    let out = hadamard(&[
        "cauchy",
        "--ring",
        "gf2:4:0x13",
        "--starkad-like",
        "--t",
        "4",
        "--detect-k",
        "1",
    ]);
    assert_eq!(exit_code(&out), 0, "{out:?}");
    let block: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(block["s"], 2);
    assert_eq!(block["k"], 1);

    // explicit generators, matrix output, frozen first row
    let out = hadamard(&[
        "cauchy",
        "--ring",
        "gf2:4:0x13",
        "--x",
        "0,1,2,3",
        "--y",
        "4,5,6,7",
    ]);
    assert_eq!(exit_code(&out), 0);
    let matrix: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(matrix["rows"], 4);
    assert_eq!(matrix["entries"][0], "d");

    // x_i + y_j = 0 must be rejected
    let out = hadamard(&["cauchy", "--ring", "gf2:4:0x13", "--x", "1,2", "--y", "3,1"]);
    assert_eq!(exit_code(&out), 2);
}

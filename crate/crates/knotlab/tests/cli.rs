//! End-to-end tests of the `knotlab` binary: subcommands, file formats,
//! and exit codes (0 success, 1 verification failure, 2 input error).

use std::path::PathBuf;
use std::process::{Command, Output};

fn knotlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_knotlab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

fn fixture(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "data", name].iter().collect();
    path.to_string_lossy().to_string()
}

fn tmpdir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("knotlab-cli-{tag}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn invariants_of_a_braid_word() {
    let out = knotlab(&["invariants", "braid 2: 1 1 1"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["invariants"]["determinant"], 3);
    assert_eq!(report["invariants"]["signature"], -2);
    assert_eq!(report["fibered"]["status"], "FIBERED");
}

#[test]
fn invariants_accepts_table_names_and_pd_text() {
    let out = knotlab(&["invariants", "4_1"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["invariants"]["determinant"], 5);

    let out = knotlab(&["invariants", "X[3,6,4,1] X[1,4,2,5] X[5,2,6,3]"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["invariants"]["determinant"], 3);
    // Diagram-only input: no signature route.
    assert!(report["invariants"]["signature"].is_null());
}

#[test]
fn invariants_rejects_garbage_with_exit_2() {
    let out = knotlab(&["invariants", "braid 2: 7"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn invariants_reads_at_files() {
    let dir = tmpdir("atfile");
    let path = dir.join("word.txt");
    std::fs::write(&path, "braid 2: 1 1 1 1 1\n").unwrap();
    let out = knotlab(&["invariants", &format!("@{}", path.display())]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["invariants"]["determinant"], 5);
    assert_eq!(report["invariants"]["signature"], -4);
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn extend_then_reduce_round_trip() {
    let dir = tmpdir("extend");
    let matrix_path = dir.join("trefoil.json");
    std::fs::write(
        &matrix_path,
        r#"{"size":2,"rows":[[-1,1],[0,-1]]}"#,
    )
    .unwrap();
    let out = knotlab(&[
        "extend",
        matrix_path.to_str().unwrap(),
        "--n",
        "2",
        "--q",
        "2,-3",
        "--out",
        dir.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let family: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(family["matrix"]["size"], 6);
    assert_eq!(family["report"]["invariants_equal"], true);
    assert_eq!(family["report"]["reduction_replays_to_base"], true);

    // Feed the extended matrix back through `reduce` with auto-detection.
    let extended_path = dir.join("extended.json");
    std::fs::write(
        &extended_path,
        serde_json::to_string(&family["matrix"]).unwrap(),
    )
    .unwrap();
    let out = knotlab(&["reduce", extended_path.to_str().unwrap()]);
    assert!(out.status.success());
    let reduction: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(reduction["sites"], serde_json::json!([2, 4]));
    assert_eq!(reduction["reduced"]["size"], 2);
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn reduce_rejects_non_extensions_with_exit_2() {
    let dir = tmpdir("reduce");
    let path = dir.join("plain.json");
    std::fs::write(&path, r#"{"size":2,"rows":[[-1,1],[0,-1]]}"#).unwrap();
    let out = knotlab(&["reduce", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn verify_bundled_fixture_passes() {
    let out = knotlab(&["verify", &fixture("trefoil_unknot_q1.json")]);
    assert!(out.status.success());
    let cert: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(cert["verdict"], "PASS");
    assert_eq!(cert["distinctness"], "jones");
}

#[test]
fn verify_three_site_fixture_passes_with_seven_subsets() {
    let out = knotlab(&["verify", &fixture("trefoil_unknot_n3.json")]);
    assert!(out.status.success());
    let cert: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(cert["verdict"], "PASS");
    assert_eq!(cert["records"].as_array().unwrap().len(), 7);
}

#[test]
fn verify_mismatched_target_fails_with_exit_1() {
    let dir = tmpdir("verify");
    let bad = serde_json::json!({
        "base": {"pd": "X[3,1,4,6] X[1,5,2,4] X[5,3,6,2]"},
        "twist_sites": [{"crossings": [0], "q": 1}],
        "target": "3_1",
        "n": 1
    });
    let path = dir.join("bad.json");
    std::fs::write(&path, serde_json::to_string(&bad).unwrap()).unwrap();
    let out = knotlab(&["verify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let cert: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(cert["verdict"], "FAIL");
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn bracket_prints_the_identity() {
    let out = knotlab(&["bracket", "--n", "4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("collapse: K@0/1 - K'@0/1"));
    assert!(text.contains("C(4,k) = -1"));
}

#[test]
fn table_runs_bundled_and_custom_csv() {
    let out = knotlab(&["table"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("0 oracle failures"));

    let dir = tmpdir("table");
    let csv = dir.join("two.csv");
    std::fs::write(&csv, "name,strands,word,fibered,genus\nk1,2,1 1 1,1,1\n").unwrap();
    let out = knotlab(&["table", csv.to_str().unwrap(), "--out", dir.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(dir.join("k1.json").exists());
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn outputs_are_deterministic() {
    let a = knotlab(&["invariants", "braid 3: 1 -2 1 -2"]);
    let b = knotlab(&["invariants", "braid 3: 1 -2 1 -2"]);
    assert_eq!(stdout(&a), stdout(&b));
}

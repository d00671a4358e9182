use std::path::Path;
use std::process::{Command, Output};

use jw_core::grouppres::braid_permutation;
use serde_json::Value;

fn jw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jw"))
        .args(args)
        .env_remove("JW_CACHE_DIR")
        .env("RUST_LOG", "warn")
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = jw(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json_of(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    serde_json::from_str(&stdout_of(&full)).unwrap()
}

fn csv_rows(args: &[&str]) -> (Vec<String>, Vec<Vec<String>>) {
    let mut full = args.to_vec();
    full.extend(["--format", "csv"]);
    let text = stdout_of(&full);
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let header = reader.headers().unwrap().iter().map(String::from).collect();
    let rows = reader.records().map(|r| r.unwrap().iter().map(String::from).collect()).collect();
    (header, rows)
}

fn json_cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

const COMMANDS: &[&[&str]] = &[
    &["witt", "--n", "3", "--k", "1..6"],
    &["ranks", "--n", "4", "--kmax", "5"],
    &["hall", "--n", "2", "--k", "5"],
    &["trace", "--n", "3", "--k", "5", "--mode", "bar"],
    &["trace", "--n", "3", "--k", "4", "--mode", "tilde"],
    &["image", "--n", "3", "--k", "4"],
    &["calpha", "--k", "6"],
    &["table7", "--n", "3"],
    &["table8", "--kmax", "6"],
    &["n3gap", "--kmax", "5"],
    &["coker", "--n", "3", "--k", "4"],
    &["t0530", "--n", "3", "--k", "4"],
    &["egens", "--n", "3"],
    &["h1", "--group", "braid", "--n", "4"],
    &["h2", "--n", "4"],
    &["abelianize", "--group", "bp", "--n", "4"],
];

#[test]
fn witt_csv_example() {
    assert_eq!(stdout_of(&["witt", "--n", "2", "--k", "1..4", "--format", "csv"]), "k=1,k=2,k=3,k=4\n2,1,2,3\n");
    assert_eq!(stdout_of(&["witt", "--n", "2", "--k", "11", "--format", "csv"]), "k=11\n186\n");
}

/// Computed rows. The (3,2) row is c=2, r=0 because dim L(5,(3,2)) = 2.
#[test]
fn table8_rows_through_seven() {
    let (_, rows) = csv_rows(&["table8", "--kmax", "7"]);
    let got: Vec<(String, String, String)> =
        rows.into_iter().map(|r| (r[1].clone(), r[2].clone(), r[4].clone())).collect();
    let want = [
        ("(3,2)", "2", "0"),
        ("(4,2)", "2", "0"),
        ("(3,3)", "3", "0"),
        ("(2,2,2)", "15", "1"),
        ("(5,2)", "3", "0"),
        ("(4,3)", "5", "0"),
        ("(3,2,2)", "30", "0"),
    ];
    let want: Vec<(String, String, String)> =
        want.iter().map(|(a, c, r)| (a.to_string(), c.to_string(), r.to_string())).collect();
    assert_eq!(got, want);
}

/// The torsion of the twisted `H^1` of the braid-permutation group is `Z/n`.
#[test]
fn h1_braid_permutation_json() {
    for (n, t) in [("4", 4), ("5", 5)] {
        let doc = json_of(&["h1", "--group", "bp", "--n", n, "--rep", "standard"]);
        assert_eq!(doc["free_rank"], 2);
        assert_eq!(doc["torsion"], serde_json::json!([t]));
    }
    let doc = json_of(&["h1", "--group", "sym", "--n", "6", "--rep", "perm"]);
    assert_eq!((doc["free_rank"].clone(), doc["torsion"].clone()), (0.into(), serde_json::json!([])));
}

#[test]
fn json_schema_is_stable() {
    for args in COMMANDS {
        let doc = json_of(args);
        let keys: Vec<&str> = doc.as_object().unwrap().keys().map(String::as_str).take(4).collect();
        assert_eq!(keys, ["title", "columns", "rows", "provenance"], "{args:?}");
        let width = doc["columns"].as_array().unwrap().len();
        let rows = doc["rows"].as_array().unwrap();
        assert!(!rows.is_empty(), "{args:?}");
        assert!(rows.iter().all(|r| r.as_array().unwrap().len() == width), "{args:?}");
        assert!(rows.iter().flat_map(|r| r.as_array().unwrap()).all(|v| v.is_string() || v.is_i64()), "{args:?}");
    }
}

#[test]
fn formats_carry_identical_values() {
    for args in COMMANDS {
        let (header, rows) = csv_rows(args);
        let doc = json_of(args);
        let columns: Vec<String> = doc["columns"].as_array().unwrap().iter().map(json_cell).collect();
        assert_eq!(header, columns, "{args:?}");
        let json_rows: Vec<Vec<String>> =
            doc["rows"].as_array().unwrap().iter().map(|r| r.as_array().unwrap().iter().map(json_cell).collect()).collect();
        assert_eq!(rows, json_rows, "{args:?}");
        let text = stdout_of(args);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[1].split_whitespace().collect::<Vec<_>>(), header, "{args:?}");
        for (line, row) in lines[2..].iter().zip(&rows) {
            let expect: Vec<&str> = row.iter().flat_map(|c| c.split_whitespace()).collect();
            assert_eq!(line.split_whitespace().collect::<Vec<_>>(), expect, "{args:?}");
        }
    }
}

#[test]
fn reruns_are_byte_identical() {
    for args in COMMANDS {
        for format in ["text", "csv", "json"] {
            let mut full = args.to_vec();
            full.extend(["--format", format]);
            assert_eq!(stdout_of(&full), stdout_of(&full), "{full:?}");
        }
    }
}

#[test]
fn thread_count_does_not_change_output() {
    for args in [
        &["image", "--n", "3", "--k", "6"][..],
        &["table8", "--kmax", "7"],
        &["coker", "--n", "4", "--k", "4"],
        &["trace", "--n", "4", "--k", "5"],
        &["t0530", "--n", "3", "--k", "5"],
    ] {
        let run = |t: &str| {
            let mut full = args.to_vec();
            full.extend(["--format", "json", "--threads", t]);
            stdout_of(&full)
        };
        assert_eq!(run("1"), run("4"), "{args:?}");
    }
}

#[test]
fn out_flag_writes_the_document() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ranks.csv");
    let args = ["ranks", "--n", "3", "--format", "csv"];
    let mut with_out = args.to_vec();
    with_out.extend(["--out", path.to_str().unwrap()]);
    assert_eq!(stdout_of(&with_out), "");
    assert_eq!(std::fs::read_to_string(&path).unwrap(), stdout_of(&args));
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        &["bogus"][..],
        &[],
        &["witt", "--n", "2"],
        &["witt", "--n", "2", "--k", "4..1"],
        &["witt", "--n", "2", "--k", "1..4", "--color"],
        &["trace", "--n", "3", "--k", "4", "--mode", "sideways"],
        &["h1", "--group", "nope", "--n", "4"],
        &["h1", "--group", "bp"],
        &["h1", "--group", "file"],
        &["table7", "--n", "0"],
        &["table8", "--kmax", "4"],
        &["calpha", "--k", "6", "--alpha", "3,2"],
        &["cache", "--n", "3", "--k", "4"],
        &["ranks", "--n", "3", "--format", "xml"],
    ] {
        let out = jw(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
    assert_eq!(jw(&["--help"]).status.code(), Some(0));
}

#[test]
fn consistency_checks_pass() {
    for n in ["3", "4", "5", "6"] {
        let doc = json_of(&["h2", "--n", n]);
        assert_eq!(doc["rows"][0][4], "yes");
    }
    let doc = json_of(&["egens", "--n", "4"]);
    assert_eq!(doc["rows"][0], serde_json::json!([4, 60, 60, 60, 60, "yes"]));
}

#[test]
fn file_presentation_matches_builtin() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bp4.txt");
    std::fs::write(&path, braid_permutation(4).to_text()).unwrap();
    let file = path.to_str().unwrap();
    let from_file = json_of(&["h1", "--group", "file", "--file", file, "--n", "4"]);
    let builtin = json_of(&["h1", "--group", "bp", "--n", "4"]);
    assert_eq!(from_file["free_rank"], builtin["free_rank"]);
    assert_eq!(from_file["torsion"], builtin["torsion"]);
    let ab = json_of(&["abelianize", "--group", "file", "--file", file]);
    assert_eq!((ab["free_rank"].clone(), ab["torsion"].clone()), (1.into(), serde_json::json!([2])));
    std::fs::write(&path, "a b\na c\n").unwrap();
    assert_eq!(jw(&["abelianize", "--group", "file", "--file", file]).status.code(), Some(1));
}

fn cache_run(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jw"))
        .args(args)
        .env("JW_CACHE_DIR", dir)
        .env("RUST_LOG", "warn")
        .output()
        .unwrap()
}

#[test]
fn cache_dir_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let first = cache_run(dir.path(), &["cache", "--n", "3", "--k", "6", "--format", "csv"]);
    assert_eq!(String::from_utf8(first.stdout).unwrap(), "n,k,words,source,identical\n3,6,116,generated,yes\n");
    let second = cache_run(dir.path(), &["cache", "--n", "3", "--k", "6", "--format", "csv"]);
    assert_eq!(String::from_utf8(second.stdout).unwrap(), "n,k,words,source,identical\n3,6,116,loaded,yes\n");
    let cached = cache_run(dir.path(), &["table7", "--n", "3"]);
    let plain = jw(&["table7", "--n", "3"]);
    assert_eq!(cached.stdout, plain.stdout);
    assert!(dir.path().join("lyndon-n3-k5.json").exists());
}

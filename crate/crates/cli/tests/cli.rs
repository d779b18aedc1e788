use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn data(rel: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(rel)
        .to_string_lossy()
        .into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symcap"))
        .args(args)
        .env_remove("SYMCAP_MAX_ENUM")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn with_format(args: &[&str], format: &str) -> String {
    let mut v = args.to_vec();
    v.extend(["--format", format]);
    stdout(&v)
}

fn csv_rows(text: &str) -> Vec<Vec<String>> {
    csv::Reader::from_reader(text.as_bytes())
        .records()
        .map(|r| r.unwrap().iter().map(str::to_string).collect())
        .collect()
}

fn json(text: &str) -> Value {
    serde_json::from_str(text).unwrap()
}

#[test]
fn capacity_of_ellipsoid() {
    let out = stdout(&["capacity", &data("domains/ellipsoid_1_2.json"), "--kind", "cgh", "--k", "3"]);
    assert!(out.starts_with("cgh_3 = 2 (exact)\n"), "{out}");
    assert!(out.contains("witness: gamma_2^1"));

    let out = stdout(&["capacity", &data("domains/ball_3.json"), "--kind", "cL"]);
    assert!(out.starts_with("cL = 1/3 (exact)"), "{out}");
}

#[test]
fn chain_on_ellipsoid() {
    let out = stdout(&["chain", &data("domains/ellipsoid_1_2.json"), "--k-max", "3"]);
    assert!(out.ends_with("c_L = 2/3 (attained k=3)\n"), "{out}");
    let out = stdout(&["chain", &data("domains/polydisk_2.json"), "--k-max", "4"]);
    assert!(out.contains("not attained for k <= 4"), "{out}");
}

#[test]
fn constants_equality_case() {
    let out = stdout(&["constants", "--a", "1", "--eps", "1/10", "--k", "5"]);
    for line in ["s      = 3\n", "delta  = 1/3\n", "ell0   = 3\n"] {
        assert!(out.contains(line), "missing {line:?} in {out}");
    }
    assert!(out.ends_with("HOLDS (equality)\n"));
    let out = stdout(&["constants", "--a", "1", "--eps", "1", "--k", "5"]);
    assert!(out.ends_with("HOLDS (strict)\n"), "{out}");
}

#[test]
fn spectrum_and_lch() {
    let out = stdout(&["spectrum", &data("domains/ellipsoid_1_2.json"), "--max-count", "3"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 5);
    assert!(lines[2].starts_with("1     1             1       3"), "{out}");

    let out = stdout(&["lch", &data("domains/ellipsoid_1_5h_7h.json"), "--action-cap", "2", "--k", "2"]);
    assert!(out.contains("4       gamma_1^1"), "{out}");
    assert!(out.contains("6       gamma_1^2"), "{out}");
    assert!(out.contains("curve count 1"));
    assert!(out.ends_with("g_2 = 2\n"));
}

#[test]
fn index_reports() {
    let out = stdout(&["index", &data("setups/ellipsoid_plane.json")]);
    assert!(out.contains("virtual_dimension     0"), "{out}");
    let out = stdout(&["index", &data("setups/rank_one_disk.json"), "--format", "json"]);
    let v = json(&out);
    assert_eq!(v["fredholm_index"], 6);
    assert_eq!(v["genus0_odd"]["surjective"], true);
    assert_eq!(v["adjusted_c1"], "2");
}

#[test]
fn building_exit_codes() {
    let ok = run(&["building", "validate", &data("buildings/proof_figure.json")]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("VALID"));

    let bad = run(&["building", "validate", &data("buildings/cycle.json")]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stdout).contains("NOT_TREE"));

    let over = run(&["building", "validate", &data("buildings/proof_figure.json"), "--budget", "17"]);
    assert_eq!(over.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&over.stdout).contains("ENERGY_BUDGET"));
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn malformed_inputs_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let domains = [
        ("truncated.json", r#"{"n": 2, "shape": {"kind": "ellipsoid", "#),
        ("not_json.json", "ellipsoid 1 2"),
        ("zero_axis.json", r#"{"n": 2, "shape": {"kind": "ellipsoid", "axes": ["0", "1"]}}"#),
        ("bad_rational.json", r#"{"n": 2, "shape": {"kind": "ellipsoid", "axes": ["1/0", "1"]}}"#),
        ("unknown_kind.json", r#"{"n": 2, "shape": {"kind": "torus", "a": "1"}}"#),
        ("dim_mismatch.json", r#"{"n": 3, "shape": {"kind": "ellipsoid", "axes": ["1", "2"]}}"#),
        ("empty.json", ""),
    ];
    for (name, text) in domains {
        let path = write(dir.path(), name, text);
        for args in [
            vec!["spectrum", path.as_str(), "--max-count", "3"],
            vec!["capacity", path.as_str(), "--kind", "cgh"],
            vec!["chain", path.as_str(), "--k-max", "3"],
        ] {
            let out = run(&args);
            assert_eq!(out.status.code(), Some(1), "{name} with {args:?}");
            let err = String::from_utf8_lossy(&out.stderr);
            assert!(err.starts_with("error: "), "{err}");
            assert!(out.stdout.is_empty());
        }
    }

    let out = run(&["capacity", &write(dir.path(), "t.json", "{\n  \"n\": 2,\n  oops\n}"), "--kind", "cgh"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3 column"));

    let nodes = r#"{"nodes_allowed": true, "levels": []}"#;
    let out = run(&["building", "validate", &write(dir.path(), "nodes.json", nodes)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("nodes_allowed"));

    let setup = r#"{"n": 0, "cz_pos": [1]}"#;
    let out = run(&["index", &write(dir.path(), "setup.json", setup)]);
    assert_eq!(out.status.code(), Some(1));

    for args in [
        vec!["constants", "--a", "0", "--eps", "1", "--k", "1"],
        vec!["constants", "--a", "1", "--eps", "1", "--k", "0"],
        vec!["constants", "--a", "x", "--eps", "1", "--k", "1"],
        vec!["capacity", "/nonexistent/domain.json", "--kind", "cgh"],
        vec!["spectrum", "/nonexistent/domain.json"],
        vec!["frobnicate"],
    ] {
        assert_eq!(run(&args).status.code(), Some(1), "{args:?}");
    }
}

#[test]
fn unsupported_pairs_point_to_support_matrix() {
    for args in [
        vec!["spectrum", "domains/mixed_staircase.json", "--max-count", "3"],
        vec!["capacity", "domains/mixed_staircase.json", "--kind", "cgh"],
        vec!["lch", "domains/polydisk_2.json", "--action-cap", "3"],
    ] {
        let mut args: Vec<String> = args.iter().map(|s| s.to_string()).collect();
        args[1] = data(&args[1]);
        let refs: Vec<&str> = args.iter().map(String::as_str).collect();
        let out = run(&refs);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(String::from_utf8_lossy(&out.stderr).contains("support matrix"), "{args:?}");
    }
}

#[test]
fn enumeration_limit() {
    let out = Command::new(env!("CARGO_BIN_EXE_symcap"))
        .args(["spectrum", &data("domains/ellipsoid_1_2.json"), "--max-action", "100"])
        .env("SYMCAP_MAX_ENUM", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("SYMCAP_MAX_ENUM"));
}

#[test]
fn formats_carry_the_same_numbers() {
    let spectrum = ["spectrum", &data("domains/ellipsoid_2_3.json"), "--max-action", "12"];
    let table = with_format(&spectrum, "table");
    let rows = csv_rows(&with_format(&spectrum, "csv"));
    let orbits = json(&with_format(&spectrum, "json"))["orbits"].as_array().unwrap().clone();
    let table_rows: Vec<Vec<String>> = table
        .lines()
        .skip(2)
        .map(|l| l.split_whitespace().map(str::to_string).collect())
        .collect();
    assert_eq!(rows, table_rows);
    assert_eq!(rows.len(), orbits.len());
    for (row, o) in rows.iter().zip(&orbits) {
        assert_eq!(row[0], o["axis"].to_string());
        assert_eq!(row[1], o["multiplicity"].to_string());
        assert_eq!(row[2], o["action"].as_str().unwrap());
        assert_eq!(row[3], o["cz"].to_string());
    }

    let constants = ["constants", "--a", "7/3", "--eps", "1/6", "--k", "4"];
    let rows = csv_rows(&with_format(&constants, "csv"));
    let v = json(&with_format(&constants, "json"));
    let table = with_format(&constants, "table");
    for row in &rows[..rows.len() - 1] {
        let j = &v[&row[0]];
        let j = j.as_str().map(str::to_string).unwrap_or_else(|| j.to_string());
        assert_eq!(row[1], j, "{}", row[0]);
        assert!(table.contains(&format!("= {}\n", row[1])));
    }

    let capacity = ["capacity", &data("domains/concave_staircase.json"), "--kind", "gtilde", "--k", "4"];
    let rows = csv_rows(&with_format(&capacity, "csv"));
    let v = json(&with_format(&capacity, "json"));
    let table = with_format(&capacity, "table");
    assert_eq!(rows[0][2], v["lower"].as_str().unwrap());
    assert_eq!(rows[0][3], v["upper"].as_str().unwrap());
    assert!(table.contains(&format!("[{}, {}]", rows[0][2], rows[0][3])), "{table}");

    let chain = ["chain", &data("domains/ellipsoid_2_3.json"), "--k-max", "6"];
    let rows = csv_rows(&with_format(&chain, "csv"));
    let v = json(&with_format(&chain, "json"));
    for (row, jr) in rows.iter().zip(v["rows"].as_array().unwrap()) {
        assert_eq!(row[2], jr["cgh_lower_over_k"].as_str().unwrap());
        assert_eq!(row[3], jr["cgh_upper_over_k"].as_str().unwrap());
    }

    let building = ["building", "validate", &data("buildings/cycle.json")];
    let out = run(&[&building[..], &["--format", "csv"]].concat());
    let rows = csv_rows(&String::from_utf8(out.stdout).unwrap());
    let out = run(&[&building[..], &["--format", "json"]].concat());
    let v = json(&String::from_utf8(out.stdout).unwrap());
    let codes: Vec<&str> = v["violations"].as_array().unwrap().iter().map(|x| x["code"].as_str().unwrap()).collect();
    assert_eq!(rows.iter().map(|r| r[0].as_str()).collect::<Vec<_>>(), codes);
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["chain".to_string(), data("domains/ellipsoid_1_5h_7h.json"), "--k-max".into(), "12".into(), "--format".into(), "json".into()],
        vec!["building".into(), "validate".into(), data("buildings/proof_figure.json"), "--format".into(), "json".into()],
        vec!["lch".into(), data("domains/ellipsoid_2_3.json"), "--action-cap".into(), "20".into(), "--k".into(), "3".into()],
    ] {
        let refs: Vec<&str> = args.iter().map(String::as_str).collect();
        let a = run(&refs);
        let b = run(&refs);
        assert_eq!(a.stdout, b.stdout);
        assert!(!String::from_utf8_lossy(&a.stdout).contains('.'), "float-looking output");
    }
}

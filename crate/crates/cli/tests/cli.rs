use std::process::{Command, Output};

use serde_json::Value;

fn qlogic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qlogic"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = qlogic(&all);
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}", String::from_utf8_lossy(&out.stderr));
    });
    (v, out.status.code().unwrap())
}

fn write_temp(contents: &str) -> tempfile::NamedTempFile {
    let f = tempfile::NamedTempFile::new().unwrap();
    std::fs::write(f.path(), contents).unwrap();
    f
}

#[test]
fn shor_worked_example() {
    let (v, code) = json(&["shor", "--N", "15", "--a", "7", "--s", "64", "--seed", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["algorithm"], "shor");
    assert_eq!(v["verdict"]["factors"], serde_json::json!([3, 5]));
    let geometry = v["geometry"].as_array().unwrap();
    assert!(
        geometry
            .iter()
            .any(|g| g["support"] == serde_json::json!([0, 16, 32, 48])
                && g["contains_final"] == true)
    );
}

#[test]
fn simon_outcomes_stay_in_support() {
    let (v, code) = json(&["simon", "--n", "3", "--r", "1", "--seed", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"]["bits"], "001");
    for t in v["trace"].as_array().unwrap() {
        let y = t["outcome"].as_u64().unwrap();
        assert!([0b000, 0b010, 0b100, 0b110].contains(&y));
    }
    let (v, _) = json(&["simon", "--n", "3", "--r", "0b111", "--seed", "4"]);
    assert_eq!(v["verdict"]["r"], 7);
}

#[test]
fn deutsch_constant_is_never_balanced() {
    for seed in 0..20 {
        let s = seed.to_string();
        let (v, code) = json(&["deutsch", "--oracle", "constant0", "--seed", &s]);
        assert_ne!(v["verdict"]["kind"], "balanced");
        match v["verdict"]["kind"].as_str().unwrap() {
            "constant" => assert_eq!(code, 0),
            "inconclusive" => assert_eq!(code, 2),
            other => panic!("unexpected verdict {other}"),
        }
    }
}

#[test]
fn cleve_and_dj() {
    let (v, code) = json(&["cleve", "--oracle", "not"]);
    assert_eq!(
        (v["verdict"]["kind"].as_str().unwrap(), code),
        ("balanced", 0)
    );
    let f = write_temp(r#"{"domain_size": 4, "codomain_size": 2, "values": [1, 1, 1, 1]}"#);
    let (v, code) = json(&["dj", "--oracle-file", f.path().to_str().unwrap()]);
    assert_eq!(
        (v["verdict"]["kind"].as_str().unwrap(), code),
        ("constant", 0)
    );
}

#[test]
fn same_seed_gives_identical_bytes() {
    for args in [
        vec!["shor", "--N", "21", "--seed", "5", "--format", "json"],
        vec![
            "simon", "--n", "4", "--r", "9", "--seed", "5", "--format", "json",
        ],
        vec![
            "deutsch", "--oracle", "identity", "--seed", "5", "--format", "json",
        ],
    ] {
        let a = qlogic(&args);
        let b = qlogic(&args);
        assert!(!a.stdout.is_empty());
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn json_reports_parse_back() {
    let out = qlogic(&["shor", "--N", "15", "--seed", "2", "--format", "json"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let report = qlogic::algorithms::RunReport::from_json(&text).unwrap();
    assert_eq!(report.to_json() + "\n", text);
}

#[test]
fn malformed_oracle_files_name_the_field() {
    let cases = [
        (
            r#"{"domain_size": 2, "codomain_size": 2, "values": [0, 7]}"#,
            "values[1]",
        ),
        (
            r#"{"domain_size": 2, "codomain_size": 2, "values": [0, "x"]}"#,
            "values[1]",
        ),
        (r#"{"domain_size": 2, "codomain_size": 2}"#, "values"),
        (
            r#"{"domain_size": 2, "codomain_size": 2, "values": [0, 1], "extra": 1}"#,
            "extra",
        ),
        (
            r#"{"domain_size": 3, "codomain_size": 2, "values": [0, 1]}"#,
            "domain_size",
        ),
    ];
    for (contents, field) in cases {
        let f = write_temp(contents);
        let out = qlogic(&["deutsch", "--oracle-file", f.path().to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(1), "{contents}");
        let err = String::from_utf8_lossy(&out.stderr);
        assert!(err.contains(field), "{contents}: {err}");
    }
}

#[test]
fn validation_errors_exit_1() {
    for args in [
        vec!["shor", "--N", "16"],
        vec!["shor", "--N", "13"],
        vec!["shor", "--N", "15", "--a", "20"],
        vec!["simon", "--n", "2", "--r", "4"],
        vec!["simon", "--n", "2"],
        vec!["deutsch", "--oracle", "maybe"],
        vec!["deutsch"],
        vec!["deutsch", "--oracle", "not", "--tolerance", "-1"],
        vec!["frobnicate"],
    ] {
        let out = qlogic(&args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn dj_rejects_broken_promise() {
    let f = write_temp(r#"{"domain_size": 4, "codomain_size": 2, "values": [0, 0, 0, 1]}"#);
    let out = qlogic(&["dj", "--oracle-file", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn inconclusive_shor_exits_2() {
    let (v, code) = json(&[
        "shor",
        "--N",
        "15",
        "--a",
        "14",
        "--s",
        "64",
        "--max-rounds",
        "3",
    ]);
    assert_eq!(code, 2);
    assert_eq!(v["conclusive"], false);
    assert_eq!(v["rounds"].as_array().unwrap().len(), 3);
}

#[test]
fn reproduce_passes_and_fails_on_impossible_tolerance() {
    let out = qlogic(&["reproduce"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(!text.contains("FAIL"));
    assert!(text.contains("PASS  shor_post_qft_distribution"));

    let out = qlogic(&["reproduce", "--tolerance", "1e-20"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("FAIL  deutsch_planes_orthonormal"));
}

#[test]
fn reproduce_table_is_seed_independent() {
    let verdicts = |seed: u64| -> Vec<(String, bool)> {
        let s = seed.to_string();
        let (v, _) = json(&["reproduce", "--seed", &s]);
        v["checks"]
            .as_array()
            .unwrap()
            .iter()
            .map(|c| {
                (
                    c["name"].as_str().unwrap().to_string(),
                    c["passed"].as_bool().unwrap(),
                )
            })
            .collect()
    };
    let base = verdicts(0);
    for seed in 1..10 {
        assert_eq!(verdicts(seed), base);
    }
}

#[test]
fn geometry_listings() {
    let (v, code) = json(&["geometry", "shor", "--N", "15", "--a", "7", "--s", "64"]);
    assert_eq!(code, 0);
    let subs = v["subspaces"].as_array().unwrap();
    assert!(subs
        .iter()
        .any(|s| s["support"] == serde_json::json!([0, 16, 32, 48])));
    let rel = v["relations"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["left"] == "period_subspace_r2" && r["right"] == "period_subspace_r4")
        .unwrap();
    assert_eq!(rel["left_within_right"], true);

    let (v, _) = json(&["geometry", "simon", "--n", "2"]);
    for r in v["relations"].as_array().unwrap() {
        assert_eq!(r["meet_dimension"], 1);
        assert_eq!(r["commute"], true);
    }
    let (v, _) = json(&["geometry", "deutsch"]);
    let rel = &v["relations"][0];
    assert_eq!(
        (rel["meet_dimension"].as_u64(), rel["commute"].as_bool()),
        (Some(1), Some(true))
    );

    let (v, _) = json(&["geometry", "shor", "--s", "66"]);
    assert!(v["notes"]
        .as_array()
        .unwrap()
        .iter()
        .any(|n| n.as_str().unwrap().contains("r = 4 excluded")));
}

use std::process::{Command, Output};

fn qonsager(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qonsager")).arg("run").args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn ybe_passes() {
    let o = qonsager(&["--suite", "ybe"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.starts_with("PASS  ybe"), "{s}");
    assert!(s.ends_with("1 checks, 0 failed\n"));
}

#[test]
fn json_is_deterministic_and_follows_the_schema() {
    let args = ["--suite", "re", "--sites", "1", "--format", "json"];
    let a = qonsager(&args);
    let b = qonsager(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["meta"]["seed"], "identity");
    assert_eq!(v["meta"]["config"]["sites"], 1);
    assert!(v["meta"]["version"].is_string());
    let results = v["results"].as_array().unwrap();
    assert_eq!(results.len(), 3);
    for r in results {
        assert_eq!(r["suite"], "re");
        assert_eq!(r["status"], "pass");
        assert!(r["relation_id"].as_str().unwrap().starts_with("RE["));
    }
}

#[test]
fn solved_seed_is_recorded() {
    let o = qonsager(&["--suite", "re", "--sites", "0", "--seed", "solved(0)", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["meta"]["seed"], "solved(0)");
}

#[test]
fn report_goes_to_the_output_file() {
    let path = std::env::temp_dir().join(format!("qonsager-cli-{}.json", std::process::id()));
    let o = qonsager(&["--suite", "rll", "--spins", "1,2", "--format", "json", "--output", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["results"].as_array().unwrap().len(), 2);
    std::fs::remove_file(path).unwrap();
}

#[test]
fn invalid_configs_are_usage_errors() {
    for args in [
        &["--order", "0"][..],
        &["--sites", "3"],
        &["--suite", "nope"],
        &["--seed", "solved(x)"],
        &["--format", "yaml"],
        &["--numeric-q", "1"],
    ] {
        let o = qonsager(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn dimension_cap_has_its_own_exit_code() {
    let o = qonsager(&["--suite", "currents", "--max-dim", "4"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("CAP-EXCEEDED currents       cap"), "{}", stdout(&o));
}

#[test]
fn undressed_modes_are_flagged_trivial() {
    let o = qonsager(&["--suite", "aq", "--sites", "0"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("trivial-base"));
    assert!(s.contains("W0 and W1 commute"));
}

#[test]
fn missing_seed_fails() {
    let o = qonsager(&["--suite", "re", "--seed", "solved(999)"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL  re             setup"));
}

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schurforge")).args(args).env_remove("SCHURFORGE_SEED").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn small_commands() {
    let o = run(&["lr", "1", "1", "2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "1\n");
    assert_eq!(stdout(&run(&["schur-dim", "2,1", "2"])), "2\n");
    assert_eq!(stdout(&run(&["partitions", "3"])), "3\n2,1\n1,1,1\n");
    assert_eq!(stdout(&run(&["ev", "--class", "1 + q^2", "--schur", "1,1"])), "q^2\n");
    assert_eq!(stdout(&run(&["ev", "--class", "1 - q", "--schur", "s[1,1]"])), "-q + q^2\n");
    assert_eq!(stdout(&run(&["adams", "--series", "1 + 2*t + t^2", "--n", "3"])), "1 + 2*t + t^2\n");
}

#[test]
fn char_series_and_decomposition() {
    let o = run(&["char-series", "--rep", "perm:sym3", "--element", "(1 2)", "--order", "3"]);
    assert!(o.status.success());
    // eigenvalues 1, 1, -1
    assert_eq!(stdout(&o), "series: 1 + t - t^2 - t^3\nghosts: [1, 3, 1]\n");
    let o = run(&["schur-decompose", "--dims", "{0:2}", "--n", "2"]);
    let text = stdout(&o);
    assert!(text.contains("2: {0:3}"));
    assert!(text.contains("1,1: {0:1}"));
    assert!(text.ends_with("consistent\n"));
}

#[test]
fn json_lines() {
    let o = run(&["--json", "char-table", "3"]);
    let lines: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 4);
    assert_eq!(lines[2]["partition"], "2,1");
    assert_eq!(lines[2]["values"], serde_json::json!([-1, 0, 2]));
}

#[test]
fn representation_from_file() {
    let dir = std::env::temp_dir().join(format!("schurforge-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("swap.json");
    std::fs::write(
        &path,
        r#"{"group": "sym2", "object": "{0:2}", "generators": [{"element": "(1 2)", "matrix": [[0, 1], [1, 0]]}]}"#,
    )
    .unwrap();
    let o = run(&["char-series", "--rep", path.to_str().unwrap(), "--element", "(1 2)", "--order", "2"]);
    std::fs::remove_dir_all(&dir).ok();
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout(&o), "series: 1 - t^2\nghosts: [0, 2]\n");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["lr", "1", "x", "2"]).status.code(), Some(2));
    assert_eq!(run(&["partitions"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["char-series", "--rep", "perm:sym3", "--element", "(1 4)", "--order", "2"]).status.code(), Some(2));
    let o = run(&["verify", "adams"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("suite adams: 4/4 passed"));
    // a tensor cap too small for the checks turns them into failures
    let o = run(&["--bound", "4", "verify", "schur"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));
}

#[test]
fn output_is_deterministic() {
    let a = run(&["--json", "--seed", "11", "verify", "witt"]);
    let b = run(&["--json", "--seed", "11", "verify", "witt"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let env = Command::new(env!("CARGO_BIN_EXE_schurforge"))
        .args(["--json", "verify", "witt"])
        .env("SCHURFORGE_SEED", "11")
        .output()
        .unwrap();
    assert_eq!(env.stdout, a.stdout);
}

#[test]
fn full_run_reports_complete_coverage() {
    let o = run(&["--json", "verify", "all"]);
    assert!(o.status.success());
    let last: serde_json::Value = serde_json::from_str(stdout(&o).lines().last().unwrap()).unwrap();
    assert_eq!(last["missing"], serde_json::json!([]));
    assert!(last["coverage"].as_array().unwrap().len() >= 40);
}

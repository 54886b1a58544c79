use std::process::{Command, Output};

fn orbitdual(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_orbitdual")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_rank_pairs() {
    let o = orbitdual(&["verify", "--case", "A10", "n=2", "m=3", "--seed", "42"]);
    assert_eq!(o.status.code(), Some(0));
    let r: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r["ok"], true);
    assert_eq!(r["seed"], 42);
    let duals: Vec<(u64, u64)> = r["labels"]
        .as_array()
        .unwrap()
        .iter()
        .map(|l| (l["expected"]["r"].as_u64().unwrap(), l["expected"]["s"].as_u64().unwrap()))
        .collect();
    assert_eq!(duals, [(3, 2), (2, 2), (2, 0), (1, 0), (0, 0)]);
}

#[test]
fn dim_and_classify() {
    let o = orbitdual(&["dim", "--case", "A4", "--label", "O1"]);
    assert_eq!(stdout(&o).trim(), "17");
    let o = orbitdual(&["classify", "--case", "A1", "q=2", "p=2", "--vector", "zeros"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), r#"{"variant":"Index","i":0}"#);
    let json_case = r#"{"family":"A10","params":{"n":1,"m":2}}"#;
    let o = orbitdual(&["classify", "--case", json_case, "--vector", r#"["1","0","0","0"]"#]);
    assert_eq!(stdout(&o).trim(), r#"{"variant":"RankPair","r":1,"s":0}"#);
}

#[test]
fn exit_codes() {
    assert_eq!(orbitdual(&["dim", "--case", "A4", "--label", "O9"]).status.code(), Some(2));
    assert_eq!(orbitdual(&["dim", "--case", "A11", "--label", "O1"]).status.code(), Some(2));
    assert_eq!(orbitdual(&["classify", "--case", "A2", "n=2", "--vector", "[\"1\"]"]).status.code(), Some(2));
    assert_eq!(orbitdual(&["frobnicate"]).status.code(), Some(2));
    let o = orbitdual(&["dual", "--case", "A2", "n=2", "--label", "O1"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn diagram_formats() {
    let dot = stdout(&orbitdual(&["diagram", "--case", "A10", "n=2", "m=3"]));
    let golden = include_str!("../../core/tests/golden/a10_n2_m3.dot");
    assert_eq!(dot, golden);
    let json = stdout(&orbitdual(&["diagram", "--case", "A10", "n=2", "m=3", "--format", "json"]));
    let p: orbitdual::OrbitPoset = serde_json::from_str(&json).unwrap();
    assert_eq!(p.labels.len(), 5);
}

#[test]
fn cones_from_file() {
    let dot = stdout(&orbitdual(&["cones"]));
    assert_eq!(dot.matches(" -> ").count(), 6);
    let dir = std::env::temp_dir().join(format!("orbitdual-cones-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("system.json");
    std::fs::write(&path, r#"{"r":2,"roots":[["1","-1"]]}"#).unwrap();
    let o = orbitdual(&["cones", "--system", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let d: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(d["faces"], serde_json::json!([[1, 2], [2], []]));
    std::fs::write(&path, r#"{"r":2,"roots":[["1"]]}"#).unwrap();
    assert_eq!(orbitdual(&["cones", "--system", path.to_str().unwrap()]).status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn semiinv_passes() {
    let o = orbitdual(&["semiinv", "--n", "3", "--trials", "20", "--seed", "7"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().filter(|l| l.ends_with(" ok")).count(), 6);
}

#[test]
fn catalog_dump_round_trips() {
    let o = orbitdual(&["catalog", "--case", "A2", "n=2"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["dim"], 3);
    let g: orbitdual::Matrix = serde_json::from_value(v["generators"][0].clone()).unwrap();
    assert_eq!((g.rows(), g.cols()), (3, 3));
}

#[test]
fn verify_all_is_deterministic() {
    let a = orbitdual(&["verify-all", "--seed", "42"]);
    let b = orbitdual(&["verify-all", "--seed", "42"]);
    assert_eq!(a.status.code(), Some(0));
    assert!(!a.stdout.is_empty());
    assert_eq!(a.stdout, b.stdout);
}

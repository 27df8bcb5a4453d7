use std::path::PathBuf;
use std::process::{Command, Output};

fn fano(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fano")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let o = fano(&all);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn report_components_and_emptiness() {
    let v = json(&["report", "-n", "6", "-r", "6", "-k", "10"]);
    assert_eq!(v["graph"]["component_count"], 2);
    assert_eq!(v["irreducible"], false);
    assert_eq!(v["conjecture"]["label"], "conjecture");
    let empty = json(&["report", "-n", "6", "-r", "6", "-k", "15"]);
    assert_eq!(empty["empty"], true);
}

#[test]
fn rectangular_report_has_no_irreducibility() {
    let v = json(&["report", "--variant", "rect", "-m", "3", "-n", "4", "-r", "3", "-k", "5"]);
    assert!(v.get("irreducible").is_none());
    assert_eq!(v["kappa"], serde_json::json!([5, 5, 7]));
}

#[test]
fn graph_dot() {
    let o = fano(&["graph", "-n", "6", "-r", "6", "-k", "9"]);
    let dot = stdout(&o);
    assert!(dot.starts_with("graph fano {"));
    assert_eq!(dot.matches(" -- ").count(), 3);
}

#[test]
fn tangent_points() {
    let v = json(&["tangent", "--point", "middle", "-n", "3", "-r", "3", "-k", "1"]);
    let dims: Vec<_> = v["reports"].as_array().unwrap().iter().map(|r| r["tangent_dim"].clone()).collect();
    assert_eq!(dims, vec![serde_json::json!(4), serde_json::json!(4)]);

    let v = json(&["tangent", "--point", "random-general", "-n", "5", "-r", "4", "-k", "1", "--seed", "7", "--method", "chart"]);
    assert_eq!(v["reports"][0]["tangent_dim"], 20);
    assert_eq!(v["reports"][0]["seed"], 7);

    let v = json(&["tangent", "--point", "standard", "-n", "4", "-r", "4", "-s", "1", "--field", "rational"]);
    assert_eq!(v["reports"][0]["tangent_dim"], v["reports"][1]["tangent_dim"]);
}

#[test]
fn generic_matrix_is_not_on_the_scheme() {
    let path = scratch(
        "generic3.json",
        r#"{"rows":3,"cols":3,"symmetry":"symmetric","entries":[["z0","z1","z2"],["z1","z3","z4"],["z2","z4","z5"]]}"#,
    );
    let o = fano(&["tangent", "--file", path.to_str().unwrap(), "-r", "3"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("rows [0, 1, 2]"));
}

#[test]
fn tangent_from_file() {
    let path = scratch(
        "kron.json",
        r#"{"rows":3,"cols":3,"symmetry":"symmetric","entries":[["0","z0","z1"],["z0","0","0"],["z1","0","0"]]}"#,
    );
    let v = json(&["tangent", "--file", path.to_str().unwrap(), "-r", "3"]);
    assert_eq!(v["reports"][0]["tangent_dim"], 4);
}

#[test]
fn verify_exit_codes() {
    assert_eq!(fano(&["verify", "jensen"]).status.code(), Some(0));
    assert_eq!(fano(&["verify", "no-such-suite"]).status.code(), Some(2));
    assert_eq!(fano(&["report", "-n", "3", "-r", "7"]).status.code(), Some(2));
}

#[test]
fn config_file_sets_defaults() {
    let path = scratch("fano.toml", "field = \"rational\"\nseed = 3\n");
    let v = json(&["--config", path.to_str().unwrap(), "tangent", "--point", "middle", "-n", "3", "-k", "1", "--method", "chart"]);
    assert_eq!(v["reports"][0]["field"], "Q");
    let bad = scratch("bad.toml", "colour = 1\n");
    assert_eq!(fano(&["--config", bad.to_str().unwrap(), "report", "-n", "3", "-r", "3"]).status.code(), Some(2));
}

#[test]
fn scans_stream_json_lines() {
    let o = fano(&["scan", "grid", "--max-n", "4"]);
    let lines: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert!(lines.len() > 5);
    assert!(lines.iter().all(|l| l["params"]["variant"]["tag"] == "symmetric"));

    let o = fano(&["scan", "points", "--variant", "alt", "-n", "4", "-r", "4", "-k", "0", "-q", "3"]);
    let text = stdout(&o);
    let last: serde_json::Value = serde_json::from_str(text.lines().last().unwrap()).unwrap();
    assert_eq!(last["summary"]["tested"], 364);
    assert_eq!(last["summary"]["points"], 130);
}

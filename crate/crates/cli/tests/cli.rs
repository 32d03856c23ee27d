use std::process::{Command, Output};

fn sullivan(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sullivan"))
        .args(args)
        .env_remove("SULLIVAN_SEED")
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn bundled_models_validate() {
    for m in [
        "s2",
        "s3",
        "heisenberg",
        "three-step",
        "non-coformal",
        "random",
    ] {
        let o = sullivan(&["validate", "--model", m]);
        assert_eq!(code(&o), 0, "{m}: {}", stdout(&o));
    }
}

#[test]
fn injected_failures() {
    assert_eq!(code(&sullivan(&["validate", "--model", "so3"])), 1);
    assert_eq!(code(&sullivan(&["validate", "--model", "d-squared"])), 1);
    let broken = sullivan(&["validate", "--model", "broken"]);
    assert_eq!(code(&broken), 2);
    assert!(String::from_utf8_lossy(&broken.stderr).contains("line 5"));
}

#[test]
fn input_errors() {
    assert_eq!(
        code(&sullivan(&["validate", "--model", "/no/such/file.sm"])),
        2
    );
    assert_eq!(code(&sullivan(&["classify"])), 2);
    assert_eq!(code(&sullivan(&["whitehead", "--c", "0"])), 2);
}

#[test]
fn model_from_path() {
    let dir = std::env::temp_dir().join(format!("sullivan-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("m.sm");
    std::fs::write(
        &path,
        "model m maxdeg 3\ngen x deg 1\ngen y deg 1\ngen z deg 1\nd z = x*y\n",
    )
    .unwrap();
    let o = sullivan(&["classify", "--json", "--model", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(
        v["checks"][0]["witness"]["classification"],
        "2-step nilpotent, coformal"
    );
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn heisenberg_bounds() {
    let o = sullivan(&["bounds", "--json", "--model", "heisenberg"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let checks = v["checks"][0]["children"].as_array().unwrap();
    let find = |name: &str| checks.iter().find(|c| c["check"] == name).unwrap().clone();
    assert_eq!(find("upper exponent")["witness"]["formula"], "3n");
    assert_eq!(find("lower exponent")["witness"]["formula"], "3(n-1)");
    let printed = find("printed lower alternative");
    assert_eq!(printed["status"], "flagged");
    assert_eq!(printed["witness"]["formula"], "n-1");
}

#[test]
fn report_fields() {
    let o = sullivan(&["whitehead", "--json", "--c", "1", "--max-k", "3"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let c = &v["checks"][0]["children"][0];
    for field in ["check", "status", "witness", "reference"] {
        assert!(c.get(field).is_some(), "missing {field}");
    }
}

#[test]
fn truncation_flag() {
    let o = sullivan(&["classify", "--json", "--model", "s2", "--truncate", "2"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["truncation"], 4);
    assert_eq!(
        v["checks"][0]["witness"]["steps"]
            .as_object()
            .unwrap()
            .len(),
        1
    );
}

#[test]
fn relative_example_is_nonzero() {
    let o = sullivan(&["homotopy-check", "--json", "--model", "relative"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let rel = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["check"] == "relative obstruction")
        .unwrap();
    assert_eq!(rel["witness"]["obstruction"][0]["B"], "u");
    assert_eq!(rel["witness"]["obstruction"][0]["vanishes"], false);
}

#[test]
fn selftest_is_deterministic() {
    let a = sullivan(&["selftest", "--json", "--seed", "42"]);
    let b = Command::new(env!("CARGO_BIN_EXE_sullivan"))
        .args(["selftest", "--json"])
        .env("SULLIVAN_SEED", "42")
        .output()
        .unwrap();
    assert_eq!(a.stdout, b.stdout);
    // the filtration criterion fails in degree 1, so the suite exits 1
    assert_eq!(code(&a), 1);
    let v: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(v["seed"], 42);
    let failing: Vec<&str> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["status"] == "fail")
        .map(|c| c["check"].as_str().unwrap())
        .collect();
    assert_eq!(failing, ["2. naive = cautious filtration"]);
}

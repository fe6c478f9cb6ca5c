use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn macdo(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_macdo"))
        .args(args)
        .env_remove("MACDO_WORKERS")
        .output()
        .expect("spawn macdo")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}{}", String::from_utf8_lossy(&out.stdout), String::from_utf8_lossy(&out.stderr))
    })
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn decompose_reports_core_quotient_and_vector() {
    let out = macdo(&["decompose", "4,4,3,2", "--t", "3"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let v = json(&out);
    assert_eq!(v["core"], "1");
    assert_eq!(v["quotient"], serde_json::json!(["1,1", "", "2"]));

    let out = macdo(&["decompose", "11,6,4,2,2,1,1,1,1,1", "--t", "6"]);
    let v = json(&out);
    assert_eq!(v["vector"], serde_json::json!([0, 1, -2, 0, 2, -1]));
    assert_eq!(v["weights"]["partition"], 30);
}

#[test]
fn vcoding_of_a_doubled_distinct_core() {
    let out = macdo(&["vcoding", "11,6,4,2,2,1,1,1,1,1", "--t", "2"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let v = json(&out);
    assert_eq!(v["v"], serde_json::json!([16, 7]));
    assert_eq!(v["g"], 6);
    assert_eq!(v["weight"], "30");
    assert_eq!(v["weight_check"], true);
}

#[test]
fn bad_input_exits_with_two() {
    for args in [
        &["vcoding", "2,1", "--t", "1"][..],
        &["decompose", "4,a", "--t", "3"],
        &["verify", "bogus"],
        &["verify", "thm11"],
        &["enumerate", "frob", "--max", "3"],
    ] {
        let out = macdo(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(stderr(&out).starts_with("error: "), "{args:?}: {}", stderr(&out));
    }
}

#[test]
fn memory_budget_refuses_large_runs() {
    let out = macdo(&["verify", "hande", "--T-cap", "400", "--q-cap", "400", "--memory-budget-mb", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("budget"), "{}", stderr(&out));
}

#[test]
fn enumerate_lists_cores_and_families() {
    let out = macdo(&["enumerate", "dd-core", "--g", "6", "--max", "30"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let lines: Vec<_> = std::str::from_utf8(&out.stdout).unwrap().lines().map(str::to_owned).collect();
    assert!(lines.iter().any(|l| l == "11,6,4,2,2,1,1,1,1,1"));
    assert_eq!(lines[0], "");

    let v = json(&macdo(&["enumerate", "sc", "--max", "4", "--format", "json"]));
    assert_eq!(v["partitions"], serde_json::json!(["", "1", "2,1", "2,2"]));
}

#[test]
fn verify_exit_codes_follow_status() {
    let out = macdo(&["verify", "no", "--T-cap", "12"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert_eq!(json(&out)["status"], "pass");

    let out = macdo(&["verify", "thm11", "--t", "1", "--T-cap", "8"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));

    // The q-analogue as stated disagrees with its hook sum at the first grade.
    let out = macdo(&["verify", "noc", "--T-cap", "2", "--q-cap", "4"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["status"], "fail");
    assert_eq!(v["first_mismatch"]["at"], "T^1 q^0");
    assert_eq!(v["notes"]["amended_product"], "pass");
}

#[test]
fn config_file_is_overridden_by_flags() {
    let dir = std::env::temp_dir().join(format!("macdo-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let conf = dir.join("run.conf");
    fs::write(&conf, "t = 1\nT-cap = 2\n").unwrap();
    let conf = conf.to_str().unwrap();

    let v = json(&macdo(&["verify", "thm11", "--config", conf]));
    assert_eq!(v["params"]["t"], 1);
    assert_eq!(v["params"]["T_cap"], "2");
    let v = json(&macdo(&["verify", "thm11", "--config", conf, "--T-cap", "3"]));
    assert_eq!(v["params"]["T_cap"], "3");

    fs::write(dir.join("bad.conf"), "colour = blue\n").unwrap();
    let out = macdo(&["verify", "no", "--config", dir.join("bad.conf").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    fs::remove_dir_all(dir).unwrap();
}

#[test]
fn reports_are_byte_identical_across_runs_and_workers() {
    let args = ["verify", "macdonald-c", "--t", "2", "--T-cap", "4"];
    let a = macdo(&args);
    let b = macdo(&[&args[..], &["--workers", "3"]].concat());
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, macdo(&args).stdout);
}

#[test]
fn golden_round_trip() {
    let dir = std::env::temp_dir().join(format!("macdo-golden-{}", std::process::id()));
    let d = dir.to_str().unwrap();
    let out = macdo(&["golden", "--dir", d, "--write", "--only", "lemma35"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let out = macdo(&["golden", "--dir", d, "--check", "--only", "lemma35"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));

    let file = dir.join("lemma35").join("t1_w60.json");
    fs::write(&file, "{}\n").unwrap();
    let out = macdo(&["golden", "--dir", d, "--check", "--only", "lemma35"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("CHANGED"));
    fs::remove_dir_all(dir).unwrap();
}

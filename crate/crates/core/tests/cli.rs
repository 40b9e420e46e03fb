use std::io::Write;
use std::process::Command;

use twograph::cli::run;

fn data(name: &str) -> String {
    format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn run_args(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let status = run(std::iter::once("twograph").chain(args.iter().copied()), &mut out, &mut err);
    (status, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> (i32, serde_json::Value) {
    let mut full = vec!["--output", "json"];
    full.extend_from_slice(args);
    let (status, out, err) = run_args(&full);
    assert!(err.is_empty(), "{err}");
    (status, serde_json::from_str(&out).unwrap())
}

#[test]
fn twin_is_periodic() {
    let twin = data("twin.json");
    let (status, v) = json(&["theta", "periodicity", "--spec", &twin]);
    assert_eq!(status, 0);
    assert_eq!(v["verdict"], "periodic");
    assert_eq!(v["witness"]["a"], 1);
    assert_eq!(v["witness"]["b"], 1);
    assert_eq!(v["witness"]["gamma"][1], serde_json::json!({"blue": "b1", "red": "r1"}));
}

#[test]
fn crossed_products() {
    let (status, v) = json(&["crossed-product", "--spec", &data("shuffle_2x3.json")]);
    assert_eq!(status, 0);
    assert_eq!((v["simple"].as_bool(), v["purely_infinite"].as_bool()), (Some(true), Some(true)));
    assert_eq!(v["doubled"]["verdict"], "no_candidate_pairs");

    let (status, v) = json(&["crossed-product", "--spec", &data("twin.json")]);
    assert_eq!(status, 0);
    assert_eq!(v["simple"], false);
}

#[test]
fn unknown_verdicts_exit_2() {
    let flip = data("flip.json");
    let (status, v) = json(&["--path-cap", "10", "theta", "periodicity", "--spec", &flip]);
    assert_eq!(status, 2);
    assert_eq!(v["verdict"], "unknown");
    let (status, _) = json(&["--path-cap", "100", "crossed-product", "--spec", &flip]);
    assert_eq!(status, 2);
    let (status, v) = json(&["--kmax", "2", "theta", "periodicity", "--spec", &flip]);
    assert_eq!(status, 0);
    assert_eq!(v["verdict"], "aperiodic");
}

#[test]
fn core_verify_passes_on_flip() {
    let (status, out, _) = run_args(&["core", "verify", "--spec", &data("flip.json"), "--max-degree", "2,2"]);
    assert_eq!(status, 0);
    assert_eq!(out.lines().count(), 12);
    assert!(out.lines().all(|l| l.starts_with("pass")), "{out}");
}

#[test]
fn normal_form_and_double() {
    let (status, out, _) = run_args(&["theta", "normal-form", "--spec", &data("twin.json"), "--word", "r0 b1"]);
    assert_eq!((status, out.trim()), (0, "b0 r1"));
    let (status, out, _) =
        run_args(&["theta", "normal-form", "--spec", &data("twin.json"), "--word", "b0 r1", "--pattern", "RB"]);
    assert_eq!((status, out.trim()), (0, "r0 b1"));
    let (status, v) = json(&["double", "--spec", &data("shuffle_2x3.json")]);
    assert_eq!(status, 0);
    assert_eq!((v["n1"].as_u64(), v["n2"].as_u64()), (Some(4), Some(9)));
    assert_eq!(v["provenance"]["blue"][3], serde_json::json!([1, 1]));
}

#[test]
fn group_commands() {
    let (status, v) = json(&["group", "classify", "--group", &data("torus3.json")]);
    assert_eq!(status, 0);
    assert_eq!(v["verdict"], "purely_infinite_simple");
    let (_, v) = json(&["group", "g123", "--group", &data("z2.json")]);
    assert_eq!(v["multiplicative_kernel"]["witness"], serde_json::json!([2, 2]));
    let (status, v) = json(&["group", "transfer", "--group", &data("z4.json"), "-a", "2", "--table", "0,1,0,0"]);
    assert_eq!(status, 0);
    assert_eq!(v["values"], serde_json::json!(["0", "0", "1/2", "0"]));
    let (status, _, err) = run_args(&["group", "transfer", "--group", &data("torus3.json"), "-a", "2", "--table", "1"]);
    assert_eq!(status, 1);
    assert!(err.contains("not a finite group"));
}

#[test]
fn reports_are_deterministic() {
    let runs = [
        vec!["theta", "periodicity", "--spec", "twin.json"],
        vec!["crossed-product", "--spec", "flip.json", "--kmax", "2"],
        vec!["core", "verify", "--spec", "flip.json", "--max-degree", "1,1", "--seed", "7"],
        vec!["group", "classify", "--group", "solenoid.json"],
        vec!["double", "--spec", "twin.json"],
    ];
    for args in runs {
        let args: Vec<String> = args.iter().map(|a| if a.ends_with(".json") { data(a) } else { a.to_string() }).collect();
        let mut full = vec!["--output".to_string(), "json".to_string()];
        full.extend(args);
        let refs: Vec<&str> = full.iter().map(String::as_str).collect();
        let first = run_args(&refs);
        let second = run_args(&refs);
        assert_eq!(first, second);
        assert!(!first.1.is_empty());
    }
}

#[test]
fn bad_specs_print_the_schema() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, r#"{{"n1": 2, "n2": 2, "theta": [[0, 0, 0, 0], [0, 1, 0, 0], [1, 0, 1, 1], [1, 1, 1, 1]]}}"#).unwrap();
    let path = file.path().to_str().unwrap();
    let (status, _, err) = run_args(&["theta", "validate", "--spec", path]);
    assert_eq!(status, 1);
    assert!(err.contains("not a bijection"), "{err}");

    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "{{\"n1\": 2}}").unwrap();
    let (status, _, err) = run_args(&["theta", "validate", "--spec", file.path().to_str().unwrap()]);
    assert_eq!(status, 1);
    assert!(err.contains("theta spec JSON"), "{err}");
}

#[test]
fn binary_forwards_exit_status() {
    let bin = env!("CARGO_BIN_EXE_twograph");
    let out = Command::new(bin).args(["theta", "periodicity", "--spec", &data("twin.json")]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("periodic at (1, 1)"));
    let out = Command::new(bin).args(["--path-cap", "10", "theta", "periodicity", "--spec", &data("flip.json")]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(bin).arg("frobnicate").output().unwrap();
    assert_eq!(out.status.code(), Some(1));
}

use std::path::Path;
use std::process::Command;

use serde_json::Value;

fn cohodist(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_cohodist")).args(args).output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let (code, stdout, stderr) = cohodist(&all);
    let value: Value = serde_json::from_str(&stdout).unwrap_or_else(|e| panic!("{args:?}: {e}\n{stdout}\n{stderr}"));
    let schema: Value = serde_json::from_str(cohodist::report::SCHEMA).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    let errors: Vec<String> = validator.iter_errors(&value).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{args:?} violates the schema: {errors:?}\n{value:#}");
    (code, value)
}

#[test]
fn every_command_emits_valid_json() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let runs: &[&[&str]] = &[
        &["info", "cp2"],
        &["homology", "rp2", "--ring", "z"],
        &["cohomology", "rp3", "--ring", "q"],
        &["cuplength", "cp2", "--ring", "z2"],
        &["zdcl", "s2", "--ring", "q"],
        &["verify", "cp2", "--scat", "--cover", "cp2"],
        &["verify", "s2", "--tc", "--cover", "s2xs2_printed"],
        &["bounds", "k5", "--scat", "--exhaustive", "2"],
        &["bounds", "s1", "--variance", "homology", "--ring", "z"],
        &["subdivide", "s2", "--out", out],
        &["product", "s1", "s2", "--out", out],
    ];
    for args in runs {
        let (code, v) = json(args);
        assert!(code == 0 || code == 1, "{args:?}: exit {code}");
        assert_eq!(v["command"], args[0]);
    }
}

#[test]
fn exit_codes_follow_the_status() {
    let (code, v) = json(&["verify", "cp2", "--scat", "--cover", "cp2"]);
    assert_eq!((code, v["status"].as_str()), (0, Some("ok")));
    assert_eq!(v["body"]["verified"], true);

    let (code, v) = json(&["verify", "s2", "--tc", "--cover", "s2xs2_printed"]);
    assert_eq!((code, v["status"].as_str()), (1, Some("not_verified")));
    assert_eq!(v["body"]["covered"], false);

    let (code, v) = json(&["bounds", "k5", "--scat", "--exhaustive", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["body"]["exact"], 2);

    let (code, _, err) = cohodist(&["info", "no_such_complex"]);
    assert_eq!(code, 2);
    assert!(err.contains("neither a file"));
    let (code, _, _) = cohodist(&["verify", "cp2", "--scat"]);
    assert_eq!(code, 2);
}

#[test]
fn files_round_trip_through_the_binary() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let (code, _, _) = cohodist(&["product", "s1", "s2", "--out", out]);
    assert_eq!(code, 0);
    let product = dir.path().join("product.complex");
    let proj = dir.path().join("proj1.map");
    assert!(Path::new(&product).exists() && Path::new(&proj).exists());
    let (code, v) = json(&["homology", product.to_str().unwrap(), "--ring", "z"]);
    assert_eq!(code, 0);
    assert_eq!(v["body"]["free_ranks"], serde_json::json!([1, 1, 1, 1]));
    // projection vs a constant map, through map files
    let s1 = dir.path().join("s1.complex");
    std::fs::write(&s1, cohodist::io::write_complex(&cohodist::fixtures::c3())).unwrap();
    let (code, v) = json(&[
        "bounds",
        product.to_str().unwrap(),
        "--phi",
        proj.to_str().unwrap(),
        "--psi",
        "const",
        "--target",
        s1.to_str().unwrap(),
        "--ring",
        "z",
    ]);
    assert_eq!(code, 0, "{v:#}");
    assert_eq!(v["body"]["exact"], 1);
}

#[test]
fn text_output_mentions_the_verdict() {
    let (code, text, _) = cohodist(&["verify", "rp3", "--scat", "--cover", "rp3"]);
    assert_eq!(code, 0);
    assert!(text.to_lowercase().contains("verified"), "{text}");
    let (_, text, _) = cohodist(&["homology", "rp2"]);
    assert!(text.contains("Z/2"), "{text}");
}

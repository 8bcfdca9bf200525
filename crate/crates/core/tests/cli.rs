use std::path::Path;
use std::process::{Command, Output};

fn hilbpers(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hilbpers"))
        .args(args)
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .output()
        .expect("hilbpers runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[track_caller]
fn expect_code(args: &[&str], code: i32) -> String {
    let out = hilbpers(args);
    assert_eq!(
        out.status.code(),
        Some(code),
        "{args:?}\nstdout: {}\nstderr: {}",
        stdout(&out),
        String::from_utf8_lossy(&out.stderr)
    );
    stdout(&out)
}

#[test]
fn verify_p1p2p1() {
    let text = expect_code(
        &["verify", "--ring", "fixtures/p1p2p1.json", "--ideal", "fixtures/exmp4.json", "--poly", "t3+1", "--anchor", "2,2,2"],
        0,
    );
    assert!(text.starts_with("d = (2,2,2)\n"), "{text}");
    assert!(text.contains("confirmed: 8 points matched"), "{text}");
}

#[test]
fn hilb_equal_value_pair() {
    assert_eq!(expect_code(&["hilb", "--ideal", "fixtures/counter1_I.json", "--degree", "3,3"], 0).trim(), "16");
    assert_eq!(expect_code(&["hilb", "--ideal", "fixtures/counter1_J.json", "--degree", "3,3"], 0).trim(), "17");
}

#[test]
fn zonotope_rank3() {
    let text = expect_code(&["zonotope", "--nef", "fixtures/rank3_C.json", "--d", "2,2,2"], 0);
    let vertices: Vec<&str> = text.lines().skip(1).map(|l| l.split('\t').nth(1).unwrap()).collect();
    assert_eq!(
        vertices,
        ["(-2,4,2)", "(-2,4,3)", "(-2,5,2)", "(-2,5,3)", "(-3,5,2)", "(-3,5,3)", "(-3,6,2)", "(-3,6,3)"]
    );
}

#[test]
fn rejected_polynomial_exits_one() {
    let text = expect_code(
        &["verify", "--ring", "fixtures/p1p2p1.json", "--ideal", "fixtures/exmp4.json", "--poly", "t3+2", "--anchor", "2,2,2"],
        1,
    );
    assert!(text.contains("rejected at (3,3,2)"), "{text}");
}

#[test]
fn input_errors_exit_two() {
    expect_code(&["hilb", "--ideal", "fixtures/missing.json", "--degree", "1,1"], 2);
    expect_code(&["frobnicate"], 2);
    expect_code(&["hilb", "--degree", "1"], 2);
    expect_code(&["growth", "5", "0"], 2);
    expect_code(&["--help"], 0);
}

#[test]
fn surjectivity_failure_exits_three() {
    let out = hilbpers(&["toric-verify", "--ring", "fixtures/weighted_p12.json"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("surjectivity"));
}

#[test]
fn every_fixture_runs() {
    let cases: &[(&[&str], i32)] = &[
        (&["hpoly", "--ideal", "fixtures/counter1_I.json"], 0),
        (&["interpolate", "--ideal", "fixtures/counter1_J.json"], 0),
        (&["verify", "--ideal", "fixtures/counter1_J.json", "--poly", "fixtures/counter1_PJ.json", "--anchor", "1,3"], 0),
        (&["verify", "--ideal", "fixtures/counter2.json"], 0),
        (&["verify", "--ideal", "fixtures/hirz_lift.json"], 0),
        (&["stanley", "--ring", "fixtures/p1p2p1.json", "--ideal", "fixtures/exmp4.json", "--anchor", "2,2,2"], 0),
        (&["decompose", "--ring", "fixtures/p1p2p1.json", "--poly", "t3+1", "--anchor", "2,2,2"], 0),
        (&["persist-point", "--ring", "fixtures/p1p2p1.json", "--poly", "t3+1", "--anchor", "2,2,2"], 0),
        (&["multilex", "--ideal", "fixtures/counter2.json", "--degree", "3,3", "--deep-check"], 0),
        (&["toric-hilb", "--ring", "fixtures/hirzebruch.json", "--degree", "0,1"], 0),
        (&["toric-verify", "--ring", "fixtures/hirzebruch.json"], 0),
        (&["toric-verify", "--ring", "fixtures/rank3.json"], 0),
        (&["zonotope", "--nef", "fixtures/rank3_C.json", "--d", "2,2,2"], 0),
        (&["gotzmann", "--poly", "3*t1+7"], 0),
        (&["growth", "16", "3", "--crona", "2"], 0),
    ];
    for (args, code) in cases {
        expect_code(args, *code);
    }
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let mut names: Vec<String> = std::fs::read_dir(dir).unwrap().map(|e| e.unwrap().file_name().into_string().unwrap()).collect();
    names.sort();
    for name in names {
        let covered = cases.iter().any(|(args, _)| args.iter().any(|a| a.ends_with(&name)))
            || name == "weighted_p12.json";
        assert!(covered, "fixture {name} is not exercised");
    }
}

#[test]
fn json_output_is_deterministic() {
    let runs: &[&[&str]] = &[
        &["--json", "verify", "--ring", "fixtures/p1p2p1.json", "--ideal", "fixtures/exmp4.json", "--poly", "t3+1"],
        &["--json", "toric-verify", "--ring", "fixtures/rank3.json"],
        &["--json", "stanley", "--ideal", "fixtures/counter2.json"],
        &["--json", "hpoly", "--ideal", "fixtures/counter1_J.json"],
    ];
    for args in runs {
        let first = hilbpers(args);
        let second = hilbpers(args);
        assert!(first.status.success(), "{args:?}");
        assert_eq!(first.stdout, second.stdout, "{args:?}");
        serde_json::from_slice::<serde_json::Value>(&first.stdout).unwrap();
    }
}

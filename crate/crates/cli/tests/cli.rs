use std::process::{Command, Output};

fn fibpart(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fibpart"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = fibpart(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn scalar_commands() {
    assert_eq!(stdout(&["fib", "26"]), "121393\n");
    assert_eq!(stdout(&["fib", "--n", "12"]), "144\n");
    assert_eq!(stdout(&["delannoy", "5"]), "1192\n");
    assert_eq!(stdout(&["delannoy", "--n", "4", "--unrestricted"]), "321\n");
    assert_eq!(stdout(&["delannoy", "3", "--format", "csv"]), "3,53\n");
}

#[test]
fn polyfit_output() {
    assert_eq!(
        stdout(&["polyfit", "--family", "d''", "--index", "2"]),
        "C(t,2)+C(t,1)-4, valid t≥6\n"
    );
    assert_eq!(
        stdout(&["polyfit", "--family", "d", "--index", "3", "--kind", "even"]),
        "C(t,3)+2C(t,2)-3C(t,1)-3, valid t≥6\n"
    );
    let json: serde_json::Value = serde_json::from_str(&stdout(&[
        "polyfit", "--family", "dp", "--index", "3", "--format", "json",
    ]))
    .unwrap();
    assert_eq!(json["expanded"], "(1/6)(t^3-19t)");
    assert_eq!(json["t_min"], 5);
}

#[test]
fn triangle_and_difftable() {
    assert_eq!(
        stdout(&["triangle", "--kind", "odd", "-t", "3"]),
        "1\n1\n1 1\n1 2 1\n"
    );
    assert_eq!(
        stdout(&["triangle", "-k", "even", "--rows", "2", "--format", "csv"]),
        "0,0,1\n1,0,1\n2,0,1\n2,1,2\n"
    );
    let rows = stdout(&["difftable", "--rows", "9"]);
    assert_eq!(rows.lines().last(), Some("1 7 27 67 102 40 9 1 0"));
}

#[test]
fn verify_small_run() {
    let out = fibpart(&["verify", "--rows", "6", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("summary:"));
    let json: serde_json::Value = serde_json::from_slice(
        &fibpart(&["verify", "-t", "0", "--n", "0", "--format", "json"]).stdout,
    )
    .unwrap();
    assert_eq!(json["t_max"], 0);
    assert!(json["notes"].as_array().is_some_and(|n| !n.is_empty()));
}

#[test]
fn exit_codes() {
    assert_eq!(
        fibpart(&["triangle", "--kind", "square", "-t", "3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        fibpart(&["triangle", "--kind", "even", "-t", "3", "--format", "xml"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(fibpart(&["fib", "0"]).status.code(), Some(2));
    assert_eq!(
        fibpart(&["polyfit", "--family", "d", "--index", "9", "-t", "10"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        fibpart(&["verify", "--format", "csv"]).status.code(),
        Some(2)
    );
    assert_eq!(
        fibpart(&["triangle", "--kind", "even", "-t", "100000"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        fibpart(&["verify", "--rows", "5000"]).status.code(),
        Some(3)
    );
    assert_eq!(fibpart(&["frobnicate"]).status.code(), Some(2));
}

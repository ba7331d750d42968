use std::path::PathBuf;
use std::process::Command;

use nabla_lmo::run;

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "data", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn go(args: &[&str]) -> nabla_lmo::Outcome {
    run(
        std::iter::once("nabla-lmo").chain(args.iter().copied()),
        None,
    )
}

#[test]
fn nabla_of_trefoil() {
    let out = go(&["nabla", "--seifert", &data("trefoil.json")]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.contains("1 + z^2"));
    assert!(out.stdout.contains("t^-1 - 1 + t"));
}

#[test]
fn nabla_of_hopf_link() {
    let out = go(&["nabla", "--seifert", &data("hopf.json")]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.contains("nabla(z) = z\n"));
}

#[test]
fn roundtrip_exits_zero() {
    let out = go(&["roundtrip", "--nabla", "1+z^2", "--tor", "1"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.ends_with("ok\n"));
}

#[test]
fn roundtrip_rejects_bad_normalization() {
    let out = go(&["roundtrip", "--nabla", "2+z^2", "--tor", "3"]);
    assert_eq!(out.code, 1);
}

#[test]
fn singular_surgery_names_the_block() {
    let out = go(&["surgery", "--linking", &data("singular-surgery.json")]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("{x, y}"), "{}", out.stderr);
}

#[test]
fn surgery_output() {
    let out = go(&["surgery", "--linking", &data("two-component-surgery.json")]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.contains("c  4/7"));
    assert!(out.stdout.contains("(1, 1)"));
    assert!(out.stdout.contains("|H_1| = 7"));
}

#[test]
fn struts_routes_agree() {
    for route in ["wick", "schur", "both"] {
        let out = go(&[
            "aarhus-struts",
            "--linking",
            &data("two-component-surgery.json"),
            "--route",
            route,
        ]);
        assert_eq!(out.code, 0, "{}", out.stderr);
        assert!(out.stdout.starts_with("exp( 2/7*s(c,c) )"));
    }
}

#[test]
fn parse_and_io_errors_exit_two() {
    assert_eq!(
        go(&["nabla", "--seifert", "/nonexistent/file.json"]).code,
        2
    );
    assert_eq!(go(&["lmo", "--nabla", "1 + z^", "--tor", "1"]).code, 2);
    assert_eq!(go(&["normalize-delta", "t + + 1"]).code, 2);
    assert_eq!(go(&["frobnicate"]).code, 2);
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"matrix": [["1", "x"]]}"#).unwrap();
    assert_eq!(go(&["mmr", "--seifert", bad.to_str().unwrap()]).code, 2);
}

#[test]
fn mathematical_rejections_exit_one() {
    // Δ with the wrong value at 1
    assert_eq!(
        go(&["normalize-delta", "t - 1 + t^-1", "--tor", "2"]).code,
        1
    );
    // multi-component Seifert matrix cannot give knot wheels
    assert_eq!(
        go(&["wheels", "--from-seifert", &data("hopf.json")]).code,
        1
    );
    // odd powers of h have no wheel expansion
    assert_eq!(go(&["wheels", "--from-series", "1 + h + O(h^4)"]).code, 1);
}

#[test]
fn order_flag_and_environment() {
    let a = go(&["mmr", "--seifert", &data("unknot.json"), "--order", "4"]);
    assert_eq!(a.stdout, "1 - 1/24*h^2 + 7/5760*h^4 + O(h^5)\n");
    let b = run(
        ["nabla-lmo", "mmr", "--seifert", &data("unknot.json")],
        Some("4"),
    );
    assert_eq!(a, b);
    let c = go(&["mmr", "--seifert", &data("unknot.json")]);
    assert!(c.stdout.ends_with("O(h^17)\n"));
}

#[test]
fn lmo_json_inverts() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("w.json");
    let out = go(&[
        "lmo",
        "--nabla",
        "1 - 2*z^2 + z^4",
        "--tor",
        "3",
        "--order",
        "10",
        "--json",
    ]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    std::fs::write(&file, &out.stdout).unwrap();
    let back = go(&["lmo", "--invert", file.to_str().unwrap()]);
    assert_eq!(back.code, 0, "{}", back.stderr);
    assert!(back.stdout.starts_with("nabla(z) = 1 - 2*z^2 + z^4\n"));
}

#[test]
fn wheels_from_series_file_and_expression() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("c.txt");
    std::fs::write(&file, "1 - 1/24*h^2 + 7/5760*h^4 + O(h^5)\n").unwrap();
    let a = go(&["wheels", "--from-series", file.to_str().unwrap()]);
    let b = go(&[
        "wheels",
        "--from-series",
        "1 - 1/24*h^2 + 7/5760*h^4 + O(h^5)",
    ]);
    assert_eq!(a, b);
    assert_eq!(a.stdout, "exp( 1/48 w2 - 1/5760 w4 + ... )\n");
}

#[test]
fn fixtures_listed() {
    let out = go(&["fixtures", "list"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    for name in ["unknot", "trefoil", "figure-eight", "twist-5", "annulus+2"] {
        assert!(out.stdout.contains(name));
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["lmo", "--nabla", "1 + z^2", "--tor", "7"];
    assert_eq!(go(&args), go(&args));
}

#[test]
fn binary_runs() {
    let exe = env!("CARGO_BIN_EXE_nabla-lmo");
    let out = Command::new(exe)
        .args(["nabla", "--seifert", &data("figure-eight.json")])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .contains("nabla(z) = 1 - z^2"));
    let out = Command::new(exe)
        .args(["surgery", "--linking", &data("singular-surgery.json")])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

use std::path::PathBuf;
use std::process::{Command, Output, Stdio};
use std::io::Write;

use casimir::cli::{run, EXIT_NONCONVERGED, EXIT_OK, EXIT_USAGE};

fn casimir(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_casimir"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn in_process(args: &[&str]) -> (i32, String, String) {
    let mut stdin: &[u8] = &[];
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("casimir").chain(args.iter().copied());
    let code = run(argv, &mut stdin, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    dir.join(format!("{}-{name}", std::process::id()))
}

#[test]
fn force_modes() {
    let (code, out, _) = in_process(&["force", "--a", "4", "--b", "3"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("repulsive"));

    let (code, out, _) = in_process(&[
        "force", "--mode", "lifshitz", "--a", "4", "--b", "3", "--model", "drude-gain", "--omega0", "10", "--json",
    ]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["mode"], "lifshitz");
    assert!(v["eta"].as_f64().unwrap() > 0.9);

    let (code, out, _) = in_process(&[
        "force", "--mode", "magnetic", "--a", "3.3", "--b", "3", "--model", "magnetic-drude", "--Omega", "5",
        "--omega0", "10", "--json",
    ]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["repulsive"], true);
}

#[test]
fn errors_name_the_offending_field() {
    let cases: &[(&[&str], &str)] = &[
        (&["force", "--a", "4"], "`b`"),
        (&["force", "--a", "-4", "--b", "3"], "`a`"),
        (&["force", "--mode", "lifshitz", "--a", "4", "--b", "3"], "`model`"),
        (&["force", "--mode", "magnetic", "--a", "4", "--b", "3", "--model", "magnetic-drude", "--omega0", "10"], "`Omega`"),
        (&["force", "--mode", "magnetic", "--a", "4", "--b", "3", "--model", "drude-gain", "--omega0", "10"], "`model`"),
        (&["levitate", "--units", "natural"], "`units`"),
        (&["levitate", "--thickness", "-1e-6"], "`thickness`"),
        (&["levitate", "--candidate", "0"], "`candidate`"),
        (&["sweep", "--b", "3", "--from", "3"], "`to`"),
        (&["kernel", "--points", "0"], "`points`"),
        (&["force", "--a", "4", "--b", "3", "--rel-tol", "-1"], "`rel_tol`"),
    ];
    for (args, field) in cases {
        let (code, _, err) = in_process(args);
        assert_eq!(code, EXIT_USAGE, "{args:?}");
        assert!(err.contains(field), "{args:?}: {err}");
    }
}

#[test]
fn usage_and_help_exit_codes() {
    assert_eq!(in_process(&["bogus"]).0, EXIT_USAGE);
    assert_eq!(in_process(&["force", "--a", "x"]).0, EXIT_USAGE);
    let (code, out, _) = in_process(&["--help"]);
    assert_eq!(code, EXIT_OK);
    for sub in ["force", "sweep", "levitate", "kernel", "permittivity"] {
        assert!(out.contains(sub));
    }
}

#[test]
fn levitation_report() {
    let (code, out, _) = in_process(&["levitate", "--json"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!((v["weight_per_area"].as_f64().unwrap() - 0.013_243_5).abs() < 1e-6);
    assert!((v["balance_distance"].as_f64().unwrap() - 0.5598e-6).abs() < 1e-10);

    let (_, out, _) = in_process(&["levitate", "--candidate", "0.5e-6", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["levitates_at_candidate"], true);

    let (code, out, _) = in_process(&["levitate", "--density", "0"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("unbounded"));
}

#[test]
fn real_axis_pole_flags_rows() {
    let (code, out, _) = in_process(&[
        "permittivity", "--model", "drude-gain", "--omega0", "10", "--from", "0", "--to", "20", "--points", "21",
    ]);
    assert_eq!(code, EXIT_NONCONVERGED);
    assert_eq!(out.lines().filter(|l| l.ends_with(",nonconverged")).count(), 1);

    let (code, _, _) = in_process(&[
        "permittivity", "--model", "drude-gain", "--omega0", "10", "--gamma", "0.1",
    ]);
    assert_eq!(code, EXIT_OK);
}

#[test]
fn kernel_table_defaults() {
    let (code, out, _) = in_process(&["kernel"]);
    assert_eq!(code, EXIT_OK);
    let rows: Vec<&str> = out.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(rows[0], "q,h,status");
    assert_eq!(rows.len(), 122);
}

#[test]
fn sweep_output_is_byte_identical() {
    let args = [
        "sweep", "--mode", "magnetic", "--b", "3", "--model", "magnetic-drude", "--Omega", "5", "--omega0", "10",
        "--from", "3.1", "--to", "5", "--points", "12",
    ];
    let first = casimir(&args);
    let second = casimir(&args);
    assert!(first.status.success());
    assert!(!first.stdout.is_empty());
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn sweep_csv_feeds_back_as_config() {
    let path = scratch("eta.csv");
    let path_str = path.to_str().unwrap();
    let out = casimir(&[
        "sweep", "--mode", "lifshitz", "--b", "3", "--model", "drude-gain", "--omega0", "10", "--from", "3",
        "--to", "5", "--points", "9", "--out", path_str,
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(out.stdout.is_empty());
    let written = std::fs::read(&path).unwrap();

    let replay = casimir(&["sweep", "--config", path_str]);
    assert!(replay.status.success());
    assert_eq!(replay.stdout, written);

    let overridden = casimir(&["sweep", "--config", path_str, "--points", "3"]);
    let text = String::from_utf8(overridden.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.ends_with(",ok")).count(), 3);
    std::fs::remove_file(path).ok();
}

#[test]
fn config_from_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_casimir"))
        .args(["force", "--config", "-", "--json"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(br#"{"mode":"ideal","a_prime":1.0}"#)
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!((v["force_per_area"].as_f64().unwrap() - 0.041_123_351_67).abs() < 1e-10);
}

#[test]
fn unknown_config_keys_are_rejected() {
    let path = scratch("bad.json");
    std::fs::write(&path, r#"{"a": 4, "bee": 3}"#).unwrap();
    let out = casimir(&["force", "--config", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(EXIT_USAGE));
    assert!(String::from_utf8_lossy(&out.stderr).contains("`config`"));
    std::fs::remove_file(path).ok();
}

#[test]
fn si_units_force() {
    let (code, out, _) = in_process(&["force", "--a-prime", "0.5e-6", "--units", "si", "--json"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!((v["force_per_area"].as_f64().unwrap() - 2.08e-2).abs() < 5e-5);
    assert_eq!(v["units"], "si");
}

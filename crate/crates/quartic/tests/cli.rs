//! End-to-end checks of the `quartic` binary: exit codes, CSV format,
//! determinism of repeated runs.

use std::path::PathBuf;
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_quartic"))
}

fn tmpdir(name: &str) -> PathBuf {
    let d = std::env::temp_dir().join(format!("quartic-cli-{name}-{}", std::process::id()));
    std::fs::create_dir_all(&d).unwrap();
    d
}

#[test]
fn table1_csv_shape_and_determinism() {
    let d = tmpdir("t1");
    let out1 = d.join("a.csv");
    let out2 = d.join("b.csv");
    for out in [&out1, &out2] {
        let st = bin()
            .args(["table", "1", "--out"])
            .arg(out)
            .status()
            .unwrap();
        assert!(st.success());
    }
    let a = std::fs::read(&out1).unwrap();
    let b = std::fs::read(&out2).unwrap();
    assert_eq!(a, b, "repeated runs must be byte-identical");
    let text = String::from_utf8(a).unwrap();
    assert!(text.starts_with("h,E0,E1,E,G0,G1,G,max_abs_dev\n"));
    assert_eq!(text.lines().count(), 10);
    assert!(!text.contains('\r'), "LF endings only");
}

#[test]
fn scan_csv_negative_energy_column() {
    let d = tmpdir("scan");
    let out = d.join("scan2.csv");
    let st = bin()
        .args([
            "scan", "--dim", "2", "--h-min", "1e-3", "--h-max", "1e3", "--points", "7", "--log",
            "--out",
        ])
        .arg(&out)
        .status()
        .unwrap();
    assert!(st.success());
    let text = std::fs::read_to_string(&out).unwrap();
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 7);
    for row in rows {
        let e0: f64 = row.split(',').nth(2).unwrap().parse().unwrap();
        assert!(e0 < 0.0, "vacuum energy must be negative: {row}");
    }
}

#[test]
fn bad_output_path_exits_2_without_partial_file() {
    let missing = PathBuf::from("/nonexistent-dir-quartic/x.csv");
    let st = bin()
        .args(["table", "1", "--out"])
        .arg(&missing)
        .status()
        .unwrap();
    assert_eq!(st.code(), Some(2));
    assert!(!missing.exists());
}

#[test]
fn unknown_flag_exits_2() {
    let st = bin().args(["table", "1", "--frobnicate"]).status().unwrap();
    assert_eq!(st.code(), Some(2));
}

#[test]
fn invalid_scan_range_exits_2() {
    let st = bin()
        .args(["scan", "--dim", "0", "--h-min", "2.0", "--h-max", "1.0"])
        .status()
        .unwrap();
    assert_eq!(st.code(), Some(2));
}

#[test]
fn wsq_fast_deterministic_and_seed_sensitive() {
    let d = tmpdir("wsq");
    let (o1, o2, o3) = (d.join("1.csv"), d.join("2.csv"), d.join("3.csv"));
    for (out, seed) in [(&o1, "7"), (&o2, "7"), (&o3, "8")] {
        let st = bin()
            .args(["--fast", "--seed", seed, "wsq", "--samples", "200000", "--out"])
            .arg(out)
            .status()
            .unwrap();
        assert!(st.success());
    }
    let a = std::fs::read(&o1).unwrap();
    assert_eq!(a, std::fs::read(&o2).unwrap());
    assert_ne!(a, std::fs::read(&o3).unwrap());
}

#[test]
fn asymptotics_reports_unsolvable_saddle_at_moderate_coupling() {
    let out = bin().args(["asymptotics", "--h", "1e8"]).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("B_saddle,unsolvable"), "{text}");
}

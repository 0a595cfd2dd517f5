//! Command-line behavior: exit codes, CSV schemas, and the run manifest.

use std::path::Path;
use std::process::{Command, Output};
use std::time::Instant;

fn run_bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_resetleak"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write_config(dir: &Path, name: &str, body: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path.to_str().unwrap().to_string()
}

const SWEEP_CONFIG: &str = r#"{
    "victim_axis": "z",
    "attacker_axis": "z",
    "otps": ["none", "cotp"],
    "reset": {"kind": "measurementless", "p_r": 0.1},
    "alphas": [0.0, 1.5707963267948966, 3.141592653589793],
    "n_shots": 400,
    "n_experiments": 3,
    "master_seed": 5
}"#;

#[test]
fn sweep_writes_the_documented_csv_schema_and_manifest() {
    let dir = tempfile::tempdir().unwrap();
    let config = write_config(dir.path(), "cfg.json", SWEEP_CONFIG);
    let out = dir.path().join("out");
    let output = run_bin(&["sweep", "--config", &config, "--out", out.to_str().unwrap()]);
    assert!(output.status.success(), "{output:?}");

    let csv = std::fs::read_to_string(out.join("sweep.csv")).unwrap();
    let mut lines = csv.lines();
    assert_eq!(
        lines.next().unwrap(),
        "reset_kind,otp,victim_axis,attacker_axis,alpha_rad,experiment_index,n_shots,p_minus_empirical,p_minus_analytic"
    );
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 2 * 3 * 3, "2 otps x 3 alphas x 3 experiments");
    for row in &rows {
        let fields: Vec<&str> = row.split(',').collect();
        assert_eq!(fields.len(), 9);
        assert_eq!(fields[0], "measurementless");
        fields[4].parse::<f64>().unwrap();
        fields[7].parse::<f64>().unwrap();
        fields[8].parse::<f64>().unwrap();
    }

    let manifest: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(out.join("manifest.json")).unwrap()).unwrap();
    assert_eq!(manifest["command"], "sweep");
    assert_eq!(manifest["outputs"], serde_json::json!(["sweep.csv"]));
    assert_eq!(manifest["master_seed"], 5);
    assert!(manifest["library_version"].as_str().unwrap().contains('.'));
    assert!(!manifest["started_at"].as_str().unwrap().is_empty());
    assert!(!manifest["finished_at"].as_str().unwrap().is_empty());
    assert_eq!(manifest["config"]["reset"]["kind"], "measurementless");
}

#[test]
fn seed_flag_overrides_the_config() {
    let dir = tempfile::tempdir().unwrap();
    let config = write_config(dir.path(), "cfg.json", SWEEP_CONFIG);
    let out_a = dir.path().join("a");
    let out_b = dir.path().join("b");
    let out_c = dir.path().join("c");
    for (out, seed) in [(&out_a, "9"), (&out_b, "9"), (&out_c, "10")] {
        let output = run_bin(&[
            "sweep",
            "--config",
            &config,
            "--out",
            out.to_str().unwrap(),
            "--seed",
            seed,
        ]);
        assert!(output.status.success());
    }
    let a = std::fs::read(out_a.join("sweep.csv")).unwrap();
    let b = std::fs::read(out_b.join("sweep.csv")).unwrap();
    let c = std::fs::read(out_c.join("sweep.csv")).unwrap();
    assert_eq!(a, b);
    assert_ne!(a, c, "a different seed should change sampled frequencies");
}

#[test]
fn config_errors_exit_with_code_two() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("out");
    let out = out.to_str().unwrap();

    // Unknown top-level field.
    let bad = write_config(
        dir.path(),
        "unknown_field.json",
        r#"{"victim_axis": "z", "attacker_axis": "z",
            "reset": {"kind": "measurementless", "p_r": 0.1}, "n_shotz": 5}"#,
    );
    let output = run_bin(&["sweep", "--config", &bad, "--out", out]);
    assert_eq!(output.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&output.stderr);
    assert!(stderr.contains("n_shotz"), "{stderr}");

    // Parameter from the wrong reset kind.
    let bad = write_config(
        dir.path(),
        "wrong_param.json",
        r#"{"victim_axis": "z", "attacker_axis": "z",
            "reset": {"kind": "thermal", "gamma1": 1.0, "gamma2": 1.0, "p_r": 0.5}}"#,
    );
    let output = run_bin(&["sweep", "--config", &bad, "--out", out]);
    assert_eq!(output.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&output.stderr).contains("p_r"));

    // Empty alpha list.
    let bad = write_config(
        dir.path(),
        "empty_alphas.json",
        r#"{"victim_axis": "z", "attacker_axis": "z",
            "reset": {"kind": "measurementless", "p_r": 0.1}, "alphas": []}"#,
    );
    let output = run_bin(&["sweep", "--config", &bad, "--out", out]);
    assert_eq!(output.status.code(), Some(2));

    // Unphysical thermal ordering.
    let bad = write_config(
        dir.path(),
        "gamma_order.json",
        r#"{"victim_axis": "z", "attacker_axis": "z",
            "reset": {"kind": "thermal", "gamma1": 3.0, "gamma2": 1.0}}"#,
    );
    let output = run_bin(&["sweep", "--config", &bad, "--out", out]);
    assert_eq!(output.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&output.stderr).contains("gamma1"));
}

#[test]
fn io_errors_exit_with_code_three() {
    let dir = tempfile::tempdir().unwrap();

    // Missing config file.
    let missing = dir.path().join("nope.json");
    let output = run_bin(&[
        "sweep",
        "--config",
        missing.to_str().unwrap(),
        "--out",
        dir.path().join("out").to_str().unwrap(),
    ]);
    assert_eq!(output.status.code(), Some(3));

    // Output directory under a regular file.
    let config = write_config(dir.path(), "cfg.json", SWEEP_CONFIG);
    let blocker = dir.path().join("blocker");
    std::fs::write(&blocker, "file").unwrap();
    let output = run_bin(&[
        "sweep",
        "--config",
        &config,
        "--out",
        blocker.join("out").to_str().unwrap(),
    ]);
    assert_eq!(output.status.code(), Some(3));
}

#[test]
fn snr_grid_emits_the_documented_schema_with_invalid_cells() {
    let dir = tempfile::tempdir().unwrap();
    let config = write_config(
        dir.path(),
        "grid.json",
        r#"{
            "victim_axis": "z",
            "attacker_axes": ["z", "x"],
            "otps": ["none", "qotp"],
            "reset_kind": "thermal",
            "param1": {"name": "gamma1", "values": [0.5, 3.0]},
            "param2": {"name": "gamma2", "values": [1.0]},
            "n_shots": 200,
            "n_experiments": 2,
            "master_seed": 3
        }"#,
    );
    let out = dir.path().join("out");
    let output = run_bin(&["snr-grid", "--config", &config, "--out", out.to_str().unwrap()]);
    assert!(output.status.success(), "{output:?}");

    let csv = std::fs::read_to_string(out.join("snr_grid.csv")).unwrap();
    let mut lines = csv.lines();
    assert_eq!(
        lines.next().unwrap(),
        "reset_kind,param1_name,param1_value,param2_name,param2_value,otp,attacker_axis,snr_empirical,snr_theoretical,valid"
    );
    let rows: Vec<Vec<String>> = lines
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect();
    assert_eq!(rows.len(), 8, "2 cells x 2 otps x 2 axes");
    for fields in &rows {
        assert_eq!(fields.len(), 10);
        assert_eq!(fields[1], "gamma1");
        assert_eq!(fields[3], "gamma2");
        let valid: bool = fields[9].parse().unwrap();
        let snr: f64 = fields[7].parse().unwrap();
        if fields[2] == "3" {
            // gamma1 = 3, gamma2 = 1 violates gamma1 <= 2 * gamma2.
            assert!(!valid);
            assert!(snr.is_nan());
        } else {
            assert!(valid);
            assert!(snr.is_finite() || snr.is_infinite());
        }
    }

    let manifest: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(out.join("manifest.json")).unwrap()).unwrap();
    assert_eq!(manifest["outputs"], serde_json::json!(["snr_grid.csv"]));
}

#[test]
fn one_by_one_measurementless_grid_is_single_row_per_combination() {
    let dir = tempfile::tempdir().unwrap();
    let config = write_config(
        dir.path(),
        "grid.json",
        r#"{
            "victim_axis": "z",
            "otps": ["none"],
            "reset_kind": "measurementless",
            "param1": {"name": "p_r", "values": [0.1]},
            "n_shots": 200,
            "n_experiments": 2
        }"#,
    );
    let out = dir.path().join("out");
    let output = run_bin(&["snr-grid", "--config", &config, "--out", out.to_str().unwrap()]);
    assert!(output.status.success(), "{output:?}");
    let csv = std::fs::read_to_string(out.join("snr_grid.csv")).unwrap();
    let rows: Vec<&str> = csv.lines().skip(1).collect();
    assert_eq!(rows.len(), 1);
    let fields: Vec<&str> = rows[0].split(',').collect();
    assert_eq!(fields[3], "none");
    assert_eq!(fields[4], "0");
}

#[test]
fn theoretical_snr_grows_with_the_keep_probability_in_grid_output() {
    let dir = tempfile::tempdir().unwrap();
    let config = write_config(
        dir.path(),
        "grid.json",
        r#"{
            "victim_axis": "z",
            "otps": ["none"],
            "reset_kind": "measurementless",
            "param1": {"name": "p_r", "values": [0.05, 0.1, 0.2]},
            "n_shots": 100,
            "n_experiments": 2
        }"#,
    );
    let out = dir.path().join("out");
    let output = run_bin(&["snr-grid", "--config", &config, "--out", out.to_str().unwrap()]);
    assert!(output.status.success());
    let csv = std::fs::read_to_string(out.join("snr_grid.csv")).unwrap();
    let theos: Vec<f64> = csv
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(8).unwrap().parse().unwrap())
        .collect();
    assert!(theos.windows(2).all(|w| w[0] < w[1]), "{theos:?}");
}

#[test]
fn verify_quick_passes_within_budget() {
    let start = Instant::now();
    let output = run_bin(&["verify", "--quick"]);
    let elapsed = start.elapsed();
    assert!(output.status.success(), "{output:?}");
    let stdout = String::from_utf8_lossy(&output.stdout);
    assert!(stdout.contains("PASS qotp/maximal-mixing"), "{stdout}");
    assert!(stdout.contains("PASS overall"), "{stdout}");
    assert!(elapsed.as_secs() < 10, "verify --quick took {elapsed:?}");
}

#[test]
fn verify_full_passes() {
    let output = run_bin(&["verify"]);
    assert!(output.status.success(), "{output:?}");
    let stdout = String::from_utf8_lossy(&output.stdout);
    assert!(stdout.contains("PASS analytic/pipeline-agreement"), "{stdout}");
    assert!(stdout.contains("PASS monte-carlo/analytic-agreement"), "{stdout}");
}

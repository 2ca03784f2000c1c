//! End-to-end checks of the command-line interface: exit codes, output
//! schemas and byte-level reproducibility.

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_pyroclast"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn build_lattice_prints_reference_counts() {
    let out = run(&["build-lattice", "--nx", "4", "--ny", "4", "--nz", "4"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "1444");

    let out = run(&["build-lattice", "--nx", "1", "--ny", "1", "--nz", "1"]);
    assert_eq!(stdout(&out).trim(), "40");
}

#[test]
fn zero_dimension_is_a_usage_error() {
    let out = run(&["build-lattice", "--nx", "0", "--ny", "1", "--nz", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn build_lattice_writes_dump_and_manifest() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cell.json");
    let out = run(&[
        "build-lattice",
        "--nx",
        "1",
        "--ny",
        "1",
        "--nz",
        "1",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let dump: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(dump["site_count"], 40);
    assert_eq!(dump["sites"].as_array().unwrap().len(), 40);
    let manifest_path = dir.path().join("cell.json.manifest.json");
    assert!(manifest_path.exists(), "manifest sidecar accompanies the dump");
    let manifest: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&manifest_path).unwrap()).unwrap();
    assert_eq!(manifest["command"], "build-lattice");
}

#[test]
fn verify_fusion_passes_and_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    let out1 = run(&["verify-fusion", "--out", a.to_str().unwrap()]);
    assert!(out1.status.success(), "{}", stdout(&out1));
    let out2 = run(&["verify-fusion", "--out", b.to_str().unwrap()]);
    assert!(out2.status.success());
    let text_a = std::fs::read_to_string(&a).unwrap();
    let text_b = std::fs::read_to_string(&b).unwrap();
    assert_eq!(text_a, text_b, "report must be byte-identical across runs");

    let report: serde_json::Value = serde_json::from_str(&text_a).unwrap();
    let scenarios = report["scenarios"].as_array().unwrap();
    assert!(scenarios.len() >= 8, "report lists at least 8 scenarios");
    let bowtie = scenarios
        .iter()
        .find(|s| s["name"] == "bowtie")
        .expect("bowtie scenario present");
    assert_eq!(bowtie["surviving_qubits"], 7);
    assert_eq!(report["all_passed"], true);
}

#[test]
fn sweep_degenerate_grid_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let base = [
        "sweep", "--nx", "2", "--ny", "2", "--nz", "2", "--p-min", "0", "--p-max", "1",
        "--p-step", "1", "--trials", "30", "--seed", "9",
    ];
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    let mut args_a: Vec<&str> = base.to_vec();
    args_a.extend(["--out", a.to_str().unwrap()]);
    let mut args_b: Vec<&str> = base.to_vec();
    args_b.extend(["--out", b.to_str().unwrap()]);
    assert!(run(&args_a).status.success());
    assert!(run(&args_b).status.success());
    let text = std::fs::read_to_string(&a).unwrap();
    assert_eq!(text, std::fs::read_to_string(&b).unwrap(), "same seed, same bytes");

    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines[0],
        "p,nx,ny,nz,trials,spanning_count,spanning_prob,ci_lo,ci_hi,mean_span_fraction"
    );
    assert!(lines[1].starts_with("0.000000,") && lines[1].contains(",0.000000,0.000000,"));
    assert!(lines[2].starts_with("1.000000,"));
    let last: Vec<&str> = lines[2].split(',').collect();
    assert_eq!(last[6], "1.000000", "p=1 always spans");
}

#[test]
fn threshold_reports_no_crossing_with_failure_exit() {
    let out = run(&[
        "threshold", "--nx", "4", "--ny", "4", "--nz", "4", "--trials", "40", "--p-lo", "0.9",
        "--p-hi", "1.0", "--resolution", "0.01", "--seed", "2",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("no crossing"));
}

#[test]
fn table1_emits_twelve_rows_with_exact_counts() {
    let out = run(&["table1", "--p", "0.75", "--trials", "10", "--seed", "4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines[0],
        "nx,ny,nz,q,trials,spanning_count,spanning_prob,ci_lo,ci_hi,mean_span_fraction"
    );
    assert_eq!(lines.len(), 13, "header plus twelve rows");
    let expected_q = [
        1444, 1680, 2352, 3136, 3556, 3976, 4984, 5460, 6636, 7168, 7700, 8232,
    ];
    for (line, q) in lines[1..].iter().zip(expected_q) {
        let cols: Vec<&str> = line.split(',').collect();
        assert_eq!(cols[3], q.to_string());
    }
}

#[test]
fn environment_variables_mirror_flags() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("flag.csv");
    let b = dir.path().join("env.csv");
    assert!(run(&[
        "sweep", "--nx", "1", "--ny", "1", "--nz", "1", "--p-min", "0.7", "--p-max", "0.8",
        "--p-step", "0.1", "--trials", "25", "--seed", "123", "--out", a.to_str().unwrap(),
    ])
    .status
    .success());
    let status = bin()
        .args([
            "sweep", "--nx", "1", "--ny", "1", "--nz", "1", "--p-min", "0.7", "--p-max", "0.8",
            "--p-step", "0.1", "--trials", "25", "--out", b.to_str().unwrap(),
        ])
        .env("PYROCLAST_SEED", "123")
        .status()
        .unwrap();
    assert!(status.success());
    assert_eq!(
        std::fs::read_to_string(&a).unwrap(),
        std::fs::read_to_string(&b).unwrap(),
        "PYROCLAST_SEED must act exactly like --seed"
    );
}

#[test]
fn dump_round_trips_through_the_library() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("lat.json");
    assert!(run(&[
        "build-lattice", "--nx", "2", "--ny", "1", "--nz", "1", "--out",
        path.to_str().unwrap(),
    ])
    .status
    .success());
    let text = std::fs::read_to_string(&path).unwrap();
    let lat = pyroclast::lattice::Lattice::load_json(&text).unwrap();
    assert_eq!(lat.site_count(), 76);
    assert_eq!(lat.dump_json(), text);
}

#[test]
fn site_deletion_override_changes_results() {
    let run_with = |extra: &[&str]| {
        let mut args = vec![
            "table1", "--p", "0.75", "--trials", "15", "--seed", "8",
        ];
        args.extend_from_slice(extra);
        stdout(&run(&args))
    };
    let default = run_with(&[]);
    let literal = run_with(&["--site-deletion-prob", "0.56"]);
    assert_ne!(default, literal, "the override must alter retention");
}


//! Command-line interface: the single entry point for reproducing every
//! figure and table from the data-emitting commands.
//!
//! Every flag can also be set through an environment variable with the
//! `PYROCLAST_` prefix (e.g. `PYROCLAST_SEED=7 pyroclast sweep ...`). Fixed
//! seeds give byte-identical output files for any `--threads` value.

use crate::driver::{
    estimate_threshold, reference_specs, sweep, SweepRow, SweepSpec, TableRow,
};
use crate::lattice::{build, LatticeSpec};
use crate::percolation::PairingRule;
use crate::scenarios::run_full_suite;
use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

pub const EXIT_OK: i32 = 0;
/// Scenario or threshold failure.
pub const EXIT_FAILURE: i32 = 1;

#[derive(Parser, Debug)]
#[command(
    name = "pyroclast",
    version,
    about = "Fusion-rule verification and pyrochlore percolation Monte Carlo"
)]
pub struct Cli {
    /// Worker threads (0 = one per core). Never affects results.
    #[arg(long, global = true, default_value_t = 0, env = "PYROCLAST_THREADS")]
    pub threads: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum PairingArg {
    Fixed,
    Random,
}

impl From<PairingArg> for PairingRule {
    fn from(p: PairingArg) -> Self {
        match p {
            PairingArg::Fixed => PairingRule::Fixed,
            PairingArg::Random => PairingRule::Random,
        }
    }
}

fn prob(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("not a number: {e}"))?;
    if (0.0..=1.0).contains(&v) {
        Ok(v)
    } else {
        Err(format!("{v} is outside [0, 1]"))
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run every fusion scenario and lattice-rule certification.
    VerifyFusion {
        /// Where to write the machine-readable report.
        #[arg(long, default_value = "fusion-report.json", env = "PYROCLAST_OUT")]
        out: PathBuf,
    },
    /// Build a pyrochlore lattice, print its qubit count, optionally dump it.
    BuildLattice {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..), env = "PYROCLAST_NX")]
        nx: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..), env = "PYROCLAST_NY")]
        ny: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..), env = "PYROCLAST_NZ")]
        nz: u64,
        #[arg(long, env = "PYROCLAST_OUT")]
        out: Option<PathBuf>,
    },
    /// Spanning probability across a grid of Bell success probabilities.
    Sweep {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..), env = "PYROCLAST_NX")]
        nx: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..), env = "PYROCLAST_NY")]
        ny: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..), env = "PYROCLAST_NZ")]
        nz: u64,
        #[arg(long, value_parser = prob, env = "PYROCLAST_P_MIN")]
        p_min: f64,
        #[arg(long, value_parser = prob, env = "PYROCLAST_P_MAX")]
        p_max: f64,
        #[arg(long, default_value_t = 0.01, env = "PYROCLAST_P_STEP")]
        p_step: f64,
        #[arg(long, default_value_t = 200, env = "PYROCLAST_TRIALS")]
        trials: u64,
        #[arg(long, default_value_t = 0, env = "PYROCLAST_SEED")]
        seed: u64,
        #[arg(long, value_enum, default_value_t = PairingArg::Fixed, env = "PYROCLAST_PAIRING")]
        pairing: PairingArg,
        /// Share trial draws across the whole grid (exactly monotone curve).
        #[arg(long, env = "PYROCLAST_COUPLED")]
        coupled: bool,
        /// Override the site deletion probability (default 1 - p^2).
        #[arg(long, value_parser = prob, env = "PYROCLAST_SITE_DELETION_PROB")]
        site_deletion_prob: Option<f64>,
        #[arg(long, env = "PYROCLAST_OUT")]
        out: Option<PathBuf>,
    },
    /// Estimate the spanning threshold by bisection on the coupled curve.
    Threshold {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..), default_value_t = 12, env = "PYROCLAST_NX")]
        nx: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..), default_value_t = 12, env = "PYROCLAST_NY")]
        ny: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..), default_value_t = 12, env = "PYROCLAST_NZ")]
        nz: u64,
        #[arg(long, default_value_t = 400, env = "PYROCLAST_TRIALS")]
        trials: u64,
        #[arg(long, value_parser = prob, default_value_t = 0.6, env = "PYROCLAST_P_LO")]
        p_lo: f64,
        #[arg(long, value_parser = prob, default_value_t = 0.8, env = "PYROCLAST_P_HI")]
        p_hi: f64,
        #[arg(long, default_value_t = 0.002, env = "PYROCLAST_RESOLUTION")]
        resolution: f64,
        #[arg(long, default_value_t = 0, env = "PYROCLAST_SEED")]
        seed: u64,
        #[arg(long, value_enum, default_value_t = PairingArg::Fixed, env = "PYROCLAST_PAIRING")]
        pairing: PairingArg,
        #[arg(long, value_parser = prob, env = "PYROCLAST_SITE_DELETION_PROB")]
        site_deletion_prob: Option<f64>,
        /// Optional CSV of every evaluated grid point.
        #[arg(long, env = "PYROCLAST_OUT")]
        out: Option<PathBuf>,
    },
    /// Spanning probabilities for the twelve reference lattice shapes.
    Table1 {
        #[arg(long, value_parser = prob, default_value_t = 0.75, env = "PYROCLAST_P")]
        p: f64,
        #[arg(long, default_value_t = 200, env = "PYROCLAST_TRIALS")]
        trials: u64,
        #[arg(long, default_value_t = 0, env = "PYROCLAST_SEED")]
        seed: u64,
        #[arg(long, value_enum, default_value_t = PairingArg::Fixed, env = "PYROCLAST_PAIRING")]
        pairing: PairingArg,
        #[arg(long, value_parser = prob, env = "PYROCLAST_SITE_DELETION_PROB")]
        site_deletion_prob: Option<f64>,
        #[arg(long, env = "PYROCLAST_OUT")]
        out: Option<PathBuf>,
    },
}

/// Sidecar metadata written next to every output file.
#[derive(Serialize)]
struct RunManifest {
    command: String,
    parameters: serde_json::Value,
    master_seed: Option<u64>,
    artifact_version: String,
    csv_schema: Option<String>,
    timestamp: String,
}

fn write_manifest(
    out: &Path,
    command: &str,
    parameters: serde_json::Value,
    master_seed: Option<u64>,
    csv_schema: Option<&str>,
) -> anyhow::Result<()> {
    let manifest = RunManifest {
        command: command.to_string(),
        parameters,
        master_seed,
        artifact_version: env!("CARGO_PKG_VERSION").to_string(),
        csv_schema: csv_schema.map(|s| s.to_string()),
        timestamp: chrono::Utc::now().to_rfc3339(),
    };
    let path = manifest_path(out);
    std::fs::write(&path, serde_json::to_string_pretty(&manifest)?)
        .with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

pub fn manifest_path(out: &Path) -> PathBuf {
    let mut name = out.file_name().unwrap_or_default().to_os_string();
    name.push(".manifest.json");
    out.with_file_name(name)
}

const SWEEP_SCHEMA: &str =
    "p,nx,ny,nz,trials,spanning_count,spanning_prob,ci_lo,ci_hi,mean_span_fraction";
const TABLE_SCHEMA: &str =
    "nx,ny,nz,q,trials,spanning_count,spanning_prob,ci_lo,ci_hi,mean_span_fraction";

fn sweep_csv(rows: &[SweepRow], spec: &LatticeSpec) -> String {
    let mut text = String::from(SWEEP_SCHEMA);
    text.push('\n');
    for r in rows {
        writeln!(
            text,
            "{:.6},{},{},{},{},{},{:.6},{:.6},{:.6},{:.6}",
            r.p,
            spec.nx,
            spec.ny,
            spec.nz,
            r.trials,
            r.spanning_count,
            r.spanning_prob,
            r.ci_lo,
            r.ci_hi,
            r.mean_spanning_fraction
        )
        .expect("string write");
    }
    text
}

fn table_csv(rows: &[TableRow]) -> String {
    let mut text = String::from(TABLE_SCHEMA);
    text.push('\n');
    for r in rows {
        writeln!(
            text,
            "{},{},{},{},{},{},{:.6},{:.6},{:.6},{:.6}",
            r.nx,
            r.ny,
            r.nz,
            r.q,
            r.trials,
            r.spanning_count,
            r.spanning_prob,
            r.ci_lo,
            r.ci_hi,
            r.mean_spanning_fraction
        )
        .expect("string write");
    }
    text
}

fn emit(out: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text)
            .with_context(|| format!("writing {}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(())
}

/// Run a parsed command; returns the process exit code.
pub fn run(cli: Cli) -> anyhow::Result<i32> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads)
        .build()
        .context("building worker pool")?;
    pool.install(|| dispatch(cli.command))
}

fn dispatch(command: Command) -> anyhow::Result<i32> {
    match command {
        Command::VerifyFusion { out } => {
            let report = run_full_suite();
            println!("{:<44} {:<6} qubits", "scenario", "result");
            for v in &report.scenarios {
                println!(
                    "{:<44} {:<6} {}",
                    v.name,
                    if v.passed { "pass" } else { "FAIL" },
                    v.surviving_qubits
                );
                if !v.passed {
                    println!("    {}", v.detail);
                }
            }
            println!("{:<44} result", "certification");
            for c in &report.certifications {
                println!(
                    "{:<44} {}",
                    c.name,
                    if c.passed { "pass" } else { "FAIL" }
                );
                if !c.passed {
                    println!("    {}", c.detail);
                }
            }
            let json = serde_json::to_string_pretty(&report)?;
            std::fs::write(&out, json)
                .with_context(|| format!("writing {}", out.display()))?;
            write_manifest(
                &out,
                "verify-fusion",
                serde_json::json!({ "out": out }),
                None,
                None,
            )?;
            if report.all_passed {
                println!("all scenarios and certifications passed");
                Ok(EXIT_OK)
            } else {
                println!("FAILURES present; see report at {}", out.display());
                Ok(EXIT_FAILURE)
            }
        }
        Command::BuildLattice { nx, ny, nz, out } => {
            let spec = LatticeSpec::new(nx as usize, ny as usize, nz as usize)?;
            let lat = build(&spec)?;
            println!("{}", lat.site_count());
            if let Some(path) = &out {
                std::fs::write(path, lat.dump_json())
                    .with_context(|| format!("writing {}", path.display()))?;
                write_manifest(
                    path,
                    "build-lattice",
                    serde_json::json!({ "nx": nx, "ny": ny, "nz": nz }),
                    None,
                    None,
                )?;
            }
            Ok(EXIT_OK)
        }
        Command::Sweep {
            nx,
            ny,
            nz,
            p_min,
            p_max,
            p_step,
            trials,
            seed,
            pairing,
            coupled,
            site_deletion_prob,
            out,
        } => {
            anyhow::ensure!(p_min <= p_max, "p-min must not exceed p-max");
            anyhow::ensure!(p_step > 0.0, "p-step must be positive");
            anyhow::ensure!(trials >= 1, "need at least one trial");
            let spec = SweepSpec {
                lattice: LatticeSpec::new(nx as usize, ny as usize, nz as usize)?,
                p_min,
                p_max,
                p_step,
                trials,
                seed,
                pairing: pairing.into(),
                coupled,
                site_deletion_override: site_deletion_prob,
            };
            let result = sweep(&spec)?;
            let csv = sweep_csv(&result.rows, &spec.lattice);
            emit(out.as_deref(), &csv)?;
            if let Some(path) = &out {
                write_manifest(
                    path,
                    "sweep",
                    serde_json::json!({
                        "nx": nx, "ny": ny, "nz": nz,
                        "p_min": p_min, "p_max": p_max, "p_step": p_step,
                        "trials": trials, "pairing": format!("{}", spec.pairing),
                        "coupled": coupled,
                        "site_deletion_prob": site_deletion_prob,
                    }),
                    Some(seed),
                    Some(SWEEP_SCHEMA),
                )?;
            }
            Ok(EXIT_OK)
        }
        Command::Threshold {
            nx,
            ny,
            nz,
            trials,
            p_lo,
            p_hi,
            resolution,
            seed,
            pairing,
            site_deletion_prob,
            out,
        } => {
            anyhow::ensure!(p_lo < p_hi, "p-lo must be below p-hi");
            anyhow::ensure!(resolution > 0.0, "resolution must be positive");
            let spec = LatticeSpec::new(nx as usize, ny as usize, nz as usize)?;
            let est = estimate_threshold(
                &spec,
                trials,
                p_lo,
                p_hi,
                resolution,
                seed,
                pairing.into(),
                site_deletion_prob,
            )?;
            if let Some(path) = &out {
                let csv = sweep_csv(&est.evaluations, &spec);
                std::fs::write(path, csv)
                    .with_context(|| format!("writing {}", path.display()))?;
                write_manifest(
                    path,
                    "threshold",
                    serde_json::json!({
                        "nx": nx, "ny": ny, "nz": nz, "trials": trials,
                        "p_lo": p_lo, "p_hi": p_hi, "resolution": resolution,
                        "pairing": format!("{}", PairingRule::from(pairing)),
                        "site_deletion_prob": site_deletion_prob,
                    }),
                    Some(seed),
                    Some(SWEEP_SCHEMA),
                )?;
            }
            match est.p_star {
                Some(p_star) => {
                    println!("p_star {p_star:.6}");
                    println!("bracket {:.6} {:.6}", est.bracket.0, est.bracket.1);
                    Ok(EXIT_OK)
                }
                None => {
                    println!("no crossing of 0.5 in [{p_lo:.6}, {p_hi:.6}]");
                    Ok(EXIT_FAILURE)
                }
            }
        }
        Command::Table1 {
            p,
            trials,
            seed,
            pairing,
            site_deletion_prob,
            out,
        } => {
            anyhow::ensure!(trials >= 1, "need at least one trial");
            let rows = crate::driver::table_scan(
                &reference_specs(),
                p,
                trials,
                seed,
                pairing.into(),
                site_deletion_prob,
            )?;
            let csv = table_csv(&rows);
            emit(out.as_deref(), &csv)?;
            if let Some(path) = &out {
                write_manifest(
                    path,
                    "table1",
                    serde_json::json!({
                        "p": p, "trials": trials,
                        "pairing": format!("{}", PairingRule::from(pairing)),
                        "site_deletion_prob": site_deletion_prob,
                    }),
                    Some(seed),
                    Some(TABLE_SCHEMA),
                )?;
            }
            Ok(EXIT_OK)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_formats_have_stable_headers() {
        let spec = LatticeSpec { nx: 1, ny: 1, nz: 1 };
        let row = SweepRow {
            p: 0.5,
            trials: 10,
            spanning_count: 5,
            spanning_prob: 0.5,
            ci_lo: 0.2,
            ci_hi: 0.8,
            mean_spanning_fraction: 0.25,
        };
        let csv = sweep_csv(&[row], &spec);
        assert!(csv.starts_with(
            "p,nx,ny,nz,trials,spanning_count,spanning_prob,ci_lo,ci_hi,mean_span_fraction\n"
        ));
        assert!(csv.contains("0.500000,1,1,1,10,5,0.500000,0.200000,0.800000,0.250000"));
    }

    #[test]
    fn manifest_path_appends_suffix() {
        let p = manifest_path(Path::new("/tmp/out.csv"));
        assert_eq!(p, PathBuf::from("/tmp/out.csv.manifest.json"));
    }
}

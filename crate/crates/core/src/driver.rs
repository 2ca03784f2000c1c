//! Monte Carlo orchestration: probability sweeps, threshold estimation and
//! the lattice-scaling table.
//!
//! Trials are the unit of parallelism. Each trial's randomness is a pure
//! function of `(seed, trial)` counter streams, per-trial results are
//! collected into a trial-indexed vector and reduced sequentially, so output
//! is byte-identical for any worker count or schedule.

use crate::lattice::{build, Lattice, LatticeSpec};
use crate::percolation::{sample, spanning_fraction, PairingRule, SampleConfig};
use crate::stats::wilson95;
use rayon::prelude::*;
use serde::Serialize;

#[derive(Clone, Debug)]
pub struct SweepSpec {
    pub lattice: LatticeSpec,
    pub p_min: f64,
    pub p_max: f64,
    pub p_step: f64,
    pub trials: u64,
    pub seed: u64,
    pub pairing: PairingRule,
    /// Reuse the same trial draws at every p, making per-trial spanning
    /// indicators exactly monotone along the grid.
    pub coupled: bool,
    pub site_deletion_override: Option<f64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepRow {
    pub p: f64,
    pub trials: u64,
    pub spanning_count: u64,
    pub spanning_prob: f64,
    pub ci_lo: f64,
    pub ci_hi: f64,
    /// Mean largest-spanning-cluster fraction over spanning trials
    /// (zero when no trial spans).
    pub mean_spanning_fraction: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepResult {
    pub rows: Vec<SweepRow>,
}

fn probability_grid(p_min: f64, p_max: f64, p_step: f64) -> Vec<f64> {
    assert!(p_step > 0.0, "p_step must be positive");
    assert!(p_min <= p_max, "p_min must not exceed p_max");
    let steps = ((p_max - p_min) / p_step + 1e-9).floor() as u64;
    (0..=steps).map(|i| p_min + i as f64 * p_step).collect()
}

/// One grid point: `trials` independent realizations, reduced to a row.
fn evaluate_point(
    lat: &Lattice,
    p: f64,
    trials: u64,
    seed: u64,
    trial_base: u64,
    pairing: PairingRule,
    site_deletion_override: Option<f64>,
) -> SweepRow {
    let per_trial: Vec<(bool, f64)> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut cfg = SampleConfig::new(p, pairing, seed, trial_base + t);
            cfg.site_deletion_override = site_deletion_override;
            let r = sample(lat, &cfg);
            (r.spanning, spanning_fraction(&r, lat))
        })
        .collect();
    let spanning_count = per_trial.iter().filter(|(s, _)| *s).count() as u64;
    let fraction_sum: f64 = per_trial
        .iter()
        .filter(|(s, _)| *s)
        .map(|(_, f)| *f)
        .sum();
    let (ci_lo, ci_hi) = wilson95(spanning_count, trials);
    SweepRow {
        p,
        trials,
        spanning_count,
        spanning_prob: spanning_count as f64 / trials as f64,
        ci_lo,
        ci_hi,
        mean_spanning_fraction: if spanning_count > 0 {
            fraction_sum / spanning_count as f64
        } else {
            0.0
        },
    }
}

pub fn sweep(spec: &SweepSpec) -> Result<SweepResult, crate::lattice::LatticeError> {
    let lat = build(&spec.lattice)?;
    let grid = probability_grid(spec.p_min, spec.p_max, spec.p_step);
    let rows = grid
        .iter()
        .enumerate()
        .map(|(i, &p)| {
            let trial_base = if spec.coupled {
                0
            } else {
                i as u64 * spec.trials
            };
            evaluate_point(
                &lat,
                p,
                spec.trials,
                spec.seed,
                trial_base,
                spec.pairing,
                spec.site_deletion_override,
            )
        })
        .collect();
    Ok(SweepResult { rows })
}

#[derive(Clone, Debug, Serialize)]
pub struct ThresholdEstimate {
    /// p where the spanning probability crosses one half (linear
    /// interpolation between the final bisection points); `None` when the
    /// curve never crosses in range.
    pub p_star: Option<f64>,
    /// Narrowest [a, b] whose Wilson intervals exclude 0.5 on both sides,
    /// falling back to the search range edges.
    pub bracket: (f64, f64),
    pub evaluations: Vec<SweepRow>,
}

#[allow(clippy::too_many_arguments)]
pub fn estimate_threshold(
    lattice: &LatticeSpec,
    trials: u64,
    p_lo: f64,
    p_hi: f64,
    resolution: f64,
    seed: u64,
    pairing: PairingRule,
    site_deletion_override: Option<f64>,
) -> Result<ThresholdEstimate, crate::lattice::LatticeError> {
    assert!(p_lo < p_hi, "p_lo must be below p_hi");
    assert!(resolution > 0.0);
    let lat = build(lattice)?;
    // Trials are coupled across evaluation points (trial_base 0) so the
    // empirical curve is monotone and bisection is well-posed.
    let eval = |p: f64| evaluate_point(&lat, p, trials, seed, 0, pairing, site_deletion_override);

    let mut evaluations: Vec<SweepRow> = Vec::new();
    let lo_row = eval(p_lo);
    let hi_row = eval(p_hi);
    let crossing = lo_row.spanning_prob < 0.5 && hi_row.spanning_prob >= 0.5;
    evaluations.push(lo_row);
    evaluations.push(hi_row);

    let p_star = if crossing {
        let (mut a, mut b) = (p_lo, p_hi);
        let (mut pa, mut pb) = (
            evaluations[0].spanning_prob,
            evaluations[1].spanning_prob,
        );
        while b - a > resolution {
            let mid = 0.5 * (a + b);
            let row = eval(mid);
            let pm = row.spanning_prob;
            evaluations.push(row);
            if pm < 0.5 {
                a = mid;
                pa = pm;
            } else {
                b = mid;
                pb = pm;
            }
        }
        Some(a + (0.5 - pa) * (b - a) / (pb - pa))
    } else {
        None
    };

    evaluations.sort_by(|x, y| x.p.total_cmp(&y.p));
    let bracket_lo = evaluations
        .iter()
        .filter(|r| r.ci_hi < 0.5)
        .map(|r| r.p)
        .fold(None::<f64>, |acc, p| Some(acc.map_or(p, |a| a.max(p))))
        .unwrap_or(p_lo);
    let bracket_hi = evaluations
        .iter()
        .filter(|r| r.ci_lo > 0.5)
        .map(|r| r.p)
        .fold(None::<f64>, |acc, p| Some(acc.map_or(p, |a| a.min(p))))
        .unwrap_or(p_hi);

    Ok(ThresholdEstimate {
        p_star,
        bracket: (bracket_lo, bracket_hi),
        evaluations,
    })
}

/// The twelve lattice shapes of the reference scaling table.
pub const REFERENCE_SPECS: [(usize, usize, usize); 12] = [
    (4, 4, 4),
    (5, 5, 3),
    (6, 6, 3),
    (7, 7, 3),
    (8, 7, 3),
    (9, 7, 3),
    (10, 8, 3),
    (11, 8, 3),
    (12, 9, 3),
    (13, 9, 3),
    (14, 9, 3),
    (15, 9, 3),
];

pub fn reference_specs() -> Vec<LatticeSpec> {
    REFERENCE_SPECS
        .iter()
        .map(|&(nx, ny, nz)| LatticeSpec { nx, ny, nz })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct TableRow {
    pub nx: usize,
    pub ny: usize,
    pub nz: usize,
    pub q: u64,
    pub trials: u64,
    pub spanning_count: u64,
    pub spanning_prob: f64,
    pub ci_lo: f64,
    pub ci_hi: f64,
    pub mean_spanning_fraction: f64,
}

pub fn table_scan(
    rows: &[LatticeSpec],
    p: f64,
    trials: u64,
    seed: u64,
    pairing: PairingRule,
    site_deletion_override: Option<f64>,
) -> Result<Vec<TableRow>, crate::lattice::LatticeError> {
    rows.iter()
        .map(|spec| {
            let lat = build(spec)?;
            let row = evaluate_point(&lat, p, trials, seed, 0, pairing, site_deletion_override);
            Ok(TableRow {
                nx: spec.nx,
                ny: spec.ny,
                nz: spec.nz,
                q: lat.site_count() as u64,
                trials,
                spanning_count: row.spanning_count,
                spanning_prob: row.spanning_prob,
                ci_lo: row.ci_lo,
                ci_hi: row.ci_hi,
                mean_spanning_fraction: row.mean_spanning_fraction,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tiny_sweep(coupled: bool) -> SweepSpec {
        SweepSpec {
            lattice: LatticeSpec { nx: 2, ny: 2, nz: 2 },
            p_min: 0.0,
            p_max: 1.0,
            p_step: 0.25,
            trials: 40,
            seed: 77,
            pairing: PairingRule::Fixed,
            coupled,
            site_deletion_override: None,
        }
    }

    #[test]
    fn degenerate_endpoints() {
        let res = sweep(&tiny_sweep(false)).unwrap();
        assert_eq!(res.rows.first().unwrap().spanning_prob, 0.0);
        assert_eq!(res.rows.last().unwrap().spanning_prob, 1.0);
        for w in res.rows.windows(2) {
            assert!(w[0].p < w[1].p, "rows sorted by p");
        }
    }

    #[test]
    fn intervals_bracket_estimates() {
        let res = sweep(&tiny_sweep(false)).unwrap();
        for row in &res.rows {
            assert!(row.ci_lo <= row.spanning_prob && row.spanning_prob <= row.ci_hi);
        }
    }

    #[test]
    fn coupled_counts_are_monotone() {
        let res = sweep(&tiny_sweep(true)).unwrap();
        for w in res.rows.windows(2) {
            assert!(
                w[0].spanning_count <= w[1].spanning_count,
                "coupled sweep must be exactly monotone"
            );
        }
    }

    #[test]
    fn sweep_is_schedule_independent() {
        let run = |threads: usize| {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .unwrap();
            pool.install(|| sweep(&tiny_sweep(true)).unwrap())
        };
        let a = serde_json::to_string(&run(1)).unwrap();
        let b = serde_json::to_string(&run(4)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn threshold_finds_a_crossing_on_small_lattice() {
        let est = estimate_threshold(
            &LatticeSpec { nx: 2, ny: 2, nz: 2 },
            60,
            0.3,
            0.99,
            0.02,
            5,
            PairingRule::Fixed,
            None,
        )
        .unwrap();
        let p_star = est.p_star.expect("curve crosses one half");
        assert!(p_star > 0.3 && p_star < 0.99, "p_star = {p_star}");
        assert!(est.bracket.0 <= p_star && p_star <= est.bracket.1);
    }

    #[test]
    fn threshold_reports_no_crossing_when_always_spanning() {
        let est = estimate_threshold(
            &LatticeSpec { nx: 1, ny: 1, nz: 1 },
            30,
            0.995,
            1.0,
            0.001,
            5,
            PairingRule::Fixed,
            None,
        )
        .unwrap();
        assert!(est.p_star.is_none());
    }

    #[test]
    fn table_scan_reports_exact_site_counts() {
        let specs = vec![
            LatticeSpec { nx: 1, ny: 1, nz: 1 },
            LatticeSpec { nx: 2, ny: 1, nz: 1 },
        ];
        let rows = table_scan(&specs, 0.75, 20, 3, PairingRule::Fixed, None).unwrap();
        assert_eq!(rows[0].q, 40);
        assert_eq!(rows[1].q, 76);
    }
}

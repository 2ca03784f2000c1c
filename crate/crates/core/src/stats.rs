//! Binomial interval estimation for spanning probabilities.

/// z for a two-sided 95% normal interval.
pub const Z95: f64 = 1.959963984540054;

/// Wilson score interval; robust at extreme counts and always inside [0, 1].
pub fn wilson_interval(successes: u64, trials: u64, z: f64) -> (f64, f64) {
    assert!(trials > 0, "interval needs at least one trial");
    assert!(successes <= trials);
    let n = trials as f64;
    let phat = successes as f64 / n;
    let z2 = z * z;
    let denom = 1.0 + z2 / n;
    let center = (phat + z2 / (2.0 * n)) / denom;
    let half = z * ((phat * (1.0 - phat) / n) + z2 / (4.0 * n * n)).sqrt() / denom;
    // At the degenerate counts the bound coincides with the estimate exactly;
    // evaluate it that way instead of through the rounding-prone difference.
    let lo = if successes == 0 { 0.0 } else { (center - half).max(0.0) };
    let hi = if successes == trials {
        1.0
    } else {
        (center + half).min(1.0)
    };
    (lo, hi)
}

pub fn wilson95(successes: u64, trials: u64) -> (f64, f64) {
    wilson_interval(successes, trials, Z95)
}

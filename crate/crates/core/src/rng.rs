//! Counter-based random streams keyed by (seed, trial, kind, id).
//!
//! Every random decision in the Monte Carlo is a pure function of its key, so
//! results do not depend on iteration order, worker count or scheduling, and
//! trials can be replayed individually. The mixer is the splitmix64
//! finalizer applied over the absorbed key words.

/// Which per-entity stream a draw belongs to.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum StreamKind {
    /// Tetrahedron aliveness draws.
    Tet,
    /// Site retention draws.
    Site,
    /// Failed-tetrahedron pairing choice draws.
    Pairing,
}

impl StreamKind {
    fn tag(self) -> u64 {
        match self {
            StreamKind::Tet => 0x7465_7472_6148_4544,
            StreamKind::Site => 0x7369_7465_5f64_7277,
            StreamKind::Pairing => 0x7061_6972_5f64_7277,
        }
    }
}

#[inline]
fn splitmix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;

/// Uniform 64-bit word for the keyed draw.
#[inline]
pub fn stream_u64(seed: u64, trial: u64, kind: StreamKind, id: u64) -> u64 {
    let mut h = splitmix(seed ^ GOLDEN);
    h = splitmix(h ^ trial.wrapping_mul(GOLDEN));
    h = splitmix(h ^ kind.tag());
    splitmix(h ^ id.wrapping_mul(GOLDEN))
}

/// Uniform draw in [0, 1) with 53 bits of mantissa.
#[inline]
pub fn stream_unit(seed: u64, trial: u64, kind: StreamKind, id: u64) -> f64 {
    (stream_u64(seed, trial, kind, id) >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Uniform draw from 0..n (n small, e.g. one of three pairings).
#[inline]
pub fn stream_below(seed: u64, trial: u64, kind: StreamKind, id: u64, n: u64) -> u64 {
    // multiply-shift on the top bits; bias is negligible for tiny n
    ((stream_u64(seed, trial, kind, id) >> 32).wrapping_mul(n)) >> 32
}

//! Stochastic realization of the fused lattice and union-find cluster
//! analysis.
//!
//! Per trial, each tetrahedron survives as a K4 with probability `p` and
//! otherwise collapses to two disjoint corner edges; each site survives with
//! probability `p^2` (two Bell measurements per shared corner) and is deleted
//! with all incident edges otherwise. Both rules are certified against the
//! stabilizer engine by the scenario suite. All draws are counter-based, so a
//! realization is a pure function of `(lattice, config)`.

use crate::lattice::Lattice;
use crate::rng::{stream_below, stream_unit, StreamKind};
use crate::unionfind::DisjointSet;
use std::collections::BTreeMap;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PairingRule {
    /// Pair corners by sublattice: {0,1} and {2,3}.
    Fixed,
    /// One of the three perfect matchings, uniform per failed tetrahedron.
    Random,
}

impl std::str::FromStr for PairingRule {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "fixed" => Ok(PairingRule::Fixed),
            "random" => Ok(PairingRule::Random),
            other => Err(format!("unknown pairing rule '{other}'")),
        }
    }
}

impl std::fmt::Display for PairingRule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            PairingRule::Fixed => "fixed",
            PairingRule::Random => "random",
        })
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SampleConfig {
    /// Bell-measurement success probability.
    pub p: f64,
    pub pairing: PairingRule,
    pub seed: u64,
    pub trial: u64,
    /// Override for the site deletion probability (default 1 - p^2).
    pub site_deletion_override: Option<f64>,
}

impl SampleConfig {
    pub fn new(p: f64, pairing: PairingRule, seed: u64, trial: u64) -> Self {
        SampleConfig {
            p,
            pairing,
            seed,
            trial,
            site_deletion_override: None,
        }
    }

    pub fn site_retention(&self) -> f64 {
        match self.site_deletion_override {
            Some(del) => 1.0 - del,
            None => self.p * self.p,
        }
    }
}

const K4_PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
/// The three perfect matchings of a failed tetrahedron's corners.
pub const MATCHINGS: [[(usize, usize); 2]; 3] = [
    [(0, 1), (2, 3)],
    [(0, 2), (1, 3)],
    [(0, 3), (1, 2)],
];

#[derive(Clone, Debug)]
pub struct Realization {
    /// Survival flag per site.
    pub retained: Vec<bool>,
    /// Cluster root per site (meaningful only where retained).
    pub roots: Vec<u32>,
    /// Cluster size per root id (zero elsewhere).
    pub root_sizes: Vec<u32>,
    pub spanning: bool,
    pub largest_spanning_cluster: usize,
}

pub fn sample(lat: &Lattice, cfg: &SampleConfig) -> Realization {
    let q = lat.site_count();
    let retention = cfg.site_retention();
    let retained: Vec<bool> = (0..q)
        .map(|s| stream_unit(cfg.seed, cfg.trial, StreamKind::Site, s as u64) < retention)
        .collect();

    let mut ds = DisjointSet::new(q);
    let link = |ds: &mut DisjointSet, a: u32, b: u32| {
        if retained[a as usize] && retained[b as usize] {
            ds.union(a, b);
        }
    };
    for tet in &lat.tetrahedra {
        let alive =
            stream_unit(cfg.seed, cfg.trial, StreamKind::Tet, tet.id as u64) < cfg.p;
        if alive {
            for (i, j) in K4_PAIRS {
                link(&mut ds, tet.corners[i], tet.corners[j]);
            }
        } else {
            let matching = match cfg.pairing {
                PairingRule::Fixed => &MATCHINGS[0],
                PairingRule::Random => {
                    let pick =
                        stream_below(cfg.seed, cfg.trial, StreamKind::Pairing, tet.id as u64, 3);
                    &MATCHINGS[pick as usize]
                }
            };
            for &(i, j) in matching {
                link(&mut ds, tet.corners[i], tet.corners[j]);
            }
        }
    }

    let mut roots = vec![0u32; q];
    let mut root_sizes = vec![0u32; q];
    for s in 0..q {
        if retained[s] {
            let r = ds.find(s as u32);
            roots[s] = r;
            root_sizes[r as usize] += 1;
        }
    }
    debug_assert!(
        (0..q).filter(|&s| retained[s]).all(|s| {
            let r = roots[s] as usize;
            retained[r] && roots[r] == roots[s]
        }),
        "roots must be retained fixed points"
    );

    let (source, target) = lat.face_sets();
    let mut source_root = vec![false; q];
    for &s in source {
        if retained[s as usize] {
            source_root[roots[s as usize] as usize] = true;
        }
    }
    let mut largest_spanning = 0usize;
    for &t in target {
        if retained[t as usize] {
            let r = roots[t as usize] as usize;
            if source_root[r] {
                largest_spanning = largest_spanning.max(root_sizes[r] as usize);
            }
        }
    }

    Realization {
        retained,
        roots,
        root_sizes,
        spanning: largest_spanning > 0,
        largest_spanning_cluster: largest_spanning,
    }
}

/// Size of the largest spanning cluster over the total number of lattice
/// qubits (not the retained count); zero when nothing spans.
pub fn spanning_fraction(r: &Realization, lat: &Lattice) -> f64 {
    r.largest_spanning_cluster as f64 / lat.site_count() as f64
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClusterStats {
    pub cluster_count: usize,
    pub largest: usize,
    /// size -> number of clusters of that size
    pub histogram: BTreeMap<usize, usize>,
}

pub fn cluster_stats(r: &Realization) -> ClusterStats {
    let mut histogram = BTreeMap::new();
    let mut count = 0usize;
    let mut largest = 0usize;
    for (s, &size) in r.root_sizes.iter().enumerate() {
        if r.retained[s] && size > 0 && r.roots[s] as usize == s {
            count += 1;
            largest = largest.max(size as usize);
            *histogram.entry(size as usize).or_insert(0) += 1;
        }
    }
    ClusterStats {
        cluster_count: count,
        largest,
        histogram,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{build, LatticeSpec};

    fn lat(nx: usize, ny: usize, nz: usize) -> Lattice {
        build(&LatticeSpec::new(nx, ny, nz).unwrap()).unwrap()
    }

    #[test]
    fn p_one_is_fully_connected() {
        let lat = lat(1, 1, 1);
        let r = sample(&lat, &SampleConfig::new(1.0, PairingRule::Fixed, 9, 0));
        assert!(r.spanning);
        assert_eq!(r.largest_spanning_cluster, 40);
        assert_eq!(spanning_fraction(&r, &lat), 1.0);
        let stats = cluster_stats(&r);
        assert_eq!(stats.cluster_count, 1);
        assert_eq!(stats.largest, 40);
        assert_eq!(stats.histogram.get(&40), Some(&1));
    }

    #[test]
    fn p_zero_is_empty() {
        let lat = lat(1, 1, 1);
        let r = sample(&lat, &SampleConfig::new(0.0, PairingRule::Fixed, 9, 0));
        assert!(!r.spanning);
        assert_eq!(spanning_fraction(&r, &lat), 0.0);
        assert_eq!(cluster_stats(&r).cluster_count, 0);
    }

    #[test]
    fn histogram_sums_to_retained_count() {
        let lat = lat(2, 2, 2);
        for trial in 0..5 {
            let r = sample(&lat, &SampleConfig::new(0.7, PairingRule::Random, 4, trial));
            let retained = r.retained.iter().filter(|&&b| b).count();
            let total: usize = cluster_stats(&r)
                .histogram
                .iter()
                .map(|(size, n)| size * n)
                .sum();
            assert_eq!(total, retained);
        }
    }

    #[test]
    fn deterministic_in_config() {
        let lat = lat(2, 2, 2);
        let cfg = SampleConfig::new(0.75, PairingRule::Random, 1234, 7);
        let a = sample(&lat, &cfg);
        let b = sample(&lat, &cfg);
        assert_eq!(a.retained, b.retained);
        assert_eq!(a.roots, b.roots);
        assert_eq!(a.spanning, b.spanning);
        assert_eq!(a.largest_spanning_cluster, b.largest_spanning_cluster);
    }

    /// Shared uniforms make the per-trial spanning indicator monotone in p.
    #[test]
    fn monotone_coupling_per_trial() {
        let lat = lat(2, 2, 2);
        let grid: Vec<f64> = (0..=20).map(|i| i as f64 / 20.0).collect();
        for trial in 0..30 {
            let mut prev = false;
            for &p in &grid {
                let mut cfg = SampleConfig::new(p, PairingRule::Random, 99, trial);
                cfg.site_deletion_override = None;
                let r = sample(&lat, &cfg);
                assert!(
                    !prev || r.spanning,
                    "spanning lost when p rose to {p} on trial {trial}"
                );
                prev = r.spanning;
            }
        }
    }

    #[test]
    fn deletion_override_changes_retention() {
        let lat = lat(1, 1, 1);
        let mut cfg = SampleConfig::new(0.75, PairingRule::Fixed, 5, 0);
        cfg.site_deletion_override = Some(0.0);
        let r = sample(&lat, &cfg);
        assert!(r.retained.iter().all(|&b| b), "zero deletion keeps all sites");
        cfg.site_deletion_override = Some(1.0);
        let r = sample(&lat, &cfg);
        assert!(r.retained.iter().all(|&b| !b));
    }

    /// Union-find labeling agrees with a breadth-first search oracle.
    #[test]
    fn clusters_match_bfs_oracle_smoke() {
        let lat = lat(2, 2, 2);
        for trial in 0..10 {
            let cfg = SampleConfig::new(0.72, PairingRule::Fixed, 31, trial);
            let r = sample(&lat, &cfg);
            // independent adjacency reconstruction
            let q = lat.site_count();
            let mut adj = vec![Vec::new(); q];
            for tet in &lat.tetrahedra {
                let alive = crate::rng::stream_unit(31, trial, StreamKind::Tet, tet.id as u64)
                    < cfg.p;
                let edges: Vec<(usize, usize)> = if alive {
                    K4_PAIRS.to_vec()
                } else {
                    MATCHINGS[0].to_vec()
                };
                for (i, j) in edges {
                    let (a, b) = (tet.corners[i] as usize, tet.corners[j] as usize);
                    if r.retained[a] && r.retained[b] {
                        adj[a].push(b);
                        adj[b].push(a);
                    }
                }
            }
            let mut label = vec![usize::MAX; q];
            let mut next = 0usize;
            for start in 0..q {
                if !r.retained[start] || label[start] != usize::MAX {
                    continue;
                }
                let mut queue = std::collections::VecDeque::from([start]);
                label[start] = next;
                while let Some(u) = queue.pop_front() {
                    for &v in &adj[u] {
                        if label[v] == usize::MAX {
                            label[v] = next;
                            queue.push_back(v);
                        }
                    }
                }
                next += 1;
            }
            for a in 0..q {
                for b in (a + 1)..q {
                    if r.retained[a] && r.retained[b] {
                        assert_eq!(
                            label[a] == label[b],
                            r.roots[a] == r.roots[b],
                            "partition mismatch at ({a},{b}) trial {trial}"
                        );
                    }
                }
            }
        }
    }
}

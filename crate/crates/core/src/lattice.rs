//! Finite open-boundary pyrochlore lattice built from its diamond parent.
//!
//! Diamond vertices are the tetrahedra; pyrochlore sites are the midpoints of
//! diamond bonds. All integer geometry lives in eighth-cell units, so one
//! conventional cubic cell spans 8 units and every site coordinate is odd.
//!
//! A tetrahedron is included when at least one of its four corner midpoints
//! lies strictly inside the open box; sites are all corners of included
//! tetrahedra, dangling ones included. This inclusion rule reproduces the
//! reference site counts exactly (16 per bulk cell plus the documented
//! surface terms).
//!
//! Corner `k` of every tetrahedron carries sublattice index `k`. The half
//! directions are ordered so that sublattice pairs {0,1} and {2,3} differ by
//! (±2,±2,0): the two edges of a failed tetrahedron then transport along x
//! and y. That orientation is the assembly convention assumed throughout.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

/// Bond half-directions from an A-parity diamond vertex, in eighth units.
/// Index = sublattice of the corner site.
pub const HALF_DIRS: [[i64; 3]; 4] = [
    [1, 1, 1],
    [-1, -1, 1],
    [1, -1, -1],
    [-1, 1, -1],
];

/// A-parity diamond vertices within one cell, eighth units mod 8.
const A_BASE: [[i64; 3]; 4] = [[0, 0, 0], [4, 4, 0], [4, 0, 4], [0, 4, 4]];

/// Offset from an A vertex to its B partner.
const A_TO_B: [i64; 3] = [2, 2, 2];

#[derive(Error, Debug, PartialEq, Eq)]
pub enum LatticeError {
    #[error("cell counts must all be at least 1 (got {0}x{1}x{2})")]
    InvalidSpec(usize, usize, usize),
    #[error("lattice dump is inconsistent: {0}")]
    BadDump(String),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct LatticeSpec {
    pub nx: usize,
    pub ny: usize,
    pub nz: usize,
}

impl LatticeSpec {
    pub fn new(nx: usize, ny: usize, nz: usize) -> Result<Self, LatticeError> {
        if nx == 0 || ny == 0 || nz == 0 {
            return Err(LatticeError::InvalidSpec(nx, ny, nz));
        }
        Ok(LatticeSpec { nx, ny, nz })
    }

    pub fn volume(&self) -> u64 {
        (self.nx * self.ny * self.nz) as u64
    }
}

/// Closed-form site count; the builder must match it exactly.
pub fn site_count_formula(spec: &LatticeSpec) -> u64 {
    let (x, y, z) = (spec.nx as u64, spec.ny as u64, spec.nz as u64);
    16 * x * y * z + 8 * (x * y + y * z + x * z) + 4 * (x + y + z) - 12
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Parity {
    A,
    B,
}

#[derive(Clone, Debug)]
pub struct Site {
    pub id: u32,
    /// Position in eighth-cell units; every coordinate is odd.
    pub pos8: [i64; 3],
    pub sublattice: u8,
}

impl Site {
    /// Position in cell units (exactly representable: eighths are dyadic).
    pub fn pos(&self) -> [f64; 3] {
        [
            self.pos8[0] as f64 / 8.0,
            self.pos8[1] as f64 / 8.0,
            self.pos8[2] as f64 / 8.0,
        ]
    }
}

#[derive(Clone, Debug)]
pub struct Tetrahedron {
    pub id: u32,
    /// Site ids ordered by sublattice index.
    pub corners: [u32; 4],
    pub parity: Parity,
}

#[derive(Clone, Debug)]
pub struct Lattice {
    pub spec: LatticeSpec,
    pub sites: Vec<Site>,
    pub tetrahedra: Vec<Tetrahedron>,
    /// Incident tetrahedron ids per site (1 for boundary, 2 for interior).
    pub site_tets: Vec<Vec<u32>>,
    pub source_sites: Vec<u32>,
    pub target_sites: Vec<u32>,
}

fn is_a_point(p: [i64; 3]) -> bool {
    let m = [
        p[0].rem_euclid(8),
        p[1].rem_euclid(8),
        p[2].rem_euclid(8),
    ];
    A_BASE.contains(&m)
}

pub fn build(spec: &LatticeSpec) -> Result<Lattice, LatticeError> {
    spec_valid(spec)?;
    let box8 = [
        8 * spec.nx as i64,
        8 * spec.ny as i64,
        8 * spec.nz as i64,
    ];
    let inside = |m: [i64; 3]| (0..3).all(|d| 0 < m[d] && m[d] < box8[d]);

    // Enumerate candidate diamond vertices with one cell of margin.
    let mut raw_tets: Vec<(Parity, [i64; 3], [[i64; 3]; 4])> = Vec::new();
    for i in -1..=(spec.nx as i64 + 1) {
        for j in -1..=(spec.ny as i64 + 1) {
            for k in -1..=(spec.nz as i64 + 1) {
                for base in A_BASE {
                    let a = [8 * i + base[0], 8 * j + base[1], 8 * k + base[2]];
                    let corners =
                        HALF_DIRS.map(|d| [a[0] + d[0], a[1] + d[1], a[2] + d[2]]);
                    if corners.iter().any(|&m| inside(m)) {
                        raw_tets.push((Parity::A, a, corners));
                    }
                    let b = [a[0] + A_TO_B[0], a[1] + A_TO_B[1], a[2] + A_TO_B[2]];
                    let bcorners =
                        HALF_DIRS.map(|d| [b[0] - d[0], b[1] - d[1], b[2] - d[2]]);
                    if bcorners.iter().any(|&m| inside(m)) {
                        raw_tets.push((Parity::B, b, bcorners));
                    }
                }
            }
        }
    }
    // Canonical order: by diamond-vertex coordinate, A before B on ties
    // (ties cannot actually occur; the sort just pins the order).
    raw_tets.sort_by_key(|(parity, v, _)| (*v, matches!(parity, Parity::B)));

    // Sites sorted by (x, y, z); ids dense in that order.
    let mut coord_ids: BTreeMap<[i64; 3], u32> = BTreeMap::new();
    for (_, _, corners) in &raw_tets {
        for &m in corners {
            let next = coord_ids.len() as u32;
            coord_ids.entry(m).or_insert(next);
        }
    }
    // BTreeMap iteration is sorted; renumber in sorted order.
    let mut sites = Vec::with_capacity(coord_ids.len());
    for (idx, (&pos8, id_slot)) in coord_ids.iter_mut().enumerate() {
        *id_slot = idx as u32;
        let sublattice = (0..4)
            .find(|&k| {
                let d = HALF_DIRS[k];
                is_a_point([pos8[0] - d[0], pos8[1] - d[1], pos8[2] - d[2]])
            })
            .expect("every bond midpoint has exactly one A-side vertex") as u8;
        sites.push(Site {
            id: idx as u32,
            pos8,
            sublattice,
        });
    }

    let mut tetrahedra = Vec::with_capacity(raw_tets.len());
    let mut site_tets: Vec<Vec<u32>> = vec![Vec::new(); sites.len()];
    for (tid, (parity, _, corners)) in raw_tets.iter().enumerate() {
        let ids = corners.map(|m| coord_ids[&m]);
        for (k, &sid) in ids.iter().enumerate() {
            debug_assert_eq!(sites[sid as usize].sublattice as usize, k);
            site_tets[sid as usize].push(tid as u32);
        }
        tetrahedra.push(Tetrahedron {
            id: tid as u32,
            corners: ids,
            parity: *parity,
        });
    }

    // Spanning terminals: slabs half a cell (4 eighths) deep at the x faces.
    let source_sites: Vec<u32> = sites
        .iter()
        .filter(|s| s.pos8[0] < 4)
        .map(|s| s.id)
        .collect();
    let target_sites: Vec<u32> = sites
        .iter()
        .filter(|s| s.pos8[0] > box8[0] - 4)
        .map(|s| s.id)
        .collect();

    let lat = Lattice {
        spec: *spec,
        sites,
        tetrahedra,
        site_tets,
        source_sites,
        target_sites,
    };
    lat.validate()?;
    Ok(lat)
}

fn spec_valid(spec: &LatticeSpec) -> Result<(), LatticeError> {
    if spec.nx == 0 || spec.ny == 0 || spec.nz == 0 {
        return Err(LatticeError::InvalidSpec(spec.nx, spec.ny, spec.nz));
    }
    Ok(())
}

impl Lattice {
    pub fn site_count(&self) -> usize {
        self.sites.len()
    }

    pub fn tetrahedron_count(&self) -> usize {
        self.tetrahedra.len()
    }

    /// Spanning terminal sets (minus-x face, plus-x face).
    pub fn face_sets(&self) -> (&[u32], &[u32]) {
        (&self.source_sites, &self.target_sites)
    }

    fn validate(&self) -> Result<(), LatticeError> {
        let q = site_count_formula(&self.spec);
        if self.sites.len() as u64 != q {
            return Err(LatticeError::BadDump(format!(
                "site count {} does not match the closed form {q}",
                self.sites.len()
            )));
        }
        for t in &self.tetrahedra {
            let mut c = t.corners;
            c.sort_unstable();
            if c.windows(2).any(|w| w[0] == w[1]) {
                return Err(LatticeError::BadDump(format!(
                    "tetrahedron {} has repeated corners",
                    t.id
                )));
            }
        }
        if self
            .site_tets
            .iter()
            .any(|tets| tets.is_empty() || tets.len() > 2)
        {
            return Err(LatticeError::BadDump(
                "every site must belong to one or two tetrahedra".into(),
            ));
        }
        if self.source_sites.is_empty() || self.target_sites.is_empty() {
            return Err(LatticeError::BadDump("empty face set".into()));
        }
        Ok(())
    }

    pub fn to_dump(&self) -> LatticeDump {
        LatticeDump {
            spec: self.spec,
            site_count: self.sites.len() as u64,
            sites: self
                .sites
                .iter()
                .map(|s| {
                    let [x, y, z] = s.pos();
                    SiteRecord {
                        id: s.id,
                        x,
                        y,
                        z,
                        sublattice: s.sublattice,
                    }
                })
                .collect(),
            tetrahedra: self
                .tetrahedra
                .iter()
                .map(|t| TetRecord {
                    id: t.id,
                    corners: t.corners,
                    parity: t.parity,
                })
                .collect(),
            source_sites: self.source_sites.clone(),
            target_sites: self.target_sites.clone(),
        }
    }

    pub fn dump_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_dump()).expect("dump serializes")
    }

    pub fn from_dump(dump: &LatticeDump) -> Result<Lattice, LatticeError> {
        let sites: Vec<Site> = dump
            .sites
            .iter()
            .map(|r| {
                let pos8 = [r.x * 8.0, r.y * 8.0, r.z * 8.0];
                if pos8.iter().any(|v| v.fract() != 0.0) {
                    return Err(LatticeError::BadDump(format!(
                        "site {} position is not on the eighth grid",
                        r.id
                    )));
                }
                Ok(Site {
                    id: r.id,
                    pos8: [pos8[0] as i64, pos8[1] as i64, pos8[2] as i64],
                    sublattice: r.sublattice,
                })
            })
            .collect::<Result<_, _>>()?;
        let tetrahedra: Vec<Tetrahedron> = dump
            .tetrahedra
            .iter()
            .map(|r| Tetrahedron {
                id: r.id,
                corners: r.corners,
                parity: r.parity,
            })
            .collect();
        let mut site_tets: Vec<Vec<u32>> = vec![Vec::new(); sites.len()];
        for t in &tetrahedra {
            for &c in &t.corners {
                let slot = site_tets
                    .get_mut(c as usize)
                    .ok_or_else(|| LatticeError::BadDump(format!("corner {c} out of range")))?;
                slot.push(t.id);
            }
        }
        let lat = Lattice {
            spec: dump.spec,
            sites,
            tetrahedra,
            site_tets,
            source_sites: dump.source_sites.clone(),
            target_sites: dump.target_sites.clone(),
        };
        lat.validate()?;
        Ok(lat)
    }

    pub fn load_json(text: &str) -> Result<Lattice, LatticeError> {
        let dump: LatticeDump =
            serde_json::from_str(text).map_err(|e| LatticeError::BadDump(e.to_string()))?;
        Lattice::from_dump(&dump)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SiteRecord {
    pub id: u32,
    pub x: f64,
    pub y: f64,
    pub z: f64,
    pub sublattice: u8,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TetRecord {
    pub id: u32,
    pub corners: [u32; 4],
    pub parity: Parity,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LatticeDump {
    pub spec: LatticeSpec,
    pub site_count: u64,
    pub sites: Vec<SiteRecord>,
    pub tetrahedra: Vec<TetRecord>,
    pub source_sites: Vec<u32>,
    pub target_sites: Vec<u32>,
}

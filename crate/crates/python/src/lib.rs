//! Python bindings over the pyroclast core: the stabilizer engine at micro
//! scale and the lattice/percolation machinery at macro scale.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyroclast::driver as core_driver;
use pyroclast::graph::GraphState;
use pyroclast::lattice::{self, LatticeSpec};
use pyroclast::percolation::{self, PairingRule, SampleConfig};
use pyroclast::scenarios;
use pyroclast::stabilizer::{BellBranch, FusionOutcome, StabilizerState};
use pyroclast::{Gate, Sign};

fn parse_pairing(s: &str) -> PyResult<PairingRule> {
    s.parse().map_err(PyValueError::new_err)
}

fn parse_sign(v: i8) -> PyResult<Sign> {
    match v {
        1 => Ok(Sign::Plus),
        -1 => Ok(Sign::Minus),
        other => Err(PyValueError::new_err(format!(
            "sign must be +1 or -1, got {other}"
        ))),
    }
}

fn make_spec(nx: usize, ny: usize, nz: usize) -> PyResult<LatticeSpec> {
    LatticeSpec::new(nx, ny, nz).map_err(|e| PyValueError::new_err(e.to_string()))
}

/// Pyrochlore lattice handle.
#[pyclass(name = "Lattice")]
struct PyLattice {
    inner: lattice::Lattice,
}

#[pymethods]
impl PyLattice {
    #[new]
    fn new(nx: usize, ny: usize, nz: usize) -> PyResult<Self> {
        let inner = lattice::build(&make_spec(nx, ny, nz)?)
            .map_err(|e| PyValueError::new_err(e.to_string()))?;
        Ok(PyLattice { inner })
    }

    fn site_count(&self) -> usize {
        self.inner.site_count()
    }

    fn tetrahedron_count(&self) -> usize {
        self.inner.tetrahedron_count()
    }

    /// (source face size, target face size)
    fn face_sizes(&self) -> (usize, usize) {
        let (s, t) = self.inner.face_sets();
        (s.len(), t.len())
    }

    fn dump_json(&self) -> String {
        self.inner.dump_json()
    }
}

/// Exact stabilizer simulator over a labeled graph state.
#[pyclass(name = "Stabilizer")]
struct PyStabilizer {
    inner: StabilizerState,
}

#[pymethods]
impl PyStabilizer {
    /// Start from the graph state with `n` qubits and the given edges.
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        if n > pyroclast::graph::MAX_GRAPH_QUBITS {
            return Err(PyValueError::new_err("too many qubits"));
        }
        for &(u, v) in &edges {
            if u >= n || v >= n || u == v {
                return Err(PyValueError::new_err(format!("bad edge ({u},{v})")));
            }
        }
        let g = GraphState::from_edges(n, &edges);
        Ok(PyStabilizer {
            inner: StabilizerState::graph_state(&g),
        })
    }

    fn num_qubits(&self) -> usize {
        self.inner.num_qubits()
    }

    fn labels(&self) -> Vec<String> {
        self.inner.labels().to_vec()
    }

    /// Apply H, S, X, Y or Z to one qubit.
    fn apply_local(&mut self, qubit: usize, gate: &str) -> PyResult<()> {
        let gate = match gate {
            "H" | "h" => Gate::H,
            "S" | "s" => Gate::S,
            "X" | "x" => Gate::X,
            "Y" | "y" => Gate::Y,
            "Z" | "z" => Gate::Z,
            other => return Err(PyValueError::new_err(format!("unknown gate {other}"))),
        };
        self.inner
            .apply_local(qubit, gate)
            .map_err(|e| PyValueError::new_err(e.to_string()))
    }

    fn apply_cz(&mut self, a: usize, b: usize) -> PyResult<()> {
        self.inner
            .apply_cz(a, b)
            .map_err(|e| PyValueError::new_err(e.to_string()))
    }

    /// Fuse plain qubit `a` with Hadamard-side qubit `b` on a success branch
    /// ("phi+", "phi-", "psi+", "psi-"); both qubits are removed.
    fn fuse_success(&mut self, a: usize, b: usize, branch: &str) -> PyResult<()> {
        let branch = match branch {
            "phi+" => BellBranch::PhiPlus,
            "phi-" => BellBranch::PhiMinus,
            "psi+" => BellBranch::PsiPlus,
            "psi-" => BellBranch::PsiMinus,
            other => return Err(PyValueError::new_err(format!("unknown branch {other}"))),
        };
        self.inner
            .fuse(a, b, FusionOutcome::success(branch))
            .map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
        self.inner
            .remove_qubits(&[a, b])
            .map_err(|e| PyRuntimeError::new_err(e.to_string()))
    }

    /// Ambiguous-branch fusion with forced collapse signs (each +1 or -1);
    /// both qubits are removed.
    fn fuse_failure(&mut self, a: usize, b: usize, plain_z: i8, hadamard_z: i8) -> PyResult<()> {
        let outcome = FusionOutcome::failure(parse_sign(plain_z)?, parse_sign(hadamard_z)?);
        self.inner
            .fuse(a, b, outcome)
            .map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
        self.inner
            .remove_qubits(&[a, b])
            .map_err(|e| PyRuntimeError::new_err(e.to_string()))
    }

    /// Canonical graph form: (edges, per-qubit local Clifford labels).
    fn graph_form(&self) -> (Vec<(usize, usize)>, Vec<u8>) {
        let (g, layer) = self.inner.to_graph_form();
        (g.edges(), layer.labels())
    }
}

/// Local-complementation orbit equivalence of two labeled graphs.
#[pyfunction]
#[pyo3(signature = (n, edges_a, edges_b, max_n = 9))]
fn lc_equivalent(
    n: usize,
    edges_a: Vec<(usize, usize)>,
    edges_b: Vec<(usize, usize)>,
    max_n: usize,
) -> PyResult<bool> {
    let ga = GraphState::from_edges(n, &edges_a);
    let gb = GraphState::from_edges(n, &edges_b);
    pyroclast::graph::lc_equivalent(&ga, &gb, max_n)
        .map_err(|e| PyValueError::new_err(e.to_string()))
}

/// Run the fusion scenario suite plus the lattice-rule certifications.
/// Returns a list of (name, passed, detail) triples.
#[pyfunction]
fn run_fusion_suite() -> Vec<(String, bool, String)> {
    let report = scenarios::run_full_suite();
    report
        .scenarios
        .iter()
        .map(|v| {
            (
                v.name.clone(),
                v.passed,
                format!("{} qubits", v.surviving_qubits),
            )
        })
        .chain(
            report
                .certifications
                .iter()
                .map(|c| (c.name.clone(), c.passed, c.detail.clone())),
        )
        .collect()
}

/// One stochastic realization; returns (spanning, largest_spanning_cluster,
/// spanning_fraction).
#[pyfunction]
#[pyo3(signature = (lattice, p, seed, trial, pairing = "fixed", site_deletion_prob = None))]
fn sample_spanning(
    lattice: &PyLattice,
    p: f64,
    seed: u64,
    trial: u64,
    pairing: &str,
    site_deletion_prob: Option<f64>,
) -> PyResult<(bool, usize, f64)> {
    if !(0.0..=1.0).contains(&p) {
        return Err(PyValueError::new_err("p must be in [0, 1]"));
    }
    let mut cfg = SampleConfig::new(p, parse_pairing(pairing)?, seed, trial);
    cfg.site_deletion_override = site_deletion_prob;
    let r = percolation::sample(&lattice.inner, &cfg);
    let fraction = percolation::spanning_fraction(&r, &lattice.inner);
    Ok((r.spanning, r.largest_spanning_cluster, fraction))
}

#[pyclass(name = "SweepPoint", skip_from_py_object)]
#[derive(Clone)]
struct PySweepPoint {
    #[pyo3(get)]
    p: f64,
    #[pyo3(get)]
    trials: u64,
    #[pyo3(get)]
    spanning_count: u64,
    #[pyo3(get)]
    spanning_prob: f64,
    #[pyo3(get)]
    ci_lo: f64,
    #[pyo3(get)]
    ci_hi: f64,
    #[pyo3(get)]
    mean_spanning_fraction: f64,
}

impl From<&core_driver::SweepRow> for PySweepPoint {
    fn from(r: &core_driver::SweepRow) -> Self {
        PySweepPoint {
            p: r.p,
            trials: r.trials,
            spanning_count: r.spanning_count,
            spanning_prob: r.spanning_prob,
            ci_lo: r.ci_lo,
            ci_hi: r.ci_hi,
            mean_spanning_fraction: r.mean_spanning_fraction,
        }
    }
}

/// Spanning-probability sweep over a p grid.
#[pyfunction]
#[pyo3(signature = (nx, ny, nz, p_min, p_max, p_step, trials, seed, pairing = "fixed", coupled = true))]
#[allow(clippy::too_many_arguments)]
fn sweep(
    nx: usize,
    ny: usize,
    nz: usize,
    p_min: f64,
    p_max: f64,
    p_step: f64,
    trials: u64,
    seed: u64,
    pairing: &str,
    coupled: bool,
) -> PyResult<Vec<PySweepPoint>> {
    let spec = core_driver::SweepSpec {
        lattice: make_spec(nx, ny, nz)?,
        p_min,
        p_max,
        p_step,
        trials,
        seed,
        pairing: parse_pairing(pairing)?,
        coupled,
        site_deletion_override: None,
    };
    let result = core_driver::sweep(&spec).map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok(result.rows.iter().map(PySweepPoint::from).collect())
}

/// Bisection estimate of the spanning threshold.
/// Returns (p_star or None, bracket_lo, bracket_hi).
#[pyfunction]
#[pyo3(signature = (nx, ny, nz, trials, p_lo, p_hi, resolution, seed, pairing = "fixed"))]
#[allow(clippy::too_many_arguments)]
fn estimate_threshold(
    nx: usize,
    ny: usize,
    nz: usize,
    trials: u64,
    p_lo: f64,
    p_hi: f64,
    resolution: f64,
    seed: u64,
    pairing: &str,
) -> PyResult<(Option<f64>, f64, f64)> {
    let est = core_driver::estimate_threshold(
        &make_spec(nx, ny, nz)?,
        trials,
        p_lo,
        p_hi,
        resolution,
        seed,
        parse_pairing(pairing)?,
        None,
    )
    .map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok((est.p_star, est.bracket.0, est.bracket.1))
}

/// (nx, ny, nz, q, spanning_prob, mean_spanning_fraction)
type TableTuple = (usize, usize, usize, u64, f64, f64);

/// The twelve-row lattice-scaling table.
#[pyfunction]
#[pyo3(signature = (p, trials, seed, pairing = "fixed"))]
fn table1(
    p: f64,
    trials: u64,
    seed: u64,
    pairing: &str,
) -> PyResult<Vec<TableTuple>> {
    let rows = core_driver::table_scan(
        &core_driver::reference_specs(),
        p,
        trials,
        seed,
        parse_pairing(pairing)?,
        None,
    )
    .map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok(rows
        .iter()
        .map(|r| {
            (
                r.nx,
                r.ny,
                r.nz,
                r.q,
                r.spanning_prob,
                r.mean_spanning_fraction,
            )
        })
        .collect())
}

#[pymodule]
fn pyroclast_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_class::<PyLattice>()?;
    m.add_class::<PyStabilizer>()?;
    m.add_class::<PySweepPoint>()?;
    m.add_function(wrap_pyfunction!(lc_equivalent, m)?)?;
    m.add_function(wrap_pyfunction!(run_fusion_suite, m)?)?;
    m.add_function(wrap_pyfunction!(sample_spanning, m)?)?;
    m.add_function(wrap_pyfunction!(sweep, m)?)?;
    m.add_function(wrap_pyfunction!(estimate_threshold, m)?)?;
    m.add_function(wrap_pyfunction!(table1, m)?)?;
    Ok(())
}

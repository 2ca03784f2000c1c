//! Exact stabilizer simulation of graph states under local Cliffords, Pauli
//! measurements and Bell-measurement fusion.
//!
//! A state on n qubits is the unique joint +1 eigenstate of n independent,
//! pairwise-commuting signed Paulis. Everything here is deterministic given
//! forced measurement outcomes; callers supply a random source only when they
//! actually want sampled outcomes.

use crate::bits::Bits;
use crate::clifford::{Gate, LocalCliffordLayer, SingleClifford};
use crate::graph::GraphState;
use crate::pauli::{PauliKind, PauliOperator, Sign};
use rand::Rng;
use thiserror::Error;

#[derive(Error, Debug, PartialEq, Eq)]
pub enum StabilizerError {
    #[error("qubit index {0} out of range for {1} qubits")]
    InvalidQubit(usize, usize),
    #[error("operator acts on {0} qubits but the state has {1}")]
    LengthMismatch(usize, usize),
    #[error("cannot fuse a qubit with itself")]
    SelfFusion,
    #[error("forced outcome {forced} contradicts the deterministic value {actual}")]
    ContradictsDeterministic { forced: Sign, actual: Sign },
    #[error("qubit {0:?} is still entangled with the rest of the state")]
    EntangledRemoval(String),
}

/// Unambiguous Bell-measurement outcome.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BellBranch {
    PhiPlus,
    PhiMinus,
    PsiPlus,
    PsiMinus,
}

impl BellBranch {
    pub const ALL: [BellBranch; 4] = [
        BellBranch::PhiPlus,
        BellBranch::PhiMinus,
        BellBranch::PsiPlus,
        BellBranch::PsiMinus,
    ];

    /// Signs of the (X x X, Z x Z) stabilizers of the Bell state.
    pub fn signs(self) -> (Sign, Sign) {
        match self {
            BellBranch::PhiPlus => (Sign::Plus, Sign::Plus),
            BellBranch::PhiMinus => (Sign::Minus, Sign::Plus),
            BellBranch::PsiPlus => (Sign::Plus, Sign::Minus),
            BellBranch::PsiMinus => (Sign::Minus, Sign::Minus),
        }
    }
}

impl std::fmt::Display for BellBranch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            BellBranch::PhiPlus => "phi+",
            BellBranch::PhiMinus => "phi-",
            BellBranch::PsiPlus => "psi+",
            BellBranch::PsiMinus => "psi-",
        })
    }
}

/// Outcome of a probabilistic Bell measurement used for fusion.
///
/// `Failure` is the ambiguous branch: the plain qubit collapses in Z and the
/// Hadamard-side qubit collapses in Z after its internal Hadamard.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FusionOutcome {
    Success { branch: BellBranch },
    Failure { plain_z: Sign, hadamard_z: Sign },
}

impl FusionOutcome {
    pub fn success(branch: BellBranch) -> Self {
        FusionOutcome::Success { branch }
    }

    pub fn failure(plain_z: Sign, hadamard_z: Sign) -> Self {
        FusionOutcome::Failure { plain_z, hadamard_z }
    }

    /// Draw an outcome: success with probability `p`, branches and collapse
    /// signs uniform (the ambiguous output amplitudes have equal magnitude).
    pub fn sample<R: Rng + ?Sized>(p: f64, rng: &mut R) -> Self {
        if rng.random::<f64>() < p {
            FusionOutcome::Success {
                branch: BellBranch::ALL[rng.random_range(0..4)],
            }
        } else {
            let s = |b: bool| if b { Sign::Minus } else { Sign::Plus };
            FusionOutcome::Failure {
                plain_z: s(rng.random()),
                hadamard_z: s(rng.random()),
            }
        }
    }
}

/// Stabilizer generators of the measured-out pair after a fusion, restricted
/// to the two consumed qubits (in `(plain, hadamard)` order).
#[derive(Clone, Debug)]
pub struct PairResidual {
    pub generators: Vec<PauliOperator>,
}

#[derive(Clone)]
pub struct StabilizerState {
    n: usize,
    gens: Vec<PauliOperator>,
    labels: Vec<String>,
}

impl StabilizerState {
    /// Graph state: one generator X_v Z_N(v) per vertex, all signs +.
    pub fn graph_state(g: &GraphState) -> Self {
        let labels = (0..g.num_vertices()).map(|v| v.to_string()).collect();
        Self::graph_state_labeled(g, labels)
    }

    pub fn graph_state_labeled(g: &GraphState, labels: Vec<String>) -> Self {
        let n = g.num_vertices();
        assert_eq!(labels.len(), n);
        let gens = (0..n)
            .map(|v| {
                let mut p = PauliOperator::single(n, v, PauliKind::X);
                for w in g.neighbors(v) {
                    p.set_qubit(w, PauliKind::Z);
                }
                p
            })
            .collect();
        let st = StabilizerState { n, gens, labels };
        st.debug_check();
        st
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn generators(&self) -> &[PauliOperator] {
        &self.gens
    }

    fn check_qubit(&self, q: usize) -> Result<(), StabilizerError> {
        if q < self.n {
            Ok(())
        } else {
            Err(StabilizerError::InvalidQubit(q, self.n))
        }
    }

    /// Conjugate every generator by a single-qubit Clifford on qubit `q`.
    pub fn apply_clifford(&mut self, q: usize, c: SingleClifford) -> Result<(), StabilizerError> {
        self.check_qubit(q)?;
        for g in &mut self.gens {
            if let Some(img) = c.image(g.qubit(q)) {
                let kind = match img.axis {
                    crate::clifford::Axis::X => PauliKind::X,
                    crate::clifford::Axis::Y => PauliKind::Y,
                    crate::clifford::Axis::Z => PauliKind::Z,
                };
                g.set_qubit(q, kind);
                if img.sign.is_minus() {
                    g.sign = g.sign.flipped();
                }
            }
        }
        self.debug_check();
        Ok(())
    }

    pub fn apply_local(&mut self, q: usize, gate: Gate) -> Result<(), StabilizerError> {
        self.apply_clifford(q, gate.clifford())
    }

    pub fn apply_layer(&mut self, layer: &LocalCliffordLayer) -> Result<(), StabilizerError> {
        if layer.ops.len() != self.n {
            return Err(StabilizerError::LengthMismatch(layer.ops.len(), self.n));
        }
        for (q, c) in layer.ops.iter().enumerate() {
            self.apply_clifford(q, *c)?;
        }
        Ok(())
    }

    /// Controlled-Z between two qubits; applying it twice is the identity.
    pub fn apply_cz(&mut self, a: usize, b: usize) -> Result<(), StabilizerError> {
        self.check_qubit(a)?;
        self.check_qubit(b)?;
        if a == b {
            return Err(StabilizerError::SelfFusion);
        }
        for g in &mut self.gens {
            let (xa, za) = (g.x.get(a), g.z.get(a));
            let (xb, zb) = (g.x.get(b), g.z.get(b));
            if xa && xb && (za ^ zb) {
                g.sign = g.sign.flipped();
            }
            if xa {
                g.z.flip(b);
            }
            if xb {
                g.z.flip(a);
            }
        }
        self.debug_check();
        Ok(())
    }

    /// Standard stabilizer measurement of a Pauli operator.
    ///
    /// Deterministic when the operator (up to sign) lies in the group: the
    /// state is unchanged and a forced outcome must match. Otherwise one
    /// anticommuting generator is replaced by the signed operator and the
    /// others are repaired; the outcome is `forced` or, when `None`, drawn
    /// from `decide`.
    fn measure_impl(
        &mut self,
        op: &PauliOperator,
        forced: Option<Sign>,
        decide: impl FnOnce() -> Sign,
    ) -> Result<Sign, StabilizerError> {
        if op.num_qubits() != self.n {
            return Err(StabilizerError::LengthMismatch(op.num_qubits(), self.n));
        }
        let anti: Vec<usize> = (0..self.gens.len())
            .filter(|&i| self.gens[i].anticommutes(op))
            .collect();
        match anti.split_first() {
            None => {
                let actual = self.deterministic_sign(op);
                if let Some(f) = forced {
                    if f != actual {
                        return Err(StabilizerError::ContradictsDeterministic { forced: f, actual });
                    }
                }
                Ok(actual)
            }
            Some((&pivot, rest)) => {
                let outcome = forced.unwrap_or_else(decide);
                let pivot_row = self.gens[pivot].clone();
                for &j in rest {
                    self.gens[j].mul_assign(&pivot_row);
                }
                let mut new_gen = op.clone();
                new_gen.sign = outcome;
                self.gens[pivot] = new_gen;
                self.debug_check();
                Ok(outcome)
            }
        }
    }

    pub fn measure_forced(
        &mut self,
        op: &PauliOperator,
        outcome: Sign,
    ) -> Result<Sign, StabilizerError> {
        self.measure_impl(op, Some(outcome), || unreachable!())
    }

    pub fn measure_sampled<R: Rng + ?Sized>(
        &mut self,
        op: &PauliOperator,
        rng: &mut R,
    ) -> Sign {
        self.measure_impl(op, None, || {
            if rng.random::<bool>() {
                Sign::Minus
            } else {
                Sign::Plus
            }
        })
        .expect("unforced measurement cannot contradict")
    }

    /// Sign with which `op` appears in the stabilizer group. Callers must
    /// ensure `op` commutes with every generator.
    fn deterministic_sign(&self, op: &PauliOperator) -> Sign {
        let mut work = self.gens.clone();
        let mut rem = op.clone();
        let mut used = vec![false; work.len()];
        for col in 0..2 * self.n {
            let bit = |p: &PauliOperator| {
                if col < self.n {
                    p.x.get(col)
                } else {
                    p.z.get(col - self.n)
                }
            };
            let Some(pivot) = (0..work.len()).find(|&i| !used[i] && bit(&work[i])) else {
                continue;
            };
            used[pivot] = true;
            let pivot_row = work[pivot].clone();
            for i in 0..work.len() {
                if !used[i] && bit(&work[i]) {
                    work[i].mul_assign(&pivot_row);
                }
            }
            if bit(&rem) {
                rem.mul_assign(&pivot_row);
            }
        }
        debug_assert!(rem.is_identity(), "operator not in the group up to sign");
        rem.sign()
    }

    /// Bell-measurement fusion of the plain qubit `a` with the Hadamard-side
    /// qubit `b`. The Hadamard on `b` is applied internally before projection.
    /// Afterwards both qubits are fully disentangled from the rest; the
    /// returned residual describes their collapsed pair state.
    pub fn fuse(
        &mut self,
        a: usize,
        b: usize,
        outcome: FusionOutcome,
    ) -> Result<PairResidual, StabilizerError> {
        self.check_qubit(a)?;
        self.check_qubit(b)?;
        if a == b {
            return Err(StabilizerError::SelfFusion);
        }
        self.apply_local(b, Gate::H)?;
        match outcome {
            FusionOutcome::Success { branch } => {
                let (sx, sz) = branch.signs();
                let xx = PauliOperator::on_qubits(self.n, PauliKind::X, &[a, b]);
                let zz = PauliOperator::on_qubits(self.n, PauliKind::Z, &[a, b]);
                self.measure_forced(&xx, sx)?;
                self.measure_forced(&zz, sz)?;
            }
            FusionOutcome::Failure { plain_z, hadamard_z } => {
                let za = PauliOperator::single(self.n, a, PauliKind::Z);
                let zb = PauliOperator::single(self.n, b, PauliKind::Z);
                self.measure_forced(&za, plain_z)?;
                self.measure_forced(&zb, hadamard_z)?;
            }
        }
        let factor = self
            .factor_supported_on(&[a, b])
            .expect("measured pair must be disentangled");
        Ok(PairResidual {
            generators: factor.iter().map(|g| g.gather(&[a, b])).collect(),
        })
    }

    /// Generating set of the subgroup supported entirely on `qubits`, if that
    /// subgroup has full rank there (i.e. the qubits form a pure factor).
    fn factor_supported_on(&self, qubits: &[usize]) -> Option<Vec<PauliOperator>> {
        let mut inside = Bits::zeros(self.n);
        for &q in qubits {
            inside.set(q, true);
        }
        let mut work = self.gens.clone();
        let mut used = vec![false; work.len()];
        for col in 0..2 * self.n {
            let q = col % self.n;
            if inside.get(q) {
                continue;
            }
            let bit = |p: &PauliOperator| {
                if col < self.n {
                    p.x.get(q)
                } else {
                    p.z.get(q)
                }
            };
            let Some(pivot) = (0..work.len()).find(|&i| !used[i] && bit(&work[i])) else {
                continue;
            };
            used[pivot] = true;
            let pivot_row = work[pivot].clone();
            for i in 0..work.len() {
                if i != pivot && !used[i] && bit(&work[i]) {
                    work[i].mul_assign(&pivot_row);
                }
            }
        }
        let supported: Vec<PauliOperator> = (0..work.len())
            .filter(|&i| !used[i])
            .map(|i| work[i].clone())
            .collect();
        debug_assert!(supported
            .iter()
            .all(|g| g.x.subset_of(&inside) && g.z.subset_of(&inside)));
        (supported.len() == qubits.len()).then_some(supported)
    }

    /// Drop fully disentangled qubits, preserving the remaining labels.
    pub fn remove_qubits(&mut self, qubits: &[usize]) -> Result<(), StabilizerError> {
        for &q in qubits {
            self.check_qubit(q)?;
        }
        let Some(inside_basis) = self.factor_supported_on(qubits) else {
            let labels = qubits
                .iter()
                .map(|&q| self.labels[q].clone())
                .collect::<Vec<_>>()
                .join(",");
            return Err(StabilizerError::EntangledRemoval(labels));
        };
        // Re-derive the complement generators: eliminate on the removal
        // columns first so the kept rows lose all support there.
        let mut inside = Bits::zeros(self.n);
        for &q in qubits {
            inside.set(q, true);
        }
        let mut work = self.gens.clone();
        let mut used = vec![false; work.len()];
        let mut inside_pivots = 0usize;
        for col in 0..2 * self.n {
            let q = col % self.n;
            if !inside.get(q) {
                continue;
            }
            let bit = |p: &PauliOperator| {
                if col < self.n {
                    p.x.get(q)
                } else {
                    p.z.get(q)
                }
            };
            let Some(pivot) = (0..work.len()).find(|&i| !used[i] && bit(&work[i])) else {
                continue;
            };
            used[pivot] = true;
            inside_pivots += 1;
            let pivot_row = work[pivot].clone();
            for i in 0..work.len() {
                if i != pivot && !used[i] && bit(&work[i]) {
                    work[i].mul_assign(&pivot_row);
                }
            }
        }
        debug_assert_eq!(inside_pivots, inside_basis.len());
        let keep: Vec<usize> = (0..self.n).filter(|&q| !inside.get(q)).collect();
        let new_gens: Vec<PauliOperator> = (0..work.len())
            .filter(|&i| !used[i])
            .map(|i| {
                debug_assert!(qubits.iter().all(|&q| !work[i].x.get(q) && !work[i].z.get(q)));
                work[i].gather(&keep)
            })
            .collect();
        debug_assert_eq!(new_gens.len(), keep.len());
        self.labels = keep.iter().map(|&q| self.labels[q].clone()).collect();
        self.n = keep.len();
        self.gens = new_gens;
        self.debug_check();
        Ok(())
    }

    /// Reduce to graph-canonical form.
    ///
    /// Returns `(g, layer)` with the guarantee that applying `layer` to
    /// `graph_state(g)` reproduces this state exactly.
    pub fn to_graph_form(&self) -> (GraphState, LocalCliffordLayer) {
        let mut st = self.clone();
        let mut applied = vec![SingleClifford::IDENTITY; st.n];
        let push = |st: &mut StabilizerState, applied: &mut Vec<SingleClifford>, q: usize, c: SingleClifford| {
            st.apply_clifford(q, c).expect("index in range");
            applied[q] = applied[q].then(&c);
        };

        // Make the X block an identity (up to row order): pivot each column,
        // hitting columns that only carry Z support with a Hadamard first.
        let n = st.n;
        let mut rank = 0usize;
        for q in 0..n {
            let find = |st: &StabilizerState, from: usize| {
                (from..n).find(|&i| st.gens[i].x.get(q))
            };
            let mut pivot = find(&st, rank);
            if pivot.is_none() && (rank..n).any(|i| st.gens[i].z.get(q)) {
                push(&mut st, &mut applied, q, SingleClifford::H);
                pivot = find(&st, rank);
            }
            let Some(p) = pivot else { continue };
            st.gens.swap(rank, p);
            let pivot_row = st.gens[rank].clone();
            for i in 0..n {
                if i != rank && st.gens[i].x.get(q) {
                    st.gens[i].mul_assign(&pivot_row);
                }
            }
            rank += 1;
        }
        assert_eq!(rank, n, "stabilizer X block must reach full rank");

        // Rows now pivot distinct columns; order them so row v pivots column v.
        let mut by_pivot: Vec<PauliOperator> = Vec::with_capacity(n);
        let mut slots: Vec<Option<PauliOperator>> = vec![None; n];
        for g in st.gens.drain(..) {
            let col = (0..n).find(|&q| g.x.get(q)).expect("full-rank row");
            slots[col] = Some(g);
        }
        for s in slots {
            by_pivot.push(s.expect("every column pivoted"));
        }
        st.gens = by_pivot;

        // Clear the Y diagonal with S gates, then fix signs with Z gates.
        for q in 0..n {
            if st.gens[q].z.get(q) {
                push(&mut st, &mut applied, q, SingleClifford::S);
            }
        }
        for q in 0..n {
            if st.gens[q].sign().is_minus() {
                push(&mut st, &mut applied, q, SingleClifford::Z);
            }
        }

        let mut g = GraphState::empty(n);
        for v in 0..n {
            debug_assert_eq!(st.gens[v].sign(), Sign::Plus);
            for w in 0..n {
                if w != v && st.gens[v].z.get(w) {
                    debug_assert!(st.gens[w].z.get(v), "adjacency must be symmetric");
                    if v < w {
                        g.set_edge(v, w, true);
                    }
                }
            }
        }
        let layer = LocalCliffordLayer {
            ops: applied.iter().map(|c| c.inverse()).collect(),
        };
        (g, layer)
    }

    /// Unique reduced generating set (bits and signs), for exact equality.
    pub fn canonical_generators(&self) -> Vec<PauliOperator> {
        let mut work = self.gens.clone();
        let mut row = 0usize;
        for col in 0..2 * self.n {
            let q = col % self.n;
            let bit = |p: &PauliOperator| {
                if col < self.n {
                    p.x.get(q)
                } else {
                    p.z.get(q)
                }
            };
            let Some(pivot) = (row..work.len()).find(|&i| bit(&work[i])) else {
                continue;
            };
            work.swap(row, pivot);
            let pivot_row = work[row].clone();
            for (i, w) in work.iter_mut().enumerate() {
                if i != row && bit(w) {
                    w.mul_assign(&pivot_row);
                }
            }
            row += 1;
            if row == work.len() {
                break;
            }
        }
        work
    }

    /// Exact state equality: same qubit count and identical stabilizer groups
    /// including signs.
    pub fn state_eq(&self, other: &StabilizerState) -> bool {
        self.n == other.n
            && self
                .canonical_generators()
                .iter()
                .zip(other.canonical_generators().iter())
                .all(|(a, b)| a == b)
    }

    /// Group invariants: pairwise commutation and full binary rank.
    /// Checked after every mutation in debug builds.
    fn debug_check(&self) {
        #[cfg(debug_assertions)]
        {
            for i in 0..self.gens.len() {
                for j in (i + 1)..self.gens.len() {
                    debug_assert!(
                        !self.gens[i].anticommutes(&self.gens[j]),
                        "generators {i} and {j} anticommute"
                    );
                }
            }
            debug_assert_eq!(self.binary_rank(), self.n, "generators must be independent");
        }
    }

    #[cfg(debug_assertions)]
    fn binary_rank(&self) -> usize {
        let mut rows: Vec<(Bits, Bits)> = self
            .gens
            .iter()
            .map(|g| (g.x.clone(), g.z.clone()))
            .collect();
        let mut rank = 0usize;
        for col in 0..2 * self.n {
            let q = col % self.n;
            let bit = |r: &(Bits, Bits)| if col < self.n { r.0.get(q) } else { r.1.get(q) };
            let Some(p) = (rank..rows.len()).find(|&i| bit(&rows[i])) else {
                continue;
            };
            rows.swap(rank, p);
            let (px, pz) = rows[rank].clone();
            for (i, r) in rows.iter_mut().enumerate() {
                if i != rank && bit(r) {
                    r.0.xor_assign(&px);
                    r.1.xor_assign(&pz);
                }
            }
            rank += 1;
        }
        rank
    }
}

impl std::fmt::Debug for StabilizerState {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "StabilizerState(n={}, labels={:?})", self.n, self.labels)?;
        for g in &self.gens {
            writeln!(f, "  {g:?}")?;
        }
        Ok(())
    }
}

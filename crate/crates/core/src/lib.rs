//! Ballistic generation of percolated pyrochlore cluster states from 3-qubit
//! resources, split into two halves that check each other:
//!
//! * a micro half: an exact stabilizer engine ([`stabilizer`], [`graph`],
//!   [`clifford`]) and an executable suite of fusion scenarios
//!   ([`scenarios`]) that certifies how Bell-measurement successes and
//!   failures reshape small cluster states;
//! * a macro half: a pyrochlore lattice builder ([`lattice`]), a stochastic
//!   realization engine with union-find cluster analysis ([`percolation`])
//!   and a Monte Carlo driver ([`driver`]) for spanning-probability sweeps,
//!   threshold estimation and lattice-scaling tables.
//!
//! The macro failure model (dead tetrahedra become two disjoint edges, sites
//! survive with the square of the Bell success probability) is exactly the
//! model the scenario suite certifies against the stabilizer algebra.

pub mod bits;
pub mod cli;
pub mod clifford;
pub mod driver;
pub mod graph;
pub mod lattice;
pub mod pauli;
pub mod percolation;
pub mod rng;
pub mod scenarios;
pub mod stabilizer;
pub mod stats;
pub mod unionfind;

pub use clifford::{Gate, LocalCliffordLayer, SingleClifford};
pub use graph::{lc_equivalent, GraphState, DEFAULT_LC_GUARD};
pub use pauli::{PauliKind, PauliOperator, Sign};
pub use stabilizer::{BellBranch, FusionOutcome, StabilizerState};

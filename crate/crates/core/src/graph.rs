//! Simple undirected graphs over qubits and local-complementation orbits.

use std::collections::{HashSet, VecDeque};
use thiserror::Error;

/// Hard cap on graph size: adjacency rows are single 64-bit masks.
pub const MAX_GRAPH_QUBITS: usize = 64;

/// Default vertex-count guard for exhaustive orbit enumeration.
pub const DEFAULT_LC_GUARD: usize = 9;

#[derive(Error, Debug, PartialEq, Eq)]
pub enum GraphError {
    #[error("graphs have different vertex counts ({0} vs {1})")]
    SizeMismatch(usize, usize),
    #[error("orbit search on {n} vertices exceeds the guard of {max}")]
    GuardExceeded { n: usize, max: usize },
    #[error("graph size {0} exceeds the supported maximum of {MAX_GRAPH_QUBITS}")]
    TooLarge(usize),
}

/// Undirected simple graph: symmetric adjacency, no self-loops.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GraphState {
    n: usize,
    rows: Vec<u64>,
}

impl GraphState {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_GRAPH_QUBITS);
        GraphState {
            n,
            rows: vec![0; n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = GraphState::empty(n);
        for &(u, v) in edges {
            g.set_edge(u, v, true);
        }
        g
    }

    /// Complete graph on n vertices.
    pub fn complete(n: usize) -> Self {
        let mut g = GraphState::empty(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.set_edge(u, v, true);
            }
        }
        g
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    pub fn set_edge(&mut self, u: usize, v: usize, present: bool) {
        assert!(u != v, "no self-loops");
        if present {
            self.rows[u] |= 1 << v;
            self.rows[v] |= 1 << u;
        } else {
            self.rows[u] &= !(1 << v);
            self.rows[v] &= !(1 << u);
        }
    }

    pub fn toggle_edge(&mut self, u: usize, v: usize) {
        assert!(u != v);
        self.rows[u] ^= 1 << v;
        self.rows[v] ^= 1 << u;
    }

    pub fn neighbors_mask(&self, v: usize) -> u64 {
        self.rows[v]
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (0..self.n).filter(|&u| self.edge(v, u)).collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Complement the subgraph induced by the neighborhood of `v`.
    pub fn local_complement(&mut self, v: usize) {
        let nv = self.rows[v];
        let mut rest = nv;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            self.rows[u] ^= nv & !(1 << u);
        }
    }

    /// Delete vertex `v`'s edges (the vertex stays, isolated).
    pub fn isolate(&mut self, v: usize) {
        let nv = self.rows[v];
        let mut rest = nv;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            self.rows[u] &= !(1 << v);
        }
        self.rows[v] = 0;
    }

    /// Graph on `keep` (order defines the new vertex numbering).
    pub fn induced(&self, keep: &[usize]) -> GraphState {
        let mut g = GraphState::empty(keep.len());
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate().skip(i + 1) {
                if self.edge(u, v) {
                    g.set_edge(i, j, true);
                }
            }
        }
        g
    }

    /// Connected components, each sorted ascending; components ordered by
    /// smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}

impl std::fmt::Debug for GraphState {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GraphState(n={}, edges={:?})", self.n, self.edges())
    }
}

/// True iff `g2` lies in the local-complementation orbit of `g1`.
///
/// The orbit is enumerated exhaustively with a visited set, stopping early on
/// a hit. Both graphs must share the vertex set, and `n` must not exceed
/// `max_n` (the default guard is [`DEFAULT_LC_GUARD`]).
pub fn lc_equivalent(g1: &GraphState, g2: &GraphState, max_n: usize) -> Result<bool, GraphError> {
    if g1.n != g2.n {
        return Err(GraphError::SizeMismatch(g1.n, g2.n));
    }
    if g1.n > max_n {
        return Err(GraphError::GuardExceeded { n: g1.n, max: max_n });
    }
    if g1 == g2 {
        return Ok(true);
    }
    let mut visited: HashSet<Vec<u64>> = HashSet::new();
    visited.insert(g1.rows.clone());
    let mut queue = VecDeque::from([g1.clone()]);
    while let Some(g) = queue.pop_front() {
        for v in 0..g.n {
            if g.rows[v] == 0 {
                continue;
            }
            let mut next = g.clone();
            next.local_complement(v);
            if next == *g2 {
                return Ok(true);
            }
            if visited.insert(next.rows.clone()) {
                queue.push_back(next);
            }
        }
    }
    Ok(false)
}

//! Exclusivity graphs: one vertex per rank-1 projector, an edge between
//! every pair of mutually orthogonal projectors, a positive weight per vertex
//! taken from the inequality coefficients. Vertices are 0-based.

mod independence;
mod io;
mod orthogonality;

pub use independence::{independence_number, IndependentSet, MAX_EXACT_VERTICES};
pub use io::{parse_graph, serialize_graph};
pub use orthogonality::{orthogonality_graph, OrthogonalityGraph, DEFAULT_ORTHO_TOL};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct ExclusivityGraph {
    n: usize,
    weights: Vec<f64>,
    edges: Vec<(usize, usize)>,
}

impl ExclusivityGraph {
    /// Validates and canonicalizes: every edge stored as `(i, j)` with
    /// `i < j`, edges sorted ascending.
    pub fn new(
        n: usize,
        weights: Vec<f64>,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        if weights.len() != n {
            return Err(Error::parse(
                "weights",
                format!("expected {n} weights, got {}", weights.len()),
            ));
        }
        for (i, &w) in weights.iter().enumerate() {
            if !(w.is_finite() && w > 0.0) {
                return Err(Error::parse(
                    format!("weights[{i}]"),
                    format!("weight must be positive and finite, got {w}"),
                ));
            }
        }
        let mut canon = Vec::new();
        for (k, (i, j)) in edges.into_iter().enumerate() {
            if i >= n || j >= n {
                return Err(Error::parse(
                    format!("edges[{k}]"),
                    format!("vertex index out of range for n = {n}: [{i}, {j}]"),
                ));
            }
            if i == j {
                return Err(Error::parse(
                    format!("edges[{k}]"),
                    format!("self-loop on vertex {i}"),
                ));
            }
            canon.push((i.min(j), i.max(j)));
        }
        canon.sort_unstable();
        if let Some(w) = canon.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::parse(
                "edges",
                format!("duplicate edge [{}, {}]", w[0].0, w[0].1),
            ));
        }
        Ok(Self {
            n,
            weights,
            edges: canon,
        })
    }

    pub fn unweighted(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        Self::new(n, vec![1.0; n], edges)
    }

    /// Cycle `C_n` with unit weights.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Domain(format!(
                "cycle needs at least 3 vertices, got {n}"
            )));
        }
        Self::unweighted(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn total_weight(&self) -> f64 {
        self.weights.iter().sum()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.edges.binary_search(&(i.min(j), i.max(j))).is_ok()
    }

    /// Copy of the graph with edge `(i, j)` removed (no-op if absent).
    pub fn without_edge(&self, i: usize, j: usize) -> Self {
        let e = (i.min(j), i.max(j));
        Self {
            n: self.n,
            weights: self.weights.clone(),
            edges: self.edges.iter().copied().filter(|&x| x != e).collect(),
        }
    }

    /// `W_ij = sqrt(w_i w_j)`.
    pub fn weight_matrix(&self) -> crate::numerics::RealMatrix {
        crate::numerics::RealMatrix::from_fn(self.n, self.n, |i, j| {
            (self.weights[i] * self.weights[j]).sqrt()
        })
    }

    pub fn is_independent(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(a, &i)| set[a + 1..].iter().all(|&j| i != j && !self.has_edge(i, j)))
    }
}

use super::ExclusivityGraph;
use crate::error::{Error, Result};
use crate::numerics::vector::{inner, norm};
use crate::numerics::Scalar;

pub const DEFAULT_ORTHO_TOL: f64 = 1e-9;

const UNIT_TOL: f64 = 1e-8;

/// Graph read off a vector family, with the threshold used and the largest
/// overlap `|⟨v_i|v_j⟩|` among the pairs accepted as edges.
#[derive(Clone, Debug)]
pub struct OrthogonalityGraph {
    pub graph: ExclusivityGraph,
    pub threshold: f64,
    pub max_edge_overlap: f64,
}

/// Edge `(i, j)` iff `|⟨v_i|v_j⟩| <= tol`.
pub fn orthogonality_graph<T: Scalar>(
    vectors: &[Vec<T>],
    weights: &[f64],
    tol: f64,
) -> Result<OrthogonalityGraph> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::Domain(format!(
            "orthogonality tolerance must be positive, got {tol}"
        )));
    }
    if vectors.len() != weights.len() {
        return Err(Error::Domain(format!(
            "{} vectors but {} weights",
            vectors.len(),
            weights.len()
        )));
    }
    let dim = vectors.first().map_or(0, Vec::len);
    for (i, v) in vectors.iter().enumerate() {
        if v.len() != dim {
            return Err(Error::Domain(format!(
                "vector {i} has dimension {}, expected {dim}",
                v.len()
            )));
        }
        let nv = norm(v);
        if (nv - 1.0).abs() > UNIT_TOL {
            return Err(Error::Domain(format!("vector {i} is not unit (norm {nv})")));
        }
    }
    let mut edges = Vec::new();
    let mut max_edge_overlap: f64 = 0.0;
    for i in 0..vectors.len() {
        for j in (i + 1)..vectors.len() {
            let ov = inner(&vectors[i], &vectors[j]).abs();
            if ov <= tol {
                edges.push((i, j));
                max_edge_overlap = max_edge_overlap.max(ov);
            }
        }
    }
    Ok(OrthogonalityGraph {
        graph: ExclusivityGraph::new(vectors.len(), weights.to_vec(), edges)?,
        threshold: tol,
        max_edge_overlap,
    })
}

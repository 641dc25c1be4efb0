use num_complex::Complex64;

use super::{rep_value, OrthRep};
use crate::error::{Error, Result};
use crate::graph::ExclusivityGraph;
use crate::numerics::vector::{inner, norm};
use crate::numerics::{gram_factor, ComplexMatrix, RealMatrix};

/// A Gram column counts as zero when its norm is at most this fraction of
/// the largest column norm.
pub const DEGENERATE_REL_TOL: f64 = 1e-6;

/// Feasible SDP matrix built from a representation:
///
/// `X_ij = sqrt(w_i w_j) ⟨ψ|v_i⟩⟨v_j|ψ⟩⟨v_i|v_j⟩ / S`, `S = Σ w_i |⟨ψ|v_i⟩|²`.
///
/// `X` is the Gram matrix of `z_i = sqrt(w_i) ⟨v_i|ψ⟩ v_i / sqrt(S)`, so it is
/// PSD with unit trace and vanishes on edges. By Cauchy-Schwarz
/// `W·X = ‖(Σ w_i |v_i⟩⟨v_i|) ψ‖² / S >= S`, with equality when `ψ` is an
/// eigenvector of the weighted projector sum.
pub fn gram_from_rep(rep: &OrthRep, g: &ExclusivityGraph) -> Result<ComplexMatrix> {
    let s = rep_value(rep, g)?;
    if s <= 1e-12 {
        return Err(Error::Degenerate(format!(
            "representation value {s:e} is too small to normalize"
        )));
    }
    let w = g.weights();
    let z: Vec<Vec<Complex64>> = rep
        .vectors()
        .iter()
        .zip(w)
        .map(|(v, &wi)| {
            let c = inner(v, rep.handle()) * (wi / s).sqrt();
            v.iter().map(|&x| x * c).collect()
        })
        .collect();
    let n = g.n();
    let x = ComplexMatrix::from_fn(n, n, |i, j| {
        if i <= j {
            inner(&z[i], &z[j])
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    Ok(x.hermitian_from_upper())
}

/// Extracts a real representation from a (near-)optimal SDP matrix.
///
/// `X ≈ YᵀY` with `rank_tol` deciding the rank; the handle is the normalized
/// `Σ sqrt(w_i) y_i` and `v_i = y_i / ‖y_i‖`. Vertices whose column is
/// numerically zero get a fresh coordinate axis each, which is orthogonal to
/// the handle and to everything else.
pub fn rep_from_gram(x: &RealMatrix, g: &ExclusivityGraph, rank_tol: f64) -> Result<OrthRep> {
    let n = g.n();
    if x.rows() != n || x.cols() != n {
        return Err(Error::Shape(format!(
            "expected {n}x{n} matrix, got {}x{}",
            x.rows(),
            x.cols()
        )));
    }
    let y = gram_factor(x, rank_tol)?;
    let r = y.rows();
    let columns: Vec<Vec<f64>> = (0..n).map(|i| y.column(i)).collect();

    let mut h = vec![0.0; r];
    for (col, &w) in columns.iter().zip(g.weights()) {
        for (hk, &yk) in h.iter_mut().zip(col) {
            *hk += w.sqrt() * yk;
        }
    }
    let hn = norm(&h);
    if hn <= 1e-10 {
        return Err(Error::NoHandle(format!(
            "weighted column sum has norm {hn:e}; matrix is not an optimum"
        )));
    }

    let norms: Vec<f64> = columns.iter().map(|c| norm(c)).collect();
    let cutoff = DEGENERATE_REL_TOL * norms.iter().copied().fold(0.0, f64::max);
    let degenerate: Vec<usize> = (0..n).filter(|&i| norms[i] <= cutoff).collect();
    let dim = r + degenerate.len();

    let mut handle: Vec<f64> = h.iter().map(|x| x / hn).collect();
    handle.resize(dim, 0.0);
    let mut vectors = Vec::with_capacity(n);
    for (i, col) in columns.iter().enumerate() {
        let mut v = vec![0.0; dim];
        match degenerate.iter().position(|&k| k == i) {
            Some(slot) => v[r + slot] = 1.0,
            None => {
                for (dst, &c) in v.iter_mut().zip(col) {
                    *dst = c / norms[i];
                }
            }
        }
        vectors.push(v);
    }
    OrthRep::real(handle, vectors)
}

//! Orthogonal representations: a handle `|ψ⟩` and one unit vector `|v_i⟩`
//! per vertex, over the reals or the complex numbers. The value of a
//! representation on a weighted graph is `Σ w_i |⟨ψ|v_i⟩|²`.

mod gram;
mod io;

pub use gram::{gram_from_rep, rep_from_gram, DEGENERATE_REL_TOL};
pub use io::{parse_rep, serialize_rep};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::ExclusivityGraph;
use crate::numerics::vector::{inner, norm};
use crate::numerics::{herm_eig, sym_eig, ComplexMatrix, Scalar};

/// Max-norm distance from `λ_max·I` under which the weighted projector sum
/// counts as state independent.
pub const SIC_TOL: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Field {
    Real,
    Complex,
}

/// Representation vectors are stored as complex numbers for both fields; a
/// real representation has every imaginary part exactly zero.
///
/// Construction checks shapes and finiteness only. Unit norms and edge
/// orthogonality are properties checked by [`verify_rep`], so that broken
/// inputs can be reported rather than rejected.
#[derive(Clone, Debug, PartialEq)]
pub struct OrthRep {
    field: Field,
    handle: Vec<Complex64>,
    vectors: Vec<Vec<Complex64>>,
}

impl OrthRep {
    pub fn complex(handle: Vec<Complex64>, vectors: Vec<Vec<Complex64>>) -> Result<Self> {
        let dim = handle.len();
        if dim == 0 {
            return Err(Error::Shape(
                "representation dimension must be at least 1".into(),
            ));
        }
        if !handle.iter().all(|z| z.is_finite()) {
            return Err(Error::Domain("handle has non-finite entries".into()));
        }
        for (i, v) in vectors.iter().enumerate() {
            if v.len() != dim {
                return Err(Error::Shape(format!(
                    "vector {i} has length {}, expected {dim}",
                    v.len()
                )));
            }
            if !v.iter().all(|z| z.is_finite()) {
                return Err(Error::Domain(format!("vector {i} has non-finite entries")));
            }
        }
        Ok(Self {
            field: Field::Complex,
            handle,
            vectors,
        })
    }

    pub fn real(handle: Vec<f64>, vectors: Vec<Vec<f64>>) -> Result<Self> {
        let lift = |v: Vec<f64>| v.into_iter().map(Complex64::from_real).collect::<Vec<_>>();
        let mut rep = Self::complex(lift(handle), vectors.into_iter().map(lift).collect())?;
        rep.field = Field::Real;
        Ok(rep)
    }

    /// Reinterprets as a real representation. Fails if any entry has a
    /// nonzero imaginary part.
    pub fn into_real(mut self) -> Result<Self> {
        let imaginary = self
            .handle
            .iter()
            .chain(self.vectors.iter().flatten())
            .any(|z| z.im != 0.0);
        if imaginary {
            return Err(Error::Domain(
                "representation has nonzero imaginary parts".into(),
            ));
        }
        self.field = Field::Real;
        Ok(self)
    }

    /// Same vectors, viewed over the complex field.
    pub fn to_complex(&self) -> Self {
        Self {
            field: Field::Complex,
            ..self.clone()
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.handle.len()
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn handle(&self) -> &[Complex64] {
        &self.handle
    }

    pub fn vectors(&self) -> &[Vec<Complex64>] {
        &self.vectors
    }

    /// `|⟨ψ|v_i⟩|²` per vertex.
    pub fn overlaps(&self) -> Vec<f64> {
        self.vectors
            .iter()
            .map(|v| inner(&self.handle, v).norm_sqr())
            .collect()
    }

    /// Applies `u` to the handle and every vector. A complex `u` turns the
    /// result complex.
    pub fn transformed(&self, u: &ComplexMatrix) -> Result<Self> {
        if u.rows() != self.dim() || u.cols() != self.dim() {
            return Err(Error::Shape(format!(
                "transform is {}x{}, representation dimension {}",
                u.rows(),
                u.cols(),
                self.dim()
            )));
        }
        let out = Self::complex(
            u.matvec(&self.handle),
            self.vectors.iter().map(|v| u.matvec(v)).collect(),
        )?;
        Ok(match self.field {
            Field::Real => out.clone().into_real().unwrap_or(out),
            Field::Complex => out,
        })
    }

    fn check_aligned(&self, g: &ExclusivityGraph) -> Result<()> {
        if self.len() != g.n() {
            return Err(Error::Domain(format!(
                "representation has {} vectors but the graph has {} vertices",
                self.len(),
                g.n()
            )));
        }
        Ok(())
    }
}

/// `Σ w_i |⟨ψ|v_i⟩|²`.
pub fn rep_value(rep: &OrthRep, g: &ExclusivityGraph) -> Result<f64> {
    rep.check_aligned(g)?;
    Ok(rep
        .overlaps()
        .iter()
        .zip(g.weights())
        .map(|(o, w)| w * o)
        .sum())
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Bound on norm defects and on edge overlaps `|⟨v_i|v_j⟩|`.
    pub tol: f64,
    pub target: Option<f64>,
    /// Bound on `|value - target|`.
    pub value_tol: f64,
    /// Also compute the spectrum of `Σ w_i |v_i⟩⟨v_i|`.
    pub sic: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            tol: 1e-6,
            target: None,
            value_tol: 1e-6,
            sic: false,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub value: f64,
    pub max_norm_residual: f64,
    pub max_edge_residual: f64,
    /// Edge attaining `max_edge_residual`.
    pub worst_edge: Option<(usize, usize)>,
    pub per_vertex_overlap: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub target: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sic_spectrum: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sic: Option<bool>,
    pub tol: f64,
    pub passed: bool,
}

/// Measures how far `rep` is from being an orthogonal representation of `g`
/// and what value it attains. Failures are reported in the result.
pub fn verify_rep(
    rep: &OrthRep,
    g: &ExclusivityGraph,
    opts: &VerifyOptions,
) -> Result<VerificationReport> {
    rep.check_aligned(g)?;
    let per_vertex_overlap = rep.overlaps();
    let value: f64 = per_vertex_overlap
        .iter()
        .zip(g.weights())
        .map(|(o, w)| w * o)
        .sum();

    let max_norm_residual = std::iter::once(&rep.handle)
        .chain(&rep.vectors)
        .map(|v| (norm(v) - 1.0).abs())
        .fold(0.0, f64::max);

    let mut max_edge_residual: f64 = 0.0;
    let mut worst_edge = None;
    for &(i, j) in g.edges() {
        let r = inner(&rep.vectors[i], &rep.vectors[j]).abs();
        if worst_edge.is_none() || r > max_edge_residual {
            max_edge_residual = r;
            worst_edge = Some((i, j));
        }
    }

    let (sic_spectrum, sic) = if opts.sic {
        let cert = certify_operator(rep, g)?;
        (Some(cert.spectrum), Some(cert.sic))
    } else {
        (None, None)
    };

    let value_ok = opts
        .target
        .is_none_or(|t| (value - t).abs() <= opts.value_tol);
    let passed = max_norm_residual <= opts.tol && max_edge_residual <= opts.tol && value_ok;
    Ok(VerificationReport {
        value,
        max_norm_residual,
        max_edge_residual,
        worst_edge,
        per_vertex_overlap,
        target: opts.target,
        sic_spectrum,
        sic,
        tol: opts.tol,
        passed,
    })
}

#[derive(Clone, Debug)]
pub struct OperatorCertificate {
    /// `Σ w_i |v_i⟩⟨v_i|`.
    pub operator: ComplexMatrix,
    /// Ascending.
    pub spectrum: Vec<f64>,
    /// Operator equals `λ_max·I` within [`SIC_TOL`].
    pub sic: bool,
}

/// The largest eigenvalue of `Σ w_i |v_i⟩⟨v_i|` bounds the value over all
/// handles; the operator is a multiple of the identity exactly when every
/// state attains it.
pub fn certify_operator(rep: &OrthRep, g: &ExclusivityGraph) -> Result<OperatorCertificate> {
    rep.check_aligned(g)?;
    let d = rep.dim();
    let mut operator = ComplexMatrix::zeros(d, d);
    for (v, &w) in rep.vectors.iter().zip(g.weights()) {
        operator += &ComplexMatrix::outer(v, v).scaled(w);
    }
    let operator = operator.hermitian_from_upper();
    let spectrum = match rep.field {
        Field::Real => sym_eig(&operator.real_part())?.values,
        Field::Complex => herm_eig(&operator)?.values,
    };
    let top = spectrum.last().copied().unwrap_or(0.0);
    let sic = (&operator - &ComplexMatrix::identity(d).scaled(top)).max_abs() <= SIC_TOL;
    Ok(OperatorCertificate {
        operator,
        spectrum,
        sic,
    })
}

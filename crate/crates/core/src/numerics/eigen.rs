use num_complex::Complex64;

use super::matrix::{embed_hermitian, ComplexMatrix, DenseMatrix, RealMatrix, Scalar};
use super::vector::{inner, norm};
use crate::error::{Error, Result};

/// Relative gap under which two eigenvalues of a block-embedded matrix are
/// treated as one doubled complex eigenvalue.
pub const PAIR_TOL: f64 = 1e-8;

const MAX_SWEEPS: usize = 100;

/// Eigenvalues in ascending order with orthonormal eigenvectors as columns.
#[derive(Clone, Debug)]
pub struct EigenDecomposition<T> {
    pub values: Vec<f64>,
    pub vectors: DenseMatrix<T>,
}

impl<T: Scalar> EigenDecomposition<T> {
    /// `V diag(values) V†`.
    pub fn reconstruct(&self) -> DenseMatrix<T> {
        self.reconstruct_with(|x| x)
    }

    pub(crate) fn reconstruct_with(&self, f: impl Fn(f64) -> f64) -> DenseMatrix<T> {
        let v = &self.vectors;
        let n = v.rows();
        let lam: Vec<f64> = self.values.iter().map(|&x| f(x)).collect();
        let mut out = DenseMatrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let mut acc = T::zero();
                for (k, &l) in lam.iter().enumerate() {
                    if l != 0.0 {
                        acc += (v[(i, k)] * v[(j, k)].conj()).scale(l);
                    }
                }
                out[(i, j)] = acc;
            }
        }
        out.hermitian_from_upper()
    }

    pub fn min_value(&self) -> f64 {
        self.values.first().copied().unwrap_or(0.0)
    }

    pub fn max_value(&self) -> f64 {
        self.values.last().copied().unwrap_or(0.0)
    }
}

/// Symmetric eigendecomposition by cyclic Jacobi rotations. Only the upper
/// triangle of `m` is read.
pub fn sym_eig(m: &RealMatrix) -> Result<EigenDecomposition<f64>> {
    check_input(m)?;
    let mut a = m.hermitian_from_upper();
    let mut v = RealMatrix::identity(m.rows());
    jacobi(&mut a, &mut v);
    Ok(sorted(a, v))
}

/// Same as [`sym_eig`] but starts from an approximate eigenbasis, which
/// makes the rotation sweeps converge in one or two passes when `basis`
/// comes from a nearby matrix.
pub(crate) fn sym_eig_warm(m: &RealMatrix, basis: &RealMatrix) -> Result<EigenDecomposition<f64>> {
    check_input(m)?;
    let sym = m.hermitian_from_upper();
    let mut a = basis
        .transpose()
        .matmul(&sym)?
        .matmul(basis)?
        .hermitian_from_upper();
    let mut w = RealMatrix::identity(m.rows());
    jacobi(&mut a, &mut w);
    let v = basis.matmul(&w)?;
    Ok(sorted(a, v))
}

fn check_input<T: Scalar>(m: &DenseMatrix<T>) -> Result<()> {
    m.ensure_square("eigensolver input")?;
    if m.rows() == 0 {
        return Err(Error::Shape("eigensolver input is empty".into()));
    }
    m.ensure_finite("eigensolver input")
}

fn jacobi(a: &mut RealMatrix, v: &mut RealMatrix) {
    let n = a.rows();
    let scale = a.frobenius_norm();
    if scale == 0.0 {
        return;
    }
    let negligible = 1e-18 * scale;
    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[(p, q)];
                if apq.abs() <= negligible {
                    continue;
                }
                let app = a[(p, p)];
                let aqq = a[(q, q)];
                // Skip once the entry no longer moves the diagonal.
                if app + apq.abs() * 1e3 == app
                    && aqq + apq.abs() * 1e3 == aqq
                    && apq.abs() <= 1e-15 * scale
                {
                    a[(p, q)] = 0.0;
                    a[(q, p)] = 0.0;
                    continue;
                }
                rotated = true;
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[(k, p)];
                    let akq = a[(k, q)];
                    a[(k, p)] = c * akp - s * akq;
                    a[(k, q)] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[(p, k)];
                    let aqk = a[(q, k)];
                    a[(p, k)] = c * apk - s * aqk;
                    a[(q, k)] = s * apk + c * aqk;
                }
                a[(p, q)] = 0.0;
                a[(q, p)] = 0.0;
                a[(p, p)] = app - t * apq;
                a[(q, q)] = aqq + t * apq;
                for k in 0..n {
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = c * vkp - s * vkq;
                    v[(k, q)] = s * vkp + c * vkq;
                }
            }
        }
        if !rotated {
            break;
        }
    }
}

fn sorted(a: RealMatrix, v: RealMatrix) -> EigenDecomposition<f64> {
    let n = a.rows();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].total_cmp(&a[(j, j)]));
    let values = order.iter().map(|&i| a[(i, i)]).collect();
    let vectors = RealMatrix::from_fn(n, n, |i, k| v[(i, order[k])]);
    EigenDecomposition { values, vectors }
}

/// Hermitian eigendecomposition. Solves the real `2n x 2n` block embedding
/// and folds each doubled eigenvalue back into one complex eigenpair. Only
/// the upper triangle of `m` is read.
pub fn herm_eig(m: &ComplexMatrix) -> Result<EigenDecomposition<Complex64>> {
    check_input(m)?;
    let n = m.rows();
    let real = sym_eig(&embed_hermitian(m))?;
    let tol = PAIR_TOL * m.max_abs().max(1.0);

    let mut values = Vec::with_capacity(n);
    let mut columns: Vec<Vec<Complex64>> = Vec::with_capacity(n);
    let mut start = 0;
    while start < 2 * n {
        let mut end = start + 1;
        while end < 2 * n && real.values[end] - real.values[end - 1] <= tol {
            end += 1;
        }
        if (end - start) % 2 == 1 {
            return Err(Error::Domain(format!(
                "eigenvalue pairing failed near {}",
                real.values[start]
            )));
        }
        // Each real eigenvector (x; y) is the complex eigenvector x + iy.
        let mut basis: Vec<Vec<Complex64>> = Vec::new();
        for k in start..end {
            let mut z: Vec<Complex64> = (0..n)
                .map(|i| Complex64::new(real.vectors[(i, k)], real.vectors[(i + n, k)]))
                .collect();
            for _ in 0..2 {
                for b in &basis {
                    let c = inner(b, &z);
                    for (zi, &bi) in z.iter_mut().zip(b) {
                        *zi -= c * bi;
                    }
                }
            }
            let nz = norm(&z);
            if nz > 0.5 {
                basis.push(z.iter().map(|x| x / nz).collect());
            }
        }
        if basis.len() * 2 != end - start {
            return Err(Error::Domain(format!(
                "eigenvalue pairing failed near {}",
                real.values[start]
            )));
        }
        for (j, z) in basis.into_iter().enumerate() {
            let k = start + 2 * j;
            values.push(0.5 * (real.values[k] + real.values[k + 1]));
            columns.push(z);
        }
        start = end;
    }
    let vectors = ComplexMatrix::from_fn(n, n, |i, k| columns[k][i]);
    Ok(EigenDecomposition { values, vectors })
}

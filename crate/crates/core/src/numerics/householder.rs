use num_complex::Complex64;

use super::matrix::{ComplexMatrix, Scalar};
use super::vector::norm;
use crate::error::{Error, Result};

/// Unitary `U` with `U·psi = e₁`.
///
/// A Householder reflection `H = I - 2vv†/(v†v)` with `v = psi + e^{iθ}e₁`
/// (θ the phase of `psi₀`, taken as 0 when `psi₀ = 0`) sends `psi` to
/// `-e^{iθ}e₁`; the first row is then rotated by `-e^{-iθ}` so the image is
/// exactly `+e₁`. Real input gives a real orthogonal `U`. If `psi` is already
/// `e₁` to within `1e-12` the identity is returned.
pub fn basis_to_e1(psi: &[Complex64]) -> Result<ComplexMatrix> {
    let d = psi.len();
    let nrm = norm(psi);
    if d == 0 || !nrm.is_finite() || nrm == 0.0 {
        return Err(Error::Domain("cannot rotate a zero vector onto e1".into()));
    }
    let x: Vec<Complex64> = psi.iter().map(|z| z / nrm).collect();

    let at_e1 =
        (x[0] - Complex64::one()).norm() <= 1e-12 && x[1..].iter().all(|z| z.norm() <= 1e-12);
    if at_e1 {
        return Ok(ComplexMatrix::identity(d));
    }

    let phase = if x[0].norm() > 0.0 {
        x[0] / x[0].norm()
    } else {
        Complex64::one()
    };
    let mut v = x.clone();
    v[0] += phase;
    let vv: f64 = v.iter().map(|z| z.norm_sqr()).sum();
    let mut u = ComplexMatrix::from_fn(d, d, |i, j| {
        let delta = if i == j {
            Complex64::one()
        } else {
            Complex64::zero()
        };
        delta - v[i] * v[j].conj() * (2.0 / vv)
    });
    let fix = -phase.conj();
    for j in 0..d {
        u[(0, j)] *= fix;
    }
    Ok(u)
}

use super::eigen::sym_eig;
use super::matrix::RealMatrix;
use crate::error::{Error, Result};

/// Eigenvalues at or below `DEFAULT_RANK_TOL * λ_max` count as zero.
pub const DEFAULT_RANK_TOL: f64 = 1e-7;

/// Frobenius-nearest PSD matrix: negative eigenvalues clipped to zero.
pub fn psd_project(m: &RealMatrix) -> Result<RealMatrix> {
    let e = sym_eig(m)?;
    Ok(e.reconstruct_with(|x| x.max(0.0)))
}

/// Factor a PSD matrix as `X ≈ YᵀY` with `Y` of shape `r x n`, where `r` is
/// the number of eigenvalues above `rank_tol * λ_max`. Row `k` of `Y` belongs
/// to the `k`-th largest eigenvalue.
pub fn gram_factor(x: &RealMatrix, rank_tol: f64) -> Result<RealMatrix> {
    if !(rank_tol > 0.0 && rank_tol.is_finite()) {
        return Err(Error::Domain(format!(
            "rank_tol must be positive, got {rank_tol}"
        )));
    }
    let e = sym_eig(x)?;
    let n = x.rows();
    let lmax = e.max_value();
    let lmin = e.min_value();
    if lmin < -1e-6 * lmax.max(0.0) && lmin < 0.0 {
        return Err(Error::Domain(format!(
            "matrix is not PSD: eigenvalue {lmin:e} against largest {lmax:e}"
        )));
    }
    let keep: Vec<usize> = (0..n)
        .rev()
        .filter(|&k| e.values[k] > rank_tol * lmax && e.values[k] > 0.0)
        .collect();
    Ok(RealMatrix::from_fn(keep.len(), n, |r, j| {
        let k = keep[r];
        e.values[k].sqrt() * e.vectors[(j, k)]
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::sym_eig;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Exhaustive oracle: the nearest PSD matrix in Frobenius norm, found by
    /// minimizing over a randomized family of PSD candidates, never beats the
    /// clipped one.
    #[test]
    fn projection_is_nearest() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..20 {
            let n = rng.gen_range(2..6);
            let m =
                RealMatrix::from_fn(n, n, |_, _| rng.gen_range(-1.0..1.0)).hermitian_from_upper();
            let p = psd_project(&m).unwrap();
            let best = (&p - &m).frobenius_norm();
            for _ in 0..200 {
                let g = RealMatrix::from_fn(n, n, |_, _| rng.gen_range(-0.3..0.3));
                let cand = &p + &g.transpose().matmul(&g).unwrap();
                let cand = psd_project(
                    &(&cand - &RealMatrix::identity(n).scaled(rng.gen_range(0.0..0.2))),
                )
                .unwrap();
                assert!((&cand - &m).frobenius_norm() >= best - 1e-12);
            }
        }
    }

    #[test]
    fn clips_negative_part() {
        let p = psd_project(&RealMatrix::from_diag(&[1.0, -1.0])).unwrap();
        assert_eq!(p, RealMatrix::from_diag(&[1.0, 0.0]));
    }

    #[test]
    fn idempotent_and_psd() {
        let mut rng = ChaCha8Rng::seed_from_u64(22);
        for _ in 0..20 {
            let n = rng.gen_range(1..12);
            let m =
                RealMatrix::from_fn(n, n, |_, _| rng.gen_range(-2.0..2.0)).hermitian_from_upper();
            let p = psd_project(&m).unwrap();
            let pp = psd_project(&p).unwrap();
            assert!((&p - &pp).max_abs() <= 1e-10);
            assert!(sym_eig(&p).unwrap().min_value() >= -1e-10);
        }
    }

    #[test]
    fn factor_identity_and_rank_one() {
        let y = gram_factor(&RealMatrix::identity(2), DEFAULT_RANK_TOL).unwrap();
        assert_eq!(y.rows(), 2);
        let g = y.transpose().matmul(&y).unwrap();
        assert!((&g - &RealMatrix::identity(2)).max_abs() < 1e-15);

        let u = [0.6, 0.0, -0.8];
        let x = RealMatrix::outer(&u, &u);
        let y = gram_factor(&x, DEFAULT_RANK_TOL).unwrap();
        assert_eq!(y.rows(), 1);
        let sign = y[(0, 0)].signum();
        for j in 0..3 {
            assert!((y[(0, j)] * sign - u[j]).abs() < 1e-14);
        }
    }

    #[test]
    fn factor_rejects_indefinite() {
        let x = RealMatrix::from_diag(&[1.0, -0.5]);
        assert!(matches!(
            gram_factor(&x, DEFAULT_RANK_TOL),
            Err(Error::Domain(_))
        ));
        assert!(gram_factor(&RealMatrix::identity(2), 0.0).is_err());
    }
}

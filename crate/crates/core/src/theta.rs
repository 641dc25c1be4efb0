//! Weighted Lovász theta by semidefinite programming.
//!
//! Maximize `W·X` with `W_ij = sqrt(w_i w_j)` over PSD `X` with unit trace
//! and `X_ij = 0` on every edge. The complex variant optimizes over Hermitian
//! `X = A + iB`, carried as the real block matrix `[[A, -B], [B, A]]` which is
//! PSD exactly when `X` is.
//!
//! The solver is ADMM on the splitting `X = Z`, with `X` kept in the affine
//! set (closed-form projection) and `Z` in the PSD cone (eigenvalue
//! clipping). The penalty starts at 1 and is rebalanced every
//! [`CHECK_EVERY`] iterations from the primal and dual residuals.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::graph::ExclusivityGraph;
use crate::numerics::{sym_eig, sym_eig_warm, ComplexMatrix, DenseMatrix, RealMatrix, Scalar};

pub const DEFAULT_TOL: f64 = 1e-8;
pub const DEFAULT_MAX_ITERS: usize = 200_000;

/// Convergence checks and penalty updates happen at this period.
pub const CHECK_EVERY: usize = 100;

const INITIAL_PENALTY: f64 = 1.0;
const BALANCE_RATIO: f64 = 10.0;
const BALANCE_FACTOR: f64 = 2.0;

#[derive(Clone, Debug)]
pub struct ThetaSolution<T> {
    /// Final iterate after projection onto the affine constraints.
    pub x: DenseMatrix<T>,
    /// `W·X` at `x`.
    pub value: f64,
    /// Largest violation of `trace = 1` and of the edge constraints.
    pub primal_residual: f64,
    /// `max(0, -λ_min(x))`.
    pub psd_residual: f64,
    pub iterations: usize,
    pub converged: bool,
}

/// Frobenius-nearest matrix with unit trace and zero edge entries: edge
/// entries are zeroed in both triangles, then `(1 - trace)/n` is added to
/// the diagonal.
pub fn affine_project(x: &RealMatrix, g: &ExclusivityGraph) -> Result<RealMatrix> {
    let n = g.n();
    if x.rows() != n || x.cols() != n {
        return Err(Error::Shape(format!(
            "expected {n}x{n} matrix, got {}x{}",
            x.rows(),
            x.cols()
        )));
    }
    let mut out = x.clone();
    project_in_place(&mut out, g);
    Ok(out)
}

fn project_in_place(x: &mut RealMatrix, g: &ExclusivityGraph) {
    let n = g.n();
    for &(i, j) in g.edges() {
        x[(i, j)] = 0.0;
        x[(j, i)] = 0.0;
    }
    let shift = (1.0 - x.trace()) / n as f64;
    for i in 0..n {
        x[(i, i)] += shift;
    }
}

/// `max(|trace - 1|, max over edges of |X_ij|, |X_ji|)`.
pub fn constraint_residual<T: Scalar>(x: &DenseMatrix<T>, g: &ExclusivityGraph) -> f64 {
    let mut r = (x.trace() - T::one()).abs();
    for &(i, j) in g.edges() {
        r = r.max(x[(i, j)].abs()).max(x[(j, i)].abs());
    }
    r
}

/// Real Lovász number.
pub fn lovasz_theta(
    g: &ExclusivityGraph,
    tol: f64,
    max_iters: usize,
) -> Result<ThetaSolution<f64>> {
    check_args(g, tol)?;
    let problem = RealProblem { g };
    let run = admm(&problem, tol, max_iters)?;
    let primal_residual = constraint_residual(&run.x, g);
    Ok(ThetaSolution {
        value: problem.objective().dot(&run.x),
        x: run.x,
        primal_residual,
        psd_residual: run.psd_residual,
        iterations: run.iterations,
        converged: run.converged,
    })
}

/// Lovász number over complex Hermitian `X`.
pub fn lovasz_theta_complex(
    g: &ExclusivityGraph,
    tol: f64,
    max_iters: usize,
) -> Result<ThetaSolution<Complex64>> {
    check_args(g, tol)?;
    let problem = ComplexProblem { g };
    let run = admm(&problem, tol, max_iters)?;
    let n = g.n();
    let x = ComplexMatrix::from_fn(n, n, |i, j| {
        Complex64::new(run.x[(i, j)], run.x[(n + i, j)])
    });
    let primal_residual = constraint_residual(&x, g);
    Ok(ThetaSolution {
        value: problem.objective().dot(&run.x),
        x,
        primal_residual,
        psd_residual: run.psd_residual,
        iterations: run.iterations,
        converged: run.converged,
    })
}

fn check_args(g: &ExclusivityGraph, tol: f64) -> Result<()> {
    if g.n() == 0 {
        return Err(Error::Domain("graph has no vertices".into()));
    }
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::Domain(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    Ok(())
}

/// An SDP `max C·X` over PSD `X` in an affine set with a closed-form
/// Euclidean projection, stated in the space of real symmetric matrices.
trait AffineSdp {
    fn dim(&self) -> usize;
    fn objective(&self) -> RealMatrix;
    fn project(&self, y: &mut RealMatrix);
    fn start(&self) -> RealMatrix;
}

struct RealProblem<'a> {
    g: &'a ExclusivityGraph,
}

impl AffineSdp for RealProblem<'_> {
    fn dim(&self) -> usize {
        self.g.n()
    }

    fn objective(&self) -> RealMatrix {
        self.g.weight_matrix()
    }

    fn project(&self, y: &mut RealMatrix) {
        project_in_place(y, self.g);
    }

    fn start(&self) -> RealMatrix {
        RealMatrix::identity(self.g.n()).scaled(1.0 / self.g.n() as f64)
    }
}

/// Works on `[[A, -B], [B, A]]`. Projection first averages onto that block
/// pattern (`A` symmetric, `B` antisymmetric), then applies the constraints
/// to `A` and zeroes `B` on edges. The block norm is twice the norm of
/// `(A, B)`, so the composite is still the Euclidean projection.
struct ComplexProblem<'a> {
    g: &'a ExclusivityGraph,
}

impl AffineSdp for ComplexProblem<'_> {
    fn dim(&self) -> usize {
        2 * self.g.n()
    }

    fn objective(&self) -> RealMatrix {
        // Half of the embedded W, so that C·embed(X) = W·A.
        let w = self.g.weight_matrix();
        let n = self.g.n();
        RealMatrix::from_fn(2 * n, 2 * n, |i, j| {
            if (i < n) == (j < n) {
                0.5 * w[(i % n, j % n)]
            } else {
                0.0
            }
        })
    }

    fn project(&self, y: &mut RealMatrix) {
        let n = self.g.n();
        let mut a = RealMatrix::from_fn(n, n, |i, j| {
            0.25 * (y[(i, j)] + y[(j, i)] + y[(n + i, n + j)] + y[(n + j, n + i)])
        });
        let mut b = RealMatrix::from_fn(n, n, |i, j| {
            0.25 * (y[(n + i, j)] - y[(j, n + i)] - y[(n + j, i)] + y[(i, n + j)])
        });
        project_in_place(&mut a, self.g);
        for &(i, j) in self.g.edges() {
            b[(i, j)] = 0.0;
            b[(j, i)] = 0.0;
        }
        for i in 0..n {
            for j in 0..n {
                y[(i, j)] = a[(i, j)];
                y[(n + i, n + j)] = a[(i, j)];
                y[(n + i, j)] = b[(i, j)];
                y[(i, n + j)] = -b[(i, j)];
            }
        }
    }

    fn start(&self) -> RealMatrix {
        let n = self.g.n();
        RealMatrix::identity(2 * n).scaled(1.0 / n as f64)
    }
}

struct AdmmRun {
    x: RealMatrix,
    psd_residual: f64,
    iterations: usize,
    converged: bool,
}

fn admm(problem: &impl AffineSdp, tol: f64, max_iters: usize) -> Result<AdmmRun> {
    let dim = problem.dim();
    let c = problem.objective();
    let mut z = problem.start();
    let mut u = RealMatrix::zeros(dim, dim);
    let mut rho = INITIAL_PENALTY;
    let mut basis = RealMatrix::identity(dim);
    let mut last_value: Option<f64> = None;

    let mut report = feasible_point(problem, &z)?;
    let mut iterations = 0;
    let mut converged = false;

    while iterations < max_iters {
        iterations += 1;

        let mut x = &(&z - &u) + &c.scaled(1.0 / rho);
        problem.project(&mut x);

        let e = sym_eig_warm(&(&x + &u), &basis)?;
        let z_next = e.reconstruct_with(|l| l.max(0.0));
        basis = e.vectors;

        let dual = (&z_next - &z).frobenius_norm() * rho;
        let diff = &x - &z_next;
        let primal = diff.frobenius_norm();
        u += &diff;
        z = z_next;

        if iterations % CHECK_EVERY == 0 || iterations == max_iters {
            report = feasible_point(problem, &z)?;
            let value = c.dot(&report.0);
            let change =
                last_value.map_or(f64::INFINITY, |v| (value - v).abs() / value.abs().max(1.0));
            last_value = Some(value);
            if report.1.max(change) <= tol {
                converged = true;
                break;
            }
            if primal > BALANCE_RATIO * dual {
                rho *= BALANCE_FACTOR;
                u = u.scaled(1.0 / BALANCE_FACTOR);
            } else if dual > BALANCE_RATIO * primal {
                rho /= BALANCE_FACTOR;
                u = u.scaled(BALANCE_FACTOR);
            }
        }
    }
    let (x, psd_residual) = report;
    Ok(AdmmRun {
        x,
        psd_residual,
        iterations,
        converged,
    })
}

/// Affine projection of the PSD iterate and its PSD violation.
fn feasible_point(problem: &impl AffineSdp, z: &RealMatrix) -> Result<(RealMatrix, f64)> {
    let mut x = z.clone();
    problem.project(&mut x);
    let lmin = sym_eig(&x)?.min_value();
    Ok((x, (-lmin).max(0.0)))
}

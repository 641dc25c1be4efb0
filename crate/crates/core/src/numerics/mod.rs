//! Dense small-scale linear algebra.
//!
//! Everything here works on [`DenseMatrix`] over `f64` or [`Complex64`].
//! Symmetric and Hermitian inputs follow the LAPACK storage rule: only the
//! upper triangle is read and the lower one is taken as its (conjugate)
//! mirror, so a matrix handed to an eigensolver is symmetric by construction.

mod eigen;
mod factor;
mod householder;
mod matrix;
pub mod vector;

pub(crate) use eigen::sym_eig_warm;
pub use eigen::{herm_eig, sym_eig, EigenDecomposition, PAIR_TOL};
pub use factor::{gram_factor, psd_project, DEFAULT_RANK_TOL};
pub use householder::basis_to_e1;
pub use matrix::{embed_hermitian, ComplexMatrix, DenseMatrix, RealMatrix, Scalar};

pub use num_complex::Complex64;

//! Weighted Lovász theta numbers of exclusivity graphs, optimal orthogonal
//! representations, and the conversion of complex representations into real
//! ones.
//!
//! The pipeline is:
//!
//! * [`graph`]: exclusivity graphs, JSON I/O, exact weighted independence number
//!   (the noncontextual bound).
//! * [`theta`]: the weighted theta SDP over real or complex PSD matrices.
//! * [`loor`]: orthogonal representations, their value, Gram-matrix bridges,
//!   verification and operator certification.
//! * [`realify`]: block embedding of Hermitian matrices and the projector and
//!   vector procedures turning a complex `d`-dimensional representation into a
//!   real one of dimension `2d` or `2d - 1`.
//! * [`instances`]: the KCBS pentagon and the BBC 21-ray qutrit set.

pub mod error;
pub mod graph;
pub mod instances;
pub mod loor;
pub mod numerics;
pub mod realify;
pub mod theta;

pub use error::{Error, Result};
pub use graph::ExclusivityGraph;
pub use loor::{Field, OrthRep, VerificationReport};
pub use numerics::{ComplexMatrix, DenseMatrix, EigenDecomposition, RealMatrix};
pub use theta::ThetaSolution;

pub use num_complex::Complex64;

//! Complex-to-real conversion of orthogonal representations.
//!
//! A Hermitian `A + iB` maps to the real symmetric `[[A, -B], [B, A]]`; the
//! map preserves positive semidefiniteness in both directions and doubles
//! every eigenvalue's multiplicity. Two procedures build on it:
//!
//! * [`projector_realify`] embeds every rank-1 projector `|v_i⟩⟨v_i|` into a
//!   real rank-2 projector `Q_i`, then cuts each `Q_i` down to the rank-1
//!   projector along `Q_i a`, where `a` is the real image of the handle.
//!   Output dimension `2d`.
//! * [`vector_realify`] rotates the handle to `e₁`, removes the phase of every
//!   overlap `⟨ψ|v_i⟩`, splits vectors into real and imaginary parts, and
//!   drops the coordinate holding the handle's imaginary part, which is zero
//!   for every aligned vector. Output dimension `2d - 1`.
//!
//! Both keep the value `Σ w_i |⟨ψ|v_i⟩|²` and all edge orthogonalities.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::graph::ExclusivityGraph;
use crate::loor::OrthRep;
use crate::numerics::vector::{inner, norm};
use crate::numerics::{basis_to_e1, embed_hermitian, sym_eig, ComplexMatrix, RealMatrix};

/// Overlaps of at most this magnitude have no defined phase and are left
/// as they are by [`phase_align`].
pub const PHASE_TOL: f64 = 1e-12;

/// Below this `aᵀQ_i a` the projector procedure falls back to the top
/// eigenvector of `Q_i`.
pub const PROJECTOR_DEGENERATE_TOL: f64 = 1e-12;

/// A Hermitian matrix together with its real block image.
#[derive(Clone, Debug)]
pub struct BlockEmbedding {
    pub source: ComplexMatrix,
    pub image: RealMatrix,
}

impl BlockEmbedding {
    pub fn new(m: &ComplexMatrix) -> Result<Self> {
        m.ensure_square("block embedding input")?;
        let defect = m.hermitian_defect();
        if defect > 1e-12 * m.max_abs().max(1.0) {
            return Err(Error::Domain(format!(
                "matrix is not Hermitian (defect {defect:e})"
            )));
        }
        let source = m.hermitian_from_upper();
        let image = embed_hermitian(&source);
        Ok(Self { source, image })
    }
}

/// `A + iB ↦ [[A, -B], [B, A]]`.
pub fn block_embed(m: &ComplexMatrix) -> Result<RealMatrix> {
    Ok(BlockEmbedding::new(m)?.image)
}

/// `(c₁ʳ, …, c_dʳ, c₁ⁱ, …, c_dⁱ)`: real parts first, then imaginary parts,
/// matching the block layout of [`block_embed`]. `⟨M(u)|M(v)⟩ = Re⟨u|v⟩`.
pub fn realify_map_m(v: &[Complex64]) -> Vec<f64> {
    v.iter()
        .map(|z| z.re)
        .chain(v.iter().map(|z| z.im))
        .collect()
}

/// Multiplies each `v_i` by the phase that makes `⟨ψ|v_i⟩` real and
/// nonnegative. Returns a complex representation.
pub fn phase_align(rep: &OrthRep) -> OrthRep {
    let vectors = rep
        .vectors()
        .iter()
        .map(|v| {
            let ov = inner(rep.handle(), v);
            let mag = ov.norm();
            if mag <= PHASE_TOL {
                v.clone()
            } else {
                let undo = (ov / mag).conj();
                v.iter().map(|&x| x * undo).collect()
            }
        })
        .collect();
    OrthRep::complex(rep.handle().to_vec(), vectors).expect("phase alignment keeps shapes")
}

/// Intermediate objects of the projector procedure.
#[derive(Clone, Debug)]
pub struct ProjectorRealification {
    /// Real representation in dimension `2d` with handle `a`.
    pub rep: OrthRep,
    /// Rank-2 projectors `Q_i = block_embed(|v_i⟩⟨v_i|)`.
    pub q: Vec<RealMatrix>,
    /// `½ block_embed(|ψ⟩⟨ψ|) = ½(aaᵀ + bbᵀ)`.
    pub rho_tilde: RealMatrix,
    /// The rank-1 part `½aaᵀ` of `rho_tilde`.
    pub rho_tilde_1: RealMatrix,
    /// Rank-1 projectors `Q_i¹ = Q_i ρ̃¹ Q_i / (ρ̃¹·Q_i)`.
    pub q1: Vec<RealMatrix>,
    /// Vertices that took the top-eigenvector fallback.
    pub fallback: Vec<usize>,
}

pub fn projector_realify(rep: &OrthRep, g: &ExclusivityGraph) -> Result<OrthRep> {
    Ok(projector_realify_diagnostic(rep, g)?.rep)
}

/// The projector procedure with every intermediate matrix kept.
pub fn projector_realify_diagnostic(
    rep: &OrthRep,
    g: &ExclusivityGraph,
) -> Result<ProjectorRealification> {
    check_aligned(rep, g)?;
    let psi = rep.handle();
    let a = realify_map_m(psi);
    let rho_tilde = block_embed(&ComplexMatrix::outer(psi, psi))?.scaled(0.5);
    let rho_tilde_1 = RealMatrix::outer(&a, &a).scaled(0.5);

    let mut q = Vec::with_capacity(rep.len());
    let mut q1 = Vec::with_capacity(rep.len());
    let mut vectors = Vec::with_capacity(rep.len());
    let mut fallback = Vec::new();
    for (i, v) in rep.vectors().iter().enumerate() {
        let qi = block_embed(&ComplexMatrix::outer(v, v))?;
        let qa = qi.matvec(&a);
        let weight = inner(&a, &qa);
        let w = if weight > PROJECTOR_DEGENERATE_TOL {
            let nq = norm(&qa);
            qa.iter().map(|x| x / nq).collect::<Vec<_>>()
        } else {
            fallback.push(i);
            let e = sym_eig(&qi)?;
            e.vectors.column(qi.cols() - 1)
        };
        q1.push(RealMatrix::outer(&w, &w));
        q.push(qi);
        vectors.push(w);
    }
    Ok(ProjectorRealification {
        rep: OrthRep::real(a, vectors)?,
        q,
        rho_tilde,
        rho_tilde_1,
        q1,
        fallback,
    })
}

/// The vector procedure. Output dimension is `2d - 1`.
pub fn vector_realify(rep: &OrthRep, g: &ExclusivityGraph) -> Result<OrthRep> {
    check_aligned(rep, g)?;
    let d = rep.dim();
    let rotated = rep.to_complex().transformed(&basis_to_e1(rep.handle())?)?;
    let aligned = phase_align(&rotated);
    // Coordinate d holds Im(ψ₁), and ⟨ψ|u_i⟩ real makes Im(u_i)₁ vanish too.
    let reduce = |v: &[Complex64]| {
        let mut m = realify_map_m(v);
        m.remove(d);
        m
    };
    OrthRep::real(
        reduce(aligned.handle()),
        aligned.vectors().iter().map(|v| reduce(v)).collect(),
    )
}

fn check_aligned(rep: &OrthRep, g: &ExclusivityGraph) -> Result<()> {
    if rep.len() != g.n() {
        return Err(Error::Domain(format!(
            "representation has {} vectors but the graph has {} vertices",
            rep.len(),
            g.n()
        )));
    }
    Ok(())
}

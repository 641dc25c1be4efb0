//! Built-in instances: the KCBS pentagon with its real three-dimensional
//! optimal representation, and the BBC 21-ray qutrit set with its complex
//! rays and the five-dimensional real representation derived from them.
//!
//! Constants are built from `√2`, `√3`, `5^{-1/4}` and trigonometric values
//! of rational multiples of π at load time, never from decimal literals.

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::graph::{orthogonality_graph, ExclusivityGraph, DEFAULT_ORTHO_TOL};
use crate::loor::{rep_value, verify_rep, OrthRep, VerifyOptions};

/// Tolerance of the load-time self test.
pub const SELF_TEST_TOL: f64 = 1e-10;

#[derive(Clone, Debug)]
pub struct NamedInstance {
    pub name: &'static str,
    pub graph: ExclusivityGraph,
    pub complex_rep: Option<OrthRep>,
    pub real_rep: Option<OrthRep>,
    pub theta_reference: f64,
    pub alpha_reference: f64,
}

pub const NAMES: [&str; 2] = ["kcbs", "bbc21"];

pub fn by_name(name: &str) -> Option<NamedInstance> {
    match name {
        "kcbs" => Some(kcbs()),
        "bbc21" => Some(bbc21()),
        _ => None,
    }
}

/// Pentagon with unit weights. Handle `e₁`; vertex `j` (1-based) gets
/// `τ e₁ + sqrt(1 - τ²)(0, cos φ_j, sin φ_j)` with `τ² = 1/√5` and
/// `φ_j = 2π(2j - 1)/5`, for all five vertices.
pub fn kcbs() -> NamedInstance {
    let tau = 5f64.powf(-0.25);
    let rest = (1.0 - tau * tau).sqrt();
    let vectors = (1..=5)
        .map(|j| {
            let phi = 2.0 * PI * (2 * j - 1) as f64 / 5.0;
            vec![tau, rest * phi.cos(), rest * phi.sin()]
        })
        .collect();
    NamedInstance {
        name: "kcbs",
        graph: ExclusivityGraph::cycle(5).expect("pentagon"),
        complex_rep: None,
        real_rep: Some(OrthRep::real(vec![1.0, 0.0, 0.0], vectors).expect("kcbs rep")),
        theta_reference: 5f64.sqrt(),
        alpha_reference: 2.0,
    }
}

/// The 21 qutrit rays, in order: nine rays `(e_a - ω^k e_b)/√2`, the three
/// basis vectors, and nine rays `(1, ω^a, ω^b)/√3`, with `ω = e^{2πi/3}`.
pub fn bbc21_rays() -> Vec<Vec<Complex64>> {
    let zero = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    let w = Complex64::new(-0.5, 3f64.sqrt() / 2.0);
    let wb = w.conj();
    let s2 = FRAC_1_SQRT_2;
    let s3 = 1.0 / 3f64.sqrt();
    let scaled = |v: [Complex64; 3], s: f64| v.iter().map(|z| z * s).collect::<Vec<_>>();

    let mut rays = Vec::with_capacity(21);
    for phase in [one, wb, w] {
        rays.push(scaled([zero, one, -phase], s2));
        rays.push(scaled([one, zero, -phase], s2));
        rays.push(scaled([one, -phase, zero], s2));
    }
    rays.push(vec![one, zero, zero]);
    rays.push(vec![zero, one, zero]);
    rays.push(vec![zero, zero, one]);
    for v in [
        [one, one, one],
        [one, one, w],
        [one, one, wb],
        [one, wb, one],
        [one, wb, w],
        [one, wb, wb],
        [one, w, one],
        [one, w, w],
        [one, w, wb],
    ] {
        rays.push(scaled(v, s3));
    }
    rays
}

/// The 21 real five-dimensional vectors with handle `e₁`.
pub fn bbc21_real_vectors() -> Vec<Vec<f64>> {
    let a = FRAC_1_SQRT_2;
    let b = 1.0 / (2.0 * 2f64.sqrt());
    let c = 3f64.sqrt() / (2.0 * 2f64.sqrt());
    let p = 1.0 / 3f64.sqrt();
    let q = 1.0 / (2.0 * 3f64.sqrt());
    let h = 0.5;
    vec![
        vec![0.0, a, -a, 0.0, 0.0],
        vec![a, 0.0, -a, 0.0, 0.0],
        vec![a, -a, 0.0, 0.0, 0.0],
        vec![0.0, a, b, 0.0, c],
        vec![a, 0.0, b, 0.0, c],
        vec![a, b, 0.0, c, 0.0],
        vec![0.0, a, b, 0.0, -c],
        vec![a, 0.0, b, 0.0, -c],
        vec![a, b, 0.0, -c, 0.0],
        vec![1.0, 0.0, 0.0, 0.0, 0.0],
        vec![0.0, 1.0, 0.0, 0.0, 0.0],
        vec![0.0, 0.0, 1.0, 0.0, 0.0],
        vec![p, p, p, 0.0, 0.0],
        vec![p, p, -q, 0.0, h],
        vec![p, p, -q, 0.0, -h],
        vec![p, -q, p, -h, 0.0],
        vec![p, -q, -q, -h, h],
        vec![p, -q, -q, -h, -h],
        vec![p, -q, p, h, 0.0],
        vec![p, -q, -q, h, h],
        vec![p, -q, -q, h, -h],
    ]
}

/// Weights 3 on the nine two-term rays, 5 on the remaining twelve.
pub fn bbc21_weights() -> Vec<f64> {
    (0..21).map(|i| if i < 9 { 3.0 } else { 5.0 }).collect()
}

pub fn bbc21() -> NamedInstance {
    let rays = bbc21_rays();
    let graph = orthogonality_graph(&rays, &bbc21_weights(), DEFAULT_ORTHO_TOL)
        .expect("bbc21 rays are unit vectors")
        .graph;
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    NamedInstance {
        name: "bbc21",
        graph,
        complex_rep: Some(
            OrthRep::complex(vec![one, zero, zero], rays).expect("bbc21 complex rep"),
        ),
        real_rep: Some(
            OrthRep::real(vec![1.0, 0.0, 0.0, 0.0, 0.0], bbc21_real_vectors())
                .expect("bbc21 real rep"),
        ),
        theta_reference: 29.0,
        alpha_reference: 27.0,
    }
}

/// One line of [`self_test`].
#[derive(Clone, Debug)]
pub struct SelfTestLine {
    pub instance: &'static str,
    pub rep: &'static str,
    pub value: f64,
    pub passed: bool,
}

/// Re-verifies every stored representation against its graph and the
/// reference value at [`SELF_TEST_TOL`].
pub fn self_test() -> Result<Vec<SelfTestLine>> {
    let mut lines = Vec::new();
    for inst in [kcbs(), bbc21()] {
        let opts = VerifyOptions {
            tol: SELF_TEST_TOL,
            target: Some(inst.theta_reference),
            value_tol: SELF_TEST_TOL,
            sic: false,
        };
        for (label, rep) in [("complex", &inst.complex_rep), ("real", &inst.real_rep)] {
            if let Some(rep) = rep {
                let report = verify_rep(rep, &inst.graph, &opts)?;
                lines.push(SelfTestLine {
                    instance: inst.name,
                    rep: label,
                    value: rep_value(rep, &inst.graph)?,
                    passed: report.passed,
                });
            }
        }
    }
    if let Some(bad) = lines.iter().find(|l| !l.passed) {
        return Err(Error::Domain(format!(
            "instance {} ({} rep) failed its self test with value {}",
            bad.instance, bad.rep, bad.value
        )));
    }
    Ok(lines)
}

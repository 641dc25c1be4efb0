//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use thetarep::graph::independence_number;
use thetarep::instances::{bbc21, bbc21_real_vectors, kcbs};
use thetarep::loor::{
    certify_operator, gram_from_rep, rep_from_gram, rep_value, verify_rep, VerifyOptions,
};
use thetarep::numerics::vector::inner;
use thetarep::numerics::{herm_eig, sym_eig, DEFAULT_RANK_TOL};
use thetarep::realify::{block_embed, projector_realify, vector_realify};
use thetarep::theta::{
    constraint_residual, lovasz_theta, lovasz_theta_complex, DEFAULT_MAX_ITERS, DEFAULT_TOL,
};
use thetarep::{Complex64, ComplexMatrix, ExclusivityGraph, OrthRep, RealMatrix};

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn theta(g: &ExclusivityGraph) -> Result<f64, String> {
    let s = lovasz_theta(g, DEFAULT_TOL, DEFAULT_MAX_ITERS).map_err(|e| e.to_string())?;
    ensure(s.converged, || {
        format!("real solver stopped after {} iterations", s.iterations)
    })?;
    Ok(s.value)
}

fn theta_complex(g: &ExclusivityGraph) -> Result<f64, String> {
    let s = lovasz_theta_complex(g, DEFAULT_TOL, DEFAULT_MAX_ITERS).map_err(|e| e.to_string())?;
    ensure(s.converged, || {
        format!("complex solver stopped after {} iterations", s.iterations)
    })?;
    Ok(s.value)
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn max_edge_overlap(rep: &OrthRep, g: &ExclusivityGraph) -> f64 {
    g.edges()
        .iter()
        .map(|&(i, j)| inner(&rep.vectors()[i], &rep.vectors()[j]).norm())
        .fold(0.0, f64::max)
}

fn brute_force_alpha(g: &ExclusivityGraph) -> f64 {
    let n = g.n();
    let mut best = 0.0f64;
    for mask in 0u32..(1 << n) {
        let independent = g
            .edges()
            .iter()
            .all(|&(i, j)| mask & (1 << i) == 0 || mask & (1 << j) == 0);
        if independent {
            let w: f64 = (0..n)
                .filter(|&i| mask & (1 << i) != 0)
                .map(|i| g.weights()[i])
                .sum();
            best = best.max(w);
        }
    }
    best
}

fn pentagon_theta() -> Outcome {
    let v = theta(&ExclusivityGraph::cycle(5).unwrap())?;
    let err = (v - 5f64.sqrt()).abs();
    ensure(err <= 1e-6, || format!("value {v:.10}"))?;
    Ok(format!("theta = {v:.10}, |err| = {err:.1e}"))
}

fn bbc_theta() -> Outcome {
    let v = theta(&bbc21().graph)?;
    ensure((v - 29.0).abs() <= 1e-4, || format!("value {v:.10}"))?;
    Ok(format!("theta = {v:.10}"))
}

fn alphas() -> Outcome {
    let a5 = independence_number(&ExclusivityGraph::cycle(5).unwrap())
        .map_err(err)?
        .alpha;
    let ab = independence_number(&bbc21().graph).map_err(err)?.alpha;
    ensure(a5 == 2.0 && ab == 27.0, || {
        format!("alpha(C5) = {a5}, alpha(BBC) = {ab}")
    })?;
    Ok(format!("alpha(C5) = {a5}, alpha(BBC-21) = {ab}"))
}

fn real_table() -> Outcome {
    let inst = bbc21();
    let out = vector_realify(inst.complex_rep.as_ref().unwrap(), &inst.graph).map_err(err)?;
    ensure(out.dim() == 5, || format!("dimension {}", out.dim()))?;
    let table = bbc21_real_vectors();
    let mut worst = 0.0f64;
    for (got, want) in out.vectors().iter().zip(&table) {
        for (g, w) in got.iter().zip(want) {
            worst = worst.max((g.re - w).abs()).max(g.im.abs());
        }
    }
    ensure(worst <= 1e-12, || {
        format!("max entry deviation {worst:.1e}")
    })?;
    let opts = VerifyOptions {
        tol: 1e-10,
        target: Some(29.0),
        value_tol: 1e-10,
        sic: false,
    };
    let report = verify_rep(&out, &inst.graph, &opts).map_err(err)?;
    ensure(report.passed, || format!("verification failed: {report:?}"))?;
    Ok(format!(
        "max entry deviation {worst:.1e}, value {:.12}",
        report.value
    ))
}

fn spectra() -> Outcome {
    let inst = bbc21();
    let real = certify_operator(inst.real_rep.as_ref().unwrap(), &inst.graph).map_err(err)?;
    let diag = [29.0, 77.0 / 4.0, 17.0, 39.0 / 4.0, 12.0];
    let off = (&real.operator - &RealMatrix::from_diag(&diag).to_complex()).max_abs();
    ensure(off <= 1e-12, || {
        format!("real operator deviates by {off:.1e}")
    })?;
    let mut sorted = diag.to_vec();
    sorted.sort_by(f64::total_cmp);
    let spec_err = real
        .spectrum
        .iter()
        .zip(&sorted)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    ensure(real.spectrum.len() == 5 && spec_err <= 1e-10, || {
        format!("spectrum {:?}", real.spectrum)
    })?;
    ensure(!real.sic, || "real table reported state independent".into())?;
    let complex = certify_operator(inst.complex_rep.as_ref().unwrap(), &inst.graph).map_err(err)?;
    let dev = (&complex.operator - &ComplexMatrix::identity(3).scaled(29.0)).max_abs();
    ensure(dev <= 1e-12 && complex.sic, || {
        format!(
            "complex operator deviates by {dev:.1e}, sic {}",
            complex.sic
        )
    })?;
    Ok(format!(
        "real spectrum {:?}, sic false; complex 29*I3 (dev {dev:.1e}), sic true",
        real.spectrum
    ))
}

fn field_equality() -> Outcome {
    let mut graphs = vec![
        ExclusivityGraph::cycle(5).unwrap(),
        ExclusivityGraph::cycle(7).unwrap(),
        bbc21().graph,
    ];
    let mut rng = rng(2001);
    for _ in 0..20 {
        let n = rng.gen_range(1..=10);
        let p = rng.gen_range(0.1..0.7);
        graphs.push(random_graph(&mut rng, n, p, true));
    }
    let mut worst = 0.0f64;
    for g in &graphs {
        let d = (theta(g)? - theta_complex(g)?).abs();
        ensure(d <= 1e-4, || format!("gap {d:.1e} on n = {}", g.n()))?;
        worst = worst.max(d);
    }
    Ok(format!(
        "{} graphs, max |theta_c - theta| = {worst:.1e}",
        graphs.len()
    ))
}

fn hermitian_with_spectrum(rng: &mut ChaCha8Rng, n: usize, psd: bool) -> (ComplexMatrix, Vec<f64>) {
    let mut spectrum: Vec<f64> = (0..n)
        .map(|_| {
            if rng.gen_bool(0.3) {
                0.0
            } else {
                rng.gen_range(0.01..2.0)
            }
        })
        .collect();
    if !psd {
        let k = rng.gen_range(0..n);
        spectrum[k] = -rng.gen_range(0.01..2.0);
    }
    let u = random_unitary(rng, n);
    let d = ComplexMatrix::from_diag(
        &spectrum
            .iter()
            .map(|&x| Complex64::new(x, 0.0))
            .collect::<Vec<_>>(),
    );
    let m = u
        .matmul(&d)
        .unwrap()
        .matmul(&u.adjoint())
        .unwrap()
        .hermitian_from_upper();
    spectrum.sort_by(f64::total_cmp);
    (m, spectrum)
}

fn embedding_preserves_psd() -> Outcome {
    let mut rng = rng(2002);
    let mut disagreements = 0;
    let mut worst_doubling = 0.0f64;
    for _ in 0..200 {
        let n = rng.gen_range(1..=10);
        let psd = rng.gen_bool(0.5);
        let (m, spectrum) = hermitian_with_spectrum(&mut rng, n, psd);
        let complex_psd = herm_eig(&m).map_err(err)?.min_value() >= -1e-10;
        let embedded = sym_eig(&block_embed(&m).map_err(err)?).map_err(err)?;
        let real_psd = embedded.min_value() >= -1e-10;
        if complex_psd != real_psd || real_psd != psd {
            disagreements += 1;
        }
        let doubled: Vec<f64> = spectrum.iter().flat_map(|&x| [x, x]).collect();
        for (a, b) in embedded.values.iter().zip(&doubled) {
            worst_doubling = worst_doubling.max((a - b).abs());
        }
    }
    ensure(disagreements == 0, || {
        format!("{disagreements} disagreements")
    })?;
    ensure(worst_doubling <= 1e-8, || {
        format!("doubled spectrum off by {worst_doubling:.1e}")
    })?;
    Ok(format!(
        "200 matrices, 0 disagreements, doubled spectrum within {worst_doubling:.1e}"
    ))
}

fn procedures() -> Outcome {
    let mut rng = rng(2003);
    let (mut value_gap, mut edge) = (0.0f64, 0.0f64);
    for _ in 0..50 {
        let d = rng.gen_range(1..=6);
        let n = rng.gen_range(1..=10);
        let (rep, g) = random_complex_rep(&mut rng, d, n);
        let v0 = rep_value(&rep, &g).map_err(err)?;
        let p = projector_realify(&rep, &g).map_err(err)?;
        let v = vector_realify(&rep, &g).map_err(err)?;
        ensure(p.dim() == 2 * d && v.dim() == 2 * d - 1, || {
            format!("d = {d}: projector {} vector {}", p.dim(), v.dim())
        })?;
        for out in [&p, &v] {
            value_gap = value_gap.max((rep_value(out, &g).map_err(err)? - v0).abs());
            edge = edge.max(max_edge_overlap(out, &g));
        }
    }
    ensure(value_gap <= 1e-9 && edge <= 1e-10, || {
        format!("value gap {value_gap:.1e}, edge {edge:.1e}")
    })?;
    Ok(format!(
        "50 reps, value gap {value_gap:.1e}, edge overlap {edge:.1e}"
    ))
}

fn extraction() -> Outcome {
    let c5 = ExclusivityGraph::cycle(5).unwrap();
    let s = lovasz_theta(&c5, DEFAULT_TOL, DEFAULT_MAX_ITERS).map_err(err)?;
    let rep = rep_from_gram(&s.x, &c5, DEFAULT_RANK_TOL).map_err(err)?;
    let value = rep_value(&rep, &c5).map_err(err)?;
    ensure(rep.dim() == 3, || {
        format!("extracted dimension {}", rep.dim())
    })?;
    ensure((value - 5f64.sqrt()).abs() <= 1e-5, || {
        format!("extracted value {value}")
    })?;
    let inst = kcbs();
    let x = gram_from_rep(inst.real_rep.as_ref().unwrap(), &inst.graph).map_err(err)?;
    let residual = constraint_residual(&x, &inst.graph);
    let min_eig = herm_eig(&x).map_err(err)?.min_value();
    let objective = inst.graph.weight_matrix().to_complex().dot(&x).re;
    ensure(residual <= 1e-10 && min_eig >= -1e-10, || {
        format!("residual {residual:.1e}, min eigenvalue {min_eig:.1e}")
    })?;
    ensure((objective - 5f64.sqrt()).abs() <= 1e-10, || {
        format!("objective {objective}")
    })?;
    Ok(format!("C5 extraction d = 3 value {value:.8}; KCBS Gram residual {residual:.1e}, objective {objective:.12}"))
}

fn oracles() -> Outcome {
    let mut rng = rng(2004);
    for k in 0..100 {
        let n = rng.gen_range(1..=12);
        let p = rng.gen_range(0.0..0.8);
        let g = random_graph(&mut rng, n, p, k % 2 == 0);
        let a = independence_number(&g).map_err(err)?;
        let b = brute_force_alpha(&g);
        ensure((a.alpha - b).abs() <= 1e-9, || {
            format!("alpha {} vs enumeration {b}", a.alpha)
        })?;
    }
    for n in [5, 7, 9] {
        let v = theta(&ExclusivityGraph::cycle(n).unwrap())?;
        ensure((v - odd_cycle_theta(n)).abs() <= 1e-5, || {
            format!("C{n}: {v}")
        })?;
    }
    for _ in 0..50 {
        let n = rng.gen_range(1..=12);
        let p = rng.gen_range(0.1..0.7);
        let g = random_graph(&mut rng, n, p, true);
        let a = independence_number(&g).map_err(err)?.alpha;
        let t = theta(&g)?;
        // The upper bound is attained on edgeless graphs, where the solver
        // value can only match it to the convergence tolerance.
        let total = g.total_weight();
        ensure(a - 1e-4 <= t && t <= total * (1.0 + DEFAULT_TOL), || {
            format!("alpha {a}, theta {t}, total {}", g.total_weight())
        })?;
    }
    Ok("100 alpha enumerations, odd cycles 5/7/9, 50 sandwich checks".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (
            "theta of the pentagon",
            Duration::from_secs(1),
            pentagon_theta,
        ),
        ("theta of BBC-21", Duration::from_secs(10), bbc_theta),
        ("independence numbers", Duration::from_secs(1), alphas),
        (
            "real five-dimensional table",
            Duration::from_secs(10),
            real_table,
        ),
        ("operator spectra and SIC", Duration::from_secs(10), spectra),
        (
            "real and complex theta agree",
            Duration::from_secs(60),
            field_equality,
        ),
        (
            "block embedding preserves PSD",
            Duration::from_secs(30),
            embedding_preserves_psd,
        ),
        (
            "realification procedures",
            Duration::from_secs(30),
            procedures,
        ),
        ("extraction roundtrip", Duration::from_secs(10), extraction),
        ("oracle suites", Duration::from_secs(60), oracles),
    ];
    let mut failures = 0;
    for (k, (name, budget, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome =
            catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > *budget => {
                Err(format!("{detail}; took {elapsed:.2?}, budget {budget:?}"))
            }
            other => other,
        };
        match outcome {
            Ok(detail) => println!("PASS  {:>2}  {name}: {detail} ({elapsed:.2?})", k + 1),
            Err(detail) => {
                failures += 1;
                println!("FAIL  {:>2}  {name}: {detail} ({elapsed:.2?})", k + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

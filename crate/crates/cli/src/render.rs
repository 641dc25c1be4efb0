//! Human-readable renderings for `--format text`.

use std::fmt::Write;

use thetarep::loor::{OperatorCertificate, VerificationReport};
use thetarep::{Complex64, ExclusivityGraph, Field, OrthRep};

use crate::{AlphaReport, ThetaReport};

pub fn theta(r: &ThetaReport) -> String {
    let field = match r.field {
        crate::FieldArg::Real => "real",
        crate::FieldArg::Complex => "complex",
    };
    format!(
        "theta ({field})     {:.10}\nconverged         {}\niterations        {}\nprimal residual   {:.3e}\npsd residual      {:.3e}",
        r.value, r.converged, r.iterations, r.primal_residual, r.psd_residual
    )
}

pub fn alpha(r: &AlphaReport) -> String {
    let witness: Vec<String> = r.witness.iter().map(usize::to_string).collect();
    format!(
        "alpha     {}\nwitness   {{{}}}",
        r.alpha,
        witness.join(", ")
    )
}

pub fn graph(g: &ExclusivityGraph) -> String {
    let mut s = format!(
        "vertices  {}\nedges     {}\nweight    {}\n",
        g.n(),
        g.edges().len(),
        g.total_weight()
    );
    s.push_str("vertex  weight  neighbours\n");
    for v in 0..g.n() {
        let nb: Vec<String> = (0..g.n())
            .filter(|&u| g.has_edge(u, v))
            .map(|u| u.to_string())
            .collect();
        let _ = writeln!(s, "{v:>6}  {:>6}  {}", g.weights()[v], nb.join(" "));
    }
    s.pop();
    s
}

fn scalar(field: Field, z: Complex64) -> String {
    match field {
        Field::Real => format!("{:>12.8}", z.re),
        Field::Complex => format!("{:>11.8}{:+.8}i", z.re, z.im),
    }
}

fn row(field: Field, v: &[Complex64]) -> String {
    v.iter()
        .map(|&z| scalar(field, z))
        .collect::<Vec<_>>()
        .join("  ")
}

pub fn rep(r: &OrthRep, value: Option<f64>) -> String {
    let field = r.field();
    let name = match field {
        Field::Real => "real",
        Field::Complex => "complex",
    };
    let mut s = format!("field {name}, dimension {}, {} vectors\n", r.dim(), r.len());
    if let Some(v) = value {
        let _ = writeln!(s, "value {v:.10}");
    }
    let _ = writeln!(s, "handle  {}", row(field, r.handle()));
    for (i, v) in r.vectors().iter().enumerate() {
        let _ = writeln!(s, "{i:>6}  {}", row(field, v));
    }
    s.pop();
    s
}

pub fn verification(r: &VerificationReport, cert: Option<&OperatorCertificate>) -> String {
    let mut s = format!(
        "{}\nvalue               {:.10}\nmax norm residual   {:.3e}\nmax edge residual   {:.3e}\ntolerance           {:.1e}\n",
        if r.passed { "PASSED" } else { "FAILED" },
        r.value,
        r.max_norm_residual,
        r.max_edge_residual,
        r.tol
    );
    if let Some((i, j)) = r.worst_edge {
        let _ = writeln!(s, "worst edge          ({i}, {j})");
    }
    if let Some(t) = r.target {
        let _ = writeln!(s, "target              {t:.10}");
    }
    if let Some(c) = cert {
        let spectrum: Vec<String> = c.spectrum.iter().map(|l| format!("{l:.10}")).collect();
        let _ = writeln!(s, "operator spectrum   {}", spectrum.join(" "));
        let _ = writeln!(s, "state independent   {}", c.sic);
    }
    s.push_str("vertex  overlap");
    for (i, o) in r.per_vertex_overlap.iter().enumerate() {
        let _ = write!(s, "\n{i:>6}  {o:.10}");
    }
    s
}

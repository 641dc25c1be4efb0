//! `thetarep` command-line frontend.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input error,
//! 3 solver non-convergence.

mod render;

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thetarep::graph::{
    independence_number, orthogonality_graph, parse_graph, serialize_graph, DEFAULT_ORTHO_TOL,
};
use thetarep::loor::{
    certify_operator, parse_rep, rep_from_gram, rep_value, serialize_rep, verify_rep, VerifyOptions,
};
use thetarep::numerics::DEFAULT_RANK_TOL;
use thetarep::realify::{projector_realify, vector_realify};
use thetarep::theta::{lovasz_theta, lovasz_theta_complex, DEFAULT_MAX_ITERS, DEFAULT_TOL};
use thetarep::{instances, ExclusivityGraph, OrthRep};

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_NOT_CONVERGED: u8 = 3;

/// Default tolerance of `verify` when `--tol` is not given.
const DEFAULT_VERIFY_TOL: f64 = 1e-6;

#[derive(Parser)]
#[command(
    name = "thetarep",
    version,
    about = "Weighted Lovász theta, optimal orthogonal representations and their real forms"
)]
struct Cli {
    #[command(flatten)]
    opts: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GlobalOpts {
    /// Solver tolerance (default 1e-8); for `verify`, the residual tolerance (default 1e-6)
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Iteration cap of the SDP solver
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_ITERS)]
    max_iters: usize,
    /// Relative eigenvalue cutoff when factoring a Gram matrix
    #[arg(long, global = true, default_value_t = DEFAULT_RANK_TOL)]
    rank_tol: f64,
    /// Overlap below which two vectors count as orthogonal
    #[arg(long, global = true, default_value_t = DEFAULT_ORTHO_TOL)]
    ortho_tol: f64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the result here instead of stdout
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum FieldArg {
    Real,
    Complex,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Projector,
    Vector,
}

#[derive(Clone, Copy, ValueEnum)]
enum What {
    Graph,
    RepComplex,
    RepReal,
}

#[derive(Subcommand)]
enum Command {
    /// Weighted Lovász number of a graph
    Theta {
        /// Graph JSON file, `-` or absent for stdin
        graph: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = FieldArg::Real)]
        field: FieldArg,
    },
    /// Exact weighted independence number
    Alpha { graph: Option<PathBuf> },
    /// Solve for theta and extract an optimal real representation
    Extract { graph: Option<PathBuf> },
    /// Turn a representation into a real one
    Realify {
        /// Representation JSON file, `-` or absent for stdin
        rep: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Method::Vector)]
        method: Method,
        /// Graph the representation belongs to; only its size is checked
        #[arg(long)]
        graph: Option<PathBuf>,
    },
    /// Check a representation against a graph
    Verify {
        rep: Option<PathBuf>,
        #[arg(long)]
        graph: PathBuf,
        /// Expected value of the representation
        #[arg(long)]
        target: Option<f64>,
        /// Allowed deviation from the target (defaults to the residual tolerance)
        #[arg(long)]
        value_tol: Option<f64>,
        /// Also report the spectrum of the weighted projector sum
        #[arg(long)]
        sic: bool,
    },
    /// Orthogonality graph of a set of vectors
    Orthograph {
        rep: Option<PathBuf>,
        /// Comma-separated vertex weights (default all 1)
        #[arg(long, value_delimiter = ',')]
        weights: Option<Vec<f64>>,
    },
    /// Built-in instances
    Instance {
        name: String,
        #[arg(long, value_enum, default_value_t = What::Graph)]
        what: What,
    },
}

/// A rendered result and the exit code it carries.
struct Output {
    json: String,
    text: String,
    code: u8,
}

impl Output {
    fn ok(json: String, text: String) -> Self {
        Self {
            json,
            text,
            code: 0,
        }
    }
}

struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

fn read_input(path: Option<&Path>) -> Result<String, InputError> {
    match path {
        None => read_stdin(),
        Some(p) if p == Path::new("-") => read_stdin(),
        Some(p) => fs::read_to_string(p).map_err(|e| InputError(format!("{}: {e}", p.display()))),
    }
}

fn read_stdin() -> Result<String, InputError> {
    let mut s = String::new();
    io::stdin()
        .read_to_string(&mut s)
        .map_err(|e| InputError(format!("stdin: {e}")))?;
    Ok(s)
}

fn load_graph(path: Option<&Path>) -> Result<ExclusivityGraph, InputError> {
    Ok(parse_graph(&read_input(path)?)?)
}

fn load_rep(path: Option<&Path>) -> Result<OrthRep, InputError> {
    Ok(parse_rep(&read_input(path)?)?)
}

fn positive(name: &str, x: f64) -> Result<f64, InputError> {
    if x.is_finite() && x > 0.0 {
        Ok(x)
    } else {
        Err(InputError(format!(
            "--{name} must be a positive number, got {x}"
        )))
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("report serializes")
}

#[derive(Serialize)]
struct ThetaReport {
    field: FieldArg,
    value: f64,
    converged: bool,
    iterations: usize,
    primal_residual: f64,
    psd_residual: f64,
}

#[derive(Serialize)]
struct AlphaReport {
    alpha: f64,
    witness: Vec<usize>,
}

fn run(cli: Cli) -> Result<Output, InputError> {
    let o = &cli.opts;
    let rank_tol = positive("rank-tol", o.rank_tol)?;
    let ortho_tol = positive("ortho-tol", o.ortho_tol)?;
    if o.max_iters == 0 {
        return Err(InputError("--max-iters must be at least 1".into()));
    }
    let solver_tol = positive("tol", o.tol.unwrap_or(DEFAULT_TOL))?;

    match cli.command {
        Command::Theta { graph, field } => {
            let g = load_graph(graph.as_deref())?;
            let report = match field {
                FieldArg::Real => {
                    let s = lovasz_theta(&g, solver_tol, o.max_iters)?;
                    ThetaReport {
                        field,
                        value: s.value,
                        converged: s.converged,
                        iterations: s.iterations,
                        primal_residual: s.primal_residual,
                        psd_residual: s.psd_residual,
                    }
                }
                FieldArg::Complex => {
                    let s = lovasz_theta_complex(&g, solver_tol, o.max_iters)?;
                    ThetaReport {
                        field,
                        value: s.value,
                        converged: s.converged,
                        iterations: s.iterations,
                        primal_residual: s.primal_residual,
                        psd_residual: s.psd_residual,
                    }
                }
            };
            let code = if report.converged {
                0
            } else {
                EXIT_NOT_CONVERGED
            };
            Ok(Output {
                text: render::theta(&report),
                json: to_json(&report),
                code,
            })
        }
        Command::Alpha { graph } => {
            let g = load_graph(graph.as_deref())?;
            let a = independence_number(&g)?;
            let report = AlphaReport {
                alpha: a.alpha,
                witness: a.witness,
            };
            Ok(Output::ok(to_json(&report), render::alpha(&report)))
        }
        Command::Extract { graph } => {
            let g = load_graph(graph.as_deref())?;
            let s = lovasz_theta(&g, solver_tol, o.max_iters)?;
            if !s.converged {
                return Ok(Output {
                    json: String::new(),
                    text: String::new(),
                    code: EXIT_NOT_CONVERGED,
                });
            }
            let rep = rep_from_gram(&s.x, &g, rank_tol)?;
            let value = rep_value(&rep, &g)?;
            Ok(Output::ok(
                serialize_rep(&rep),
                render::rep(&rep, Some(value)),
            ))
        }
        Command::Realify { rep, method, graph } => {
            let r = load_rep(rep.as_deref())?;
            let g = match &graph {
                Some(p) => load_graph(Some(p))?,
                None => ExclusivityGraph::unweighted(r.len(), [])?,
            };
            let out = match method {
                Method::Projector => projector_realify(&r, &g)?,
                Method::Vector => vector_realify(&r, &g)?,
            };
            let value = graph.is_some().then(|| rep_value(&out, &g)).transpose()?;
            Ok(Output::ok(serialize_rep(&out), render::rep(&out, value)))
        }
        Command::Verify {
            rep,
            graph,
            target,
            value_tol,
            sic,
        } => {
            if rep.is_none() && graph == Path::new("-") {
                return Err(InputError(
                    "representation and graph cannot both come from stdin".into(),
                ));
            }
            let g = load_graph(Some(&graph))?;
            let r = load_rep(rep.as_deref())?;
            let tol = positive("tol", o.tol.unwrap_or(DEFAULT_VERIFY_TOL))?;
            let opts = VerifyOptions {
                tol,
                target,
                value_tol: positive("value-tol", value_tol.unwrap_or(tol))?,
                sic,
            };
            let report = verify_rep(&r, &g, &opts)?;
            let certificate = if sic {
                Some(certify_operator(&r, &g)?)
            } else {
                None
            };
            let code = if report.passed { 0 } else { EXIT_VERIFY_FAILED };
            Ok(Output {
                text: render::verification(&report, certificate.as_ref()),
                json: to_json(&report),
                code,
            })
        }
        Command::Orthograph { rep, weights } => {
            let r = load_rep(rep.as_deref())?;
            let weights = weights.unwrap_or_else(|| vec![1.0; r.len()]);
            let og = orthogonality_graph(r.vectors(), &weights, ortho_tol)?;
            Ok(Output::ok(
                serialize_graph(&og.graph),
                render::graph(&og.graph),
            ))
        }
        Command::Instance { name, what } => {
            let inst = instances::by_name(&name).ok_or_else(|| {
                InputError(format!(
                    "unknown instance {name:?}; known: {}",
                    instances::NAMES.join(", ")
                ))
            })?;
            Ok(match what {
                What::Graph => Output::ok(serialize_graph(&inst.graph), render::graph(&inst.graph)),
                What::RepComplex | What::RepReal => {
                    let rep = match what {
                        What::RepComplex => inst
                            .complex_rep
                            .or_else(|| inst.real_rep.as_ref().map(OrthRep::to_complex)),
                        _ => inst.real_rep,
                    }
                    .ok_or_else(|| {
                        InputError(format!("instance {name} has no such representation"))
                    })?;
                    let value = rep_value(&rep, &inst.graph)?;
                    Output::ok(serialize_rep(&rep), render::rep(&rep, Some(value)))
                }
            })
        }
    }
}

fn emit(body: &str, output: Option<&Path>) -> io::Result<()> {
    match output {
        Some(p) => fs::write(p, format!("{body}\n")),
        None => {
            let mut out = io::stdout().lock();
            writeln!(out, "{body}")?;
            out.flush()
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT } else { 0 });
        }
    };
    let format = cli.opts.format;
    let output_path = cli.opts.output.clone();
    match run(cli) {
        Ok(out) => {
            let body = match format {
                Format::Json => &out.json,
                Format::Text => &out.text,
            };
            if !body.is_empty() {
                match emit(body, output_path.as_deref()) {
                    // A downstream reader that stops early is not an error.
                    Err(e) if e.kind() == io::ErrorKind::BrokenPipe => {}
                    Err(e) => {
                        eprintln!("error: cannot write output: {e}");
                        return ExitCode::from(EXIT_INPUT);
                    }
                    Ok(()) => {}
                }
            }
            if out.code == EXIT_NOT_CONVERGED {
                eprintln!("error: solver did not converge within the iteration cap");
            }
            ExitCode::from(out.code)
        }
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}

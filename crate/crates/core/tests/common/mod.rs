//! Random instance generators shared by the integration suites.
#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thetarep::numerics::vector::{inner, normalized};
use thetarep::{Complex64, ComplexMatrix, ExclusivityGraph, OrthRep};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64, weighted: bool) -> ExclusivityGraph {
    let mut edges = vec![];
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    let weights = (0..n)
        .map(|_| {
            if weighted {
                rng.gen_range(0.5..3.0)
            } else {
                1.0
            }
        })
        .collect();
    ExclusivityGraph::new(n, weights, edges).unwrap()
}

pub fn random_complex(rng: &mut ChaCha8Rng) -> Complex64 {
    Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
}

pub fn random_unit(rng: &mut ChaCha8Rng, d: usize) -> Vec<Complex64> {
    loop {
        let v: Vec<Complex64> = (0..d).map(|_| random_complex(rng)).collect();
        if let Some(u) = normalized(&v) {
            return u;
        }
    }
}

/// Haar-ish random unitary from Gram-Schmidt on random columns.
pub fn random_unitary(rng: &mut ChaCha8Rng, d: usize) -> ComplexMatrix {
    let mut cols: Vec<Vec<Complex64>> = Vec::with_capacity(d);
    while cols.len() < d {
        let mut v: Vec<Complex64> = (0..d).map(|_| random_complex(rng)).collect();
        for _ in 0..2 {
            for c in &cols {
                let k = inner(c, &v);
                for (x, &y) in v.iter_mut().zip(c) {
                    *x -= k * y;
                }
            }
        }
        if let Some(u) = normalized(&v) {
            if u.iter().all(|z| z.is_finite()) {
                cols.push(u);
            }
        }
    }
    ComplexMatrix::from_fn(d, d, |i, j| cols[j][i])
}

/// Random complex orthogonal representation together with a graph it
/// represents. Each vertex is supported on a random set of coordinates
/// before a common random unitary; vertices with disjoint supports are
/// orthogonal and each such pair becomes an edge with probability 0.7.
pub fn random_complex_rep(rng: &mut ChaCha8Rng, d: usize, n: usize) -> (OrthRep, ExclusivityGraph) {
    let u = random_unitary(rng, d);
    let mut supports = Vec::with_capacity(n);
    let mut vectors = Vec::with_capacity(n);
    for _ in 0..n {
        let size = rng.gen_range(1..=d.div_ceil(2));
        let mut support: Vec<usize> = (0..d).collect();
        for k in 0..d {
            let j = rng.gen_range(k..d);
            support.swap(k, j);
        }
        support.truncate(size);
        let mut v = vec![Complex64::new(0.0, 0.0); d];
        for &k in &support {
            v[k] = random_complex(rng);
        }
        let v = normalized(&v).unwrap_or_else(|| {
            let mut e = vec![Complex64::new(0.0, 0.0); d];
            e[support[0]] = Complex64::new(1.0, 0.0);
            e
        });
        vectors.push(u.matvec(&v));
        supports.push(support);
    }
    let mut edges = vec![];
    for i in 0..n {
        for j in (i + 1)..n {
            let disjoint = supports[i].iter().all(|k| !supports[j].contains(k));
            if disjoint && rng.gen_bool(0.7) {
                edges.push((i, j));
            }
        }
    }
    let weights = (0..n).map(|_| rng.gen_range(0.5..4.0)).collect();
    let g = ExclusivityGraph::new(n, weights, edges).unwrap();
    (OrthRep::complex(random_unit(rng, d), vectors).unwrap(), g)
}

pub fn odd_cycle_theta(n: usize) -> f64 {
    let c = (std::f64::consts::PI / n as f64).cos();
    n as f64 * c / (1.0 + c)
}

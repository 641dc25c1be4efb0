use super::ExclusivityGraph;
use crate::error::{Error, Result};

/// Largest graph the exact solver accepts (one machine word per bitset).
pub const MAX_EXACT_VERTICES: usize = 64;

/// Maximum-weight independent set.
#[derive(Clone, Debug, PartialEq)]
pub struct IndependentSet {
    pub alpha: f64,
    /// Sorted ascending; lexicographically smallest among optimal sets.
    pub witness: Vec<usize>,
}

/// Exact weighted independence number by branch and bound.
///
/// Vertices are relabelled by descending weight so that the lowest set bit
/// of a candidate mask is always its heaviest vertex. Pruning uses a greedy
/// clique cover of the candidates: an independent set meets each clique at
/// most once, so the sum of clique maxima bounds what remains.
pub fn independence_number(g: &ExclusivityGraph) -> Result<IndependentSet> {
    let n = g.n();
    if n > MAX_EXACT_VERTICES {
        return Err(Error::Capacity(format!(
            "exact independence number supports at most {MAX_EXACT_VERTICES} vertices, got {n}; \
             this solver is meant for desk-scale graphs"
        )));
    }
    if n == 0 {
        return Ok(IndependentSet {
            alpha: 0.0,
            witness: vec![],
        });
    }
    let solver = Solver::new(g);
    let all = full_mask(n);

    let mut alpha = 0.0;
    solver.search(all, 0.0, &mut alpha, f64::INFINITY);

    // Lexicographically smallest optimum: decide vertices in index order,
    // keeping each one whenever an optimum extending the current choice exists.
    let target = alpha - solver.eps;
    let mut cand = all;
    let mut chosen_w = 0.0;
    let mut witness = Vec::new();
    for v in 0..n {
        let bit = 1u64 << solver.pos[v];
        if cand & bit == 0 {
            continue;
        }
        let rest = cand & !bit & !solver.adj[solver.pos[v]];
        let w = chosen_w + g.weights()[v];
        let mut best = target - solver.eps;
        if w >= target || solver.search(rest, w, &mut best, target) {
            witness.push(v);
            chosen_w = w;
            cand = rest;
        } else {
            cand &= !bit;
        }
    }
    debug_assert!(g.is_independent(&witness));
    Ok(IndependentSet { alpha, witness })
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

struct Solver {
    /// `pos[v]` is the position of vertex `v` in descending-weight order.
    pos: Vec<usize>,
    /// Adjacency and weights indexed by position.
    adj: Vec<u64>,
    weight: Vec<f64>,
    eps: f64,
}

impl Solver {
    fn new(g: &ExclusivityGraph) -> Self {
        let n = g.n();
        let w = g.weights();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| w[b].total_cmp(&w[a]).then(a.cmp(&b)));
        let mut pos = vec![0; n];
        for (p, &v) in order.iter().enumerate() {
            pos[v] = p;
        }
        let mut adj = vec![0u64; n];
        for &(i, j) in g.edges() {
            adj[pos[i]] |= 1 << pos[j];
            adj[pos[j]] |= 1 << pos[i];
        }
        Self {
            pos,
            adj,
            weight: order.iter().map(|&v| w[v]).collect(),
            eps: 1e-9 * g.total_weight().max(1.0),
        }
    }

    fn clique_cover_bound(&self, mut remaining: u64) -> f64 {
        let mut bound = 0.0;
        while remaining != 0 {
            let v = remaining.trailing_zeros() as usize;
            bound += self.weight[v];
            let mut clique = 1u64 << v;
            let mut common = remaining & self.adj[v];
            while common != 0 {
                let u = common.trailing_zeros() as usize;
                clique |= 1 << u;
                common &= self.adj[u];
            }
            remaining &= !clique;
        }
        bound
    }

    /// Raises `best` to the heaviest independent set found under `cand` on
    /// top of weight `cur`. Returns `true` as soon as `best >= stop`.
    fn search(&self, cand: u64, cur: f64, best: &mut f64, stop: f64) -> bool {
        if cur > *best {
            *best = cur;
            if *best >= stop {
                return true;
            }
        }
        if cand == 0 || cur + self.clique_cover_bound(cand) <= *best + self.eps {
            return false;
        }
        let v = cand.trailing_zeros() as usize;
        let bit = 1u64 << v;
        if self.search(cand & !bit & !self.adj[v], cur + self.weight[v], best, stop) {
            return true;
        }
        self.search(cand & !bit, cur, best, stop)
    }
}

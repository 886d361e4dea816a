//! Maximizing `λ'(H, ·)` over the standard simplex.
//!
//! Each start runs projected gradient ascent: `x ← P(x + α∇λ')` where `P`
//! is the Euclidean projection onto the simplex and `α` comes from a
//! halving Armijo search. Starts are independent, so a caller may run them on
//! several threads through [`maximize_with`]; merging is order-independent.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, VertexSet};
use crate::lagrangian::{eval, gradient, support_of, Weighting};

/// Coordinates above this count as support.
pub const SUPPORT_EPS: f64 = 1e-8;
/// Largest value loss accepted by the support-reduction pass.
pub const VALUE_EPS: f64 = 1e-10;
const ARMIJO: f64 = 1e-4;
const MIN_STEP: f64 = 1e-20;
const MAX_STEP: f64 = 1e6;
const STALL_ITERS: usize = 100;
const STALL_FACTOR: f64 = 0.999;
const ROUNDING: f64 = 1e-13;

/// Optimizer settings.
#[derive(Clone, Debug, PartialEq)]
pub struct Config {
    /// Total number of starting points.
    pub restarts: usize,
    pub seed: u64,
    /// Iteration cap per start.
    pub max_iters: usize,
    /// Stop once `‖P(x + ∇) − x‖₂` falls below this.
    pub tol: f64,
    /// Run the zero-and-re-ascend pass that tries to shrink the support.
    pub minimize_support: bool,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            restarts: 100,
            seed: 0,
            max_iters: 10_000,
            tol: 1e-9,
            minimize_support: true,
        }
    }
}

/// Outcome of a single ascent.
#[derive(Clone, Debug, PartialEq)]
pub struct Ascent {
    pub value: f64,
    pub x: Vec<f64>,
    pub iterations: usize,
    pub converged: bool,
}

/// First-order optimality diagnostics at a weighting.
#[derive(Clone, Debug, PartialEq)]
pub struct OptimalityCheck {
    /// `max_{i ∈ supp} |g_i − mean_{supp} g|`.
    pub kkt_residual: f64,
    /// Support pairs that share no edge.
    pub cover_violations: Vec<(usize, usize)>,
    /// `max_{j ∉ supp} (g_j − mean_{supp} g)⁺`; positive means weight could
    /// profitably move off the support.
    pub off_support_excess: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct OptimizationResult {
    /// Best `λ'` found.
    pub value: f64,
    /// `value / r!` when the hypergraph is `r`-uniform.
    pub uniform_value: Option<f64>,
    pub x: Weighting,
    pub support: VertexSet,
    pub kkt_residual: f64,
    pub cover_violations: Vec<(usize, usize)>,
    pub off_support_excess: f64,
    pub restarts_used: usize,
    /// Coordinates removed by the support-reduction pass.
    pub support_reductions: usize,
}

/// Euclidean projection onto `{x : x ≥ 0, Σx = 1}` by the sort-and-threshold method.
pub fn project_simplex(v: &[f64]) -> Vec<f64> {
    let mut u = v.to_vec();
    u.sort_unstable_by(|a, b| b.total_cmp(a));
    let mut cumulative = 0.0;
    let mut theta = 0.0;
    for (k, &uk) in u.iter().enumerate() {
        cumulative += uk;
        let t = (cumulative - 1.0) / (k + 1) as f64;
        if uk - t > 0.0 {
            theta = t;
        }
    }
    v.iter().map(|&vi| (vi - theta).max(0.0)).collect()
}

/// The deterministic start list: uniform, each vertex, then seeded
/// symmetric-Dirichlet samples (normalized exponentials). Truncated to
/// `cfg.restarts` entries.
pub fn starting_points(n: usize, cfg: &Config) -> Vec<Vec<f64>> {
    let mut starts = Vec::with_capacity(cfg.restarts);
    if cfg.restarts == 0 {
        return starts;
    }
    starts.push(vec![1.0 / n as f64; n]);
    for v in 0..n {
        if starts.len() == cfg.restarts {
            return starts;
        }
        let mut e = vec![0.0; n];
        e[v] = 1.0;
        starts.push(e);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    while starts.len() < cfg.restarts {
        let draws: Vec<f64> = (0..n).map(|_| -libm::log(1.0 - rng.gen::<f64>())).collect();
        let total: f64 = draws.iter().sum();
        starts.push(draws.into_iter().map(|d| d / total).collect());
    }
    starts
}

/// `P(x + αg)` over the coordinates in `face`; the others stay at zero.
fn step_to(x: &[f64], g: &[f64], alpha: f64, face: VertexSet) -> Vec<f64> {
    let idx: Vec<usize> = face.iter().map(|v| v - 1).collect();
    let moved: Vec<f64> = idx.iter().map(|&i| x[i] + alpha * g[i]).collect();
    let mut out = vec![0.0; x.len()];
    for (&i, v) in idx.iter().zip(project_simplex(&moved)) {
        out[i] = v;
    }
    out
}

fn dot_diff(g: &[f64], y: &[f64], x: &[f64]) -> f64 {
    g.iter()
        .zip(y.iter().zip(x))
        .map(|(gi, (yi, xi))| gi * (yi - xi))
        .sum()
}

fn distance(a: &[f64], b: &[f64]) -> f64 {
    libm::sqrt(a.iter().zip(b).map(|(p, q)| (p - q) * (p - q)).sum())
}

/// Projected gradient ascent from `start` (projected onto the simplex first).
pub fn ascend(h: &Hypergraph, start: &[f64], cfg: &Config) -> Ascent {
    ascend_on_face(h, start, cfg, VertexSet::prefix(h.n()))
}

/// Projected gradient ascent restricted to the face `{x : x_v = 0 for v ∉ face}`.
pub fn ascend_on_face(h: &Hypergraph, start: &[f64], cfg: &Config, face: VertexSet) -> Ascent {
    assert!(!face.is_empty(), "ascent face must be nonempty");
    let mut x = step_to(start, start, 0.0, face);
    let mut f = eval(h, &x).expect("length checked by caller");
    let mut g = gradient(h, &x).expect("length checked by caller").0;
    let mut alpha = 1.0;
    let mut best_stationarity = f64::INFINITY;
    let mut stalled = 0;
    for it in 0..cfg.max_iters {
        let stationarity = distance(&step_to(&x, &g, 1.0, face), &x);
        if stationarity <= cfg.tol {
            return Ascent {
                value: f,
                x,
                iterations: it,
                converged: true,
            };
        }
        // on a flat optimal face equal-value steps can drift without end
        if stationarity < STALL_FACTOR * best_stationarity {
            best_stationarity = stationarity;
            stalled = 0;
        } else {
            stalled += 1;
            if stalled == STALL_ITERS {
                return Ascent {
                    value: f,
                    x,
                    iterations: it,
                    converged: false,
                };
            }
        }
        let mut a = alpha;
        let accepted = loop {
            let y = step_to(&x, &g, a, face);
            let fy = eval(h, &y).expect("same length");
            let resolution = ROUNDING * f.abs().max(1.0);
            if fy > f + resolution {
                if fy >= f + ARMIJO * dot_diff(&g, &y, &x) {
                    break Some((y, fy));
                }
            } else if fy >= f - resolution {
                // values this close are rounding noise; judge by stationarity instead
                let gy = gradient(h, &y).expect("same length").0;
                if distance(&step_to(&y, &gy, 1.0, face), &y) < stationarity {
                    break Some((y, fy));
                }
            }
            a *= 0.5;
            if a < MIN_STEP {
                break None;
            }
        };
        let Some((y, fy)) = accepted else {
            // no ascent step left in floating point
            return Ascent {
                value: f,
                x,
                iterations: it,
                converged: true,
            };
        };
        x = y;
        f = fy;
        g = gradient(h, &x).expect("same length").0;
        alpha = (a * 2.0).min(MAX_STEP);
    }
    Ascent {
        value: f,
        x,
        iterations: cfg.max_iters,
        converged: false,
    }
}

/// `λ'` first-order diagnostics at `x`.
pub fn check_optimality(h: &Hypergraph, x: &[f64]) -> Result<OptimalityCheck> {
    let g = gradient(h, x)?;
    let support: Vec<usize> = support_of(x, SUPPORT_EPS).to_vec();
    let (kkt_residual, off_support_excess) = if support.is_empty() {
        (0.0, 0.0)
    } else {
        let mean = support.iter().map(|&i| g[i - 1]).sum::<f64>() / support.len() as f64;
        let residual = support
            .iter()
            .map(|&i| libm::fabs(g[i - 1] - mean))
            .fold(0.0, f64::max);
        let inside = support_of(x, SUPPORT_EPS);
        let excess = (1..=x.len())
            .filter(|&j| !inside.contains(j))
            .map(|j| g[j - 1] - mean)
            .fold(0.0, f64::max);
        (residual, excess)
    };
    let covered = |i: usize, j: usize| {
        h.levels()
            .filter(|(r, _)| *r >= 2)
            .any(|(_, edges)| edges.iter().any(|e| e.contains(i) && e.contains(j)))
    };
    let mut cover_violations = Vec::new();
    for (a, &i) in support.iter().enumerate() {
        for &j in &support[a + 1..] {
            if !covered(i, j) {
                cover_violations.push((i, j));
            }
        }
    }
    Ok(OptimalityCheck {
        kkt_residual,
        cover_violations,
        off_support_excess,
    })
}

fn better(a: &Ascent, b: &Ascent) -> bool {
    match a.value.total_cmp(&b.value) {
        Ordering::Greater => true,
        Ordering::Less => false,
        Ordering::Equal => {
            a.x.iter()
                .zip(&b.x)
                .map(|(p, q)| p.total_cmp(q))
                .find(|o| o.is_ne())
                == Some(Ordering::Less)
        }
    }
}

/// Multi-start maximization of `λ'(H, ·)`, run sequentially.
pub fn maximize(h: &Hypergraph, cfg: &Config) -> Result<OptimizationResult> {
    maximize_with(h, cfg, |starts| {
        starts.iter().map(|s| ascend(h, s, cfg)).collect()
    })
}

/// Like [`maximize`], with the ascents from the start list delegated to `run`,
/// which must return one [`Ascent`] per start (for example, computed in parallel
/// with [`ascend`]).
pub fn maximize_with<F>(h: &Hypergraph, cfg: &Config, run: F) -> Result<OptimizationResult>
where
    F: FnOnce(&[Vec<f64>]) -> Vec<Ascent>,
{
    if h.is_empty() {
        return Err(Error::EmptyHypergraph);
    }
    if cfg.restarts == 0 {
        return Err(Error::InvalidParameter(
            "at least one restart is required".into(),
        ));
    }
    let starts = starting_points(h.n(), cfg);
    let ascents = run(&starts);
    if ascents.len() != starts.len() {
        return Err(Error::InvalidParameter(
            "runner returned the wrong number of ascents".into(),
        ));
    }
    let mut best = ascents
        .into_iter()
        .reduce(|acc, a| if better(&a, &acc) { a } else { acc })
        .expect("at least one start");

    let mut support_reductions = 0;
    if cfg.minimize_support {
        while let Some(smaller) = reduce_support(h, &best, cfg) {
            support_reductions +=
                support_of(&best.x, SUPPORT_EPS).len() - support_of(&smaller.x, SUPPORT_EPS).len();
            best = smaller;
        }
    }

    let value = eval(h, &best.x)?;
    let check = check_optimality(h, &best.x)?;
    let uniform_value = match h.edge_types().as_slice() {
        [r] => Some(value / crate::factorial(*r).expect("arity checked") as f64),
        _ => None,
    };
    Ok(OptimizationResult {
        value,
        uniform_value,
        support: support_of(&best.x, SUPPORT_EPS),
        x: Weighting::from_vec_unchecked(best.x),
        kkt_residual: check.kkt_residual,
        cover_violations: check.cover_violations,
        off_support_excess: check.off_support_excess,
        restarts_used: starts.len(),
        support_reductions,
    })
}

/// Tries zeroing each support coordinate, smallest weight first, and
/// re-ascending on the remaining support face. Returns the first result with
/// a strictly smaller support whose value is within [`VALUE_EPS`] of the
/// current one.
fn reduce_support(h: &Hypergraph, current: &Ascent, cfg: &Config) -> Option<Ascent> {
    let support = support_of(&current.x, SUPPORT_EPS);
    if support.len() <= 1 {
        return None;
    }
    let mut order: Vec<usize> = support.to_vec();
    order.sort_by(|&a, &b| {
        current.x[a - 1]
            .total_cmp(&current.x[b - 1])
            .then(a.cmp(&b))
    });
    for i in order {
        let face = support.without(i);
        let candidate = ascend_on_face(h, &current.x, cfg, face);
        if candidate.value >= current.value - VALUE_EPS
            && support_of(&candidate.x, SUPPORT_EPS).len() < support.len()
        {
            return Some(candidate);
        }
    }
    None
}

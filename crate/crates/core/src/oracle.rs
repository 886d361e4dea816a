//! Brute-force grid search over simplex points `k/m`.
//!
//! Independent of the ascent code: it only calls [`eval`]. Every optimum
//! `x*` has a grid point `y` with `y_v ≥ x*_v − 1/m` (round down, hand the
//! remainder out anywhere), and each `r`-edge product then drops by at most
//! `r/m`, so the grid maximum is within `Σ_r r!·|E^r|·r / m` of `λ'(H)`.

use alloc::vec;
use alloc::vec::Vec;

use crate::combinatorics::factorial;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::lagrangian::{eval, Weighting};

/// Default cap on the number of grid points.
pub const DEFAULT_CAP: u64 = 50_000_000;

#[derive(Clone, Debug, PartialEq)]
pub struct OracleResult {
    pub value: f64,
    pub x: Weighting,
    pub grid_resolution: usize,
    /// Integer coordinates `k_v` with `x_v = k_v / m`.
    pub counts: Vec<u32>,
    /// Upper bound on `λ'(H) − value`.
    pub gap_bound: f64,
    pub points_evaluated: u64,
}

/// `C(H) = Σ_r r!·|E^r|·r`.
pub fn lipschitz_constant(h: &Hypergraph) -> f64 {
    h.levels()
        .map(|(r, edges)| {
            (factorial(r).expect("arity checked") * r as u64) as f64 * edges.len() as f64
        })
        .sum()
}

/// Number of compositions of `m` into `n` non-negative parts, `C(m+n-1, n-1)`.
pub fn grid_size(n: usize, m: usize) -> u128 {
    let (top, k) = ((m + n - 1) as u128, (n - 1) as u128);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul(top - i) / (i + 1);
    }
    acc
}

/// Best grid point among those with `k_1 = first`. Returns the value, the
/// counts and the number of points visited.
pub fn grid_partition(h: &Hypergraph, m: usize, first: usize) -> (f64, Vec<u32>, u64) {
    let n = h.n();
    let mut counts = vec![0u32; n];
    counts[0] = first as u32;
    let mut x = vec![0.0; n];
    x[0] = first as f64 / m as f64;
    let mut best = (f64::NEG_INFINITY, Vec::new());
    let mut visited = 0u64;
    fill(
        h,
        m,
        1,
        m - first,
        &mut counts,
        &mut x,
        &mut best,
        &mut visited,
    );
    (best.0, best.1, visited)
}

#[allow(clippy::too_many_arguments)]
fn fill(
    h: &Hypergraph,
    m: usize,
    pos: usize,
    remaining: usize,
    counts: &mut [u32],
    x: &mut [f64],
    best: &mut (f64, Vec<u32>),
    visited: &mut u64,
) {
    let n = counts.len();
    if pos + 1 >= n {
        if pos < n {
            counts[pos] = remaining as u32;
            x[pos] = remaining as f64 / m as f64;
        } else if remaining != 0 {
            return;
        }
        *visited += 1;
        let v = eval(h, x).expect("length matches");
        if v > best.0 {
            *best = (v, counts.to_vec());
        }
        return;
    }
    for k in (0..=remaining).rev() {
        counts[pos] = k as u32;
        x[pos] = k as f64 / m as f64;
        fill(h, m, pos + 1, remaining - k, counts, x, best, visited);
    }
}

/// Merges per-partition results for `first = m, m-1, …, 0` (that order):
/// highest value wins, earlier partitions win ties.
pub fn merge_partitions<I>(h: &Hypergraph, m: usize, parts: I) -> OracleResult
where
    I: IntoIterator<Item = (f64, Vec<u32>, u64)>,
{
    let mut best: Option<(f64, Vec<u32>)> = None;
    let mut total = 0u64;
    for (v, counts, visited) in parts {
        total += visited;
        if best.as_ref().is_none_or(|b| v > b.0) {
            best = Some((v, counts));
        }
    }
    let (value, counts) = best.expect("at least one partition");
    let x = counts.iter().map(|&k| k as f64 / m as f64).collect();
    OracleResult {
        value,
        x: Weighting::from_vec_unchecked(x),
        grid_resolution: m,
        counts,
        gap_bound: lipschitz_constant(h) / m as f64,
        points_evaluated: total,
    }
}

/// Validates the grid request against `cap`.
pub fn check_grid(h: &Hypergraph, m: usize, cap: u64) -> Result<()> {
    if m == 0 {
        return Err(Error::InvalidParameter(
            "grid resolution must be at least 1".into(),
        ));
    }
    let size = grid_size(h.n(), m);
    if size > cap as u128 {
        return Err(Error::EnumerationTooLarge { size, cap });
    }
    Ok(())
}

/// Exhaustive maximization over the grid `{k/m : Σk = m}` with [`DEFAULT_CAP`].
pub fn grid_oracle(h: &Hypergraph, m: usize) -> Result<OracleResult> {
    grid_oracle_capped(h, m, DEFAULT_CAP)
}

pub fn grid_oracle_capped(h: &Hypergraph, m: usize, cap: u64) -> Result<OracleResult> {
    check_grid(h, m, cap)?;
    Ok(merge_partitions(
        h,
        m,
        (0..=m).rev().map(|first| grid_partition(h, m, first)),
    ))
}

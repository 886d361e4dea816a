//! The edge polynomials `λ(G, x)` and `λ'(H, x)`, their gradients, and the
//! closed forms for complete hypergraphs.
//!
//! Sums run over levels in ascending cardinality and over edges in canonical
//! order, so results are reproducible bit for bit.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Deref, Mul};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::combinatorics::{binomial, factorial};
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, VertexSet};

/// Feasibility tolerance for internally produced weightings.
pub const FEASIBILITY_TOL: f64 = 1e-12;
/// User-supplied weightings within this distance of the simplex are renormalized.
pub const USER_TOL: f64 = 1e-6;

/// Numbers the edge polynomial can be evaluated over.
pub trait Scalar: Clone + Zero + One + Add<Output = Self> + Mul<Output = Self> {
    fn from_u64(v: u64) -> Self;
}

impl Scalar for f64 {
    fn from_u64(v: u64) -> Self {
        v as f64
    }
}

impl Scalar for BigRational {
    fn from_u64(v: u64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
}

/// A legal weighting: a point of the standard simplex in `R^n`.
#[derive(Clone, Debug, PartialEq)]
pub struct Weighting(Vec<f64>);

impl Weighting {
    /// Accepts `x` only if it is non-negative and sums to 1 within [`FEASIBILITY_TOL`].
    pub fn new(x: Vec<f64>) -> Result<Self> {
        check_entries(&x)?;
        let sum: f64 = x.iter().sum();
        if (sum - 1.0).abs() > FEASIBILITY_TOL {
            return Err(Error::InvalidWeighting(format!(
                "entries sum to {sum}, not 1"
            )));
        }
        Ok(Weighting(x))
    }

    /// Accepts weights read from outside: renormalizes when the sum is within
    /// [`USER_TOL`] of 1, rejects otherwise.
    pub fn from_user(x: Vec<f64>) -> Result<Self> {
        check_entries(&x)?;
        let sum: f64 = x.iter().sum();
        if (sum - 1.0).abs() > USER_TOL {
            return Err(Error::InvalidWeighting(format!(
                "entries sum to {sum}, not 1"
            )));
        }
        Ok(Weighting(x.into_iter().map(|v| v / sum).collect()))
    }

    pub(crate) fn from_vec_unchecked(x: Vec<f64>) -> Self {
        Weighting(x)
    }

    pub fn uniform(n: usize) -> Self {
        Weighting(vec![1.0 / n as f64; n])
    }

    /// Uniform on `support`, zero elsewhere.
    pub fn uniform_on(n: usize, support: VertexSet) -> Self {
        let k = support.len() as f64;
        Weighting(
            (1..=n)
                .map(|v| if support.contains(v) { 1.0 / k } else { 0.0 })
                .collect(),
        )
    }

    /// All weight on vertex `v`.
    pub fn vertex(n: usize, v: usize) -> Self {
        Weighting((1..=n).map(|u| if u == v { 1.0 } else { 0.0 }).collect())
    }

    /// `{i : x_i > eps}`.
    pub fn support(&self, eps: f64) -> VertexSet {
        support_of(&self.0, eps)
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.0
    }
}

impl Deref for Weighting {
    type Target = [f64];

    fn deref(&self) -> &[f64] {
        &self.0
    }
}

fn check_entries(x: &[f64]) -> Result<()> {
    if x.is_empty() {
        return Err(Error::InvalidWeighting("empty".into()));
    }
    if let Some((i, v)) = x
        .iter()
        .enumerate()
        .find(|(_, v)| !v.is_finite() || **v < 0.0)
    {
        return Err(Error::InvalidWeighting(format!("entry {} is {v}", i + 1)));
    }
    Ok(())
}

pub(crate) fn support_of(x: &[f64], eps: f64) -> VertexSet {
    x.iter()
        .enumerate()
        .filter(|(_, &v)| v > eps)
        .fold(VertexSet::EMPTY, |s, (i, _)| s.with(i + 1))
}

/// `g_i = ∂λ'(H, x)/∂x_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct Gradient(pub Vec<f64>);

impl Deref for Gradient {
    type Target = [f64];

    fn deref(&self) -> &[f64] {
        &self.0
    }
}

fn check_len(h: &Hypergraph, len: usize) -> Result<()> {
    if len != h.n() {
        return Err(Error::LengthMismatch {
            expected: h.n(),
            found: len,
        });
    }
    Ok(())
}

fn edge_product<T: Scalar>(e: VertexSet, x: &[T]) -> T {
    e.iter().fold(T::one(), |acc, v| acc * x[v - 1].clone())
}

fn level_sum<T: Scalar>(edges: &[VertexSet], x: &[T]) -> T {
    edges
        .iter()
        .fold(T::zero(), |acc, &e| acc + edge_product(e, x))
}

/// `λ(E^r, x)` for every level, ascending in `r`.
pub fn level_values(h: &Hypergraph, x: &[f64]) -> Result<Vec<(usize, f64)>> {
    check_len(h, x.len())?;
    Ok(h.levels()
        .map(|(r, edges)| (r, level_sum(edges, x)))
        .collect())
}

fn single_level(g: &Hypergraph) -> Result<usize> {
    match g.edge_types().as_slice() {
        [r] => Ok(*r),
        other => Err(Error::NotUniform {
            levels: other.to_vec(),
        }),
    }
}

/// `λ(G, x) = Σ_{e ∈ E} Π_{v ∈ e} x_v` for an `r`-uniform `G`.
pub fn eval_uniform(g: &Hypergraph, x: &[f64]) -> Result<f64> {
    eval_uniform_with(g, x)
}

/// Exact counterpart of [`eval_uniform`].
pub fn eval_uniform_exact(g: &Hypergraph, x: &[BigRational]) -> Result<BigRational> {
    eval_uniform_with(g, x)
}

fn eval_uniform_with<T: Scalar>(g: &Hypergraph, x: &[T]) -> Result<T> {
    let r = single_level(g)?;
    check_len(g, x.len())?;
    Ok(level_sum(g.level(r), x))
}

/// `λ'(H, x) = Σ_{r ∈ R(H)} r! · λ(H^r, x)`.
pub fn eval(h: &Hypergraph, x: &[f64]) -> Result<f64> {
    eval_with(h, x)
}

/// Exact counterpart of [`eval`].
pub fn eval_exact(h: &Hypergraph, x: &[BigRational]) -> Result<BigRational> {
    eval_with(h, x)
}

/// [`eval`] over any [`Scalar`].
pub fn eval_with<T: Scalar>(h: &Hypergraph, x: &[T]) -> Result<T> {
    check_len(h, x.len())?;
    Ok(h.levels().fold(T::zero(), |acc, (r, edges)| {
        let weight = T::from_u64(factorial(r).expect("arity checked at build"));
        acc + weight * level_sum(edges, x)
    }))
}

/// Exact partial derivatives of [`eval`]:
/// `g_i = [{i} ∈ E^1] + Σ_{r ≥ 2} r! · λ(E_i^r, x)`.
pub fn gradient(h: &Hypergraph, x: &[f64]) -> Result<Gradient> {
    check_len(h, x.len())?;
    let n = h.n();
    let mut g = vec![0.0; n];
    let mut per_level = vec![0.0; n];
    for (r, edges) in h.levels() {
        per_level.iter_mut().for_each(|v| *v = 0.0);
        for &e in edges {
            for i in e {
                per_level[i - 1] += edge_product(e.without(i), x);
            }
        }
        let weight = factorial(r).expect("arity checked at build") as f64;
        for (gi, li) in g.iter_mut().zip(&per_level) {
            *gi += weight * li;
        }
    }
    Ok(Gradient(g))
}

fn check_closed_form_args(t: usize, cardinalities: &[usize]) -> Result<()> {
    if t == 0 {
        return Err(Error::ZeroVertices);
    }
    for &r in cardinalities {
        if r == 0 {
            return Err(Error::ArityTooSmall { r, min: 1 });
        }
        if r > t {
            return Err(Error::ArityExceedsOrder { r, t });
        }
        if factorial(r).is_none() {
            return Err(Error::ArityTooLarge {
                r,
                max: crate::MAX_ARITY,
            });
        }
    }
    Ok(())
}

fn dedup_sorted(cardinalities: &[usize]) -> Vec<usize> {
    let mut rs = cardinalities.to_vec();
    rs.sort_unstable();
    rs.dedup();
    rs
}

/// `λ'(K_t^R) = Σ_{r ∈ R} r! C(t, r) / t^r`, attained by the uniform weighting on `[t]`.
pub fn closed_form(t: usize, cardinalities: &[usize]) -> Result<f64> {
    check_closed_form_args(t, cardinalities)?;
    let tf = t as f64;
    // r! C(t, r) / t^r = Π_{i<r} (t - i) / t
    Ok(dedup_sorted(cardinalities)
        .into_iter()
        .map(|r| (0..r).map(|i| (tf - i as f64) / tf).product::<f64>())
        .sum())
}

/// Exact counterpart of [`closed_form`].
pub fn closed_form_exact(t: usize, cardinalities: &[usize]) -> Result<BigRational> {
    check_closed_form_args(t, cardinalities)?;
    let mut acc = BigRational::zero();
    for r in dedup_sorted(cardinalities) {
        let num = BigInt::from(factorial(r).unwrap()) * BigInt::from(binomial(t as u64, r as u64));
        let den = BigInt::from(t).pow(r as u32);
        acc += BigRational::new(num, den);
    }
    Ok(acc)
}

/// The order threshold `⌈(r(r-1) - 1)^{r-2} / (r(r-1))^{r-3}⌉` for `{1, r}`-graphs,
/// computed exactly.
pub fn threshold(r: usize) -> Result<u64> {
    if r < 3 {
        return Err(Error::ArityTooSmall { r, min: 3 });
    }
    let b = BigUint::from(r) * BigUint::from(r - 1);
    let a = &b - 1u32;
    let num = a.pow((r - 2) as u32);
    let den = b.pow((r - 3) as u32);
    let (q, rem) = num.div_rem(&den);
    let q = if rem.is_zero() { q } else { q + 1u32 };
    q.to_u64()
        .ok_or_else(|| Error::InvalidParameter(format!("threshold for r={r} overflows u64")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn uniform_examples() {
        let k3 = Hypergraph::complete(3, &[2]).unwrap();
        let v = eval_uniform(&k3, &Weighting::uniform(3)).unwrap();
        assert!((v - 1.0 / 3.0).abs() < 1e-15);
        assert!((v - 0.5 * (1.0 - 1.0 / 3.0)).abs() < 1e-15);

        let e = Hypergraph::build(4, [[1, 2, 3]]).unwrap();
        assert_eq!(eval_uniform(&e, &Weighting::vertex(4, 1)).unwrap(), 0.0);

        // C(5,3)/5^3, cross-checked term by term
        let k5 = Hypergraph::complete(5, &[3]).unwrap();
        let x = vec![rat(1, 5); 5];
        assert_eq!(eval_uniform_exact(&k5, &x).unwrap(), rat(10, 125));
        let v = eval_uniform(&k5, &Weighting::uniform(5)).unwrap();
        assert!((v - 0.08).abs() < 1e-15);
    }

    #[test]
    fn uniform_rejects_multi_level_and_length() {
        let k = Hypergraph::complete(3, &[1, 2]).unwrap();
        assert_eq!(
            eval_uniform(&k, &Weighting::uniform(3)),
            Err(Error::NotUniform { levels: vec![1, 2] })
        );
        let k2 = Hypergraph::complete(3, &[2]).unwrap();
        assert_eq!(
            eval_uniform(&k2, &[0.5, 0.5]),
            Err(Error::LengthMismatch {
                expected: 3,
                found: 2
            })
        );
        assert!(eval(&k2, &[1.0]).is_err());
        assert!(gradient(&k2, &[1.0]).is_err());
    }

    #[test]
    fn non_uniform_examples() {
        let k = Hypergraph::complete(5, &[1, 3]).unwrap();
        let x = vec![rat(1, 5); 5];
        assert_eq!(eval_exact(&k, &x).unwrap(), rat(148, 100));
        assert!((eval(&k, &Weighting::uniform(5)).unwrap() - 1.48).abs() < 1e-14);

        let k = Hypergraph::complete(2, &[1, 2]).unwrap();
        assert_eq!(eval(&k, &[0.5, 0.5]).unwrap(), 1.5);

        // weight on a vertex without a 1-edge
        let h = Hypergraph::build(3, [vec![1], vec![2, 3], vec![1, 2, 3]]).unwrap();
        assert_eq!(eval(&h, &Weighting::vertex(3, 2)).unwrap(), 0.0);
    }

    #[test]
    fn gradient_examples() {
        let h = Hypergraph::build(2, [[1, 2]]).unwrap();
        assert_eq!(gradient(&h, &[0.5, 0.5]).unwrap().0, [1.0, 1.0]);

        let k = Hypergraph::complete(5, &[1, 3]).unwrap();
        let x = Weighting::uniform(5);
        let g = gradient(&k, &x).unwrap();
        assert!(g.iter().all(|&gi| (gi - g[0]).abs() < 1e-15));
        // g_i = 1 + 3! · C(4,2)/25
        assert!((g[0] - (1.0 + 36.0 / 25.0)).abs() < 1e-14);
        // Σ x_i g_i = 1·λ(E^1) + 3·3!·λ(E^3)
        let euler: f64 = x.iter().zip(g.iter()).map(|(a, b)| a * b).sum();
        assert!((euler - (1.0 + 3.0 * 0.48)).abs() < 1e-14);
    }

    #[test]
    fn closed_forms() {
        assert!((closed_form(5, &[1, 3]).unwrap() - 1.48).abs() < 1e-15);
        assert_eq!(closed_form_exact(5, &[1, 3]).unwrap(), rat(37, 25));
        assert_eq!(
            closed_form_exact(8, &[1, 2, 3]).unwrap(),
            rat(253_125, 100_000)
        );
        assert!((closed_form(8, &[1, 2, 3]).unwrap() - 2.53125).abs() < 1e-15);
        assert_eq!(closed_form_exact(3, &[2]).unwrap(), rat(2, 3));
        assert_eq!(
            closed_form(3, &[4]),
            Err(Error::ArityExceedsOrder { r: 4, t: 3 })
        );
        for t in 2..12usize {
            let tf = t as f64;
            let ms = closed_form(t, &[2]).unwrap() / 2.0;
            assert!((ms - 0.5 * (1.0 - 1.0 / tf)).abs() < 1e-15);
            assert!((closed_form(t, &[1, 2]).unwrap() - (2.0 - 1.0 / tf)).abs() < 1e-14);
            for r in 3..=t.min(6) {
                let prod: f64 = (1..r).map(|i| (tf - i as f64) / tf).product();
                assert!((closed_form(t, &[1, r]).unwrap() - (1.0 + prod)).abs() < 1e-14);
            }
            if t >= 3 {
                let f = 1.0 + (tf - 1.0) / tf + (tf - 1.0) * (tf - 2.0) / (tf * tf);
                assert!((closed_form(t, &[1, 2, 3]).unwrap() - f).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn thresholds() {
        assert_eq!(threshold(3), Ok(5));
        assert_eq!(threshold(4), Ok(11));
        assert_eq!(threshold(5), Ok(18));
        assert_eq!(threshold(2), Err(Error::ArityTooSmall { r: 2, min: 3 }));
    }

    #[test]
    fn weighting_validation() {
        assert!(Weighting::new(vec![0.5, 0.5]).is_ok());
        assert!(Weighting::new(vec![0.5, 0.5 + 1e-9]).is_err());
        let w = Weighting::from_user(vec![0.5, 0.5 + 1e-9]).unwrap();
        assert!((w.iter().sum::<f64>() - 1.0).abs() < 1e-15);
        assert!(Weighting::from_user(vec![0.5, 0.6]).is_err());
        assert!(Weighting::from_user(vec![1.5, -0.5]).is_err());
        assert!(Weighting::from_user(vec![f64::NAN, 1.0]).is_err());
        assert!(Weighting::from_user(vec![]).is_err());
        let w = Weighting::uniform_on(4, VertexSet::from_labels([1, 3]).unwrap());
        assert_eq!(w.as_slice(), [0.5, 0.0, 0.5, 0.0]);
        assert_eq!(w.support(1e-8), VertexSet::from_labels([1, 3]).unwrap());
    }
}

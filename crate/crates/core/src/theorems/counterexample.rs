//! Constructions showing the hypotheses cannot be dropped, each paired with
//! its witness weighting and certified with exact rational arithmetic.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::combinatorics::{binomial, k_subsets};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::lagrangian::{closed_form_exact, eval_exact, eval_uniform_exact, Weighting};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConstructionId {
    /// `t = 3`, `s ≥ 4`: three 1-edges inside a 3-clique of order `s`.
    CeT3,
    /// `t = 4`, `s ≥ 5`: four 1-edges inside a 3-clique of order `s`.
    CeT4,
    /// One 3-edge over the `{1,3}` edge band.
    CeEdgeBound,
    /// One 3-edge over the band of the uniform 3-graph theorem.
    CePeng2,
}

impl ConstructionId {
    pub const ALL: [ConstructionId; 4] = [
        ConstructionId::CeT3,
        ConstructionId::CeT4,
        ConstructionId::CeEdgeBound,
        ConstructionId::CePeng2,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ConstructionId::CeT3 => "ce_t3",
            ConstructionId::CeT4 => "ce_t4",
            ConstructionId::CeEdgeBound => "ce_edgebound",
            ConstructionId::CePeng2 => "ce_peng2",
        }
    }
}

impl fmt::Display for ConstructionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ConstructionId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ConstructionId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown construction `{s}`")))
    }
}

/// Construction parameters; unset fields take the smallest legal value.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CounterexampleParams {
    pub s: Option<usize>,
    pub t: Option<usize>,
    pub n: Option<usize>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CounterexampleReport {
    pub construction: ConstructionId,
    pub graph: Hypergraph,
    /// The witness weighting, exactly.
    pub x: Vec<BigRational>,
    /// `λ'(H, x)`, or uniform `λ(H, x)` for [`ConstructionId::CePeng2`].
    pub lhs: BigRational,
    /// The closed form being beaten, in the same form as `lhs`.
    pub rhs: BigRational,
    /// `lhs > rhs`, decided exactly.
    pub strict: bool,
    /// For [`ConstructionId::CeEdgeBound`]: `λ'([t]^(3))`, the weaker comparison
    /// that omits the 1-edges of `K_t^{1,3}`.
    pub literal_rhs: Option<BigRational>,
    pub uniform_form: bool,
}

impl CounterexampleReport {
    pub fn weighting(&self) -> Weighting {
        Weighting::from_vec_unchecked(
            self.x
                .iter()
                .map(|v| v.to_f64().expect("finite rational"))
                .collect(),
        )
    }

    pub fn margin(&self) -> BigRational {
        &self.lhs - &self.rhs
    }
}

fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn range_error(msg: alloc::string::String) -> Error {
    Error::InvalidParameter(msg)
}

fn order_param(given: Option<usize>, min: usize, name: &str) -> Result<usize> {
    let v = given.unwrap_or(min);
    if v < min {
        return Err(range_error(format!(
            "{name} = {v} is below the minimum {min}"
        )));
    }
    Ok(v)
}

fn triples(labels: &[usize]) -> Vec<Vec<usize>> {
    k_subsets(labels, 3)
}

/// Builds a construction with its witness weighting and compares exactly.
pub fn build_counterexample(
    id: ConstructionId,
    params: CounterexampleParams,
) -> Result<CounterexampleReport> {
    match id {
        ConstructionId::CeT3 => small_t(id, 3, rat(333, 1000), rat(1, 1000), params),
        ConstructionId::CeT4 => small_t(id, 4, rat(2498, 10000), rat(8, 10000), params),
        ConstructionId::CeEdgeBound => edge_bound(params),
        ConstructionId::CePeng2 => peng2(params),
    }
}

/// `E^1 = [t]`, `E^3 = [s]^(3)`, weight `heavy` on `[t]` and `rest` spread over `t+1..=s`.
fn small_t(
    id: ConstructionId,
    t: usize,
    heavy: BigRational,
    rest: BigRational,
    params: CounterexampleParams,
) -> Result<CounterexampleReport> {
    if params.t.is_some_and(|given| given != t) {
        return Err(range_error(format!("{id} fixes t = {t}")));
    }
    let s = order_param(params.s, t + 1, "s")?;
    let n = order_param(params.n, s, "n")?;
    let mut edges: Vec<Vec<usize>> = (1..=t).map(|v| vec![v]).collect();
    edges.extend(triples(&(1..=s).collect::<Vec<_>>()));
    let graph = Hypergraph::build(n, edges)?;
    let spread = rest / BigRational::from_integer(BigInt::from(s - t));
    let x: Vec<BigRational> = (1..=n)
        .map(|v| {
            if v <= t {
                heavy.clone()
            } else if v <= s {
                spread.clone()
            } else {
                BigRational::zero()
            }
        })
        .collect();
    let lhs = eval_exact(&graph, &x)?;
    let rhs = closed_form_exact(t, &[1, 3])?;
    Ok(CounterexampleReport {
        construction: id,
        strict: lhs > rhs,
        graph,
        x,
        lhs,
        rhs,
        literal_rhs: None,
        uniform_form: false,
    })
}

/// Weighting `1/t` on `[t−1]`, `1/(2t)` on `t` and `extra`.
fn half_split(n: usize, t: usize, extra: usize) -> Vec<BigRational> {
    (1..=n)
        .map(|v| {
            if v < t {
                rat(1, t as i64)
            } else if v == t || v == extra {
                rat(1, 2 * t as i64)
            } else {
                BigRational::zero()
            }
        })
        .collect()
}

/// The 3-edges `{i₁ i₂ extra : i₁ i₂ ∈ [t−1]^(2)}` plus `{1, t, extra}`.
fn band_breakers(t: usize, extra: usize) -> Vec<Vec<usize>> {
    let mut edges: Vec<Vec<usize>> = k_subsets(&(1..t).collect::<Vec<_>>(), 2)
        .into_iter()
        .map(|mut p| {
            p.push(extra);
            p
        })
        .collect();
    edges.push(vec![1, t, extra]);
    edges
}

fn edge_bound(params: CounterexampleParams) -> Result<CounterexampleReport> {
    let t = order_param(params.t, 5, "t")?;
    let s = order_param(params.s, t + 1, "s")?;
    let n = order_param(params.n, s + 1, "n")?;
    let mut edges: Vec<Vec<usize>> = (1..=t).map(|v| vec![v]).collect();
    edges.push(vec![s + 1]);
    edges.extend(triples(&(1..=s).collect::<Vec<_>>()));
    edges.extend(band_breakers(t, s + 1));
    let graph = Hypergraph::build(n, edges)?;
    debug_assert_eq!(
        graph.edge_count(3) as u64,
        binomial(s as u64, 3) + binomial(t as u64 - 1, 2) + 1
    );
    let x = half_split(n, t, s + 1);
    let lhs = eval_exact(&graph, &x)?;
    let rhs = closed_form_exact(t, &[1, 3])?;
    Ok(CounterexampleReport {
        construction: ConstructionId::CeEdgeBound,
        strict: lhs > rhs,
        graph,
        x,
        lhs,
        rhs,
        literal_rhs: Some(closed_form_exact(t, &[3])?),
        uniform_form: false,
    })
}

fn peng2(params: CounterexampleParams) -> Result<CounterexampleReport> {
    let t = order_param(params.t, 3, "t")?;
    if params.s.is_some() {
        return Err(range_error("ce_peng2 takes no s".into()));
    }
    let n = order_param(params.n, t + 1, "n")?;
    let mut edges = triples(&(1..=t).collect::<Vec<_>>());
    edges.extend(band_breakers(t, t + 1));
    let graph = Hypergraph::build(n, edges)?;
    let x = half_split(n, t, t + 1);
    let lhs = eval_uniform_exact(&graph, &x)?;
    let rhs = BigRational::new(BigInt::from(binomial(t as u64, 3)), BigInt::from(t).pow(3));
    Ok(CounterexampleReport {
        construction: ConstructionId::CePeng2,
        strict: lhs > rhs,
        graph,
        x,
        lhs,
        rhs,
        literal_rhs: None,
        uniform_form: true,
    })
}

//! Checking instances of the Motzkin–Straus type theorems.
//!
//! [`verify`] evaluates a theorem's hypotheses on a concrete hypergraph, runs
//! the optimizer, and compares the result with the theorem's closed form.
//! [`build_counterexample`] constructs the known instances where a hypothesis
//! is dropped and the closed form is beaten, certified in exact arithmetic.

mod counterexample;
pub mod generate;

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

pub use counterexample::{
    build_counterexample, ConstructionId, CounterexampleParams, CounterexampleReport,
};

use crate::combinatorics::{binomial, factorial};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::lagrangian::threshold;
use crate::optimizer::{maximize, Config, OptimizationResult};

/// Default agreement tolerance between the optimizer and a closed form.
pub const DEFAULT_TOLERANCE: f64 = 1e-5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    /// 2-graphs: `λ(G) = ½(1 − 1/t)` with `t` the clique number.
    MotzkinStraus,
    /// 3-graphs with `C(t,3) ≤ m ≤ C(t,3) + C(t−1,2)` edges and a `t`-clique.
    Peng3Graph,
    /// `{1,2}`-graphs: `λ' = 2 − 1/t`.
    Peng12,
    /// `{1,r}`-graphs above the order threshold.
    OneR,
    /// `{1,3}`-graphs with a bounded number of 3-edges.
    OneThree,
    /// `{1,2,3}`-graphs with `t ≥ 8`.
    OneTwoThree,
}

impl TheoremId {
    pub const ALL: [TheoremId; 6] = [
        TheoremId::MotzkinStraus,
        TheoremId::Peng3Graph,
        TheoremId::Peng12,
        TheoremId::OneR,
        TheoremId::OneThree,
        TheoremId::OneTwoThree,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::MotzkinStraus => "motzkin_straus",
            TheoremId::Peng3Graph => "peng_3graph",
            TheoremId::Peng12 => "peng_12",
            TheoremId::OneR => "onr",
            TheoremId::OneThree => "on13",
            TheoremId::OneTwoThree => "on123",
        }
    }

    /// Whether values are compared as uniform `λ` rather than `λ'`.
    pub fn uniform_form(self) -> bool {
        matches!(self, TheoremId::MotzkinStraus | TheoremId::Peng3Graph)
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown theorem `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypothesis {
    pub name: &'static str,
    pub holds: bool,
    pub detail: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Verified,
    HypothesisFailed,
    Mismatch,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Verified => "verified",
            Verdict::HypothesisFailed => "hypothesis_failed",
            Verdict::Mismatch => "mismatch",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TheoremReport {
    pub theorem: TheoremId,
    pub hypotheses: Vec<Hypothesis>,
    /// Closed-form value (uniform `λ` for the 2- and 3-graph theorems).
    pub expected: f64,
    /// Optimizer value in the same form; `None` when it was not run.
    pub computed: Option<f64>,
    pub verdict: Verdict,
    pub tolerance: f64,
    pub optimization: Option<OptimizationResult>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerifyOptions {
    pub optimizer: Config,
    pub tolerance: f64,
    /// Run the optimizer even when a hypothesis fails.
    pub force: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            optimizer: Config::default(),
            tolerance: DEFAULT_TOLERANCE,
            force: false,
        }
    }
}

/// Hypothesis evaluation plus the closed form the theorem predicts.
#[derive(Clone, Debug, PartialEq)]
pub struct Assessment {
    pub hypotheses: Vec<Hypothesis>,
    pub expected: f64,
}

impl Assessment {
    pub fn all_hold(&self) -> bool {
        self.hypotheses.iter().all(|h| h.holds)
    }
}

fn hyp(name: &'static str, holds: bool, detail: String) -> Hypothesis {
    Hypothesis {
        name,
        holds,
        detail,
    }
}

fn require_types(id: TheoremId, h: &Hypergraph) -> Result<Vec<usize>> {
    let found = h.edge_types();
    let ok = match id {
        TheoremId::MotzkinStraus => found == [2],
        TheoremId::Peng3Graph => found == [3],
        TheoremId::Peng12 => found == [1, 2],
        TheoremId::OneR => found.len() == 2 && found[0] == 1 && found[1] >= 3,
        TheoremId::OneThree => found == [1, 3],
        TheoremId::OneTwoThree => found == [1, 2, 3],
    };
    if ok {
        Ok(found)
    } else {
        let expected = match id {
            TheoremId::MotzkinStraus => "{2}",
            TheoremId::Peng3Graph => "{3}",
            TheoremId::Peng12 => "{1,2}",
            TheoremId::OneR => "{1,r} with r >= 3",
            TheoremId::OneThree => "{1,3}",
            TheoremId::OneTwoThree => "{1,2,3}",
        };
        Err(Error::EdgeTypeMismatch {
            expected: expected.into(),
            found,
        })
    }
}

/// Evaluates the hypotheses of `id` on `h` and the closed form they imply.
pub fn assess(id: TheoremId, h: &Hypergraph) -> Result<Assessment> {
    let types = require_types(id, h)?;
    let order = |q: &[usize]| h.max_complete_subgraph(q).map(|c| c.order);
    let tf = |t: usize| t as f64;
    let assessment = match id {
        TheoremId::MotzkinStraus => {
            let t = order(&[2])?;
            Assessment {
                hypotheses: vec![hyp(
                    "clique_order",
                    t >= 2,
                    format!("largest clique has order {t}"),
                )],
                expected: 0.5 * (1.0 - 1.0 / tf(t)),
            }
        }
        TheoremId::Peng3Graph => {
            let t = order(&[3])?;
            let m = h.edge_count(3) as u64;
            let lo = binomial(t as u64, 3);
            let hi = lo + binomial(t as u64 - 1, 2);
            Assessment {
                hypotheses: vec![
                    hyp(
                        "clique_order",
                        t >= 3,
                        format!("largest 3-clique has order {t}"),
                    ),
                    hyp(
                        "edge_count_band",
                        lo <= m && m <= hi,
                        format!("{lo} <= e(G) = {m} <= {hi}"),
                    ),
                ],
                expected: binomial(t as u64, 3) as f64 / (tf(t) * tf(t) * tf(t)),
            }
        }
        TheoremId::Peng12 => {
            let t = order(&[1, 2])?;
            Assessment {
                hypotheses: vec![hyp(
                    "complete_12_order",
                    t >= 2,
                    format!("maximum complete {{1,2}}-subgraph has order {t} (need >= 2)"),
                )],
                expected: 2.0 - 1.0 / tf(t),
            }
        }
        TheoremId::OneR => {
            let r = types[1];
            let t = order(&[1, r])?;
            let t1 = order(&[1])?;
            let need = threshold(r)?;
            let prod: f64 = (1..r).map(|i| (tf(t) - i as f64) / tf(t)).product();
            Assessment {
                hypotheses: vec![
                    hyp(
                        "complete_1r_order",
                        t >= 1,
                        format!("maximum complete {{1,{r}}}-subgraph has order {t}"),
                    ),
                    hyp(
                        "complete_1_order_equals_t",
                        t1 == t,
                        format!("maximum complete {{1}}-subgraph has order {t1}, t = {t}"),
                    ),
                    hyp(
                        "t_at_least_threshold",
                        t as u64 >= need,
                        format!("t = {t}, threshold for r = {r} is {need}"),
                    ),
                ],
                expected: 1.0 + prod,
            }
        }
        TheoremId::OneThree => {
            let t = order(&[1, 3])?;
            let s = order(&[3])?;
            let m = h.edge_count(3) as u64;
            let lo = binomial(s as u64, 3);
            let hi = lo + binomial(t.saturating_sub(1) as u64, 2);
            Assessment {
                hypotheses: vec![
                    hyp(
                        "t_at_least_5",
                        t >= 5,
                        format!("maximum complete {{1,3}}-subgraph has order {t}"),
                    ),
                    hyp(
                        "s_at_least_t",
                        s >= t,
                        format!("largest 3-clique has order s = {s}"),
                    ),
                    hyp(
                        "edge_count_band",
                        lo <= m && m <= hi,
                        format!("{lo} <= e(H^3) = {m} <= {hi}"),
                    ),
                ],
                expected: 1.0 + (tf(t) - 1.0) * (tf(t) - 2.0) / (tf(t) * tf(t)),
            }
        }
        TheoremId::OneTwoThree => {
            let t = order(&[1, 2, 3])?;
            let t1 = order(&[1])?;
            Assessment {
                hypotheses: vec![
                    hyp(
                        "complete_1_order_equals_t",
                        t1 == t,
                        format!("maximum complete {{1}}-subgraph has order {t1}, t = {t}"),
                    ),
                    hyp(
                        "t_at_least_8",
                        t >= 8,
                        format!("maximum complete {{1,2,3}}-subgraph has order {t}"),
                    ),
                ],
                expected: 1.0
                    + (tf(t) - 1.0) / tf(t)
                    + (tf(t) - 1.0) * (tf(t) - 2.0) / (tf(t) * tf(t)),
            }
        }
    };
    Ok(assessment)
}

/// Checks theorem `id` on `h` with the sequential optimizer.
pub fn verify(id: TheoremId, h: &Hypergraph, opts: &VerifyOptions) -> Result<TheoremReport> {
    verify_with(id, h, opts, maximize)
}

/// [`verify`] with a caller-supplied maximizer (e.g. a parallel one).
pub fn verify_with<F>(
    id: TheoremId,
    h: &Hypergraph,
    opts: &VerifyOptions,
    solve: F,
) -> Result<TheoremReport>
where
    F: FnOnce(&Hypergraph, &Config) -> Result<OptimizationResult>,
{
    let assessment = assess(id, h)?;
    let holds = assessment.all_hold();
    let mut report = TheoremReport {
        theorem: id,
        hypotheses: assessment.hypotheses,
        expected: assessment.expected,
        computed: None,
        verdict: Verdict::HypothesisFailed,
        tolerance: opts.tolerance,
        optimization: None,
    };
    if !holds && !opts.force {
        return Ok(report);
    }
    let result = solve(h, &opts.optimizer)?;
    let computed = if id.uniform_form() {
        let r = h.edge_types()[0];
        result.value / factorial(r).expect("arity checked") as f64
    } else {
        result.value
    };
    report.computed = Some(computed);
    report.optimization = Some(result);
    if holds {
        report.verdict = if libm::fabs(computed - report.expected) <= opts.tolerance {
            Verdict::Verified
        } else {
            Verdict::Mismatch
        };
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub id: TheoremId,
    pub edge_types: &'static str,
    pub statement: &'static str,
    pub hypotheses: &'static [&'static str],
    pub formula: &'static str,
    pub threshold: Option<&'static str>,
}

/// Machine-readable index of the implemented theorems.
pub fn catalog() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry {
            id: TheoremId::MotzkinStraus,
            edge_types: "{2}",
            statement: "For a graph with clique number t, the uniform Lagrangian equals that of K_t.",
            hypotheses: &["clique_order"],
            formula: "(1/2)(1-1/t)",
            threshold: None,
        },
        CatalogEntry {
            id: TheoremId::Peng3Graph,
            edge_types: "{3}",
            statement: "A 3-graph containing a t-clique with C(t,3) <= m <= C(t,3)+C(t-1,2) edges has the uniform Lagrangian of [t]^(3).",
            hypotheses: &["clique_order", "edge_count_band"],
            formula: "C(t,3)/t^3",
            threshold: None,
        },
        CatalogEntry {
            id: TheoremId::Peng12,
            edge_types: "{1,2}",
            statement: "A {1,2}-graph whose maximum complete {1,2}-subgraph has order t >= 2 has the Lagrangian of K_t^{1,2}.",
            hypotheses: &["complete_12_order"],
            formula: "2-1/t",
            threshold: None,
        },
        CatalogEntry {
            id: TheoremId::OneR,
            edge_types: "{1,r}, r >= 3",
            statement: "A {1,r}-graph whose maximum complete {1,r}- and {1}-subgraphs both have order t above the threshold has the Lagrangian of K_t^{1,r}.",
            hypotheses: &["complete_1r_order", "complete_1_order_equals_t", "t_at_least_threshold"],
            formula: "1+prod_{i=1}^{r-1}(t-i)/t^(r-1)",
            threshold: Some("t >= ceil((r(r-1)-1)^(r-2) / (r(r-1))^(r-3))"),
        },
        CatalogEntry {
            id: TheoremId::OneThree,
            edge_types: "{1,3}",
            statement: "A {1,3}-graph with maximum complete {1,3}-subgraph of order t >= 5, largest 3-clique of order s >= t, and C(s,3) <= e(H^3) <= C(s,3)+C(t-1,2) has the Lagrangian of K_t^{1,3}.",
            hypotheses: &["t_at_least_5", "s_at_least_t", "edge_count_band"],
            formula: "1+(t-1)(t-2)/t^2",
            threshold: Some("t >= 5"),
        },
        CatalogEntry {
            id: TheoremId::OneTwoThree,
            edge_types: "{1,2,3}",
            statement: "A {1,2,3}-graph whose maximum complete {1,2,3}- and {1}-subgraphs both have order t >= 8 has the Lagrangian of K_t^{1,2,3}.",
            hypotheses: &["complete_1_order_equals_t", "t_at_least_8"],
            formula: "1+(t-1)/t+(t-1)(t-2)/t^2",
            threshold: Some("t >= 8"),
        },
    ]
}

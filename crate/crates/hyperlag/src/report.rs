//! Serializable report objects and their plain-text rendering.
//!
//! Every float is rounded to 12 significant digits before it is stored, so
//! JSON and text output agree and stay byte-stable. Exact rationals are
//! rendered as `"p/q"`.

use std::fmt::Write as _;

use hyperlag_core::compression::CompressionTrace;
use hyperlag_core::theorems::CatalogEntry;
use hyperlag_core::{
    BigRational, CompleteSubgraph, CounterexampleReport, Hypergraph, OptimizationResult,
    OracleResult, TheoremReport, VertexSet,
};
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::io::GraphDoc;

/// Rounds to 12 significant digits.
pub fn sig(v: f64) -> f64 {
    if v == 0.0 || !v.is_finite() {
        return v;
    }
    format!("{v:.11e}").parse().expect("formatted float parses")
}

fn sigs(v: &[f64]) -> Vec<f64> {
    v.iter().copied().map(sig).collect()
}

/// Text form of an already-rounded float.
pub fn num(v: f64) -> String {
    let a = v.abs();
    if v != 0.0 && !(1e-4..1e12).contains(&a) {
        format!("{v:e}")
    } else {
        format!("{v}")
    }
}

fn nums(v: &[f64]) -> String {
    v.iter().map(|&x| num(x)).collect::<Vec<_>>().join(" ")
}

pub fn exact(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn decimal(r: &BigRational) -> f64 {
    sig(r.to_f64().unwrap_or(f64::NAN))
}

fn pairs_text(p: &[(usize, usize)]) -> String {
    if p.is_empty() {
        return "none".into();
    }
    p.iter()
        .map(|(i, j)| format!("{i}-{j}"))
        .collect::<Vec<_>>()
        .join(" ")
}

#[derive(Debug, Serialize)]
pub struct MaximizeReport {
    pub value: f64,
    pub uniform_value: Option<f64>,
    pub x: Vec<f64>,
    pub support: Vec<usize>,
    pub kkt_residual: f64,
    pub off_support_excess: f64,
    pub cover_violations: Vec<(usize, usize)>,
    pub restarts: usize,
    pub seed: u64,
    pub support_reductions: usize,
}

impl MaximizeReport {
    pub fn new(r: &OptimizationResult, seed: u64) -> Self {
        MaximizeReport {
            value: sig(r.value),
            uniform_value: r.uniform_value.map(sig),
            x: sigs(&r.x),
            support: r.support.to_vec(),
            kkt_residual: sig(r.kkt_residual),
            off_support_excess: sig(r.off_support_excess),
            cover_violations: r.cover_violations.clone(),
            restarts: r.restarts_used,
            seed,
            support_reductions: r.support_reductions,
        }
    }

    pub fn text(&self) -> String {
        let mut s = format!("value {}\n", num(self.value));
        if let Some(u) = self.uniform_value {
            let _ = writeln!(s, "uniform_value {}", num(u));
        }
        let _ = writeln!(s, "x {}", nums(&self.x));
        let _ = writeln!(s, "support {}", join(&self.support));
        let _ = writeln!(s, "kkt_residual {}", num(self.kkt_residual));
        let _ = writeln!(s, "off_support_excess {}", num(self.off_support_excess));
        let _ = writeln!(s, "cover_violations {}", pairs_text(&self.cover_violations));
        let _ = writeln!(
            s,
            "restarts {} (seed {}), support reductions {}",
            self.restarts, self.seed, self.support_reductions
        );
        s
    }
}

fn join(v: &[usize]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// `λ'` and first-order data at a user-supplied weighting.
#[derive(Debug, Serialize)]
pub struct EvaluationReport {
    pub value: f64,
    pub uniform_value: Option<f64>,
    pub x: Vec<f64>,
    pub gradient: Vec<f64>,
    pub support: Vec<usize>,
    pub kkt_residual: f64,
    pub off_support_excess: f64,
    pub cover_violations: Vec<(usize, usize)>,
}

impl EvaluationReport {
    pub fn text(&self) -> String {
        let mut s = format!("value {}\n", num(self.value));
        if let Some(u) = self.uniform_value {
            let _ = writeln!(s, "uniform_value {}", num(u));
        }
        let _ = writeln!(s, "x {}", nums(&self.x));
        let _ = writeln!(s, "gradient {}", nums(&self.gradient));
        let _ = writeln!(s, "support {}", join(&self.support));
        let _ = writeln!(s, "kkt_residual {}", num(self.kkt_residual));
        let _ = writeln!(s, "off_support_excess {}", num(self.off_support_excess));
        let _ = writeln!(s, "cover_violations {}", pairs_text(&self.cover_violations));
        s
    }
}

pub struct Evaluation<'a> {
    pub value: f64,
    pub uniform_value: Option<f64>,
    pub x: &'a [f64],
    pub gradient: &'a [f64],
    pub support: VertexSet,
    pub kkt_residual: f64,
    pub off_support_excess: f64,
    pub cover_violations: Vec<(usize, usize)>,
}

impl From<Evaluation<'_>> for EvaluationReport {
    fn from(e: Evaluation<'_>) -> Self {
        EvaluationReport {
            value: sig(e.value),
            uniform_value: e.uniform_value.map(sig),
            x: sigs(e.x),
            gradient: sigs(e.gradient),
            support: e.support.to_vec(),
            kkt_residual: sig(e.kkt_residual),
            off_support_excess: sig(e.off_support_excess),
            cover_violations: e.cover_violations,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct CliqueReport {
    pub types: Vec<usize>,
    pub order: usize,
    pub witness: Vec<usize>,
}

impl CliqueReport {
    pub fn new(types: Vec<usize>, c: &CompleteSubgraph) -> Self {
        CliqueReport {
            types,
            order: c.order,
            witness: c.witness.to_vec(),
        }
    }

    pub fn text(&self) -> String {
        format!("order {}, witness {}\n", self.order, join(&self.witness))
    }
}

#[derive(Debug, Serialize)]
pub struct MovedEdge {
    pub from: Vec<usize>,
    pub to: Vec<usize>,
}

#[derive(Debug, Serialize)]
pub struct TraceStep {
    pub i: usize,
    pub j: usize,
    pub moved: Vec<MovedEdge>,
}

#[derive(Debug, Serialize)]
pub struct CompressReport {
    pub before: GraphDoc,
    pub after: GraphDoc,
    /// The single pair applied, or `None` for a full left-compression.
    pub pair: Option<(usize, usize)>,
    pub trace: Vec<TraceStep>,
    pub sweeps: Option<usize>,
    pub edge_counts: Vec<(usize, usize)>,
    pub left_compressed: bool,
}

impl CompressReport {
    pub fn full(before: &Hypergraph, after: &Hypergraph, trace: &CompressionTrace) -> Self {
        let steps = trace
            .steps
            .iter()
            .map(|s| TraceStep {
                i: s.i,
                j: s.j,
                moved: s
                    .moved
                    .iter()
                    .map(|(a, b)| MovedEdge {
                        from: a.to_vec(),
                        to: b.to_vec(),
                    })
                    .collect(),
            })
            .collect();
        CompressReport {
            before: GraphDoc::from_graph(before),
            after: GraphDoc::from_graph(after),
            pair: None,
            trace: steps,
            sweeps: Some(trace.sweeps),
            edge_counts: after.edge_counts(),
            left_compressed: hyperlag_core::is_left_compressed(after),
        }
    }

    pub fn single(before: &Hypergraph, after: &Hypergraph, i: usize, j: usize) -> Self {
        let moved: Vec<MovedEdge> = before
            .edges()
            .filter(|e| !after.has_edge(*e))
            .map(|e| MovedEdge {
                from: e.to_vec(),
                to: e.without(j).with(i).to_vec(),
            })
            .collect();
        let trace = if moved.is_empty() {
            Vec::new()
        } else {
            vec![TraceStep { i, j, moved }]
        };
        CompressReport {
            before: GraphDoc::from_graph(before),
            after: GraphDoc::from_graph(after),
            pair: Some((i, j)),
            trace,
            sweeps: None,
            edge_counts: after.edge_counts(),
            left_compressed: hyperlag_core::is_left_compressed(after),
        }
    }

    pub fn text(&self) -> String {
        let mut s = String::from("before\n");
        for e in &self.before.edges {
            let _ = writeln!(s, "  {}", join(e));
        }
        s.push_str("after\n");
        for e in &self.after.edges {
            let _ = writeln!(s, "  {}", join(e));
        }
        for step in &self.trace {
            for m in &step.moved {
                let _ = writeln!(
                    s,
                    "L({},{}): {} -> {}",
                    step.i,
                    step.j,
                    join(&m.from),
                    join(&m.to)
                );
            }
        }
        if let Some(sweeps) = self.sweeps {
            let _ = writeln!(s, "sweeps {sweeps}");
        }
        let _ = writeln!(s, "left_compressed {}", self.left_compressed);
        s
    }
}

#[derive(Debug, Serialize)]
pub struct HypothesisDto {
    pub name: &'static str,
    pub holds: bool,
    pub detail: String,
}

#[derive(Debug, Serialize)]
pub struct VerifyReport {
    pub theorem_id: &'static str,
    pub hypotheses: Vec<HypothesisDto>,
    pub expected: f64,
    pub computed: Option<f64>,
    pub verdict: &'static str,
    pub tolerance: f64,
    pub forced: bool,
    pub x: Option<Vec<f64>>,
    pub support: Option<Vec<usize>>,
}

impl VerifyReport {
    pub fn new(r: &TheoremReport, forced: bool) -> Self {
        VerifyReport {
            theorem_id: r.theorem.as_str(),
            hypotheses: r
                .hypotheses
                .iter()
                .map(|h| HypothesisDto {
                    name: h.name,
                    holds: h.holds,
                    detail: h.detail.clone(),
                })
                .collect(),
            expected: sig(r.expected),
            computed: r.computed.map(sig),
            verdict: r.verdict.as_str(),
            tolerance: r.tolerance,
            forced,
            x: r.optimization.as_ref().map(|o| sigs(&o.x)),
            support: r.optimization.as_ref().map(|o| o.support.to_vec()),
        }
    }

    pub fn text(&self) -> String {
        let mut s = format!("theorem {}\n", self.theorem_id);
        for h in &self.hypotheses {
            let mark = if h.holds { "holds" } else { "FAILS" };
            let _ = writeln!(s, "  {} {mark}: {}", h.name, h.detail);
        }
        let _ = writeln!(s, "expected {}", num(self.expected));
        match self.computed {
            Some(c) => {
                let _ = writeln!(s, "computed {}", num(c));
            }
            None => s.push_str("computed (not run)\n"),
        }
        let _ = writeln!(
            s,
            "verdict {} (tolerance {})",
            self.verdict,
            num(self.tolerance)
        );
        s
    }
}

#[derive(Debug, Serialize)]
pub struct CounterexampleDto {
    pub construction: &'static str,
    pub graph: GraphDoc,
    pub x: Vec<String>,
    pub lhs: String,
    pub rhs: String,
    pub margin: String,
    pub lhs_decimal: f64,
    pub rhs_decimal: f64,
    pub strict: bool,
    pub literal_rhs: Option<String>,
    pub literal_strict: Option<bool>,
    pub uniform_form: bool,
}

impl CounterexampleDto {
    pub fn new(r: &CounterexampleReport) -> Self {
        CounterexampleDto {
            construction: r.construction.as_str(),
            graph: GraphDoc::from_graph(&r.graph),
            x: r.x.iter().map(exact).collect(),
            lhs: exact(&r.lhs),
            rhs: exact(&r.rhs),
            margin: exact(&r.margin()),
            lhs_decimal: decimal(&r.lhs),
            rhs_decimal: decimal(&r.rhs),
            strict: r.strict,
            literal_rhs: r.literal_rhs.as_ref().map(exact),
            literal_strict: r.literal_rhs.as_ref().map(|l| r.lhs > *l),
            uniform_form: r.uniform_form,
        }
    }

    pub fn text(&self) -> String {
        let mut s = format!("construction {}\n", self.construction);
        let _ = writeln!(s, "n {}, edges {}", self.graph.n, self.graph.edges.len());
        let _ = writeln!(s, "x {}", self.x.join(" "));
        let _ = writeln!(s, "lhs {} = {}", self.lhs, num(self.lhs_decimal));
        let _ = writeln!(s, "rhs {} = {}", self.rhs, num(self.rhs_decimal));
        let _ = writeln!(s, "margin {}", self.margin);
        if let Some(l) = &self.literal_rhs {
            let _ = writeln!(s, "literal_rhs {l}");
        }
        let _ = writeln!(s, "strict {}", self.strict);
        s
    }
}

#[derive(Debug, Serialize)]
pub struct OracleReport {
    pub grid_m: usize,
    pub value: f64,
    pub x: Vec<f64>,
    pub counts: Vec<u32>,
    pub gap_bound: f64,
    pub points_evaluated: u64,
    pub optimizer_value: f64,
    pub optimizer_minus_grid: f64,
    pub consistent: bool,
}

impl OracleReport {
    /// `consistent` means the optimizer is no worse than the grid (up to
    /// `slack`) and no better than the gap bound allows.
    pub fn new(grid: &OracleResult, optimizer_value: f64, slack: f64) -> Self {
        let diff = optimizer_value - grid.value;
        OracleReport {
            grid_m: grid.grid_resolution,
            value: sig(grid.value),
            x: sigs(&grid.x),
            counts: grid.counts.clone(),
            gap_bound: sig(grid.gap_bound),
            points_evaluated: grid.points_evaluated,
            optimizer_value: sig(optimizer_value),
            optimizer_minus_grid: sig(diff),
            consistent: diff >= -slack && diff <= grid.gap_bound,
        }
    }

    pub fn text(&self) -> String {
        let mut s = format!("grid_m {}\n", self.grid_m);
        let _ = writeln!(s, "value {}", num(self.value));
        let _ = writeln!(s, "x {}", nums(&self.x));
        let _ = writeln!(s, "gap_bound {}", num(self.gap_bound));
        let _ = writeln!(s, "points_evaluated {}", self.points_evaluated);
        let _ = writeln!(s, "optimizer_value {}", num(self.optimizer_value));
        let _ = writeln!(s, "consistent {}", self.consistent);
        s
    }
}

#[derive(Debug, Serialize)]
pub struct CatalogDto {
    pub theorem_id: &'static str,
    pub edge_types: &'static str,
    pub statement: &'static str,
    pub hypotheses: &'static [&'static str],
    pub formula: &'static str,
    pub threshold: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub threshold_value: Option<u64>,
}

impl CatalogDto {
    pub fn new(e: &CatalogEntry, threshold_value: Option<u64>) -> Self {
        CatalogDto {
            theorem_id: e.id.as_str(),
            edge_types: e.edge_types,
            statement: e.statement,
            hypotheses: e.hypotheses,
            formula: e.formula,
            threshold: e.threshold,
            threshold_value,
        }
    }
}

pub fn catalog_text(entries: &[CatalogDto]) -> String {
    let mut s = String::new();
    for e in entries {
        let _ = writeln!(s, "{} {}: {}", e.theorem_id, e.edge_types, e.formula);
        let _ = writeln!(s, "  {}", e.statement);
        let _ = writeln!(s, "  hypotheses: {}", e.hypotheses.join(", "));
        if let Some(t) = e.threshold {
            match e.threshold_value {
                Some(v) => {
                    let _ = writeln!(s, "  threshold: {t} (= {v})");
                }
                None => {
                    let _ = writeln!(s, "  threshold: {t}");
                }
            }
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding() {
        assert_eq!(sig(1.48), 1.48);
        assert_eq!(sig(1.4800000000000004), 1.48);
        assert_eq!(sig(2.0 / 3.0), 0.666666666667);
        assert_eq!(sig(0.0), 0.0);
        assert_eq!(num(0.25), "0.25");
        assert_eq!(num(3.5e-14), "3.5e-14");
        assert_eq!(num(0.0), "0");
    }

    #[test]
    fn exact_rendering() {
        let r = BigRational::new(6.into(), 4.into());
        assert_eq!(exact(&r), "3/2");
        assert_eq!(exact(&BigRational::from_integer(2.into())), "2/1");
    }
}

//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::process::ExitCode;
use std::time::Instant;

use hyperlag_core::theorems::generate::instances;
use hyperlag_core::theorems::{assess, VerifyOptions};
use hyperlag_core::{
    binomial, build_counterexample, compress_set, eval, gradient, grid_oracle, is_left_compressed,
    k_subsets, left_compress, maximize, threshold, BigRational, Config, ConstructionId,
    CounterexampleParams, Hypergraph, TheoremId, Verdict, VertexSet,
};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const CLOSED_FORM_TOL: f64 = 1e-7;
const MOTZKIN_STRAUS_TOL: f64 = 1e-6;
const THEOREM_TOL: f64 = 1e-5;
const FD_STEP: f64 = 1e-6;
const FD_REL_TOL: f64 = 1e-5;
const ORACLE_SLACK: f64 = 1e-9;
const ORACLE_M: usize = 50;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

fn clique_number(h: &Hypergraph) -> usize {
    let n = h.n();
    let mut best = 0;
    for mask in 0u32..1 << n {
        let s: Vec<usize> = (1..=n).filter(|v| mask >> (v - 1) & 1 == 1).collect();
        if s.len() > best
            && k_subsets(&s, 2)
                .into_iter()
                .all(|e| h.has_edge(VertexSet::from_labels(e).unwrap()))
        {
            best = s.len();
        }
    }
    best
}

fn random_hypergraph(rng: &mut ChaCha8Rng, max_n: usize) -> Hypergraph {
    let n = rng.gen_range(2..=max_n);
    loop {
        let types: Vec<usize> = (1..=4).filter(|&r| r <= n && rng.gen_bool(0.5)).collect();
        let mut edges = Vec::new();
        for &r in &types {
            let p = rng.gen_range(0.1..0.7);
            edges.extend(
                k_subsets(&(1..=n).collect::<Vec<_>>(), r)
                    .into_iter()
                    .filter(|_| rng.gen_bool(p)),
            );
        }
        if !edges.is_empty() {
            return Hypergraph::build(n, edges).unwrap();
        }
    }
}

fn random_weighting(rng: &mut ChaCha8Rng, n: usize) -> Vec<f64> {
    let w: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..1.0)).collect();
    let total: f64 = w.iter().sum();
    w.into_iter().map(|v| v / total).collect()
}

fn closed_forms() -> Outcome {
    let tf = |t: usize| t as f64;
    let mut cases: Vec<(usize, Vec<usize>, f64, bool)> = Vec::new();
    for t in 2..=10 {
        cases.push((t, vec![2], 0.5 * (1.0 - 1.0 / tf(t)), true));
        cases.push((t, vec![1, 2], 2.0 - 1.0 / tf(t), false));
    }
    for t in 5..=8 {
        cases.push((
            t,
            vec![1, 3],
            1.0 + (tf(t) - 1.0) * (tf(t) - 2.0) / (tf(t) * tf(t)),
            false,
        ));
    }
    for t in [8, 9] {
        let v = 1.0 + (tf(t) - 1.0) / tf(t) + (tf(t) - 1.0) * (tf(t) - 2.0) / (tf(t) * tf(t));
        cases.push((t, vec![1, 2, 3], v, false));
    }
    let mut worst = 0.0f64;
    let mut failures = Vec::new();
    for (t, types, expected, uniform) in &cases {
        let k = Hypergraph::complete(*t, types).unwrap();
        let res = maximize(&k, &Config::default()).unwrap();
        let got = if *uniform {
            res.uniform_value.unwrap()
        } else {
            res.value
        };
        let err = (got - expected).abs();
        worst = worst.max(err);
        if err > CLOSED_FORM_TOL {
            failures.push(format!("t={t} R={types:?}: {got} vs {expected}"));
        }
    }
    outcome(
        failures.is_empty(),
        format!(
            "{} instances, max error {worst:.2e} (tol {CLOSED_FORM_TOL:e}) {failures:?}",
            cases.len()
        ),
    )
}

fn motzkin_straus() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut worst = 0.0f64;
    let mut failures = 0;
    let mut done = 0;
    while done < 200 {
        let n = rng.gen_range(2..=10);
        let p = rng.gen_range(0.1..0.9);
        let edges: Vec<Vec<usize>> = k_subsets(&(1..=n).collect::<Vec<_>>(), 2)
            .into_iter()
            .filter(|_| rng.gen_bool(p))
            .collect();
        if edges.is_empty() {
            continue;
        }
        done += 1;
        let h = Hypergraph::build(n, edges).unwrap();
        let omega = clique_number(&h) as f64;
        let got = maximize(&h, &Config::default())
            .unwrap()
            .uniform_value
            .unwrap();
        let err = (got - 0.5 * (1.0 - 1.0 / omega)).abs();
        worst = worst.max(err);
        if err > MOTZKIN_STRAUS_TOL {
            failures += 1;
        }
    }
    outcome(
        failures == 0,
        format!("{done} graphs, {failures} failures, max error {worst:.2e} (tol {MOTZKIN_STRAUS_TOL:e})"),
    )
}

fn theorem_instances() -> Outcome {
    let opts = VerifyOptions {
        tolerance: THEOREM_TOL,
        ..VerifyOptions::default()
    };
    let mut lines = Vec::new();
    let mut pass = true;
    for id in [TheoremId::OneR, TheoremId::OneThree, TheoremId::OneTwoThree] {
        let hs = instances(id, 24, 77);
        let mut verified = 0;
        let mut worst = 0.0f64;
        let mut offsets = Vec::new();
        for h in &hs {
            let report = hyperlag_core::verify(id, h, &opts).unwrap();
            if report.verdict == Verdict::Verified {
                verified += 1;
            }
            if let Some(c) = report.computed {
                worst = worst.max((c - report.expected).abs());
            }
            if id == TheoremId::OneThree {
                let t = h.max_complete_subgraph(&[1, 3]).unwrap().order;
                let s = h.max_complete_subgraph(&[3]).unwrap().order;
                let m = h.edge_count(3) as u64;
                let lo = binomial(s as u64, 3);
                pass &= lo <= m && m <= lo + binomial(t as u64 - 1, 2);
                offsets.push(s - t);
            }
            if id == TheoremId::OneR {
                pass &= h.edge_types() == [1, 3];
            }
            if id == TheoremId::OneTwoThree {
                pass &= h.max_complete_subgraph(&[1, 2, 3]).unwrap().order == 8;
            }
        }
        offsets.sort_unstable();
        offsets.dedup();
        if id == TheoremId::OneThree {
            pass &= offsets == [0, 1, 2];
        }
        pass &= hs.len() >= 20 && verified == hs.len();
        lines.push(format!(
            "{id}: {verified}/{} verified, max error {worst:.2e}",
            hs.len()
        ));
    }
    outcome(pass, format!("{} (tol {THEOREM_TOL:e})", lines.join("; ")))
}

fn counterexamples() -> Outcome {
    let p = |s: Option<usize>, t: Option<usize>| CounterexampleParams { s, t, n: None };
    let t3 = build_counterexample(ConstructionId::CeT3, p(Some(4), None)).unwrap();
    let t4 = build_counterexample(ConstructionId::CeT4, p(Some(5), None)).unwrap();
    let eb = build_counterexample(ConstructionId::CeEdgeBound, p(Some(6), Some(5))).unwrap();
    let pg = build_counterexample(ConstructionId::CePeng2, p(None, Some(5))).unwrap();
    // K_5^{1,3} at the uniform weighting: 1 + 6·C(5,3)/125
    let k5 = rat(1, 1) + rat(6 * 10, 125);
    let checks = [
        ("ce_t3 lhs", t3.lhs == rat(1_222_552_224, 1_000_000_000)),
        ("ce_t3 > 11/9", t3.lhs > rat(11, 9) && t3.strict),
        ("ce_t4 > 11/8", t4.lhs > rat(11, 8) && t4.strict),
        (
            "ce_edgebound margin",
            &eb.lhs - &k5 == rat(3, 250) && eb.strict,
        ),
        ("ce_peng2 lhs", pg.lhs == rat(82, 1000)),
        ("ce_peng2 > 0.08", pg.lhs > rat(8, 100) && pg.strict),
    ];
    let failed: Vec<&str> = checks.iter().filter(|c| !c.1).map(|c| c.0).collect();
    outcome(
        failed.is_empty(),
        format!("ce_t3 lhs = {}, ce_t4 lhs = {}, ce_edgebound margin = {}, ce_peng2 lhs = {} {failed:?}",
            t3.lhs, t4.lhs, &eb.lhs - &k5, pg.lhs),
    )
}

fn compression() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let (mut decreases, mut count_changes, mut not_fixed, mut pairs) = (0, 0, 0, 0);
    for _ in 0..500 {
        let h = random_hypergraph(&mut rng, 8);
        let mut x = random_weighting(&mut rng, h.n());
        x.sort_by(|a, b| b.total_cmp(a));
        let base = eval(&h, &x).unwrap();
        for i in 1..h.n() {
            for j in i + 1..=h.n() {
                pairs += 1;
                let c = compress_set(&h, i, j).unwrap();
                if c.edge_counts() != h.edge_counts() {
                    count_changes += 1;
                }
                if eval(&c, &x).unwrap() < base - 1e-12 * base.max(1.0) {
                    decreases += 1;
                }
            }
        }
        let (out, _) = left_compress(&h);
        if !is_left_compressed(&out) || out.edge_counts() != h.edge_counts() {
            not_fixed += 1;
        }
    }
    outcome(
        decreases + count_changes + not_fixed == 0,
        format!(
            "500 graphs, {pairs} pairs: {decreases} decreases, {count_changes} count changes, {not_fixed} non-fixpoints"
        ),
    )
}

fn gradients() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let h = random_hypergraph(&mut rng, 8);
        let x = random_weighting(&mut rng, h.n());
        let g = gradient(&h, &x).unwrap();
        for v in 0..h.n() {
            let (mut up, mut down) = (x.clone(), x.clone());
            up[v] += FD_STEP;
            down[v] -= FD_STEP;
            let fd = (eval(&h, &up).unwrap() - eval(&h, &down).unwrap()) / (2.0 * FD_STEP);
            worst = worst.max((fd - g[v]).abs() / g[v].abs().max(1.0));
        }
    }
    outcome(
        worst <= FD_REL_TOL,
        format!("100 pairs, max relative error {worst:.2e} (step {FD_STEP:e}, tol {FD_REL_TOL:e})"),
    )
}

fn oracle_corpus() -> Vec<Hypergraph> {
    let mut corpus = vec![
        Hypergraph::complete(5, &[1, 3]).unwrap(),
        Hypergraph::complete(4, &[1, 2]).unwrap(),
        Hypergraph::complete(5, &[1, 2, 3]).unwrap(),
        Hypergraph::complete(4, &[3]).unwrap(),
        Hypergraph::build(3, [[1, 2], [2, 3]]).unwrap(),
        Hypergraph::build(5, [[1, 2], [2, 3], [3, 4], [4, 5], [1, 5]]).unwrap(),
        Hypergraph::build(4, [vec![1], vec![2, 3], vec![2, 3, 4]]).unwrap(),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    corpus.extend((0..20).map(|_| random_hypergraph(&mut rng, 5)));
    corpus
}

fn oracle() -> Outcome {
    let corpus = oracle_corpus();
    let mut failures = Vec::new();
    let mut worst_gap = 0.0f64;
    for (k, h) in corpus.iter().enumerate() {
        let best = maximize(h, &Config::default()).unwrap().value;
        let grid = grid_oracle(h, ORACLE_M).unwrap();
        worst_gap = worst_gap.max(best - grid.value);
        if best < grid.value - ORACLE_SLACK || best - grid.value > grid.gap_bound {
            failures.push(k);
        }
    }
    outcome(
        failures.is_empty(),
        format!(
            "{} graphs at m = {ORACLE_M}, largest optimizer-grid gap {worst_gap:.2e}, failures {failures:?}",
            corpus.len()
        ),
    )
}

fn thresholds() -> Outcome {
    let values: Vec<u64> = (3..=5).map(|r| threshold(r).unwrap()).collect();
    let flips = |t: usize| {
        let a = assess(
            TheoremId::OneThree,
            &Hypergraph::complete(t, &[1, 3]).unwrap(),
        )
        .unwrap();
        a.hypotheses
            .iter()
            .find(|h| h.name == "t_at_least_5")
            .unwrap()
            .holds
    };
    let t3 = values[0] as usize;
    let consistent = !flips(t3 - 1) && flips(t3);
    outcome(
        values == [5, 11, 18] && consistent,
        format!("threshold(3..=5) = {values:?}, on13 t >= threshold(3) boundary consistent: {consistent}"),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("closed-form reproduction", closed_forms),
        ("Motzkin-Straus on random graphs", motzkin_straus),
        ("theorem-instance verification", theorem_instances),
        ("counterexample strictness", counterexamples),
        ("compression properties", compression),
        ("gradient correctness", gradients),
        ("oracle consistency", oracle),
        ("threshold formula", thresholds),
    ];
    let mut all = true;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = run();
        all &= o.pass;
        println!(
            "criterion {}: {} [{name}] {} ({:.1}s)",
            k + 1,
            if o.pass { "PASS" } else { "FAIL" },
            o.detail,
            start.elapsed().as_secs_f64()
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

//! Seeded random instances satisfying each theorem's hypotheses.
//!
//! Each generator plants the extremal complete subgraph and adds random edges
//! that cannot enlarge it, then relabels the vertices at random. Candidates
//! are filtered through [`assess`] so every returned instance satisfies the
//! stated hypotheses.

use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{assess, TheoremId};
use crate::combinatorics::{binomial, k_subsets};
use crate::hypergraph::{Hypergraph, VertexSet};
use crate::lagrangian::threshold;

/// Up to `count` distinct-seeded instances of `id` (the `{1,r}` theorem uses `r = 3`).
pub fn instances(id: TheoremId, count: usize, seed: u64) -> Vec<Hypergraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    let mut attempts = 0;
    while out.len() < count && attempts < 50 * count.max(1) {
        attempts += 1;
        let k = out.len();
        let candidate = match id {
            TheoremId::MotzkinStraus => Some(random_graph(&mut rng, 9)),
            TheoremId::Peng3Graph => Some(peng_3graph(&mut rng, 3 + k % 4, 9)),
            TheoremId::Peng12 => Some(one_two(&mut rng, 9)),
            TheoremId::OneR => one_r(&mut rng, 3, 5 + k % 3, 9),
            TheoremId::OneThree => {
                let t = 5 + (k / 3) % 2;
                one_three(&mut rng, t, t + k % 3, 9)
            }
            TheoremId::OneTwoThree => Some(one_two_three(&mut rng, 8, 9)),
        };
        if let Some(h) = candidate {
            if assess(id, &h).is_ok_and(|a| a.all_hold()) {
                out.push(h);
            }
        }
    }
    out
}

fn shuffled(rng: &mut ChaCha8Rng, h: &Hypergraph) -> Hypergraph {
    let mut perm: Vec<usize> = (1..=h.n()).collect();
    perm.shuffle(rng);
    h.relabel(&perm).expect("permutation of 1..=n")
}

fn build(n: usize, edges: Vec<Vec<usize>>) -> Hypergraph {
    Hypergraph::build(n, edges).expect("generated edges are valid")
}

fn all_subsets(n: usize, r: usize) -> Vec<Vec<usize>> {
    k_subsets(&(1..=n).collect::<Vec<_>>(), r)
}

/// Erdős–Rényi graph on `3..=max_n` vertices with at least one edge.
pub fn random_graph(rng: &mut ChaCha8Rng, max_n: usize) -> Hypergraph {
    let n = rng.gen_range(3..=max_n);
    let p = rng.gen_range(0.2..0.9);
    let mut edges: Vec<Vec<usize>> = all_subsets(n, 2)
        .into_iter()
        .filter(|_| rng.gen_bool(p))
        .collect();
    if edges.is_empty() {
        edges.push(vec![1, 2]);
    }
    build(n, edges)
}

/// `[t]^(3)` plus at most `C(t−1, 2)` further 3-edges.
pub fn peng_3graph(rng: &mut ChaCha8Rng, t: usize, max_n: usize) -> Hypergraph {
    let n = rng.gen_range(t.max(4)..=max_n.max(t));
    let mut edges = all_subsets(t, 3);
    let mut others: Vec<Vec<usize>> = all_subsets(n, 3)
        .into_iter()
        .filter(|e| e.iter().any(|&v| v > t))
        .collect();
    others.shuffle(rng);
    let extra = rng
        .gen_range(0..=binomial(t as u64 - 1, 2) as usize)
        .min(others.len());
    edges.extend(others.into_iter().take(extra));
    shuffled(rng, &build(n, edges))
}

/// Random `{1,2}`-graph with at least one 1-edge and one 2-edge.
pub fn one_two(rng: &mut ChaCha8Rng, max_n: usize) -> Hypergraph {
    let n = rng.gen_range(3..=max_n);
    let p1 = rng.gen_range(0.2..0.9);
    let p2 = rng.gen_range(0.2..0.9);
    let mut edges: Vec<Vec<usize>> = (1..=n)
        .filter(|_| rng.gen_bool(p1))
        .map(|v| vec![v])
        .collect();
    if edges.is_empty() {
        edges.push(vec![1]);
    }
    let pairs: Vec<Vec<usize>> = all_subsets(n, 2)
        .into_iter()
        .filter(|_| rng.gen_bool(p2))
        .collect();
    if pairs.is_empty() {
        edges.push(vec![1, 2]);
    }
    edges.extend(pairs);
    build(n, edges)
}

/// `K_t^{1,r}` on `[t]` plus random `r`-edges meeting `t+1..=n`; none of the
/// extra vertices carries a 1-edge, so both complete-subgraph orders stay `t`.
pub fn one_r(rng: &mut ChaCha8Rng, r: usize, t: usize, max_n: usize) -> Option<Hypergraph> {
    if (t as u64) < threshold(r).ok()? {
        return None;
    }
    let n = rng.gen_range(t + 1..=max_n.max(t + 1));
    let p = rng.gen_range(0.1..0.8);
    let mut edges: Vec<Vec<usize>> = (1..=t).map(|v| vec![v]).collect();
    edges.extend(all_subsets(t, r));
    edges.extend(
        all_subsets(n, r)
            .into_iter()
            .filter(|e| e.iter().any(|&v| v > t))
            .filter(|_| rng.gen_bool(p)),
    );
    Some(shuffled(rng, &build(n, edges)))
}

/// `E^1 = [t]`, `E^3 = [s]^(3)` plus at most `C(t−1, 2)` 3-edges meeting `s+1..=n`.
pub fn one_three(rng: &mut ChaCha8Rng, t: usize, s: usize, max_n: usize) -> Option<Hypergraph> {
    if s < t {
        return None;
    }
    let n = rng.gen_range(s..=max_n.max(s));
    let mut edges: Vec<Vec<usize>> = (1..=t).map(|v| vec![v]).collect();
    edges.extend(all_subsets(s, 3));
    let mut others: Vec<Vec<usize>> = all_subsets(n, 3)
        .into_iter()
        .filter(|e| e.iter().any(|&v| v > s))
        .collect();
    others.shuffle(rng);
    let extra = rng
        .gen_range(0..=binomial(t as u64 - 1, 2) as usize)
        .min(others.len());
    edges.extend(others.into_iter().take(extra));
    let h = build(n, edges);
    // extra edges must not grow the 3-clique past s
    let s_found = h.max_complete_subgraph(&[3]).ok()?.order;
    (s_found == s).then(|| shuffled(rng, &h))
}

/// `K_t^{1,2,3}` on `[t]` plus random 2- and 3-edges meeting `t+1..=n`.
pub fn one_two_three(rng: &mut ChaCha8Rng, t: usize, max_n: usize) -> Hypergraph {
    let n = rng.gen_range(t + 1..=max_n.max(t + 1));
    let p = rng.gen_range(0.1..0.9);
    let mut edges: Vec<Vec<usize>> = (1..=t).map(|v| vec![v]).collect();
    edges.extend(all_subsets(t, 2));
    edges.extend(all_subsets(t, 3));
    let outside = VertexSet::prefix(n).difference(VertexSet::prefix(t));
    for r in [2, 3] {
        edges.extend(
            all_subsets(n, r)
                .into_iter()
                .filter(|e| e.iter().any(|&v| outside.contains(v)))
                .filter(|_| rng.gen_bool(p)),
        );
    }
    shuffled(rng, &build(n, edges))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_meet_hypotheses() {
        for id in TheoremId::ALL {
            let hs = instances(id, 6, 11);
            assert_eq!(hs.len(), 6, "{id}");
            for h in &hs {
                assert!(assess(id, h).unwrap().all_hold(), "{id}: {h:?}");
            }
        }
    }

    #[test]
    fn deterministic() {
        assert_eq!(
            instances(TheoremId::OneThree, 4, 3),
            instances(TheoremId::OneThree, 4, 3)
        );
    }

    #[test]
    fn on13_covers_s_offsets() {
        let hs = instances(TheoremId::OneThree, 6, 5);
        let mut offsets: Vec<usize> = hs
            .iter()
            .map(|h| {
                let t = h.max_complete_subgraph(&[1, 3]).unwrap().order;
                h.max_complete_subgraph(&[3]).unwrap().order - t
            })
            .collect();
        offsets.sort_unstable();
        offsets.dedup();
        assert_eq!(offsets, [0, 1, 2]);
    }
}

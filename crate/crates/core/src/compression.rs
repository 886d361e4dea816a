//! Left-compression.
//!
//! `L_ij(e)` replaces `j` by `i` in `e` when `i ∉ e ∋ j`. Applied to a
//! level `E^r`, an edge moves only if its image is not already present, so
//! every level keeps its size. For `i < j` and a weighting with `x_i ≥ x_j`,
//! compression never decreases `λ'`.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, VertexSet, MAX_VERTICES};

/// One effective application of `𝓛_ij`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompressionStep {
    pub i: usize,
    pub j: usize,
    /// `(old, new)` for every edge that moved.
    pub moved: Vec<(VertexSet, VertexSet)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompressionTrace {
    pub steps: Vec<CompressionStep>,
    pub initial_edge_counts: Vec<(usize, usize)>,
    pub final_edge_counts: Vec<(usize, usize)>,
    /// Full lexicographic sweeps performed, including the final idle one.
    pub sweeps: usize,
}

fn check_pair(i: usize, j: usize) -> Result<()> {
    if i >= j {
        return Err(Error::NotOrderedPair { i, j });
    }
    if i == 0 || j > MAX_VERTICES {
        return Err(Error::LabelOutOfRange {
            label: if i == 0 { i } else { j },
            n: MAX_VERTICES,
        });
    }
    Ok(())
}

/// `L_ij(e)`.
pub fn compress_edge(e: VertexSet, i: usize, j: usize) -> Result<VertexSet> {
    check_pair(i, j)?;
    Ok(shift(e, i, j))
}

fn shift(e: VertexSet, i: usize, j: usize) -> VertexSet {
    if !e.contains(i) && e.contains(j) {
        e.without(j).with(i)
    } else {
        e
    }
}

/// `H_ij = ([n], 𝓛_ij(E))`, level by level.
pub fn compress_set(h: &Hypergraph, i: usize, j: usize) -> Result<Hypergraph> {
    check_pair(i, j)?;
    if j > h.n() {
        return Err(Error::LabelOutOfRange { label: j, n: h.n() });
    }
    Ok(apply(h, i, j).0)
}

fn apply(h: &Hypergraph, i: usize, j: usize) -> (Hypergraph, Vec<(VertexSet, VertexSet)>) {
    let mut moved = Vec::new();
    let edges: Vec<VertexSet> = h
        .edges()
        .map(|e| {
            let image = shift(e, i, j);
            if image != e && !h.has_edge(image) {
                moved.push((e, image));
                image
            } else {
                e
            }
        })
        .collect();
    (Hypergraph::from_sets(h.n(), edges), moved)
}

/// Applies `𝓛_ij` in lexicographic sweeps over `1 ≤ i < j ≤ n` until a full
/// sweep changes nothing.
pub fn left_compress(h: &Hypergraph) -> (Hypergraph, CompressionTrace) {
    let n = h.n();
    let mut current = h.clone();
    let mut steps = Vec::new();
    let mut sweeps = 0;
    loop {
        sweeps += 1;
        let mut changed = false;
        for i in 1..n {
            for j in i + 1..=n {
                let (next, moved) = apply(&current, i, j);
                if !moved.is_empty() {
                    changed = true;
                    steps.push(CompressionStep { i, j, moved });
                    current = next;
                }
            }
        }
        if !changed {
            break;
        }
    }
    let trace = CompressionTrace {
        steps,
        initial_edge_counts: h.edge_counts(),
        final_edge_counts: current.edge_counts(),
        sweeps,
    };
    (current, trace)
}

/// `𝓛_ij(E) = E` for every `i < j ≤ n`.
pub fn is_left_compressed(h: &Hypergraph) -> bool {
    let n = h.n();
    (1..n).all(|i| (i + 1..=n).all(|j| apply(h, i, j).1.is_empty()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn set(labels: &[usize]) -> VertexSet {
        VertexSet::from_labels(labels.iter().copied()).unwrap()
    }

    #[test]
    fn single_edges() {
        assert_eq!(compress_edge(set(&[2, 3]), 1, 2), Ok(set(&[1, 3])));
        assert_eq!(compress_edge(set(&[1, 2]), 1, 2), Ok(set(&[1, 2])));
        assert_eq!(compress_edge(set(&[3, 4]), 1, 2), Ok(set(&[3, 4])));
        assert_eq!(
            compress_edge(set(&[3, 4]), 2, 2),
            Err(Error::NotOrderedPair { i: 2, j: 2 })
        );
        assert_eq!(
            compress_edge(set(&[3, 4]), 3, 1),
            Err(Error::NotOrderedPair { i: 3, j: 1 })
        );
    }

    #[test]
    fn edge_sets() {
        let h = Hypergraph::build(3, [[2, 3]]).unwrap();
        assert_eq!(compress_set(&h, 1, 2).unwrap().level(2), &[set(&[1, 3])]);

        let h = Hypergraph::build(3, [[1, 3], [2, 3]]).unwrap();
        assert_eq!(compress_set(&h, 1, 2).unwrap(), h);

        let h = Hypergraph::build(2, [[2]]).unwrap();
        assert_eq!(compress_set(&h, 1, 2).unwrap().level(1), &[set(&[1])]);
        assert!(compress_set(&h, 1, 3).is_err());
    }

    #[test]
    fn fixpoints() {
        let k = Hypergraph::complete(5, &[1, 3]).unwrap();
        let (out, trace) = left_compress(&k);
        assert_eq!(out, k);
        assert!(trace.steps.is_empty());
        assert_eq!(trace.sweeps, 1);
        assert!(is_left_compressed(&k));

        let h = Hypergraph::build(3, [[2, 3]]).unwrap();
        assert!(!is_left_compressed(&h));
        let (out, trace) = left_compress(&h);
        assert_eq!(out.level(2), &[set(&[1, 2])]);
        assert_eq!(
            trace.steps.iter().map(|s| (s.i, s.j)).collect::<Vec<_>>(),
            [(1, 2), (2, 3)]
        );
        assert!(is_left_compressed(&out));

        let h = Hypergraph::build(4, [[2, 3, 4]]).unwrap();
        let (out, trace) = left_compress(&h);
        assert_eq!(out.level(3), &[set(&[1, 2, 3])]);
        assert_eq!(trace.initial_edge_counts, vec![(3, 1)]);
        assert_eq!(trace.final_edge_counts, vec![(3, 1)]);
        assert!(is_left_compressed(&out));
    }
}

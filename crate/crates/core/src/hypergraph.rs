//! Non-uniform hypergraphs on `[n] = {1, …, n}`.
//!
//! Edges are grouped by cardinality into levels `E^r`. Every edge is a
//! [`VertexSet`], a 64-bit mask, so `n` is capped at [`MAX_VERTICES`].
//! All interfaces speak 1-based labels.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::combinatorics::{k_subsets, MAX_ARITY};
use crate::error::{Error, Result};

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;

/// A set of 1-based vertex labels stored as a bitmask.
///
/// Ordering is by cardinality first, then lexicographic on the increasing
/// label sequence, which is the canonical edge order used for evaluation.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_labels<I: IntoIterator<Item = usize>>(labels: I) -> Result<Self> {
        let mut bits = 0u64;
        for v in labels {
            if v == 0 || v > MAX_VERTICES {
                return Err(Error::LabelOutOfRange {
                    label: v,
                    n: MAX_VERTICES,
                });
            }
            let b = 1u64 << (v - 1);
            if bits & b != 0 {
                return Err(Error::RepeatedLabel { label: v });
            }
            bits |= b;
        }
        Ok(VertexSet(bits))
    }

    /// `{1, …, t}`.
    pub fn prefix(t: usize) -> Self {
        debug_assert!(t <= MAX_VERTICES);
        if t >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << t) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        debug_assert!((1..=MAX_VERTICES).contains(&v));
        VertexSet(1u64 << (v - 1))
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        (1..=MAX_VERTICES).contains(&v) && self.0 & (1u64 << (v - 1)) != 0
    }

    #[must_use]
    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | Self::singleton(v).0)
    }

    #[must_use]
    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !Self::singleton(v).0)
    }

    #[must_use]
    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[must_use]
    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[must_use]
    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn max_label(self) -> Option<usize> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as usize)
    }

    /// Sum of the labels; strictly decreases under an effective compression.
    pub fn label_sum(self) -> usize {
        self.iter().sum()
    }

    /// Labels in increasing order.
    pub fn iter(self) -> Labels {
        Labels(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// Iterator over the labels of a [`VertexSet`], ascending.
#[derive(Clone, Debug)]
pub struct Labels(u64);

impl Iterator for Labels {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let tz = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(tz + 1)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Labels {}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Labels;

    fn into_iter(self) -> Labels {
        self.iter()
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            let diff = self.0 ^ other.0;
            if diff == 0 {
                Ordering::Equal
            } else if self.0 & diff & diff.wrapping_neg() != 0 {
                // the smallest differing label belongs to self
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// A family of vertex subsets of one fixed size, e.g. `E_i^r` (size `r-1`)
/// or `E_ij^r` (size `r-2`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NeighborhoodSet {
    pub arity: usize,
    pub sets: Vec<VertexSet>,
}

impl NeighborhoodSet {
    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn contains(&self, s: VertexSet) -> bool {
        self.sets.binary_search(&s).is_ok()
    }
}

/// Result of a maximum complete subgraph search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompleteSubgraph {
    pub order: usize,
    pub witness: VertexSet,
}

/// A hypergraph on `[n]` with edges grouped by cardinality.
///
/// Immutable once built: every transformation returns a new value.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    n: usize,
    levels: BTreeMap<usize, Vec<VertexSet>>,
}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Hypergraph")
            .field("n", &self.n)
            .field("levels", &self.levels)
            .finish()
    }
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::ZeroVertices);
    }
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices {
            n,
            max: MAX_VERTICES,
        });
    }
    Ok(())
}

impl Hypergraph {
    /// Builds a hypergraph from edges given as label lists.
    ///
    /// Labels inside an edge may come in any order but must be distinct and
    /// lie in `1..=n`. Duplicate edges are rejected, not merged.
    pub fn build<E, I>(n: usize, edges: I) -> Result<Self>
    where
        E: AsRef<[usize]>,
        I: IntoIterator<Item = E>,
    {
        check_order(n)?;
        let mut levels: BTreeMap<usize, Vec<VertexSet>> = BTreeMap::new();
        for e in edges {
            let labels = e.as_ref();
            if labels.is_empty() {
                return Err(Error::EmptyEdge);
            }
            if let Some(&bad) = labels.iter().find(|&&v| v == 0 || v > n) {
                return Err(Error::LabelOutOfRange { label: bad, n });
            }
            let set = VertexSet::from_labels(labels.iter().copied())?;
            if set.len() > MAX_ARITY {
                return Err(Error::ArityTooLarge {
                    r: set.len(),
                    max: MAX_ARITY,
                });
            }
            levels.entry(set.len()).or_default().push(set);
        }
        for level in levels.values_mut() {
            level.sort_unstable();
            if let Some(w) = level.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEdge(w[0].to_vec()));
            }
        }
        Ok(Hypergraph { n, levels })
    }

    /// Builds from already-validated vertex sets, sorting and deduplicating.
    pub(crate) fn from_sets<I: IntoIterator<Item = VertexSet>>(n: usize, sets: I) -> Self {
        let mut levels: BTreeMap<usize, Vec<VertexSet>> = BTreeMap::new();
        for s in sets {
            debug_assert!(!s.is_empty() && s.max_label().unwrap() <= n);
            levels.entry(s.len()).or_default().push(s);
        }
        for level in levels.values_mut() {
            level.sort_unstable();
            level.dedup();
        }
        Hypergraph { n, levels }
    }

    /// The complete hypergraph `K_t^R`: every `r`-subset of `[t]` for each `r ∈ R`.
    pub fn complete(t: usize, cardinalities: &[usize]) -> Result<Self> {
        check_order(t)?;
        let mut levels = BTreeMap::new();
        for &r in cardinalities {
            if r == 0 {
                return Err(Error::ArityTooSmall { r, min: 1 });
            }
            if r > t {
                return Err(Error::ArityExceedsOrder { r, t });
            }
            if r > MAX_ARITY {
                return Err(Error::ArityTooLarge { r, max: MAX_ARITY });
            }
            let labels: Vec<usize> = (1..=t).collect();
            let mut level: Vec<VertexSet> = k_subsets(&labels, r)
                .into_iter()
                .map(|s| VertexSet::from_labels(s).expect("labels within 1..=t"))
                .collect();
            level.sort_unstable();
            levels.insert(r, level);
        }
        Ok(Hypergraph { n: t, levels })
    }

    /// Same edges on a larger vertex set (the extra vertices are isolated).
    pub fn with_order(&self, n: usize) -> Result<Self> {
        check_order(n)?;
        if let Some(max) = self.edges().filter_map(VertexSet::max_label).max() {
            if max > n {
                return Err(Error::LabelOutOfRange { label: max, n });
            }
        }
        Ok(Hypergraph {
            n,
            levels: self.levels.clone(),
        })
    }

    /// A copy with one more edge.
    pub fn with_edge(&self, edge: &[usize]) -> Result<Self> {
        let mut all: Vec<Vec<usize>> = self.edges().map(VertexSet::to_vec).collect();
        all.push(edge.to_vec());
        Hypergraph::build(self.n, all)
    }

    /// Relabels vertex `v` as `perm[v - 1]`; `perm` must be a permutation of `1..=n`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                found: perm.len(),
            });
        }
        let image = VertexSet::from_labels(perm.iter().copied())?;
        if image != VertexSet::prefix(self.n) {
            return Err(Error::InvalidParameter(
                "relabeling is not a permutation".into(),
            ));
        }
        let sets = self
            .edges()
            .map(|e| VertexSet::from_labels(e.iter().map(|v| perm[v - 1])).expect("permutation"));
        Ok(Hypergraph::from_sets(self.n, sets))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `R(H)`, ascending.
    pub fn edge_types(&self) -> Vec<usize> {
        self.levels.keys().copied().collect()
    }

    pub fn has_level(&self, r: usize) -> bool {
        self.levels.contains_key(&r)
    }

    /// `E^r`, canonically sorted; empty when `r ∉ R(H)`.
    pub fn level(&self, r: usize) -> &[VertexSet] {
        self.levels.get(&r).map_or(&[], Vec::as_slice)
    }

    /// `(r, E^r)` pairs in ascending `r`.
    pub fn levels(&self) -> impl Iterator<Item = (usize, &[VertexSet])> + '_ {
        self.levels.iter().map(|(&r, v)| (r, v.as_slice()))
    }

    /// All edges, ascending cardinality, canonical order within a level.
    pub fn edges(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.levels.values().flat_map(|v| v.iter().copied())
    }

    /// `|E^r|`, zero when `r ∉ R(H)`.
    pub fn edge_count(&self, r: usize) -> usize {
        self.level(r).len()
    }

    pub fn total_edges(&self) -> usize {
        self.levels.values().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    pub fn has_edge(&self, e: VertexSet) -> bool {
        self.level(e.len()).binary_search(&e).is_ok()
    }

    /// `(r, |E^r|)` for every level.
    pub fn edge_counts(&self) -> Vec<(usize, usize)> {
        self.levels.iter().map(|(&r, v)| (r, v.len())).collect()
    }

    /// Vertices carrying a 1-edge.
    pub fn singletons(&self) -> VertexSet {
        self.level(1)
            .iter()
            .fold(VertexSet::EMPTY, |acc, &e| acc.union(e))
    }

    /// Number of `r`-edges containing `v`.
    pub fn degree(&self, r: usize, v: usize) -> usize {
        self.level(r).iter().filter(|e| e.contains(v)).count()
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n {
            Err(Error::LabelOutOfRange {
                label: v,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    fn check_neighborhood_level(&self, r: usize) -> Result<()> {
        if r < 2 {
            return Err(Error::ArityTooSmall { r, min: 2 });
        }
        if !self.has_level(r) {
            return Err(Error::MissingLevel(r));
        }
        Ok(())
    }

    fn collect_neighborhood<F>(&self, r: usize, arity: usize, f: F) -> NeighborhoodSet
    where
        F: FnMut(&VertexSet) -> Option<VertexSet>,
    {
        let mut sets: Vec<VertexSet> = self.level(r).iter().filter_map(f).collect();
        sets.sort_unstable();
        NeighborhoodSet { arity, sets }
    }

    /// `E_i^r = {A : |A| = r-1, A ∪ {i} ∈ E^r}`.
    pub fn neighborhood(&self, r: usize, i: usize) -> Result<NeighborhoodSet> {
        self.check_neighborhood_level(r)?;
        self.check_vertex(i)?;
        Ok(self.collect_neighborhood(r, r - 1, |e| e.contains(i).then(|| e.without(i))))
    }

    /// `E_ij^r = {B : |B| = r-2, B ∪ {i, j} ∈ E^r}`.
    pub fn pair_neighborhood(&self, r: usize, i: usize, j: usize) -> Result<NeighborhoodSet> {
        self.check_neighborhood_level(r)?;
        self.check_vertex(i)?;
        self.check_vertex(j)?;
        if i == j {
            return Err(Error::InvalidParameter(
                "pair neighborhood needs i != j".into(),
            ));
        }
        Ok(self.collect_neighborhood(r, r - 2, |e| {
            (e.contains(i) && e.contains(j)).then(|| e.without(i).without(j))
        }))
    }

    /// `E_{i\j}^r = E_i^r ∩ Ē_j^r`: sets completing `i` to an edge but
    /// completing `j` to a non-edge.
    pub fn difference_neighborhood(&self, r: usize, i: usize, j: usize) -> Result<NeighborhoodSet> {
        self.check_neighborhood_level(r)?;
        self.check_vertex(i)?;
        self.check_vertex(j)?;
        if i == j {
            return Err(Error::InvalidParameter(
                "difference neighborhood needs i != j".into(),
            ));
        }
        Ok(self.collect_neighborhood(r, r - 1, |e| {
            if !e.contains(i) || e.contains(j) {
                return None;
            }
            let a = e.without(i);
            (!self.has_edge(a.with(j))).then_some(a)
        }))
    }

    /// `Ē_i^r`: `(r-1)`-sets avoiding `i` whose union with `i` is not an edge.
    ///
    /// Enumerates all `(r-1)`-subsets of `[n] \ {i}`; intended for small `n`.
    pub fn complement_neighborhood(&self, r: usize, i: usize) -> Result<NeighborhoodSet> {
        self.check_neighborhood_level(r)?;
        self.check_vertex(i)?;
        let others: Vec<usize> = (1..=self.n).filter(|&v| v != i).collect();
        let mut sets: Vec<VertexSet> = k_subsets(&others, r - 1)
            .into_iter()
            .map(|a| VertexSet::from_labels(a).expect("valid labels"))
            .filter(|a| !self.has_edge(a.with(i)))
            .collect();
        sets.sort_unstable();
        Ok(NeighborhoodSet { arity: r - 1, sets })
    }

    /// `Ē_ij^r`: `(r-2)`-sets avoiding `i, j` whose union with `{i, j}` is not an edge.
    pub fn complement_pair_neighborhood(
        &self,
        r: usize,
        i: usize,
        j: usize,
    ) -> Result<NeighborhoodSet> {
        self.check_neighborhood_level(r)?;
        self.check_vertex(i)?;
        self.check_vertex(j)?;
        if i == j {
            return Err(Error::InvalidParameter(
                "pair neighborhood needs i != j".into(),
            ));
        }
        let others: Vec<usize> = (1..=self.n).filter(|&v| v != i && v != j).collect();
        let mut sets: Vec<VertexSet> = k_subsets(&others, r - 2)
            .into_iter()
            .map(|b| VertexSet::from_labels(b).expect("valid labels"))
            .filter(|b| !self.has_edge(b.with(i).with(j)))
            .collect();
        sets.sort_unstable();
        Ok(NeighborhoodSet { arity: r - 2, sets })
    }

    /// Whether every `r`-subset of `s` is an edge for each `r` in `query`.
    /// Cardinalities larger than `|s|` are vacuously satisfied.
    pub fn is_complete_on(&self, s: VertexSet, query: &[usize]) -> bool {
        let labels = s.to_vec();
        query.iter().all(|&r| {
            r > labels.len()
                || k_subsets(&labels, r)
                    .into_iter()
                    .all(|sub| self.has_edge(VertexSet::from_labels(sub).expect("valid")))
        })
    }

    /// Order of a largest vertex set `S` that is complete for every
    /// cardinality in `query` (see [`Hypergraph::is_complete_on`]).
    ///
    /// Exact backtracking; vertices are tried by descending degree in the
    /// smallest non-singleton queried level, ties by label. Fine up to a few
    /// dozen vertices.
    pub fn max_complete_subgraph(&self, query: &[usize]) -> Result<CompleteSubgraph> {
        let mut query: Vec<usize> = query.to_vec();
        query.sort_unstable();
        query.dedup();
        if query.iter().any(|r| !self.has_level(*r)) {
            return Err(Error::QueryNotSubset {
                query,
                available: self.edge_types(),
            });
        }

        let mut candidates: Vec<usize> = if query.first() == Some(&1) {
            self.singletons().to_vec()
        } else {
            (1..=self.n).collect()
        };
        if let Some(&r0) = query.iter().find(|&&r| r >= 2) {
            let degrees: Vec<usize> = (0..=self.n).map(|v| self.degree(r0, v)).collect();
            candidates.sort_by(|&a, &b| degrees[b].cmp(&degrees[a]).then(a.cmp(&b)));
        }
        let arities: Vec<usize> = query.into_iter().filter(|&r| r >= 2).collect();

        let mut search = CliqueSearch {
            graph: self,
            arities: &arities,
            current: Vec::new(),
            best: Vec::new(),
        };
        search.expand(&candidates);
        Ok(CompleteSubgraph {
            order: search.best.len(),
            witness: VertexSet::from_labels(search.best.iter().copied()).expect("valid labels"),
        })
    }
}

struct CliqueSearch<'a> {
    graph: &'a Hypergraph,
    arities: &'a [usize],
    current: Vec<usize>,
    best: Vec<usize>,
}

impl CliqueSearch<'_> {
    /// `candidates` holds every `u` with `current ∪ {u}` complete.
    fn expand(&mut self, candidates: &[usize]) {
        if self.current.len() > self.best.len() {
            self.best = self.current.clone();
        }
        for (k, &v) in candidates.iter().enumerate() {
            if self.current.len() + candidates.len() - k <= self.best.len() {
                return;
            }
            let next: Vec<usize> = candidates[k + 1..]
                .iter()
                .copied()
                .filter(|&u| self.pair_extends(v, u))
                .collect();
            self.current.push(v);
            self.expand(&next);
            self.current.pop();
        }
    }

    /// With `current ∪ {v}` and `current ∪ {u}` both complete, checks the
    /// remaining subsets of `current ∪ {v, u}`: those containing both.
    fn pair_extends(&self, v: usize, u: usize) -> bool {
        let base = self.current.len();
        self.arities.iter().all(|&r| {
            r > base + 2
                || k_subsets(&self.current, r - 2).into_iter().all(|b| {
                    let e = VertexSet::from_labels(b).expect("valid").with(v).with(u);
                    self.graph.has_edge(e)
                })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn set(labels: &[usize]) -> VertexSet {
        VertexSet::from_labels(labels.iter().copied()).unwrap()
    }

    #[test]
    fn build_groups_levels() {
        let h = Hypergraph::build(3, [vec![1], vec![3, 2, 1]]).unwrap();
        assert_eq!(h.edge_types(), [1, 3]);
        assert_eq!(h.level(3), &[set(&[1, 2, 3])]);
    }

    #[test]
    fn build_rejects_bad_input() {
        assert_eq!(
            Hypergraph::build(2, [vec![1, 2], vec![2, 1]]),
            Err(Error::DuplicateEdge(vec![1, 2]))
        );
        assert_eq!(
            Hypergraph::build(3, [vec![1, 4]]),
            Err(Error::LabelOutOfRange { label: 4, n: 3 })
        );
        assert_eq!(
            Hypergraph::build(3, [Vec::<usize>::new()]),
            Err(Error::EmptyEdge)
        );
        assert_eq!(
            Hypergraph::build(3, [vec![2, 2]]),
            Err(Error::RepeatedLabel { label: 2 })
        );
        assert_eq!(
            Hypergraph::build(0, Vec::<Vec<usize>>::new()),
            Err(Error::ZeroVertices)
        );
        assert!(matches!(
            Hypergraph::build(65, Vec::<Vec<usize>>::new()),
            Err(Error::TooManyVertices { .. })
        ));
        let big: Vec<usize> = (1..=21).collect();
        assert!(matches!(
            Hypergraph::build(30, [big]),
            Err(Error::ArityTooLarge { r: 21, .. })
        ));
    }

    #[test]
    fn all_triples_of_four() {
        let edges = k_subsets(&[1, 2, 3, 4], 3);
        let h = Hypergraph::build(4, edges).unwrap();
        assert_eq!(h.edge_types(), [3]);
        assert_eq!(h.edge_count(3), 4);
        assert_eq!(h, Hypergraph::complete(4, &[3]).unwrap());
    }

    #[test]
    fn complete_counts() {
        let k = Hypergraph::complete(5, &[1, 3]).unwrap();
        assert_eq!(k.edge_count(1), 5);
        assert_eq!(k.edge_count(3), 10);
        assert_eq!(k.edge_count(2), 0);
        assert_eq!(Hypergraph::complete(2, &[1, 2]).unwrap().total_edges(), 3);
        assert_eq!(
            Hypergraph::complete(3, &[4]),
            Err(Error::ArityExceedsOrder { r: 4, t: 3 })
        );
    }

    #[test]
    fn canonical_order_is_lexicographic() {
        let mut v = vec![
            set(&[2, 3]),
            set(&[1, 4]),
            set(&[1, 3]),
            set(&[3, 4]),
            set(&[1]),
        ];
        v.sort();
        assert_eq!(
            v,
            [
                set(&[1]),
                set(&[1, 3]),
                set(&[1, 4]),
                set(&[2, 3]),
                set(&[3, 4])
            ]
        );
        assert!(set(&[1, 5, 6]) < set(&[2, 3, 4]));
    }

    #[test]
    fn neighborhoods_of_k4_triples() {
        let k = Hypergraph::complete(4, &[3]).unwrap();
        let n1 = k.neighborhood(3, 1).unwrap();
        assert_eq!(n1.arity, 2);
        assert_eq!(n1.sets, [set(&[2, 3]), set(&[2, 4]), set(&[3, 4])]);
        let n12 = k.pair_neighborhood(3, 1, 2).unwrap();
        assert_eq!(n12.sets, [set(&[3]), set(&[4])]);
        assert!(k.difference_neighborhood(3, 1, 2).unwrap().is_empty());
        assert!(k.complement_neighborhood(3, 1).unwrap().is_empty());

        let h = Hypergraph::build(4, [vec![1, 2, 3]]).unwrap();
        assert!(h.neighborhood(3, 4).unwrap().is_empty());
        assert_eq!(h.neighborhood(2, 1), Err(Error::MissingLevel(2)));
        let h1 = Hypergraph::build(2, [vec![1]]).unwrap();
        assert_eq!(
            h1.neighborhood(1, 1),
            Err(Error::ArityTooSmall { r: 1, min: 2 })
        );
    }

    #[test]
    fn difference_and_complement_neighborhoods() {
        // E^3 = {123, 124, 234}
        let h = Hypergraph::build(4, [vec![1, 2, 3], vec![1, 2, 4], vec![2, 3, 4]]).unwrap();
        // E_1 = {23, 24}; A ∪ {3}: 23∪3 invalid (contains 3), 24∪3 = 234 ∈ E
        assert!(h.difference_neighborhood(3, 1, 3).unwrap().is_empty());
        // E_3 = {12, 24}; 12 ∪ 4 = 124 ∈ E, 24 contains 4
        assert!(h.difference_neighborhood(3, 3, 4).unwrap().is_empty());
        // E_2 = {13, 14, 34}; excluding j=1: 34 ∪ 1 = 134 ∉ E
        assert_eq!(
            h.difference_neighborhood(3, 2, 1).unwrap().sets,
            [set(&[3, 4])]
        );
        assert_eq!(
            h.complement_neighborhood(3, 1).unwrap().sets,
            [set(&[3, 4])]
        );
        assert_eq!(
            h.complement_pair_neighborhood(3, 1, 3).unwrap().sets,
            [set(&[4])]
        );
        // a 2-level pair neighborhood holds the empty set exactly when ij is an edge
        let g = Hypergraph::build(3, [vec![1, 2]]).unwrap();
        assert_eq!(
            g.pair_neighborhood(2, 1, 2).unwrap().sets,
            [VertexSet::EMPTY]
        );
        assert!(g.pair_neighborhood(2, 1, 3).unwrap().is_empty());
    }

    #[test]
    fn clique_orders() {
        let k = Hypergraph::complete(5, &[1, 3])
            .unwrap()
            .with_order(7)
            .unwrap();
        let c = k.max_complete_subgraph(&[1, 3]).unwrap();
        assert_eq!(c.order, 5);
        assert_eq!(c.witness, VertexSet::prefix(5));

        let path = Hypergraph::build(3, [vec![1, 2], vec![2, 3]]).unwrap();
        assert_eq!(path.max_complete_subgraph(&[2]).unwrap().order, 2);

        let mut edges = vec![vec![1], vec![2], vec![3]];
        edges.extend(k_subsets(&[1, 2, 3, 4], 3));
        let h = Hypergraph::build(4, edges).unwrap();
        let c = h.max_complete_subgraph(&[1, 3]).unwrap();
        assert_eq!(c.order, 3);
        assert_eq!(c.witness, set(&[1, 2, 3]));
        assert_eq!(h.max_complete_subgraph(&[3]).unwrap().order, 4);

        assert!(matches!(
            path.max_complete_subgraph(&[1, 2]),
            Err(Error::QueryNotSubset { .. })
        ));
    }

    #[test]
    fn clique_vacuous_rule() {
        // a lone 3-edge: any pair is vacuously complete for arity 3
        let h = Hypergraph::build(5, [vec![1, 2, 3]]).unwrap();
        assert_eq!(h.max_complete_subgraph(&[3]).unwrap().order, 3);
        let h = Hypergraph::build(5, [vec![1, 2, 3, 4]]).unwrap();
        assert!(h.is_complete_on(set(&[1, 5]), &[4]));
        assert_eq!(h.max_complete_subgraph(&[4]).unwrap().order, 4);
    }

    #[test]
    fn relabel_is_isomorphic() {
        let h = Hypergraph::build(3, [vec![1], vec![1, 2]]).unwrap();
        let p = h.relabel(&[3, 1, 2]).unwrap();
        assert_eq!(p, Hypergraph::build(3, [vec![3], vec![1, 3]]).unwrap());
        assert!(h.relabel(&[1, 1, 2]).is_err());
    }
}

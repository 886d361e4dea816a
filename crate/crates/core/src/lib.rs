//! Lagrangians of non-uniform hypergraphs.
//!
//! The crate evaluates the weighted edge polynomial
//! `λ'(H, x) = Σ_{r ∈ R(H)} r! Σ_{e ∈ E^r} Π_{v ∈ e} x_v` over the standard simplex,
//! maximizes it by multi-start projected gradient ascent, checks first-order
//! optimality conditions, applies left-compression, and checks instances of the
//! Motzkin–Straus type theorems for `{1,2}`, `{1,r}`, `{1,3}` and `{1,2,3}`-graphs.
//!
//! Everything here is `no_std` with `alloc`. File formats, JSON reports and the
//! command-line driver live in the `hyperlag` crate.
#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

mod combinatorics;
pub mod compression;
mod error;
pub mod hypergraph;
pub mod lagrangian;
pub mod optimizer;
pub mod oracle;
pub mod theorems;

pub use combinatorics::{binomial, factorial, k_subsets, MAX_ARITY};
pub use compression::{
    compress_edge, compress_set, is_left_compressed, left_compress, CompressionStep,
    CompressionTrace,
};
pub use error::{Error, Result};
pub use hypergraph::{CompleteSubgraph, Hypergraph, NeighborhoodSet, VertexSet, MAX_VERTICES};
pub use lagrangian::{
    closed_form, closed_form_exact, eval, eval_exact, eval_uniform, eval_uniform_exact, gradient,
    threshold, Gradient, Scalar, Weighting,
};
pub use num_rational::BigRational;
pub use optimizer::{
    check_optimality, maximize, maximize_with, Ascent, Config, OptimalityCheck, OptimizationResult,
};
pub use oracle::{grid_oracle, OracleResult};
pub use theorems::{
    build_counterexample, catalog, verify, ConstructionId, CounterexampleParams,
    CounterexampleReport, TheoremId, TheoremReport, Verdict,
};

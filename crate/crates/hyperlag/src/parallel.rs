//! Multi-threaded drivers over the core crate's sequential pieces.
//!
//! Work is split into contiguous chunks and reassembled in the original order
//! before merging, so results do not depend on the thread count.

use std::num::NonZeroUsize;
use std::thread;

use hyperlag_core::optimizer::{ascend, maximize_with, Ascent};
use hyperlag_core::oracle::{check_grid, grid_partition, merge_partitions, DEFAULT_CAP};
use hyperlag_core::{Config, Hypergraph, OptimizationResult, OracleResult, Result};

pub fn available_threads() -> usize {
    thread::available_parallelism().map_or(1, NonZeroUsize::get)
}

/// Maps `f` over `items` on up to `threads` scoped threads, preserving order.
pub fn ordered_map<T, R, F>(items: &[T], threads: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync,
{
    let threads = threads.clamp(1, items.len().max(1));
    if threads == 1 {
        return items.iter().map(&f).collect();
    }
    let chunk = items.len().div_ceil(threads);
    thread::scope(|scope| {
        let handles: Vec<_> = items
            .chunks(chunk)
            .map(|part| {
                let f = &f;
                scope.spawn(move || part.iter().map(f).collect::<Vec<R>>())
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("worker panicked"))
            .collect()
    })
}

pub fn maximize(h: &Hypergraph, cfg: &Config, threads: usize) -> Result<OptimizationResult> {
    maximize_with(h, cfg, |starts| {
        ordered_map(starts, threads, |s: &Vec<f64>| -> Ascent {
            ascend(h, s, cfg)
        })
    })
}

pub fn grid_oracle(
    h: &Hypergraph,
    m: usize,
    cap: Option<u64>,
    threads: usize,
) -> Result<OracleResult> {
    check_grid(h, m, cap.unwrap_or(DEFAULT_CAP))?;
    let firsts: Vec<usize> = (0..=m).rev().collect();
    let parts = ordered_map(&firsts, threads, |&first| grid_partition(h, m, first));
    Ok(merge_partitions(h, m, parts))
}

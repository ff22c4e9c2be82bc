//! Multi-threaded search drivers.
//!
//! Shards are assigned to workers statically (shard `i` goes to worker
//! `i mod k`) and merged in shard order, so the report does not depend on
//! the worker count or on scheduling.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::mpsc;
use std::thread;
use std::time::Instant;

use digrid_core::search::{ExhaustiveSearch, LocalSearch, SearchOptions, SearchReport, ShardOutcome};
use digrid_core::{GridDims, SearchError};
use thiserror::Error;

use crate::checkpoint::{Checkpoint, CheckpointError};

#[derive(Debug, Error)]
pub enum DriverError {
    #[error(transparent)]
    Search(#[from] SearchError),
    #[error(transparent)]
    Checkpoint(#[from] CheckpointError),
}

fn ceil_log2(x: u64) -> u32 {
    x.max(1).next_power_of_two().trailing_zeros()
}

/// Shards of at most `checkpoint_interval` codes, and at least one per
/// worker when the space allows.
pub fn shard_bits(edges: usize, opts: &SearchOptions) -> u32 {
    let edges = edges as u32;
    let per_shard = opts.checkpoint_interval.max(1).ilog2().min(edges);
    (edges - per_shard).max(ceil_log2(opts.worker_count as u64)).min(edges)
}

/// Exhaustive maximum, optionally resuming from and writing to a
/// checkpoint file.
pub fn exhaustive_search(
    dims: GridDims,
    opts: &SearchOptions,
    checkpoint: Option<&Path>,
) -> Result<SearchReport, DriverError> {
    let started = Instant::now();
    let search = ExhaustiveSearch::new(dims, opts)?;
    // a resumed run keeps the shard layout it was started with
    let (mut merged, mut done, bits) = match checkpoint.filter(|p| p.exists()) {
        Some(path) => {
            let cp = Checkpoint::load(path)?;
            (cp.restore(&search, opts.use_symmetry)?, cp.shard_prefix_done, cp.shard_bits)
        }
        None => (ShardOutcome::default(), 0, shard_bits(dims.edge_count(), opts)),
    };
    let shard_count = 1u64 << bits;
    let shard_len = search.space_size() >> bits;

    let workers = opts.worker_count as u64;
    let cancel = AtomicBool::new(false);
    let result = thread::scope(|scope| -> Result<(), DriverError> {
        let (tx, rx) = mpsc::channel::<(u64, ShardOutcome)>();
        for w in 0..workers {
            let tx = tx.clone();
            let (search, cancel) = (&search, &cancel);
            scope.spawn(move || {
                let first = done + (w + workers - done % workers) % workers;
                for shard in (first..shard_count).step_by(workers as usize) {
                    if cancel.load(Ordering::Relaxed) {
                        return;
                    }
                    let start = shard * shard_len;
                    if tx.send((shard, search.scan(start..start + shard_len))).is_err() {
                        return;
                    }
                }
            });
        }
        drop(tx);

        let mut pending = BTreeMap::new();
        let mut since_save = 0u64;
        for (shard, outcome) in rx {
            pending.insert(shard, outcome);
            while let Some(next) = pending.remove(&done) {
                since_save += next.evaluated + next.pruned;
                merged.merge(next, search.witness_cap());
                done += 1;
            }
            if let Some(path) = checkpoint {
                if since_save >= opts.checkpoint_interval || done == shard_count {
                    since_save = 0;
                    let cp = Checkpoint::new(dims, opts.use_symmetry, bits, done, &merged);
                    if let Err(e) = cp.save(path) {
                        cancel.store(true, Ordering::Relaxed);
                        return Err(e.into());
                    }
                }
            }
        }
        Ok(())
    });
    result?;
    debug_assert_eq!(done, shard_count);
    Ok(search.finish(merged, started.elapsed()))
}

/// Hill climbing with the starts spread over `opts.worker_count` threads.
pub fn local_search(dims: GridDims, opts: &SearchOptions) -> Result<SearchReport, DriverError> {
    if opts.worker_count == 0 {
        return Err(SearchError::NoWorkers.into());
    }
    let started = Instant::now();
    let search = LocalSearch::new(dims, opts);
    let starts = search.start_count();
    let workers = opts.worker_count;
    let outcomes: Vec<_> = thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let search = &search;
                scope.spawn(move || (w..starts).step_by(workers).map(|i| search.run_start(i)).collect::<Vec<_>>())
            })
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("local search worker panicked")).collect()
    });
    Ok(search.finish(&outcomes, started.elapsed()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shard_layout() {
        let o = |w, interval| SearchOptions { worker_count: w, checkpoint_interval: interval, ..Default::default() };
        assert_eq!(shard_bits(17, &o(1, 1 << 22)), 0);
        assert_eq!(shard_bits(17, &o(4, 1 << 22)), 2);
        assert_eq!(shard_bits(17, &o(1, 1 << 10)), 7);
        assert_eq!(shard_bits(0, &o(8, 1)), 0);
        assert_eq!(shard_bits(3, &o(64, 1 << 20)), 3);
    }
}

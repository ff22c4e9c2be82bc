use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::time::Duration;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::packed::PackedGrid;
use super::{SearchOptions, SearchReport, Strategy, canonical_representative};
use crate::grid::{EdgeId, GridDims, Orientation};
use crate::metrics::{WienerValue, is_strongly_connected, wiener_index};
use crate::orientations::{comb_orientation, conjectured_orientation};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StartKind {
    Comb,
    Conjectured,
    Random,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestartOutcome {
    pub index: usize,
    pub start: StartKind,
    pub start_value: WienerValue,
    pub value: WienerValue,
    pub best: Orientation,
    pub evaluations: u64,
}

#[derive(Debug, Clone)]
enum Evaluator {
    Packed(PackedGrid),
    Bfs,
}

impl Evaluator {
    fn eval(&self, o: &Orientation) -> WienerValue {
        match (self, o.code()) {
            (Evaluator::Packed(p), Some(code)) => WienerValue::from(p.wiener(code)),
            _ => wiener_index(&o.materialize()),
        }
    }
}

/// Steepest-ascent hill climbing over single-arc flips with bounded plateau
/// walks. Start `i` uses a ChaCha8 generator seeded with `seed + i`.
#[derive(Debug, Clone)]
pub struct LocalSearch {
    dims: GridDims,
    evaluator: Evaluator,
    fixed_starts: Vec<(StartKind, Orientation)>,
    opts: SearchOptions,
}

impl LocalSearch {
    pub fn new(dims: GridDims, opts: &SearchOptions) -> Self {
        let evaluator = PackedGrid::new(dims).map_or(Evaluator::Bfs, Evaluator::Packed);
        let mut fixed_starts = Vec::new();
        if let Ok(o) = comb_orientation(dims) {
            fixed_starts.push((StartKind::Comb, o));
        }
        if let Ok(o) = conjectured_orientation(dims) {
            fixed_starts.push((StartKind::Conjectured, o));
        }
        Self { dims, evaluator, fixed_starts, opts: opts.clone() }
    }

    pub fn start_count(&self) -> usize {
        self.fixed_starts.len() + self.opts.restarts
    }

    pub fn run_start(&self, index: usize) -> RestartOutcome {
        let mut rng = ChaCha8Rng::seed_from_u64(self.opts.seed.wrapping_add(index as u64));
        let edges = self.dims.edge_count();
        let (start, mut current) = match self.fixed_starts.get(index) {
            Some((kind, o)) => (*kind, o.clone()),
            None => (StartKind::Random, Orientation::from_fn(self.dims, |_| rng.random())),
        };
        let start_value = self.evaluator.eval(&current);
        let mut value = start_value;
        let mut evaluations = 1u64;
        let mut plateau = 0usize;
        let mut moves = Vec::new();
        loop {
            let mut best_neighbor = WienerValue::ZERO;
            moves.clear();
            for e in (0..edges).map(EdgeId) {
                current.flip(e);
                let w = self.evaluator.eval(&current);
                current.flip(e);
                evaluations += 1;
                if w > best_neighbor {
                    best_neighbor = w;
                    moves.clear();
                }
                if w == best_neighbor {
                    moves.push(e);
                }
            }
            if moves.is_empty() {
                break;
            }
            if best_neighbor > value {
                plateau = 0;
            } else if best_neighbor == value && plateau < self.opts.max_plateau_moves {
                plateau += 1;
            } else {
                break;
            }
            current.flip(moves[rng.random_range(0..moves.len())]);
            value = best_neighbor;
        }
        RestartOutcome { index, start, start_value, value, best: current, evaluations }
    }

    /// Merges outcomes (in any order) into a report.
    pub fn finish(&self, outcomes: &[RestartOutcome], wall_time: Duration) -> SearchReport {
        let max = outcomes.iter().map(|o| o.value).max().unwrap_or(WienerValue::ZERO);
        let distinct: BTreeSet<Orientation> = outcomes
            .iter()
            .filter(|o| o.value == max)
            .map(|o| canonical_representative(&o.best))
            .collect();
        let optimal_orbits = distinct.len() as u64;
        let witnesses: Vec<Orientation> = distinct.into_iter().take(self.opts.witness_cap.max(1)).collect();
        let witnesses_strongly_connected = witnesses
            .iter()
            .map(|o| {
                let g = o.materialize();
                assert_eq!(wiener_index(&g), max, "witness disagrees with BFS");
                is_strongly_connected(&g)
            })
            .collect();
        SearchReport {
            dims: self.dims,
            strategy: Strategy::LocalSearch {
                seed: self.opts.seed,
                restarts: self.opts.restarts,
                max_plateau_moves: self.opts.max_plateau_moves,
            },
            max_wiener: max,
            witnesses,
            witnesses_strongly_connected,
            optimal_orbits,
            evaluated_count: outcomes.iter().map(|o| o.evaluations).sum(),
            pruned_count: 0,
            wall_time,
            proven_optimal: false,
        }
    }
}

/// Best orientation found by hill climbing from the comb, the conjectured
/// orientation and `opts.restarts` random starts. A lower bound only.
pub fn local_search_max(dims: GridDims, opts: &SearchOptions) -> SearchReport {
    let search = LocalSearch::new(dims, opts);
    let outcomes: Vec<_> = (0..search.start_count()).map(|i| search.run_start(i)).collect();
    search.finish(&outcomes, Duration::ZERO)
}

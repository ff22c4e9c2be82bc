use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::ops::Range;
use core::time::Duration;

use super::packed::{OrbitTables, PackedGrid, lex_key};
use super::{MAX_EDGE_BUDGET, SearchOptions, SearchReport, Strategy};
use crate::error::SearchError;
use crate::grid::{GridDims, Orientation};
use crate::metrics::{WienerValue, is_strongly_connected, wiener_index};

/// An orientation code ordered lexicographically by its bit vector (edge 0
/// first) rather than numerically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LexCode(pub u64);

impl Ord for LexCode {
    fn cmp(&self, other: &Self) -> Ordering {
        lex_key(self.0).cmp(&lex_key(other.0))
    }
}

impl PartialOrd for LexCode {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Partial result over a range of codes. Merging is associative and
/// commutative, so any split of the code space yields the same total.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ShardOutcome {
    pub best: Option<u64>,
    /// Canonical codes attaining `best`, smallest first, at most the cap.
    pub witnesses: BTreeSet<LexCode>,
    pub optimal_orbits: u64,
    pub evaluated: u64,
    pub pruned: u64,
}

impl ShardOutcome {
    fn offer(&mut self, value: u64, canonical: u64, new_orbit: bool, cap: usize) {
        match self.best.map_or(Ordering::Greater, |b| value.cmp(&b)) {
            Ordering::Less => return,
            Ordering::Greater => {
                self.best = Some(value);
                self.witnesses.clear();
                self.optimal_orbits = 0;
            }
            Ordering::Equal => {}
        }
        self.optimal_orbits += u64::from(new_orbit);
        self.witnesses.insert(LexCode(canonical));
        if self.witnesses.len() > cap {
            self.witnesses.pop_last();
        }
    }

    pub fn merge(&mut self, other: ShardOutcome, cap: usize) {
        self.evaluated += other.evaluated;
        self.pruned += other.pruned;
        let Some(theirs) = other.best else { return };
        match self.best.map_or(Ordering::Less, |b| b.cmp(&theirs)) {
            Ordering::Greater => {}
            Ordering::Less => {
                self.best = Some(theirs);
                self.witnesses = other.witnesses;
                self.optimal_orbits = other.optimal_orbits;
            }
            Ordering::Equal => {
                self.optimal_orbits += other.optimal_orbits;
                self.witnesses.extend(other.witnesses);
                while self.witnesses.len() > cap {
                    self.witnesses.pop_last();
                }
            }
        }
    }
}

/// Exhaustive enumeration of the `2^E` orientation codes of a grid.
#[derive(Debug, Clone)]
pub struct ExhaustiveSearch {
    dims: GridDims,
    packed: PackedGrid,
    orbits: OrbitTables,
    use_symmetry: bool,
    witness_cap: usize,
}

impl ExhaustiveSearch {
    pub fn new(dims: GridDims, opts: &SearchOptions) -> Result<Self, SearchError> {
        let edges = dims.edge_count();
        let budget = opts.edge_budget.min(MAX_EDGE_BUDGET);
        if edges > budget {
            return Err(SearchError::BudgetExceeded { edges, budget });
        }
        if opts.worker_count == 0 {
            return Err(SearchError::NoWorkers);
        }
        Ok(Self {
            dims,
            packed: PackedGrid::new(dims)?,
            orbits: OrbitTables::new(dims)?,
            use_symmetry: opts.use_symmetry,
            witness_cap: opts.witness_cap.max(1),
        })
    }

    pub fn dims(&self) -> GridDims {
        self.dims
    }

    pub fn witness_cap(&self) -> usize {
        self.witness_cap
    }

    /// Number of codes, `2^E`.
    pub fn space_size(&self) -> u64 {
        1u64 << self.dims.edge_count()
    }

    pub fn orbits(&self) -> &OrbitTables {
        &self.orbits
    }

    pub fn evaluate(&self, code: u64) -> u64 {
        self.packed.wiener(code)
    }

    /// Enumerates `range` in numeric order.
    pub fn scan(&self, range: Range<u64>) -> ShardOutcome {
        let mut out = ShardOutcome::default();
        let cap = self.witness_cap;
        let mut best = 0u64;
        for code in range {
            if self.use_symmetry {
                if !self.orbits.is_canonical(code) {
                    out.pruned += 1;
                    continue;
                }
                out.evaluated += 1;
                let w = self.packed.wiener(code);
                if w >= best || out.best.is_none() {
                    out.offer(w, code, true, cap);
                    best = w;
                }
            } else {
                out.evaluated += 1;
                let w = self.packed.wiener(code);
                if w >= best || out.best.is_none() {
                    let canonical = self.orbits.canonical(code);
                    out.offer(w, canonical, canonical == code, cap);
                    best = w;
                }
            }
        }
        out
    }

    /// Turns a merged outcome over the whole space into a report; witnesses
    /// are re-evaluated by plain BFS.
    pub fn finish(&self, outcome: ShardOutcome, wall_time: Duration) -> SearchReport {
        let max = outcome.best.unwrap_or(0);
        let witnesses: Vec<Orientation> = outcome
            .witnesses
            .iter()
            .map(|c| Orientation::from_code(self.dims, c.0).expect("budget keeps codes within 64 bits"))
            .collect();
        let witnesses_strongly_connected = witnesses
            .iter()
            .map(|o| {
                let g = o.materialize();
                assert_eq!(wiener_index(&g), WienerValue::from(max), "witness disagrees with BFS");
                is_strongly_connected(&g)
            })
            .collect();
        SearchReport {
            dims: self.dims,
            strategy: Strategy::Exhaustive { use_symmetry: self.use_symmetry },
            max_wiener: WienerValue::from(max),
            witnesses,
            witnesses_strongly_connected,
            optimal_orbits: outcome.optimal_orbits,
            evaluated_count: outcome.evaluated,
            pruned_count: outcome.pruned,
            wall_time,
            proven_optimal: true,
        }
    }
}

/// Maximum Wiener index over all orientations, single-threaded. The report's
/// wall time is left at zero; callers with a clock fill it in.
pub fn exhaustive_max(dims: GridDims, opts: &SearchOptions) -> Result<SearchReport, SearchError> {
    let search = ExhaustiveSearch::new(dims, opts)?;
    let outcome = search.scan(0..search.space_size());
    Ok(search.finish(outcome, Duration::ZERO))
}

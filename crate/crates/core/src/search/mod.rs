//! Searching the orientation space of `G_{m,n}` for maximum Wiener index.
//!
//! [`exhaustive_max`] enumerates every bit vector (optionally one per orbit
//! of the grid automorphisms combined with reversal) and is exact;
//! [`local_search_max`] is seeded hill climbing and only gives a lower
//! bound. Both are single-threaded here; the work is split into independent
//! pieces ([`ExhaustiveSearch::scan`], [`LocalSearch::run_start`]) whose
//! results merge deterministically, so a multi-threaded driver produces the
//! same report.

mod exhaustive;
mod local;
mod packed;

use alloc::vec::Vec;
use core::time::Duration;

pub use exhaustive::{ExhaustiveSearch, LexCode, ShardOutcome, exhaustive_max};
pub use local::{LocalSearch, RestartOutcome, StartKind, local_search_max};
pub use packed::{OrbitTables, PackedGrid};

use crate::grid::{Orientation, Symmetry};
use crate::{GridDims, WienerValue};

/// Largest edge count enumerated without an explicit override.
pub const DEFAULT_EDGE_BUDGET: usize = 24;
/// Hard limit of the packed 64-bit enumeration.
pub const MAX_EDGE_BUDGET: usize = 63;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOptions {
    /// Evaluate only orbit-minimal bit vectors.
    pub use_symmetry: bool,
    pub worker_count: usize,
    /// Orientations between checkpoint writes (multi-threaded driver only).
    pub checkpoint_interval: u64,
    pub seed: u64,
    /// Random starts for local search, on top of the comb and conjectured
    /// starts.
    pub restarts: usize,
    pub max_plateau_moves: usize,
    pub witness_cap: usize,
    pub edge_budget: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            use_symmetry: false,
            worker_count: 1,
            checkpoint_interval: 1 << 22,
            seed: 0,
            restarts: 64,
            max_plateau_moves: 32,
            witness_cap: 64,
            edge_budget: DEFAULT_EDGE_BUDGET,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Exhaustive { use_symmetry: bool },
    LocalSearch { seed: u64, restarts: usize, max_plateau_moves: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchReport {
    pub dims: GridDims,
    pub strategy: Strategy,
    pub max_wiener: WienerValue,
    /// Canonical orbit representatives attaining `max_wiener`, sorted
    /// lexicographically and truncated to the witness cap.
    pub witnesses: Vec<Orientation>,
    pub witnesses_strongly_connected: Vec<bool>,
    /// Number of distinct optimal orbits, counted past the cap.
    pub optimal_orbits: u64,
    pub evaluated_count: u64,
    pub pruned_count: u64,
    pub wall_time: Duration,
    /// False for heuristic runs: `max_wiener` is then only a lower bound.
    pub proven_optimal: bool,
}

impl SearchReport {
    /// Equality on everything except the wall time.
    pub fn same_outcome(&self, other: &Self) -> bool {
        Self { wall_time: Duration::ZERO, ..self.clone() }
            == Self { wall_time: Duration::ZERO, ..other.clone() }
    }
}

/// The lexicographically smallest bit vector in the orbit of `o` under the
/// grid automorphisms combined with arc reversal.
pub fn canonical_representative(o: &Orientation) -> Orientation {
    let mut best = o.clone();
    for &g in Symmetry::group(o.dims()) {
        let img = o.apply_automorphism(g).expect("group elements are valid for these dims");
        let rev = img.reverse();
        for cand in [img, rev] {
            if cand.lex_cmp(&best).is_lt() {
                best = cand;
            }
        }
    }
    best
}

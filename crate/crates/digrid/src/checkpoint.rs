//! Resumable progress files for the exhaustive search.
//!
//! The code space is cut into `2^shard_bits` equal shards; a checkpoint
//! records how many leading shards are finished together with the running
//! outcome over exactly those shards.

use std::fs;
use std::io;
use std::path::Path;

use digrid_core::search::{ExhaustiveSearch, LexCode, ShardOutcome};
use digrid_core::{GridDims, Orientation, wiener_index};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CheckpointError {
    #[error("checkpoint I/O on {path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("malformed checkpoint: {0}")]
    Json(#[from] serde_json::Error),
    #[error("checkpoint does not match this run: {0}")]
    Mismatch(String),
    #[error("checkpoint failed re-verification: {0}")]
    Verification(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckpointDims {
    pub m: usize,
    pub n: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checkpoint {
    pub dims: CheckpointDims,
    pub use_symmetry: bool,
    pub shard_bits: u32,
    /// Shards `0..shard_prefix_done` are complete.
    pub shard_prefix_done: u64,
    /// Decimal string, absent before the first evaluation.
    pub best_value: Option<String>,
    /// Canonical witnesses as bit strings in canonical edge order.
    pub best_bits: Vec<String>,
    pub optimal_orbits: String,
    pub evaluated: String,
    pub pruned: String,
}

fn parse_count(field: &str, s: &str) -> Result<u64, CheckpointError> {
    s.parse().map_err(|_| CheckpointError::Verification(format!("{field} is not a decimal count: {s:?}")))
}

impl Checkpoint {
    pub fn new(dims: GridDims, use_symmetry: bool, shard_bits: u32, done: u64, outcome: &ShardOutcome) -> Self {
        Self {
            dims: CheckpointDims { m: dims.m(), n: dims.n() },
            use_symmetry,
            shard_bits,
            shard_prefix_done: done,
            best_value: outcome.best.map(|b| b.to_string()),
            best_bits: outcome
                .witnesses
                .iter()
                .map(|c| Orientation::from_code(dims, c.0).expect("search codes fit").bit_string())
                .collect(),
            optimal_orbits: outcome.optimal_orbits.to_string(),
            evaluated: outcome.evaluated.to_string(),
            pruned: outcome.pruned.to_string(),
        }
    }

    pub fn load(path: &Path) -> Result<Self, CheckpointError> {
        let text = fs::read_to_string(path)
            .map_err(|source| CheckpointError::Io { path: path.display().to_string(), source })?;
        Ok(serde_json::from_str(&text)?)
    }

    /// Writes through a temporary file and a rename.
    pub fn save(&self, path: &Path) -> Result<(), CheckpointError> {
        let io_err = |source| CheckpointError::Io { path: path.display().to_string(), source };
        let tmp = path.with_extension("tmp");
        let text = serde_json::to_string_pretty(self)?;
        fs::write(&tmp, text).map_err(io_err)?;
        fs::rename(&tmp, path).map_err(io_err)
    }

    /// Checks the checkpoint belongs to `search` and re-evaluates every
    /// stored witness by BFS before handing back the running outcome.
    pub fn restore(&self, search: &ExhaustiveSearch, use_symmetry: bool) -> Result<ShardOutcome, CheckpointError> {
        let dims = search.dims();
        if (self.dims.m, self.dims.n) != (dims.m(), dims.n()) {
            return Err(CheckpointError::Mismatch(format!("grid {}x{} vs {dims}", self.dims.m, self.dims.n)));
        }
        if self.use_symmetry != use_symmetry {
            return Err(CheckpointError::Mismatch("symmetry pruning setting differs".into()));
        }
        if self.shard_bits as usize > dims.edge_count() {
            return Err(CheckpointError::Mismatch(format!("{} shard bits for {} edges", self.shard_bits, dims.edge_count())));
        }
        if self.shard_prefix_done > 1u64 << self.shard_bits {
            return Err(CheckpointError::Mismatch("more shards done than exist".into()));
        }
        let best = self.best_value.as_deref().map(|s| parse_count("best_value", s)).transpose()?;
        let mut witnesses = std::collections::BTreeSet::new();
        for bits in &self.best_bits {
            let o = Orientation::from_bit_str(dims, bits)
                .map_err(|e| CheckpointError::Verification(e.to_string()))?;
            let w = wiener_index(&o.materialize()).get();
            if Some(w) != best.map(u128::from) {
                return Err(CheckpointError::Verification(format!(
                    "witness {bits} has W = {w}, checkpoint claims {:?}",
                    self.best_value
                )));
            }
            let code = o.code().expect("search codes fit");
            if search.orbits().canonical(code) != code {
                return Err(CheckpointError::Verification(format!("witness {bits} is not canonical")));
            }
            witnesses.insert(LexCode(code));
        }
        if best.is_some() && witnesses.is_empty() {
            return Err(CheckpointError::Verification("best value without witnesses".into()));
        }
        Ok(ShardOutcome {
            best,
            witnesses,
            optimal_orbits: parse_count("optimal_orbits", &self.optimal_orbits)?,
            evaluated: parse_count("evaluated", &self.evaluated)?,
            pruned: parse_count("pruned", &self.pruned)?,
        })
    }
}

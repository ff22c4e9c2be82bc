//! Wiener index of orientations of grid graphs `P_m □ P_n`.
//!
//! The crate is `no_std` (it needs `alloc`) and contains everything that is
//! pure computation:
//!
//! * [`grid`]: grid dimensions, the canonical edge order, orientation
//!   bit vectors, digraph materialization and grid symmetries;
//! * [`metrics`]: BFS distances with the "unreachable counts as zero"
//!   convention, transmissions, the Wiener index and strong connectivity;
//! * [`orientations`]: the comb, conjectured (ladder-generalizing) and
//!   snake Hamiltonian-path orientations;
//! * [`formulas`]: exact closed forms and the comparisons built on them;
//! * [`search`]: exhaustive enumeration with orbit pruning and seeded
//!   hill climbing for maximum-Wiener orientations.
//!
//! File formats, the multi-threaded search driver and the CLI live in the
//! `digrid` crate.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod formulas;
pub mod grid;
pub mod metrics;
pub mod orientations;
pub mod search;

mod error;

pub use error::{FormulaError, GridError, MetricsError, OrientationError, SearchError};
pub use grid::{Digraph, EdgeId, EdgeKind, GridDims, GridEdge, Orientation, Symmetry, Vertex};
pub use metrics::{WienerValue, wiener_index};

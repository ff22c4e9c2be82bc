use thiserror::Error;

use crate::grid::{GridDims, Symmetry, Vertex};

/// Errors raised while building grids, orientations and digraphs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GridError {
    #[error("grid dimensions must be at least 1x1, got {m}x{n}")]
    InvalidDims { m: usize, n: usize },
    #[error("orientation of {dims} needs {expected} bits, got {found}")]
    BitLength {
        dims: GridDims,
        expected: usize,
        found: usize,
    },
    #[error("invalid bit character {found:?} at position {position}")]
    BitCharacter { position: usize, found: char },
    #[error("orientation codes hold at most 64 edges, {dims} has {edges}")]
    CodeTooWide { dims: GridDims, edges: usize },
    #[error("vertex ({}, {}) lies outside {dims}", vertex.row, vertex.col)]
    OutOfRange { dims: GridDims, vertex: Vertex },
    #[error("({}, {}) and ({}, {}) are not adjacent in the grid", tail.row, tail.col, head.row, head.col)]
    NotAdjacent { tail: Vertex, head: Vertex },
    #[error("edge ({}, {})-({}, {}) is oriented twice", tail.row, tail.col, head.row, head.col)]
    DuplicateEdge { tail: Vertex, head: Vertex },
    #[error("edge ({}, {})-({}, {}) has no orientation", a.row, a.col, b.row, b.col)]
    MissingEdge { a: Vertex, b: Vertex },
    #[error("{symmetry:?} is not an automorphism of {dims}")]
    InvalidSymmetry { dims: GridDims, symmetry: Symmetry },
    #[error("arc {tail} -> {head} references a vertex outside 0..{vertex_count}")]
    ArcOutOfRange {
        tail: usize,
        head: usize,
        vertex_count: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MetricsError {
    #[error("vertex {vertex} out of range for a digraph on {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("average distance needs at least two vertices, got {vertex_count}")]
    TooFewVertices { vertex_count: usize },
}

/// Errors raised by the named orientation constructors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrientationError {
    #[error("the comb orientation exists only for an even number of columns, got n = {n}")]
    CombOddColumns { n: usize },
    #[error("{construction} orientation needs m, n >= 2, got {m}x{n}")]
    TooSmall {
        construction: &'static str,
        m: usize,
        n: usize,
    },
    #[error(transparent)]
    Grid(#[from] GridError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("{formula} requires {requirement}, got m = {m}, n = {n}")]
    Hypothesis {
        formula: &'static str,
        requirement: &'static str,
        m: usize,
        n: usize,
    },
    #[error("{formula} numerator {numerator} is not divisible by {denominator}")]
    NotDivisible {
        formula: &'static str,
        numerator: i128,
        denominator: i128,
    },
    #[error("{formula} overflows 128-bit arithmetic at m = {m}, n = {n}")]
    Overflow {
        formula: &'static str,
        m: usize,
        n: usize,
    },
    #[error(transparent)]
    Orientation(#[from] OrientationError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("exhaustive search over {edges} edges exceeds the budget of {budget} edges")]
    BudgetExceeded { edges: usize, budget: usize },
    #[error("worker count must be at least 1")]
    NoWorkers,
    #[error(transparent)]
    Grid(#[from] GridError),
}

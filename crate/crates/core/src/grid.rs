//! Grid graphs, the canonical edge order and orientation encodings.
//!
//! Vertices use 1-based `(row, col)` coordinates with row 1 on top. Edges are
//! numbered horizontals first (row-major), then verticals (row-major). A set
//! bit orients a horizontal edge rightward and a vertical edge downward.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::GridError;

/// Rows `m` and columns `n` of the grid `G_{m,n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GridDims {
    m: usize,
    n: usize,
}

impl GridDims {
    pub fn new(m: usize, n: usize) -> Result<Self, GridError> {
        if m == 0 || n == 0 {
            return Err(GridError::InvalidDims { m, n });
        }
        Ok(Self { m, n })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.m * self.n
    }

    pub fn horizontal_edge_count(&self) -> usize {
        self.m * (self.n - 1)
    }

    pub fn edge_count(&self) -> usize {
        self.horizontal_edge_count() + self.n * (self.m - 1)
    }

    pub fn is_square(&self) -> bool {
        self.m == self.n
    }

    pub fn transposed(&self) -> Self {
        Self { m: self.n, n: self.m }
    }

    pub fn contains(&self, v: Vertex) -> bool {
        (1..=self.m).contains(&v.row) && (1..=self.n).contains(&v.col)
    }

    pub fn vertex(&self, index: usize) -> Vertex {
        Vertex {
            row: index / self.n + 1,
            col: index % self.n + 1,
        }
    }

    pub fn vertex_index(&self, v: Vertex) -> Result<usize, GridError> {
        if !self.contains(v) {
            return Err(GridError::OutOfRange { dims: *self, vertex: v });
        }
        Ok(v.index_unchecked(self.n))
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.vertex_count()).map(|i| self.vertex(i))
    }

    /// Endpoints of an edge, top/left endpoint first.
    pub fn edge(&self, id: EdgeId) -> GridEdge {
        let h = self.horizontal_edge_count();
        let i = id.0;
        debug_assert!(i < self.edge_count());
        if i < h {
            let (r, c) = (i / (self.n - 1) + 1, i % (self.n - 1) + 1);
            GridEdge {
                id,
                kind: EdgeKind::Horizontal,
                a: Vertex::new(r, c),
                b: Vertex::new(r, c + 1),
            }
        } else {
            let j = i - h;
            let (r, c) = (j / self.n + 1, j % self.n + 1);
            GridEdge {
                id,
                kind: EdgeKind::Vertical,
                a: Vertex::new(r, c),
                b: Vertex::new(r + 1, c),
            }
        }
    }

    /// All edges in canonical order.
    pub fn edges(&self) -> impl Iterator<Item = GridEdge> + '_ {
        (0..self.edge_count()).map(|i| self.edge(EdgeId(i)))
    }

    /// The edge joining `u` and `v`, if they are adjacent grid vertices.
    pub fn edge_between(&self, u: Vertex, v: Vertex) -> Result<EdgeId, GridError> {
        for w in [u, v] {
            if !self.contains(w) {
                return Err(GridError::OutOfRange { dims: *self, vertex: w });
            }
        }
        let (a, b) = if (u.row, u.col) <= (v.row, v.col) { (u, v) } else { (v, u) };
        if a.row == b.row && a.col + 1 == b.col {
            Ok(EdgeId((a.row - 1) * (self.n - 1) + (a.col - 1)))
        } else if a.col == b.col && a.row + 1 == b.row {
            Ok(EdgeId(self.horizontal_edge_count() + (a.row - 1) * self.n + (a.col - 1)))
        } else {
            Err(GridError::NotAdjacent { tail: u, head: v })
        }
    }
}

impl fmt::Display for GridDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.m, self.n)
    }
}

/// A grid vertex, `(1, 1)` top-left and `(m, 1)` bottom-left.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex {
    pub row: usize,
    pub col: usize,
}

impl Vertex {
    pub const fn new(row: usize, col: usize) -> Self {
        Self { row, col }
    }

    fn index_unchecked(self, n: usize) -> usize {
        (self.row - 1) * n + (self.col - 1)
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.row, self.col)
    }
}

/// Position of an edge in the canonical edge order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeKind {
    Horizontal,
    Vertical,
}

/// An undirected grid edge; `a` is the left (horizontal) or upper (vertical)
/// endpoint.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GridEdge {
    pub id: EdgeId,
    pub kind: EdgeKind,
    pub a: Vertex,
    pub b: Vertex,
}

impl GridEdge {
    /// `(tail, head)` under the given orientation bit.
    pub fn arc(&self, bit: bool) -> (Vertex, Vertex) {
        if bit { (self.a, self.b) } else { (self.b, self.a) }
    }
}

/// One direction per grid edge, stored as a bit vector in canonical edge
/// order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Orientation {
    dims: GridDims,
    words: Vec<u64>,
}

fn word_count(bits: usize) -> usize {
    bits.div_ceil(64)
}

impl Orientation {
    pub fn all_zeros(dims: GridDims) -> Self {
        Self {
            dims,
            words: vec![0; word_count(dims.edge_count())],
        }
    }

    pub fn all_ones(dims: GridDims) -> Self {
        let mut o = Self::all_zeros(dims);
        for e in 0..dims.edge_count() {
            o.set(EdgeId(e), true);
        }
        o
    }

    pub fn from_fn(dims: GridDims, mut f: impl FnMut(GridEdge) -> bool) -> Self {
        let mut o = Self::all_zeros(dims);
        for edge in dims.edges() {
            o.set(edge.id, f(edge));
        }
        o
    }

    pub fn from_bits(dims: GridDims, bits: &[bool]) -> Result<Self, GridError> {
        let expected = dims.edge_count();
        if bits.len() != expected {
            return Err(GridError::BitLength { dims, expected, found: bits.len() });
        }
        Ok(Self::from_fn(dims, |e| bits[e.id.0]))
    }

    /// Parses an `E`-character string of `0`/`1` in canonical edge order.
    pub fn from_bit_str(dims: GridDims, s: &str) -> Result<Self, GridError> {
        let expected = dims.edge_count();
        let found = s.chars().count();
        if found != expected {
            return Err(GridError::BitLength { dims, expected, found });
        }
        let mut o = Self::all_zeros(dims);
        for (position, ch) in s.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => o.set(EdgeId(position), true),
                found => return Err(GridError::BitCharacter { position, found }),
            }
        }
        Ok(o)
    }

    /// Bit `i` of `code` is the bit of edge `i`.
    pub fn from_code(dims: GridDims, code: u64) -> Result<Self, GridError> {
        let edges = dims.edge_count();
        if edges > 64 {
            return Err(GridError::CodeTooWide { dims, edges });
        }
        let mask = if edges == 64 { u64::MAX } else { (1u64 << edges) - 1 };
        let mut o = Self::all_zeros(dims);
        if let Some(w) = o.words.first_mut() {
            *w = code & mask;
        }
        Ok(o)
    }

    /// Builds an orientation from `(tail, head)` arcs, requiring every grid
    /// edge exactly once.
    pub fn from_arcs(
        dims: GridDims,
        arcs: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Result<Self, GridError> {
        let mut seen = vec![false; dims.edge_count()];
        let mut o = Self::all_zeros(dims);
        for (tail, head) in arcs {
            let id = dims.edge_between(tail, head)?;
            if core::mem::replace(&mut seen[id.0], true) {
                return Err(GridError::DuplicateEdge { tail, head });
            }
            o.set(id, dims.edge(id).a == tail);
        }
        if let Some(i) = seen.iter().position(|s| !s) {
            let e = dims.edge(EdgeId(i));
            return Err(GridError::MissingEdge { a: e.a, b: e.b });
        }
        Ok(o)
    }

    pub fn dims(&self) -> GridDims {
        self.dims
    }

    pub fn edge_count(&self) -> usize {
        self.dims.edge_count()
    }

    pub fn bit(&self, id: EdgeId) -> bool {
        self.words[id.0 / 64] >> (id.0 % 64) & 1 == 1
    }

    pub fn set(&mut self, id: EdgeId, bit: bool) {
        let (w, s) = (id.0 / 64, id.0 % 64);
        if bit {
            self.words[w] |= 1 << s;
        } else {
            self.words[w] &= !(1 << s);
        }
    }

    pub fn flip(&mut self, id: EdgeId) {
        self.words[id.0 / 64] ^= 1 << (id.0 % 64);
    }

    /// The packed code for grids with at most 64 edges.
    pub fn code(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    pub fn bits(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.edge_count()).map(|i| self.bit(EdgeId(i)))
    }

    pub fn bit_string(&self) -> alloc::string::String {
        self.bits().map(|b| if b { '1' } else { '0' }).collect()
    }

    /// `(tail, head)` of every edge in canonical order.
    pub fn arcs(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.dims.edges().map(|e| e.arc(self.bit(e.id)))
    }

    /// Every arc turned around.
    pub fn reverse(&self) -> Self {
        let mut o = self.clone();
        for e in 0..self.edge_count() {
            o.flip(EdgeId(e));
        }
        o
    }

    /// Relabels the vertices by a grid automorphism.
    pub fn apply_automorphism(&self, g: Symmetry) -> Result<Self, GridError> {
        let dims = self.dims;
        if g.needs_square() && !dims.is_square() {
            return Err(GridError::InvalidSymmetry { dims, symmetry: g });
        }
        let mut out = Self::all_zeros(dims);
        for (tail, head) in self.arcs() {
            let (t, h) = (g.map_vertex(dims, tail), g.map_vertex(dims, head));
            let id = dims.edge_between(t, h)?;
            out.set(id, dims.edge(id).a == t);
        }
        Ok(out)
    }

    /// Lexicographic order of the bit vectors, edge 0 first.
    pub fn lex_cmp(&self, other: &Self) -> Ordering {
        self.words
            .iter()
            .map(|w| w.reverse_bits())
            .cmp(other.words.iter().map(|w| w.reverse_bits()))
    }

    pub fn materialize(&self) -> Digraph {
        let mut out = vec![Vec::new(); self.dims.vertex_count()];
        for (tail, head) in self.arcs() {
            out[tail.index_unchecked(self.dims.n)].push(head.index_unchecked(self.dims.n));
        }
        Digraph { out }
    }
}

impl PartialOrd for Orientation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Orientation {
    fn cmp(&self, other: &Self) -> Ordering {
        self.dims.cmp(&other.dims).then_with(|| self.lex_cmp(other))
    }
}

/// A digraph on vertices `0..q` given by out-neighbour lists. Grid vertex
/// `(r, c)` of `G_{m,n}` has index `(r - 1) * n + (c - 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    out: Vec<Vec<usize>>,
}

impl Digraph {
    pub fn from_arcs(
        vertex_count: usize,
        arcs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GridError> {
        let mut out = vec![Vec::new(); vertex_count];
        for (tail, head) in arcs {
            if tail >= vertex_count || head >= vertex_count {
                return Err(GridError::ArcOutOfRange { tail, head, vertex_count });
            }
            out[tail].push(head);
        }
        Ok(Self { out })
    }

    /// `0 -> 1 -> ... -> q-1`.
    pub fn directed_path(q: usize) -> Self {
        Self {
            out: (0..q).map(|v| if v + 1 < q { vec![v + 1] } else { Vec::new() }).collect(),
        }
    }

    /// `0 -> 1 -> ... -> q-1 -> 0`.
    pub fn directed_cycle(q: usize) -> Self {
        Self {
            out: (0..q).map(|v| if q > 1 { vec![(v + 1) % q] } else { Vec::new() }).collect(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.out.len()
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn has_arc(&self, tail: usize, head: usize) -> bool {
        self.out.get(tail).is_some_and(|o| o.contains(&head))
    }

    pub fn reversed(&self) -> Self {
        let mut out = vec![Vec::new(); self.out.len()];
        for (tail, heads) in self.out.iter().enumerate() {
            for &h in heads {
                out[h].push(tail);
            }
        }
        Self { out }
    }
}

/// Automorphisms of the grid graph. The last four exist only on square grids.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symmetry {
    Identity,
    /// Column `c` goes to `n + 1 - c`.
    MirrorColumns,
    /// Row `r` goes to `m + 1 - r`.
    MirrorRows,
    Rotate180,
    Transpose,
    AntiTranspose,
    /// Quarter turn clockwise.
    Rotate90,
    Rotate270,
}

impl Symmetry {
    pub const ALL: [Symmetry; 8] = [
        Symmetry::Identity,
        Symmetry::MirrorColumns,
        Symmetry::MirrorRows,
        Symmetry::Rotate180,
        Symmetry::Transpose,
        Symmetry::AntiTranspose,
        Symmetry::Rotate90,
        Symmetry::Rotate270,
    ];

    /// The automorphism group of `G_{m,n}` as used for orbit reduction: order
    /// 4, or 8 when `m == n`.
    pub fn group(dims: GridDims) -> &'static [Symmetry] {
        if dims.is_square() { &Self::ALL } else { &Self::ALL[..4] }
    }

    pub fn needs_square(self) -> bool {
        matches!(
            self,
            Symmetry::Transpose | Symmetry::AntiTranspose | Symmetry::Rotate90 | Symmetry::Rotate270
        )
    }

    pub fn inverse(self) -> Self {
        match self {
            Symmetry::Rotate90 => Symmetry::Rotate270,
            Symmetry::Rotate270 => Symmetry::Rotate90,
            g => g,
        }
    }

    /// Image of `v`; the caller guarantees square dims for transposing maps.
    pub fn map_vertex(self, dims: GridDims, v: Vertex) -> Vertex {
        let (m, n) = (dims.m, dims.n);
        let (r, c) = (v.row, v.col);
        let (r2, c2) = match self {
            Symmetry::Identity => (r, c),
            Symmetry::MirrorColumns => (r, n + 1 - c),
            Symmetry::MirrorRows => (m + 1 - r, c),
            Symmetry::Rotate180 => (m + 1 - r, n + 1 - c),
            Symmetry::Transpose => (c, r),
            Symmetry::AntiTranspose => (n + 1 - c, m + 1 - r),
            Symmetry::Rotate90 => (c, m + 1 - r),
            Symmetry::Rotate270 => (n + 1 - c, r),
        };
        Vertex::new(r2, c2)
    }
}

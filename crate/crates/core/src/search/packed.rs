use alloc::vec::Vec;

use crate::error::GridError;
use crate::grid::{GridDims, Symmetry};

/// Wiener evaluation of `u64`-coded orientations with bitset BFS. Needs at
/// most 64 vertices and 64 edges.
#[derive(Debug, Clone)]
pub struct PackedGrid {
    q: usize,
    /// `(a, b)` vertex indices; bit 1 is the arc `a -> b`.
    ends: Vec<(u8, u8)>,
}

impl PackedGrid {
    pub fn new(dims: GridDims) -> Result<Self, GridError> {
        let edges = dims.edge_count();
        if edges > 64 || dims.vertex_count() > 64 {
            return Err(GridError::CodeTooWide { dims, edges });
        }
        let n = dims.n();
        let idx = |v: crate::Vertex| ((v.row - 1) * n + v.col - 1) as u8;
        let ends = dims.edges().map(|e| (idx(e.a), idx(e.b))).collect();
        Ok(Self { q: dims.vertex_count(), ends })
    }

    fn out_masks(&self, code: u64) -> [u64; 64] {
        let mut out = [0u64; 64];
        for (i, &(a, b)) in self.ends.iter().enumerate() {
            if code >> i & 1 == 1 {
                out[a as usize] |= 1 << b;
            } else {
                out[b as usize] |= 1 << a;
            }
        }
        out
    }

    /// Wiener index and whether every source reaches every vertex.
    pub fn evaluate(&self, code: u64) -> (u64, bool) {
        let out = self.out_masks(code);
        let all = if self.q == 64 { u64::MAX } else { (1u64 << self.q) - 1 };
        let mut total = 0u64;
        let mut strong = true;
        for s in 0..self.q {
            let mut seen = 1u64 << s;
            let mut frontier = seen;
            let mut depth = 0u64;
            loop {
                depth += 1;
                let mut next = 0u64;
                let mut f = frontier;
                while f != 0 {
                    next |= out[f.trailing_zeros() as usize];
                    f &= f - 1;
                }
                next &= !seen;
                if next == 0 {
                    break;
                }
                total += depth * u64::from(next.count_ones());
                seen |= next;
                frontier = next;
            }
            strong &= seen == all;
        }
        (total, strong)
    }

    pub fn wiener(&self, code: u64) -> u64 {
        self.evaluate(code).0
    }
}

/// One grid automorphism acting on codes: permute edge bits, then flip the
/// edges whose reference endpoint changed sides.
#[derive(Debug, Clone)]
struct CodeTransform {
    /// `tables[k][byte]` is the image of `byte` placed at bits `8k..8k+8`.
    tables: Vec<[u64; 256]>,
    flip: u64,
}

impl CodeTransform {
    fn new(dims: GridDims, g: Symmetry) -> Self {
        let edges = dims.edge_count();
        let mut target = Vec::with_capacity(edges);
        let mut flip = 0u64;
        for e in dims.edges() {
            let (ga, gb) = (g.map_vertex(dims, e.a), g.map_vertex(dims, e.b));
            let id = dims.edge_between(ga, gb).expect("automorphisms map edges to edges");
            if dims.edge(id).a != ga {
                flip |= 1 << id.0;
            }
            target.push(id.0);
        }
        let tables = target
            .chunks(8)
            .map(|chunk| {
                let mut t = [0u64; 256];
                for (byte, slot) in t.iter_mut().enumerate() {
                    *slot = chunk
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| byte >> i & 1 == 1)
                        .fold(0, |acc, (_, &to)| acc | 1 << to);
                }
                t
            })
            .collect();
        Self { tables, flip }
    }

    #[inline]
    fn apply(&self, code: u64) -> u64 {
        let mut out = 0;
        for (k, t) in self.tables.iter().enumerate() {
            out |= t[(code >> (8 * k)) as usize & 0xff];
        }
        out ^ self.flip
    }
}

/// Orbit computations on codes under the automorphism group times reversal.
#[derive(Debug, Clone)]
pub struct OrbitTables {
    transforms: Vec<CodeTransform>,
    full: u64,
}

/// Key whose numeric order is the lexicographic order of the bit vector,
/// edge 0 first.
#[inline]
pub(crate) fn lex_key(code: u64) -> u64 {
    code.reverse_bits()
}

impl OrbitTables {
    pub fn new(dims: GridDims) -> Result<Self, GridError> {
        let edges = dims.edge_count();
        if edges > 64 {
            return Err(GridError::CodeTooWide { dims, edges });
        }
        let transforms = Symmetry::group(dims)
            .iter()
            .filter(|g| **g != Symmetry::Identity)
            .map(|&g| CodeTransform::new(dims, g))
            .collect();
        let full = if edges == 64 { u64::MAX } else { (1u64 << edges) - 1 };
        Ok(Self { transforms, full })
    }

    /// True iff `code` is the lexicographic minimum of its orbit.
    #[inline]
    pub fn is_canonical(&self, code: u64) -> bool {
        let key = lex_key(code);
        if lex_key(code ^ self.full) < key {
            return false;
        }
        self.transforms.iter().all(|t| {
            let img = t.apply(code);
            lex_key(img) >= key && lex_key(img ^ self.full) >= key
        })
    }

    pub fn canonical(&self, code: u64) -> u64 {
        self.orbit(code).min_by_key(|&c| lex_key(c)).unwrap_or(code)
    }

    /// Images of `code` (with repetitions), including `code` itself.
    pub fn orbit(&self, code: u64) -> impl Iterator<Item = u64> + '_ {
        let full = self.full;
        core::iter::once(code)
            .chain(self.transforms.iter().map(move |t| t.apply(code)))
            .flat_map(move |c| [c, c ^ full])
    }

    pub fn reverse(&self, code: u64) -> u64 {
        code ^ self.full
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::Orientation;
    use crate::metrics::wiener_index;
    use crate::search::canonical_representative;

    #[test]
    fn packed_matches_bfs() {
        let dims = GridDims::new(3, 4).unwrap();
        let p = PackedGrid::new(dims).unwrap();
        for code in (0..1u64 << 17).step_by(997) {
            let o = Orientation::from_code(dims, code).unwrap();
            let g = o.materialize();
            let (w, strong) = p.evaluate(code);
            assert_eq!(u128::from(w), wiener_index(&g).0);
            assert_eq!(strong, crate::metrics::is_strongly_connected(&g));
        }
    }

    #[test]
    fn transforms_match_orientation_automorphisms() {
        for (m, n) in [(3, 4), (3, 3), (2, 5), (1, 6)] {
            let dims = GridDims::new(m, n).unwrap();
            let group = Symmetry::group(dims);
            let transforms: Vec<_> = group.iter().map(|&g| CodeTransform::new(dims, g)).collect();
            let full = (1u64 << dims.edge_count()) - 1;
            for code in (0..=full).step_by(131) {
                let o = Orientation::from_code(dims, code).unwrap();
                for (&g, t) in group.iter().zip(&transforms) {
                    let via_o = o.apply_automorphism(g).unwrap().code().unwrap();
                    assert_eq!(t.apply(code), via_o, "{dims} {g:?} {code:b}");
                }
            }
        }
    }

    #[test]
    fn canonical_codes_agree_with_general_canonicalization() {
        let dims = GridDims::new(3, 3).unwrap();
        let tables = OrbitTables::new(dims).unwrap();
        for code in (0..1u64 << 12).step_by(7) {
            let o = Orientation::from_code(dims, code).unwrap();
            let c = tables.canonical(code);
            assert_eq!(canonical_representative(&o).code(), Some(c));
            assert_eq!(tables.is_canonical(code), c == code);
        }
    }
}

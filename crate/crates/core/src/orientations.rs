//! The named orientations of `G_{m,n}`.

use alloc::vec::Vec;

use crate::error::OrientationError;
use crate::grid::{EdgeKind, GridDims, Orientation, Vertex};

fn at_least_2x2(construction: &'static str, dims: GridDims) -> Result<(), OrientationError> {
    if dims.m() < 2 || dims.n() < 2 {
        return Err(OrientationError::TooSmall { construction, m: dims.m(), n: dims.n() });
    }
    Ok(())
}

/// Arcs of the zig-zag Hamiltonian cycle of the comb orientation.
fn comb_cycle(m: usize, n: usize) -> Vec<(Vertex, Vertex)> {
    let v = Vertex::new;
    let mut arcs = Vec::with_capacity(m * n);
    // top row rightward, last column downward
    arcs.extend((1..n).map(|c| (v(1, c), v(1, c + 1))));
    arcs.extend((1..m).map(|r| (v(r, n), v(r + 1, n))));
    arcs.push((v(m, n), v(m, n - 1)));
    // teeth: odd columns n-1, n-3, ..., 3 go up to row 2, even columns
    // n-2, ..., 2 come back down to row m
    let mut c = n - 1;
    while c >= 2 {
        if (n - 1 - c).is_multiple_of(2) {
            arcs.extend((3..=m).rev().map(|r| (v(r, c), v(r - 1, c))));
            arcs.push((v(2, c), v(2, c - 1)));
        } else {
            arcs.extend((2..m).map(|r| (v(r, c), v(r + 1, c))));
            arcs.push((v(m, c), v(m, c - 1)));
        }
        c -= 1;
    }
    // first column upward closes the cycle at (1, 1)
    arcs.extend((1..m).map(|r| (v(r + 1, 1), v(r, 1))));
    arcs
}

/// The comb orientation `C_{m,n}`: a zig-zag directed Hamiltonian cycle
/// through the top row and the columns, with every remaining vertical edge
/// pointing up into row 1 and every remaining horizontal edge pointing right.
pub fn comb_orientation(dims: GridDims) -> Result<Orientation, OrientationError> {
    let (m, n) = (dims.m(), dims.n());
    if n % 2 == 1 {
        return Err(OrientationError::CombOddColumns { n });
    }
    at_least_2x2("comb", dims)?;
    let mut assigned = Orientation::all_zeros(dims);
    let mut covered = Orientation::all_zeros(dims);
    for (tail, head) in comb_cycle(m, n) {
        let id = dims.edge_between(tail, head)?;
        covered.set(id, true);
        assigned.set(id, dims.edge(id).a == tail);
    }
    for edge in dims.edges() {
        if !covered.bit(edge.id) {
            // chords: rightward, or upward (bit 0)
            assigned.set(edge.id, edge.kind == EdgeKind::Horizontal);
        }
    }
    Ok(assigned)
}

/// `D_{m,n}`: columns `1..n-1` upward, column `n` downward, row 1 rightward
/// and rows `2..m` leftward.
pub fn conjectured_orientation(dims: GridDims) -> Result<Orientation, OrientationError> {
    at_least_2x2("conjectured", dims)?;
    Ok(Orientation::from_fn(dims, |e| match e.kind {
        EdgeKind::Horizontal => e.a.row == 1,
        EdgeKind::Vertical => e.a.col == dims.n(),
    }))
}

/// The optimal ladder orientation, `D_{2,n}`.
pub fn ladder_orientation(n: usize) -> Result<Orientation, OrientationError> {
    let dims = GridDims::new(2, n)?;
    conjectured_orientation(dims)
}

/// Position of `v` on the row-major boustrophedon Hamiltonian path.
fn snake_position(dims: GridDims, v: Vertex) -> usize {
    let n = dims.n();
    let offset = if v.row % 2 == 1 { v.col - 1 } else { n - v.col };
    (v.row - 1) * n + offset
}

/// `D_H` for the boustrophedon path `H`: path edges point forward along `H`,
/// every other edge points from the later to the earlier path vertex.
pub fn snake_hampath_orientation(dims: GridDims) -> Orientation {
    Orientation::from_fn(dims, |e| {
        let (pa, pb) = (snake_position(dims, e.a), snake_position(dims, e.b));
        let on_path = pa.abs_diff(pb) == 1;
        // bit 1 means a -> b
        if on_path { pa < pb } else { pa > pb }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metrics::{is_strongly_connected, wiener_index};
    use crate::WienerValue;

    fn dims(m: usize, n: usize) -> GridDims {
        GridDims::new(m, n).unwrap()
    }

    fn has_arc(o: &Orientation, t: (usize, usize), h: (usize, usize)) -> bool {
        let (t, h) = (Vertex::new(t.0, t.1), Vertex::new(h.0, h.1));
        o.arcs().any(|a| a == (t, h))
    }

    #[test]
    fn comb_cycle_is_hamiltonian() {
        for m in 2..7 {
            for n in (2..10).step_by(2) {
                let arcs = comb_cycle(m, n);
                assert_eq!(arcs.len(), m * n);
                let mut next = alloc::collections::BTreeMap::new();
                for (t, h) in &arcs {
                    assert!(next.insert(*t, *h).is_none());
                }
                let mut v = Vertex::new(1, 1);
                for _ in 0..m * n {
                    v = next[&v];
                }
                assert_eq!(v, Vertex::new(1, 1));
            }
        }
    }

    #[test]
    fn comb_spot_checks() {
        let c = comb_orientation(dims(5, 8)).unwrap();
        assert!(has_arc(&c, (5, 1), (4, 1)));
        assert!(has_arc(&c, (2, 2), (1, 2)));
        assert!(has_arc(&c, (2, 7), (2, 6)));
        assert!(has_arc(&c, (1, 8), (2, 8)));
        assert!(has_arc(&c, (5, 8), (5, 7)));
        assert!(has_arc(&c, (4, 1), (4, 2)));
        assert!(has_arc(&c, (5, 2), (5, 3)));
    }

    #[test]
    fn comb_rejects_odd_columns() {
        assert_eq!(
            comb_orientation(dims(3, 5)),
            Err(OrientationError::CombOddColumns { n: 5 })
        );
        assert!(comb_orientation(dims(1, 4)).is_err());
    }

    #[test]
    fn comb_paper_values() {
        let w = |m, n| wiener_index(&comb_orientation(dims(m, n)).unwrap().materialize());
        assert_eq!(w(3, 4), WienerValue(538));
        assert_eq!(w(3, 6), WienerValue(1740));
        assert!(is_strongly_connected(&comb_orientation(dims(4, 6)).unwrap().materialize()));
    }

    #[test]
    fn conjectured_spot_checks() {
        let d = conjectured_orientation(dims(5, 8)).unwrap();
        assert!(has_arc(&d, (4, 8), (5, 8)));
        assert!(has_arc(&d, (3, 5), (3, 4)));
        assert!(has_arc(&d, (1, 4), (1, 5)));
        assert!(has_arc(&d, (5, 3), (4, 3)));
        assert!(conjectured_orientation(dims(1, 5)).is_err());
    }

    #[test]
    fn conjectured_paper_values() {
        let w = |m, n| wiener_index(&conjectured_orientation(dims(m, n)).unwrap().materialize());
        assert_eq!(w(3, 4), WienerValue(516));
        assert_eq!(w(3, 5), WienerValue(968));
        assert_eq!(w(3, 6), WienerValue(1626));
    }

    #[test]
    fn ladder_values() {
        let w = |n| wiener_index(&ladder_orientation(n).unwrap().materialize());
        assert_eq!(w(2), WienerValue(24));
        assert_eq!(w(6), WienerValue(604));
    }

    #[test]
    fn snake_small_cases() {
        let p = snake_hampath_orientation(dims(1, 5));
        assert_eq!(p, Orientation::all_ones(dims(1, 5)));
        assert_eq!(wiener_index(&p.materialize()), WienerValue(20));
        let c4 = snake_hampath_orientation(dims(2, 2));
        assert_eq!(wiener_index(&c4.materialize()), WienerValue(24));
        assert!(is_strongly_connected(&c4.materialize()));
        assert!(wiener_index(&snake_hampath_orientation(dims(3, 4)).materialize()) >= WienerValue(286));
    }
}

//! Orientation files (JSON) and Graphviz export.
//!
//! Two JSON forms are accepted:
//!
//! ```json
//! {"m": 2, "n": 2, "arcs": [[[1, 1], [1, 2]], [[2, 2], [2, 1]], ...]}
//! {"m": 2, "n": 2, "bits": "1001"}
//! ```
//!
//! Arcs go from tail to head in 1-based `(row, col)` coordinates. The bit
//! string lists one bit per edge in canonical order (horizontals, then
//! verticals, both row-major); `1` is rightward or downward.

use std::fmt::Write as _;

use digrid_core::{GridDims, GridError, Orientation, Vertex};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed orientation document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("arc #{index} [{tail:?} -> {head:?}] has a coordinate outside the {m}x{n} grid")]
    Coordinate {
        index: usize,
        tail: [i64; 2],
        head: [i64; 2],
        m: usize,
        n: usize,
    },
    #[error(transparent)]
    Grid(#[from] GridError),
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum OrientationDoc {
    Arcs { m: usize, n: usize, arcs: Vec<[[i64; 2]; 2]> },
    Bits { m: usize, n: usize, bits: String },
}

fn to_vertex(p: [i64; 2], dims: GridDims) -> Option<Vertex> {
    let (r, c) = (usize::try_from(p[0]).ok()?, usize::try_from(p[1]).ok()?);
    let v = Vertex::new(r, c);
    dims.contains(v).then_some(v)
}

pub fn parse_orientation(document: &str) -> Result<Orientation, FormatError> {
    match serde_json::from_str::<OrientationDoc>(document)? {
        OrientationDoc::Bits { m, n, bits } => Ok(Orientation::from_bit_str(GridDims::new(m, n)?, &bits)?),
        OrientationDoc::Arcs { m, n, arcs } => {
            let dims = GridDims::new(m, n)?;
            let vertices = arcs
                .iter()
                .enumerate()
                .map(|(index, &[tail, head])| match (to_vertex(tail, dims), to_vertex(head, dims)) {
                    (Some(t), Some(h)) => Ok((t, h)),
                    _ => Err(FormatError::Coordinate { index, tail, head, m, n }),
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Orientation::from_arcs(dims, vertices)?)
        }
    }
}

fn point(v: Vertex) -> [i64; 2] {
    [v.row as i64, v.col as i64]
}

/// Arc-list form, arcs in canonical edge order.
pub fn serialize_orientation(o: &Orientation) -> String {
    let doc = OrientationDoc::Arcs {
        m: o.dims().m(),
        n: o.dims().n(),
        arcs: o.arcs().map(|(t, h)| [point(t), point(h)]).collect(),
    };
    serde_json::to_string(&doc).expect("orientation documents always serialize")
}

pub fn serialize_orientation_bits(o: &Orientation) -> String {
    let doc = OrientationDoc::Bits { m: o.dims().m(), n: o.dims().n(), bits: o.bit_string() };
    serde_json::to_string(&doc).expect("orientation documents always serialize")
}

fn node_id(v: Vertex) -> String {
    format!("{}_{}", v.row, v.col)
}

/// Graphviz digraph with node ids `r_c`, pinned so that row 1 is drawn on
/// top (render with `neato -n` or `fdp`).
pub fn to_dot(o: &Orientation) -> String {
    let dims = o.dims();
    let mut s = String::new();
    let _ = writeln!(s, "digraph \"G_{}x{}\" {{", dims.m(), dims.n());
    let _ = writeln!(s, "  node [shape=circle, width=0.3, fixedsize=true];");
    for v in dims.vertices() {
        let _ = writeln!(
            s,
            "  \"{}\" [pos=\"{},{}!\"];",
            node_id(v),
            v.col - 1,
            dims.m() - v.row
        );
    }
    for (t, h) in o.arcs() {
        let _ = writeln!(s, "  \"{}\" -> \"{}\";", node_id(t), node_id(h));
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dims(m: usize, n: usize) -> GridDims {
        GridDims::new(m, n).unwrap()
    }

    #[test]
    fn parses_both_forms() {
        let a = parse_orientation(r#"{"m":1,"n":3,"arcs":[[[1,2],[1,1]],[[1,2],[1,3]]]}"#).unwrap();
        let b = parse_orientation(r#"{"m":1,"n":3,"bits":"01"}"#).unwrap();
        assert_eq!(a, b);
        assert_eq!(serialize_orientation_bits(&a), r#"{"m":1,"n":3,"bits":"01"}"#);
        assert_eq!(parse_orientation(&serialize_orientation(&a)).unwrap(), a);
    }

    #[test]
    fn validation_errors_name_the_edge() {
        let dup = r#"{"m":1,"n":3,"arcs":[[[1,1],[1,2]],[[1,2],[1,1]],[[1,2],[1,3]]]}"#;
        assert!(matches!(parse_orientation(dup), Err(FormatError::Grid(GridError::DuplicateEdge { .. }))));
        let missing = r#"{"m":1,"n":3,"arcs":[[[1,1],[1,2]]]}"#;
        let err = parse_orientation(missing).unwrap_err();
        assert!(err.to_string().contains("(1, 2)-(1, 3)"), "{err}");
        let diagonal = r#"{"m":2,"n":2,"arcs":[[[1,1],[2,2]]]}"#;
        assert!(matches!(parse_orientation(diagonal), Err(FormatError::Grid(GridError::NotAdjacent { .. }))));
        let outside = r#"{"m":2,"n":2,"arcs":[[[1,1],[1,2]],[[0,1],[1,1]]]}"#;
        assert!(matches!(parse_orientation(outside), Err(FormatError::Coordinate { index: 1, .. })));
        assert!(matches!(parse_orientation(r#"{"m":1,"n":3,"bits":"0"}"#), Err(FormatError::Grid(_))));
        assert!(matches!(parse_orientation("{"), Err(FormatError::Json(_))));
    }

    #[test]
    fn dot_has_one_line_per_arc() {
        let o = Orientation::all_ones(dims(2, 3));
        let dot = to_dot(&o);
        assert_eq!(dot.lines().filter(|l| l.contains("->")).count(), 7);
        assert!(dot.contains("\"1_1\" -> \"1_2\";"));
        assert!(dot.contains("\"1_1\" [pos=\"0,1!\"]"));
    }
}

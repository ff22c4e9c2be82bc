//! The drawn orientations, transcribed arc by arc, against the constructors.

use digrid::format::parse_orientation;
use digrid_core::orientations::{comb_orientation, conjectured_orientation, ladder_orientation};
use digrid_core::{EdgeKind, GridDims, Orientation, wiener_index};

fn fixture(name: &str) -> Orientation {
    let path = format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    parse_orientation(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn comb_5x8() {
    let drawn = fixture("fig_comb_5x8.json");
    assert_eq!(drawn, comb_orientation(GridDims::new(5, 8).unwrap()).unwrap());
    assert_eq!(wiener_index(&drawn.materialize()).get(), 15800);
}

#[test]
fn conjectured_5x8() {
    let drawn = fixture("fig_conjectured_5x8.json");
    assert_eq!(drawn, conjectured_orientation(GridDims::new(5, 8).unwrap()).unwrap());
}

/// The ladder drawing has every rung pointing the other way from the
/// orientation it names (and as drawn it has a source and a sink), so the
/// comparison is made after flipping the rungs.
#[test]
fn ladder_2x6_up_to_rung_direction() {
    let drawn = fixture("fig_ladder_2x6.json");
    assert_eq!(wiener_index(&drawn.materialize()).get(), 136);
    let mut rungs_flipped = drawn.clone();
    for e in drawn.dims().edges().filter(|e| e.kind == EdgeKind::Vertical) {
        rungs_flipped.flip(e.id);
    }
    assert_eq!(rungs_flipped, ladder_orientation(6).unwrap());
    assert_eq!(wiener_index(&rungs_flipped.materialize()).get(), 604);
}

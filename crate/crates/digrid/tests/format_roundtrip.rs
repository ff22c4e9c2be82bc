use digrid::format::{parse_orientation, serialize_orientation, serialize_orientation_bits, to_dot};
use digrid_core::{GridDims, Orientation};
use proptest::prelude::*;

fn orientation() -> impl Strategy<Value = Orientation> {
    (1usize..=6, 1usize..=6).prop_flat_map(|(m, n)| {
        let dims = GridDims::new(m, n).unwrap();
        proptest::collection::vec(any::<bool>(), dims.edge_count())
            .prop_map(move |bits| Orientation::from_bits(dims, &bits).unwrap())
    })
}

proptest! {
    #[test]
    fn arcs_round_trip(o in orientation()) {
        prop_assert_eq!(parse_orientation(&serialize_orientation(&o)).unwrap(), o);
    }

    #[test]
    fn bits_round_trip(o in orientation()) {
        prop_assert_eq!(parse_orientation(&serialize_orientation_bits(&o)).unwrap(), o);
    }

    #[test]
    fn dot_lists_every_arc(o in orientation()) {
        let dot = to_dot(&o);
        prop_assert_eq!(dot.matches(" -> ").count(), o.edge_count());
        for (t, h) in o.arcs() {
            let line = format!("\"{}_{}\" -> \"{}_{}\";", t.row, t.col, h.row, h.col);
            prop_assert!(dot.contains(&line));
        }
    }
}

#[test]
fn rejects_bad_documents() {
    assert!(parse_orientation("{").is_err());
    assert!(parse_orientation(r#"{"m":1,"n":2,"arcs":[[[1,1],[1,3]]]}"#).is_err());
    assert!(parse_orientation(r#"{"m":1,"n":2,"arcs":[[[1,1],[1,2]],[[1,2],[1,1]]]}"#).is_err());
    assert!(parse_orientation(r#"{"m":1,"n":3,"arcs":[[[1,1],[1,2]]]}"#).is_err());
    assert!(parse_orientation(r#"{"m":2,"n":2,"arcs":[[[1,1],[2,2]]]}"#).is_err());
    assert!(parse_orientation(r#"{"m":1,"n":3,"bits":"1"}"#).is_err());
    assert!(parse_orientation(r#"{"m":1,"n":3,"bits":"1x"}"#).is_err());
    assert!(parse_orientation(r#"{"m":0,"n":3,"bits":""}"#).is_err());
    assert!(parse_orientation(r#"{"m":1,"n":2,"arcs":[[[-1,1],[1,2]]]}"#).is_err());
}

use digrid_core::formulas::cycle_wiener;
use digrid_core::metrics::is_strongly_connected;
use digrid_core::search::canonical_representative;
use digrid_core::{GridDims, Orientation, Symmetry, wiener_index};
use proptest::prelude::*;

fn orientation() -> impl Strategy<Value = Orientation> {
    (1usize..=5, 1usize..=5).prop_flat_map(|(m, n)| {
        let dims = GridDims::new(m, n).unwrap();
        proptest::collection::vec(any::<bool>(), dims.edge_count())
            .prop_map(move |bits| Orientation::from_bits(dims, &bits).unwrap())
    })
}

proptest! {
    #[test]
    fn reversal_keeps_wiener(o in orientation()) {
        prop_assert_eq!(wiener_index(&o.materialize()), wiener_index(&o.reverse().materialize()));
        prop_assert_eq!(o.reverse().reverse(), o);
    }

    #[test]
    fn automorphisms_keep_wiener(o in orientation()) {
        let w = wiener_index(&o.materialize());
        for &g in Symmetry::group(o.dims()) {
            let image = o.apply_automorphism(g).unwrap();
            prop_assert_eq!(wiener_index(&image.materialize()), w);
            prop_assert_eq!(image.apply_automorphism(g.inverse()).unwrap(), o.clone());
        }
    }

    #[test]
    fn bounded_by_directed_cycle(o in orientation()) {
        let g = o.materialize();
        let w = wiener_index(&g);
        prop_assert!(w <= cycle_wiener(o.dims().vertex_count()));
        if is_strongly_connected(&g) {
            // every ordered pair is at distance at least one
            let q = o.dims().vertex_count() as u128;
            prop_assert!(w.get() >= q * (q - 1));
        }
    }

    #[test]
    fn canonical_form_is_stable(o in orientation()) {
        let c = canonical_representative(&o);
        prop_assert_eq!(canonical_representative(&c), c.clone());
        prop_assert_eq!(canonical_representative(&o.reverse()), c.clone());
        for &g in Symmetry::group(o.dims()) {
            prop_assert_eq!(canonical_representative(&o.apply_automorphism(g).unwrap()), c.clone());
        }
        prop_assert!(c.lex_cmp(&o).is_le());
    }

    #[test]
    fn bits_round_trip(o in orientation()) {
        prop_assert_eq!(Orientation::from_bit_str(o.dims(), &o.bit_string()).unwrap(), o.clone());
        if let Some(code) = o.code() {
            prop_assert_eq!(Orientation::from_code(o.dims(), code).unwrap(), o.clone());
        }
        let arcs: Vec<_> = o.arcs().collect();
        prop_assert_eq!(Orientation::from_arcs(o.dims(), arcs).unwrap(), o);
    }
}

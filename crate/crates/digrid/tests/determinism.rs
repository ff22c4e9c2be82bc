use digrid::driver::{exhaustive_search, local_search};
use digrid_core::search::{SearchOptions, exhaustive_max};
use digrid_core::GridDims;

#[test]
fn worker_count_does_not_change_exhaustive_reports() {
    for (m, n) in [(2, 4), (3, 3), (3, 4), (1, 7)] {
        let dims = GridDims::new(m, n).unwrap();
        for use_symmetry in [false, true] {
            let base = SearchOptions { use_symmetry, checkpoint_interval: 1 << 10, ..Default::default() };
            let single = exhaustive_search(dims, &base, None).unwrap();
            let four = exhaustive_search(dims, &SearchOptions { worker_count: 4, ..base.clone() }, None).unwrap();
            assert!(single.same_outcome(&four), "{dims} symmetry={use_symmetry}");
            assert!(single.same_outcome(&exhaustive_max(dims, &base).unwrap()));
        }
    }
}

#[test]
fn worker_count_does_not_change_local_search() {
    let dims = GridDims::new(3, 4).unwrap();
    let base = SearchOptions { seed: 17, restarts: 12, ..Default::default() };
    let single = local_search(dims, &base).unwrap();
    let four = local_search(dims, &SearchOptions { worker_count: 4, ..base.clone() }).unwrap();
    assert!(single.same_outcome(&four));
}

#[test]
fn local_search_finds_the_3x4_optimum() {
    let dims = GridDims::new(3, 4).unwrap();
    let opts = SearchOptions { seed: 1, restarts: 64, worker_count: 2, ..Default::default() };
    let report = local_search(dims, &opts).unwrap();
    assert_eq!(report.max_wiener.get(), 578);
    assert!(!report.proven_optimal);
}

use std::collections::BTreeMap;

use gtg_core::search::{run_search, search_all, Checkpoint, ScreenMode, SearchParams};

fn hit_lists(r: &gtg_core::SearchReport) -> Vec<Vec<usize>> {
    r.hits.iter().map(|h| h.blocks.lengths.clone()).collect()
}

#[test]
fn float_screen_keeps_every_hit_up_to_33() {
    let exact: BTreeMap<_, _> = search_all(33, &SearchParams::new(0, 0))
        .unwrap()
        .iter()
        .map(|r| ((r.c, r.e), hit_lists(r)))
        .collect();
    let float = search_all(33, &SearchParams::new(0, 0).screen(ScreenMode::Float)).unwrap();
    for r in &float {
        assert_eq!(
            hit_lists(r),
            exact[&(r.c, r.e)],
            "(c,e) = ({},{})",
            r.c,
            r.e
        );
    }
}

#[test]
fn interrupted_search_resumes_from_checkpoint() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cp.txt");
    let full = run_search(&SearchParams::new(2, 4)).unwrap();

    let mut p = SearchParams::new(2, 4).workers(2);
    p.checkpoint = Some(path.clone());
    p.checkpoint_every = 2000;
    p.stop_after = Some(10_000);
    let partial = run_search(&p).unwrap();
    assert!(!partial.complete);
    assert!(partial.counters.raw < full.counters.raw);
    assert!(partial.header().ends_with(" partial"));
    let saved = Checkpoint::load(&path).unwrap().unwrap();
    assert_eq!(saved.counters, partial.counters);

    p.stop_after = None;
    let resumed = run_search(&p).unwrap();
    assert!(resumed.complete);
    assert_eq!(resumed.counters, full.counters);
    assert_eq!(resumed.hits, full.hits);

    // a checkpoint for other parameters is refused
    let other = SearchParams {
        checkpoint: Some(path),
        ..SearchParams::new(1, 4)
    };
    assert!(run_search(&other).is_err());
}

mod common;

use num_bigint::BigUint;

use common::{quiver, three_cycle};
use mgs_core::engine::{SearchGraph, SearchOptions};
use mgs_core::typea::{cycle_count, minimal_mgs};
use mgs_core::{is_mgs, MutationSequence};

fn seqs(v: &[&[usize]]) -> Vec<MutationSequence> {
    v.iter().map(|s| MutationSequence::new(s.to_vec())).collect()
}

#[test]
fn a2_has_two_sequences() {
    let g = SearchGraph::build(&quiver(2, &[(1, 2)]), SearchOptions::default().labeled()).unwrap();
    assert_eq!(g.all_mgs(10).unwrap(), seqs(&[&[1, 2], &[2, 1, 2]]));
}

#[test]
fn three_cycle_sequences() {
    let g = SearchGraph::build(&three_cycle(), SearchOptions::default().labeled()).unwrap();
    let expected = seqs(&[
        &[1, 2, 3, 1],
        &[1, 3, 1, 2, 1],
        &[1, 3, 2, 1],
        &[2, 1, 2, 3, 2],
        &[2, 1, 3, 2],
        &[2, 3, 1, 2],
        &[3, 1, 2, 3],
        &[3, 2, 1, 3],
        &[3, 2, 3, 1, 3],
    ]);
    assert_eq!(g.all_mgs(100).unwrap(), expected);
}

#[test]
fn small_spectra() {
    let cases: [(_, &[usize], u64); 5] = [
        (quiver(3, &[(1, 2), (2, 3)]), &[3, 4, 5, 6], 9),
        (three_cycle(), &[4, 5], 9),
        (quiver(4, &[(1, 2), (3, 2), (3, 4)]), &[4, 5, 6, 7, 8, 9, 10], 179),
        (quiver(4, &[(1, 2), (2, 3), (3, 1), (3, 4)]), &[5, 6, 7, 8, 9], 101),
        (common::two_triangles(), &[7, 8, 9, 10, 11, 12, 13], 2242),
    ];
    for (q, spectrum, count) in cases {
        for opts in [SearchOptions::default(), SearchOptions::sequential().labeled()] {
            let g = SearchGraph::build(&q, opts).unwrap();
            assert_eq!(g.spectrum().unwrap(), spectrum);
            assert_eq!(g.count_mgs().unwrap(), BigUint::from(count));
        }
    }
}

#[test]
fn nine_vertex_chains() {
    let cases = [
        (common::chain_first(), 904_628_902_464_223u64),
        (common::chain_second(), 1_555_927_224_943_624u64),
    ];
    for (q, count) in cases {
        let g = SearchGraph::build(&q, SearchOptions::default()).unwrap();
        assert_eq!(g.node_count(), 16796);
        assert_eq!(g.spectrum().unwrap(), (13..=37).collect::<Vec<_>>());
        assert_eq!(g.count_mgs().unwrap(), BigUint::from(count));
        let s = g.shortest_mgs().unwrap();
        assert!(is_mgs(&q, &s));
        assert_eq!(minimal_mgs(&q).unwrap().len(), 13);
    }
}

#[test]
fn printed_sequences() {
    let q = common::six_triangles();
    assert_eq!(cycle_count(&q), 6);
    assert!(is_mgs(&q, &common::six_triangles_sequence()));
    assert_eq!(minimal_mgs(&q).unwrap().len(), 19);

    let q = common::twenty_five();
    assert_eq!(cycle_count(&q), 5);
    assert!(is_mgs(&q, &common::twenty_five_sequence()));
    let built = minimal_mgs(&q).unwrap();
    assert!(is_mgs(&q, &built));
    assert_eq!(built.len(), 30);
}

#[test]
fn eleven_vertex_acyclic() {
    let q = common::eleven_acyclic();
    let s = minimal_mgs(&q).unwrap();
    assert_eq!(s.steps(), &[1, 3, 8, 7, 6, 5, 9, 10, 2, 4, 11]);
    assert!(is_mgs(&q, &s));
}

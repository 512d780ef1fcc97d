mod common;

use common::*;
use splitcycles::search::{enumerate, SearchOptions};

#[test]
fn double_torus_fixture() {
    let map = double_k7();
    assert_eq!(map.vertex_count(), 11);
    assert_eq!(map.genus().unwrap(), 2);
    assert!(map.is_simplicial_triangulation());
    assert!(!map.is_complete_graph());
}

#[test]
fn double_torus_matches_oracle_up_to_length_8() {
    let map = double_k7();
    let mut splitting = 0;
    for root in 0..map.vertex_count() {
        let tally = compare_with_oracle(&map, root, 8);
        assert!(tally.mismatches.is_empty(), "root {root}: {:?}", &tally.mismatches[..tally.mismatches.len().min(5)]);
        assert!(tally.reduced > 0);
        splitting += tally.splitting;
    }
    // the glued triangle itself splits the two tori apart
    assert!(splitting > 0);
}

#[test]
fn k7_matches_oracle_and_has_no_splitting_cycle() {
    let map = k7();
    let tally = compare_with_oracle(&map, 0, 7);
    assert!(tally.mismatches.is_empty(), "{:?}", tally.mismatches);
    assert_eq!(tally.splitting, 0);
    // links of vertices are the only separating reduced cycles through 0
    assert!(tally.separating > 0);
}

#[test]
fn embedding_b_closures_match_oracle_up_to_length_10() {
    let map = embedding("B");
    let (verdicts, bad) = closures_against_oracle(&map, 0, 10);
    assert!(bad.is_empty(), "{:?}", &bad[..bad.len().min(5)]);
    assert!(verdicts > 0);
    let options = SearchOptions { max_length: Some(10), ..SearchOptions::default() };
    let table = enumerate(&map, 0, &options).unwrap();
    assert_eq!(table.closed, verdicts);
    assert_eq!(table.row(1).unwrap().min_length, Some(10));
    assert!(table.rows[1..].iter().all(|r| r.directed == 0));
}

#[test]
fn parallel_enumeration_matches_sequential() {
    let map = embedding("C");
    let seq = SearchOptions { max_length: Some(11), ..SearchOptions::default() };
    let par = SearchOptions { workers: 3, ..seq.clone() };
    assert_eq!(enumerate(&map, 0, &seq).unwrap(), enumerate(&map, 0, &par).unwrap());
    let map = double_k7();
    let seq = SearchOptions { max_length: Some(8), ..SearchOptions::default() };
    let par = SearchOptions { workers: 2, ..seq.clone() };
    assert_eq!(enumerate(&map, 4, &seq).unwrap(), enumerate(&map, 4, &par).unwrap());
}

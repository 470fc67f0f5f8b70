mod common;

use intmetric::enumeration::{brute_force_count, count_cr, count_metric, enumerate_cr, enumerate_metric, SearchConfig};
use intmetric::structure::{cr_membership, nearest_cr_distance};
use intmetric::weights::{enumerate_metric_rgraphs, check_weight_bound};
use intmetric::MetricColoring;
use num_bigint::BigUint;

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

#[test]
fn metric_counts_match_brute_force() {
    for (r, n) in [(3u8, 2usize), (3, 3), (3, 4), (4, 3), (4, 4), (5, 3), (5, 4)] {
        let brute = common::brute_metric(r, n);
        assert_eq!(count_metric(r as u32, n).unwrap(), big(brute.len() as u64), "r={r} n={n}");
        let streamed: Vec<Vec<u8>> = enumerate_metric(r as u32, n).unwrap().map(|g| g.dist().to_vec()).collect();
        assert_eq!(streamed, brute, "r={r} n={n}");
    }
}

#[test]
fn pinned_metric_counts() {
    // cross-checked against an independent backtracking count
    let pinned = [
        (3, 3, 24),
        (3, 4, 482),
        (3, 5, 23352),
        (3, 6, 2653828),
        (4, 3, 52),
        (4, 4, 2030),
        (4, 5, 228502),
        (5, 3, 95),
        (5, 4, 6321),
        (5, 5, 1424307),
    ];
    for (r, n, m) in pinned {
        assert_eq!(count_metric(r, n).unwrap(), big(m), "r={r} n={n}");
    }
    assert_eq!(brute_force_count(4, 4).unwrap(), 2030);
}

#[test]
fn cr_counts_match_partition_search() {
    for (r, n) in [(3u8, 3usize), (3, 4), (3, 5), (4, 3), (4, 4), (5, 3), (5, 4)] {
        let brute: Vec<Vec<u8>> = common::brute_metric(r, n)
            .into_iter()
            .filter(|d| common::in_cr_by_definition(r, n, d))
            .collect();
        assert_eq!(count_cr(r as u32, n).unwrap(), big(brute.len() as u64), "r={r} n={n}");
        let listed: Vec<Vec<u8>> = enumerate_cr(r as u32, n).unwrap().iter().map(|g| g.dist().to_vec()).collect();
        assert_eq!(listed, brute, "r={r} n={n}");
    }
    assert_eq!(count_cr(3, 4).unwrap(), big(470));
    assert_eq!(count_cr(3, 5).unwrap(), big(21432));
    assert_eq!(count_cr(5, 4).unwrap(), big(3387));
}

#[test]
fn membership_agrees_with_definition() {
    for (r, n) in [(3u8, 3usize), (3, 4), (5, 3), (5, 4), (4, 3), (4, 4)] {
        for d in common::brute_metric(r, n) {
            let g = MetricColoring::from_parts(r as u32, n, d.clone()).unwrap();
            let cert = cr_membership(&g);
            assert_eq!(cert.member, common::in_cr_by_definition(r, n, &d), "{g:?}");
            assert!(cert.verify(&g), "{g:?}");
        }
    }
}

#[test]
fn even_cr_is_contained_in_metric() {
    for d in common::all_vectors(3, 1, 4) {
        let g = MetricColoring::from_parts(4, 3, d.clone()).unwrap();
        if cr_membership(&g).member {
            assert!(g.is_metric(), "{g:?}");
        }
    }
}

#[test]
fn nearest_distance_zero_iff_member() {
    for (r, n) in [(3u32, 4usize), (4, 4), (5, 4)] {
        for g in enumerate_metric(r, n).unwrap() {
            let near = nearest_cr_distance(&g).unwrap();
            assert_eq!(near.distance == 0, cr_membership(&g).member, "{g:?}");
            assert!(cr_membership(&near.witness).member);
            let diff = g.dist().iter().zip(near.witness.dist()).filter(|(a, b)| a != b).count();
            assert_eq!(diff, near.distance);
        }
    }
}

#[test]
fn rgraph_counts() {
    assert_eq!(enumerate_metric_rgraphs(3, 2).unwrap().count(), 8);
    // all 512 assignments of subsets of [3] to the three pairs, filtered by the definition
    assert_eq!(enumerate_metric_rgraphs(3, 3).unwrap().count(), 360);
    let v = check_weight_bound(3, 3).unwrap();
    assert!(v.holds());
    assert_eq!(v.checked, 360);
}

#[test]
fn serial_search_matches_default() {
    for (r, n) in [(3u32, 5usize), (4, 4), (5, 4)] {
        let serial = intmetric::enumeration::count_metric_with(r, n, &SearchConfig::serial()).unwrap();
        assert_eq!(serial, count_metric(r, n).unwrap());
    }
}

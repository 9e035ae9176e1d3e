//! Enumeration censuses on carriers of up to three (for monoids, four)
//! elements, cross-checked against independent raw scans wherever a scan is
//! feasible.

use rand::prelude::IndexedRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use semiheaps_core::{
    biunit_pairs, classify, is_associative, is_semiheap, is_switch, BinaryTable, Endomap,
    TernaryTable,
};
use semiheaps_search::{
    canonical_form, enumerate_monoids, enumerate_semigroups, enumerate_semiheaps,
    enumerate_semiheaps_where, enumerate_switch_monoids, permutations, relabel, ternar_isomorphic,
    SemiheapFilter,
};

fn all_ternary_tables(n: usize) -> Vec<TernaryTable> {
    let cells = n * n * n;
    let mut entries = vec![0; cells];
    let mut out = Vec::new();
    loop {
        out.push(TernaryTable::new(n, entries.clone()).unwrap());
        let mut i = cells;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            entries[i] += 1;
            if entries[i] < n {
                break;
            }
            entries[i] = 0;
        }
    }
}

fn all_binary_tables(n: usize) -> Vec<BinaryTable> {
    let cells = n * n;
    let mut entries = vec![0; cells];
    let mut out = Vec::new();
    loop {
        out.push(BinaryTable::new(n, entries.clone()).unwrap());
        let mut i = cells;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            entries[i] += 1;
            if entries[i] < n {
                break;
            }
            entries[i] = 0;
        }
    }
}

/// Partitions tables into isomorphism classes by pairwise backtracking
/// search — a decision procedure independent of canonical forms.
fn pairwise_class_count(tables: &[TernaryTable]) -> usize {
    let mut representatives: Vec<&TernaryTable> = Vec::new();
    for t in tables {
        if !representatives
            .iter()
            .any(|r| ternar_isomorphic(r, t).is_some())
        {
            representatives.push(t);
        }
    }
    representatives.len()
}

#[test]
fn semiheap_counts_up_to_three_elements() {
    assert_eq!(enumerate_semiheaps(1, false).unwrap().len(), 1);

    let scanned: Vec<TernaryTable> = all_ternary_tables(2)
        .into_iter()
        .filter(is_semiheap)
        .collect();
    assert_eq!(scanned.len(), 8);
    assert_eq!(enumerate_semiheaps(2, false).unwrap(), scanned);

    let three = enumerate_semiheaps(3, false).unwrap();
    assert_eq!(three.len(), 135);
    assert!(three.iter().all(is_semiheap));
    assert!(three.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn semiheap_isomorphism_class_counts() {
    assert_eq!(enumerate_semiheaps(1, true).unwrap().len(), 1);

    let two = enumerate_semiheaps(2, true).unwrap();
    assert_eq!(two.len(), 6);
    assert_eq!(
        pairwise_class_count(&enumerate_semiheaps(2, false).unwrap()),
        6
    );

    let three = enumerate_semiheaps(3, true).unwrap();
    assert_eq!(three.len(), 31);
    assert_eq!(
        pairwise_class_count(&enumerate_semiheaps(3, false).unwrap()),
        31
    );
    for t in &three {
        assert_eq!(canonical_form(t).table(), t);
    }
}

#[test]
fn filtered_semiheap_counts() {
    let heap_counts: Vec<usize> = (1..=3)
        .map(|n| {
            enumerate_semiheaps_where(n, SemiheapFilter::Heap, false)
                .unwrap()
                .len()
        })
        .collect();
    assert_eq!(heap_counts, vec![1, 1, 1]);

    let diheap_counts: Vec<usize> = (1..=3)
        .map(|n| {
            enumerate_semiheaps_where(n, SemiheapFilter::Diheap, false)
                .unwrap()
                .len()
        })
        .collect();
    assert_eq!(diheap_counts, vec![1, 2, 4]);

    let paired_counts: Vec<usize> = (1..=3)
        .map(|n| {
            enumerate_semiheaps_where(n, SemiheapFilter::HasFullPair, false)
                .unwrap()
                .len()
        })
        .collect();
    assert_eq!(paired_counts, vec![1, 4, 28]);

    let paired_classes = enumerate_semiheaps_where(3, SemiheapFilter::HasFullPair, true).unwrap();
    assert_eq!(paired_classes.len(), 7);

    for t in enumerate_semiheaps_where(3, SemiheapFilter::Heap, false).unwrap() {
        assert!(classify(&t).heap);
    }
    for t in enumerate_semiheaps_where(3, SemiheapFilter::Diheap, false).unwrap() {
        assert!(classify(&t).diheap);
    }
    for t in enumerate_semiheaps_where(3, SemiheapFilter::HasFullPair, false).unwrap() {
        assert!(!biunit_pairs(&t).full_pairs().is_empty());
    }
}

#[test]
fn canonical_form_is_invariant_under_seeded_relabelings() {
    let seed = 0xC0FFEE;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for n in 1..=3 {
        let perms = permutations(n);
        for t in enumerate_semiheaps(n, false).unwrap() {
            let canon = canonical_form(&t).into_table();
            for _ in 0..100 {
                let map = perms.choose(&mut rng).unwrap();
                let relabeled = relabel(&t, map).unwrap();
                assert_eq!(
                    canonical_form(&relabeled).into_table(),
                    canon,
                    "canonical form must not depend on labeling (seed {seed}, n {n})"
                );
            }
        }
    }
}

#[test]
fn semigroup_counts_match_the_raw_scan() {
    for (n, expected) in [(1, 1), (2, 8), (3, 113)] {
        let scanned: Vec<BinaryTable> = all_binary_tables(n)
            .into_iter()
            .filter(is_associative)
            .collect();
        assert_eq!(scanned.len(), expected);
        assert_eq!(enumerate_semigroups(n).unwrap(), scanned);
    }
}

#[test]
fn monoid_counts_match_the_raw_scan() {
    for (n, expected) in [(1, 1), (2, 4), (3, 33)] {
        let mut scanned: Vec<BinaryTable> = all_binary_tables(n)
            .into_iter()
            .filter(|s| is_associative(s) && s.identity().is_some())
            .collect();
        scanned.sort();
        let mut enumerated = enumerate_monoids(n).unwrap();
        assert_eq!(enumerated.len(), expected);
        enumerated.sort();
        assert_eq!(enumerated, scanned);
    }
    assert_eq!(enumerate_monoids(4).unwrap().len(), 624);
}

#[test]
fn bijective_switch_monoid_counts_match_the_raw_scan() {
    for (n, expected) in [(1, 1), (2, 6), (3, 42)] {
        let mut scanned = 0usize;
        for s in all_binary_tables(n) {
            if !is_associative(&s) || s.identity().is_none() {
                continue;
            }
            for phi in permutations(n) {
                if is_switch(&s, &phi).unwrap() {
                    scanned += 1;
                }
            }
        }
        assert_eq!(scanned, expected);

        let bijective = enumerate_switch_monoids(n)
            .unwrap()
            .into_iter()
            .filter(|p| p.switch().is_bijective())
            .count();
        assert_eq!(bijective, expected);
    }
}

#[test]
fn relabeling_sends_monoid_identities_along() {
    let z3 = BinaryTable::from_fn(3, |a, b| (a + b) % 3).unwrap();
    let map = Endomap::new(3, vec![1, 2, 0]).unwrap();
    let relabeled = semiheaps_search::relabel_binary(&z3, &map).unwrap();
    assert_eq!(relabeled.identity(), Some(map.apply(0)));
    assert!(is_associative(&relabeled));
}

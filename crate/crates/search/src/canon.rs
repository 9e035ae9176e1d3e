//! Relabelings, canonical forms, and isomorphism testing for ternary and
//! binary tables.

use semiheaps_core::{biunit_pairs, AlgebraError, BinaryTable, Endomap, TernaryTable};

use crate::maps::permutations;

/// The isomorphic copy of `t` that renames every element x to map(x):
/// new[map(a), map(b), map(c)] = map(t[a, b, c]).
pub fn relabel(t: &TernaryTable, map: &Endomap) -> Result<TernaryTable, AlgebraError> {
    if map.n() != t.n() {
        return Err(AlgebraError::CarrierMismatch {
            left: t.n(),
            right: map.n(),
        });
    }
    let inv = map.inverse().ok_or(AlgebraError::NotBijective)?;
    TernaryTable::from_fn(t.n(), |a, b, c| {
        map.apply(t.get(inv.apply(a), inv.apply(b), inv.apply(c)))
    })
}

/// `relabel` for binary tables: new[map(a), map(b)] = map(t[a, b]).
pub fn relabel_binary(t: &BinaryTable, map: &Endomap) -> Result<BinaryTable, AlgebraError> {
    if map.n() != t.n() {
        return Err(AlgebraError::CarrierMismatch {
            left: t.n(),
            right: map.n(),
        });
    }
    let inv = map.inverse().ok_or(AlgebraError::NotBijective)?;
    BinaryTable::from_fn(t.n(), |a, b| map.apply(t.op(inv.apply(a), inv.apply(b))))
}

/// The lexicographically least relabeling of a table, together with a
/// permutation that reaches it. Isomorphic tables share their canonical
/// table, and canonicalizing is idempotent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalForm {
    table: TernaryTable,
    relabeling: Endomap,
}

impl CanonicalForm {
    pub fn table(&self) -> &TernaryTable {
        &self.table
    }

    pub fn relabeling(&self) -> &Endomap {
        &self.relabeling
    }

    pub fn into_table(self) -> TernaryTable {
        self.table
    }
}

pub fn canonical_form(t: &TernaryTable) -> CanonicalForm {
    let mut best: Option<(TernaryTable, Endomap)> = None;
    for perm in permutations(t.n()) {
        let image = relabel(t, &perm).expect("permutations relabel cleanly");
        if best.as_ref().is_none_or(|(b, _)| image < *b) {
            best = Some((image, perm));
        }
    }
    let (table, relabeling) = best.expect("carrier is nonempty");
    CanonicalForm { table, relabeling }
}

/// Canonical form of a binary table under relabeling.
pub fn canonical_binary_form(t: &BinaryTable) -> (BinaryTable, Endomap) {
    let mut best: Option<(BinaryTable, Endomap)> = None;
    for perm in permutations(t.n()) {
        let image = relabel_binary(t, &perm).expect("permutations relabel cleanly");
        if best.as_ref().is_none_or(|(b, _)| image < *b) {
            best = Some((image, perm));
        }
    }
    best.expect("carrier is nonempty")
}

/// Per-element relabeling invariants: any isomorphism must match these
/// between source and image, so they prune the backtracking search.
fn element_profile(
    t: &TernaryTable,
    report: &semiheaps_core::BiunitPairReport,
    x: usize,
) -> [usize; 8] {
    let n = t.n();
    let count = |pairs: &[(usize, usize)], pick: fn(&(usize, usize)) -> usize| {
        pairs.iter().filter(|p| pick(p) == x).count()
    };
    let mut frequency = 0;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if t.get(a, b, c) == x {
                    frequency += 1;
                }
            }
        }
    }
    [
        count(report.left_pairs(), |p| p.0),
        count(report.left_pairs(), |p| p.1),
        count(report.right_pairs(), |p| p.0),
        count(report.right_pairs(), |p| p.1),
        count(report.full_pairs(), |p| p.0),
        frequency,
        usize::from(t.get(x, x, x) == x),
        (0..n).filter(|&y| t.get(x, y, x) == y).count(),
    ]
}

fn extend(
    t1: &TernaryTable,
    t2: &TernaryTable,
    image: &mut Vec<usize>,
    used: &mut Vec<bool>,
    candidates: &[Vec<usize>],
) -> bool {
    let n = t1.n();
    let x = image.len();
    if x == n {
        return true;
    }
    'next: for &y in &candidates[x] {
        if used[y] {
            continue;
        }
        image.push(y);
        used[y] = true;
        // check every triple whose arguments and value are all assigned
        for a in 0..=x {
            for b in 0..=x {
                for c in 0..=x {
                    let v = t1.get(a, b, c);
                    if v <= x && image[v] != t2.get(image[a], image[b], image[c]) {
                        image.pop();
                        used[y] = false;
                        continue 'next;
                    }
                }
            }
        }
        if extend(t1, t2, image, used, candidates) {
            return true;
        }
        image.pop();
        used[y] = false;
    }
    false
}

/// A bijection φ with φ([a,b,c]) = [φa, φb, φc], or None when no such map
/// exists. Searches by backtracking, pruning with biunit-pair fingerprints
/// and per-element invariants.
pub fn ternar_isomorphic(t1: &TernaryTable, t2: &TernaryTable) -> Option<Endomap> {
    if t1.n() != t2.n() {
        return None;
    }
    let n = t1.n();
    let report1 = biunit_pairs(t1);
    let report2 = biunit_pairs(t2);
    if report1.fingerprint() != report2.fingerprint() {
        return None;
    }
    let profiles2: Vec<_> = (0..n).map(|y| element_profile(t2, &report2, y)).collect();
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|x| {
            let profile = element_profile(t1, &report1, x);
            (0..n).filter(|&y| profiles2[y] == profile).collect()
        })
        .collect();
    if candidates.iter().any(Vec::is_empty) {
        return None;
    }

    let mut image = Vec::with_capacity(n);
    let mut used = vec![false; n];
    if extend(t1, t2, &mut image, &mut used, &candidates) {
        let map = Endomap::new(n, image).expect("search images lie in the carrier");
        debug_assert!(relabel(t1, &map).as_ref() == Ok(t2));
        Some(map)
    } else {
        None
    }
}

//! Backtracking enumeration of finite semigroups, monoids, and monoids
//! paired with each of their switches.

use semiheaps_core::{is_switch, AlgebraError, BinaryTable, SwitchMonoid};

use crate::maps::endomaps;

/// Largest carrier for exhaustive semigroup enumeration (n² free cells).
pub const MAX_SEMIGROUP_SIZE: usize = 3;

/// Largest carrier for exhaustive monoid enumeration ((n−1)² free cells).
pub const MAX_MONOID_SIZE: usize = 4;

const UNSET: usize = usize::MAX;

/// True when no fully evaluable instance of (ab)c = a(bc) is violated.
/// Unknown cells silence a constraint rather than failing it, so a partial
/// table is refuted only by a genuine conflict; every constraint becomes
/// evaluable once the table is full.
fn associativity_consistent(cells: &[usize], n: usize) -> bool {
    for a in 0..n {
        for b in 0..n {
            let ab = cells[a * n + b];
            if ab == UNSET {
                continue;
            }
            for c in 0..n {
                let bc = cells[b * n + c];
                if bc == UNSET {
                    continue;
                }
                let left = cells[ab * n + c];
                let right = cells[a * n + bc];
                if left != UNSET && right != UNSET && left != right {
                    return false;
                }
            }
        }
    }
    true
}

fn fill(cells: &mut [usize], free: &[usize], at: usize, n: usize, out: &mut Vec<BinaryTable>) {
    if at == free.len() {
        let table = BinaryTable::new(n, cells.to_vec()).expect("filled cells form a table");
        out.push(table);
        return;
    }
    let idx = free[at];
    for value in 0..n {
        cells[idx] = value;
        if associativity_consistent(cells, n) {
            fill(cells, free, at + 1, n, out);
        }
    }
    cells[idx] = UNSET;
}

fn check_size(n: usize, limit: usize) -> Result<(), AlgebraError> {
    if n == 0 {
        Err(AlgebraError::EmptyCarrier)
    } else if n > limit {
        Err(AlgebraError::CarrierTooLarge { n, limit })
    } else {
        Ok(())
    }
}

/// Every associative binary table on n elements, ascending in lexicographic
/// entry order.
pub fn enumerate_semigroups(n: usize) -> Result<Vec<BinaryTable>, AlgebraError> {
    check_size(n, MAX_SEMIGROUP_SIZE)?;
    let mut cells = vec![UNSET; n * n];
    let free: Vec<usize> = (0..n * n).collect();
    let mut out = Vec::new();
    fill(&mut cells, &free, 0, n, &mut out);
    Ok(out)
}

/// Every monoid table on n elements, ordered by identity element and then
/// lexicographically. The identity's row and column are forced up front, so
/// only the remaining (n−1)² cells are searched.
pub fn enumerate_monoids(n: usize) -> Result<Vec<BinaryTable>, AlgebraError> {
    check_size(n, MAX_MONOID_SIZE)?;
    let mut out = Vec::new();
    let mut per_identity = Vec::with_capacity(n);
    for e in 0..n {
        let mut cells = vec![UNSET; n * n];
        for x in 0..n {
            cells[e * n + x] = x;
            cells[x * n + e] = x;
        }
        let free: Vec<usize> = (0..n * n).filter(|&i| cells[i] == UNSET).collect();
        let before = out.len();
        fill(&mut cells, &free, 0, n, &mut out);
        per_identity.push(out.len() - before);
        debug_assert!(out[before..].iter().all(|m| m.identity() == Some(e)));
    }
    // Relabeling that swaps two elements carries monoids with one identity
    // bijectively onto monoids with the other.
    assert!(
        per_identity.windows(2).all(|w| w[0] == w[1]),
        "identity classes must all have the same size"
    );
    Ok(out)
}

/// Every (monoid, switch) pair on n elements: the monoids in enumeration
/// order, each paired with its switches in lexicographic endomap order.
/// Bijective switches are recovered with `SwitchMonoid::switch` and
/// `Endomap::is_bijective`.
pub fn enumerate_switch_monoids(n: usize) -> Result<Vec<SwitchMonoid>, AlgebraError> {
    check_size(n, MAX_MONOID_SIZE)?;
    let mut out = Vec::new();
    for monoid in enumerate_monoids(n)? {
        for phi in endomaps(n) {
            if is_switch(&monoid, &phi)? {
                let pair = SwitchMonoid::new(monoid.clone(), phi)
                    .expect("a checked switch on a monoid is admissible");
                out.push(pair);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use semiheaps_core::{is_associative, Endomap};

    fn raw_semigroups(n: usize) -> Vec<BinaryTable> {
        let mut tables = Vec::new();
        let mut entries = vec![0; n * n];
        loop {
            let t = BinaryTable::new(n, entries.clone()).unwrap();
            if is_associative(&t) {
                tables.push(t);
            }
            let mut i = n * n;
            loop {
                if i == 0 {
                    return tables;
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

    #[test]
    fn semigroup_enumeration_matches_the_raw_scan_on_two_elements() {
        let scanned = raw_semigroups(2);
        assert_eq!(enumerate_semigroups(2), Ok(scanned));
    }

    #[test]
    fn singleton_counts() {
        assert_eq!(enumerate_semigroups(1).unwrap().len(), 1);
        assert_eq!(enumerate_monoids(1).unwrap().len(), 1);
        assert_eq!(enumerate_switch_monoids(1).unwrap().len(), 1);
    }

    #[test]
    fn two_element_monoids_are_the_monoidal_semigroups() {
        let monoids = enumerate_monoids(2).unwrap();
        assert_eq!(monoids.len(), 4);
        let from_semigroups: Vec<_> = raw_semigroups(2)
            .into_iter()
            .filter(|s| s.identity().is_some())
            .collect();
        let mut sorted = monoids.clone();
        sorted.sort();
        assert_eq!(sorted, from_semigroups);
        assert!(monoids.iter().all(is_associative));
    }

    #[test]
    fn switch_monoids_on_two_elements() {
        let pairs = enumerate_switch_monoids(2).unwrap();
        let bijective: Vec<_> = pairs.iter().filter(|p| p.switch().is_bijective()).collect();
        assert_eq!(bijective.len(), 6);
        // Boolean "and" with identity 1 admits only the identity switch
        // among bijections: the flip is not even a semigroup map here.
        let and = BinaryTable::from_fn(2, |a, b| a & b).unwrap();
        let with_and: Vec<_> = bijective
            .iter()
            .filter(|p| *p.monoid() == and)
            .map(|p| p.switch().clone())
            .collect();
        assert_eq!(with_and, vec![Endomap::identity(2)]);
    }

    #[test]
    fn size_guards() {
        assert_eq!(enumerate_semigroups(0), Err(AlgebraError::EmptyCarrier));
        assert_eq!(
            enumerate_semigroups(4),
            Err(AlgebraError::CarrierTooLarge { n: 4, limit: 3 })
        );
        assert_eq!(
            enumerate_monoids(5),
            Err(AlgebraError::CarrierTooLarge { n: 5, limit: 4 })
        );
    }
}

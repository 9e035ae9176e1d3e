//! Backtracking enumeration of all semiheaps on a small carrier.
//!
//! Tables are filled cell by cell in row-major order. After every tentative
//! assignment the whole para-associativity constraint set is rescanned
//! lazily: a quintuple refutes the partial table as soon as two of its three
//! bracketings are fully determined and disagree. Restricting the rescan to
//! quintuples that touch the new cell is not sound — an assignment can
//! complete a bracketing whose cells were all filled earlier — so the scan
//! is always global.

use std::collections::BTreeSet;

use rayon::prelude::*;
use semiheaps_core::{biunit_pairs, classify, is_abelian, AlgebraError, TernaryTable};

use crate::canon::canonical_form;

/// Largest carrier the exhaustive semiheap enumerator accepts.
pub const MAX_ENUMERATION_SIZE: usize = 3;

const UNSET: usize = usize::MAX;

#[inline]
fn read(cells: &[usize], n: usize, a: usize, b: usize, c: usize) -> usize {
    cells[(a * n + b) * n + c]
}

fn consistent(cells: &[usize], n: usize) -> bool {
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let left_inner = read(cells, n, a, b, c);
                for d in 0..n {
                    let middle_inner = read(cells, n, d, c, b);
                    for e in 0..n {
                        // [[a,b,c],d,e] vs [a,[d,c,b],e] vs [a,b,[c,d,e]]
                        let first = if left_inner == UNSET {
                            UNSET
                        } else {
                            read(cells, n, left_inner, d, e)
                        };
                        let second = if middle_inner == UNSET {
                            UNSET
                        } else {
                            read(cells, n, a, middle_inner, e)
                        };
                        let right_inner = read(cells, n, c, d, e);
                        let third = if right_inner == UNSET {
                            UNSET
                        } else {
                            read(cells, n, a, b, right_inner)
                        };
                        if (first != UNSET && second != UNSET && first != second)
                            || (first != UNSET && third != UNSET && first != third)
                            || (second != UNSET && third != UNSET && second != third)
                        {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}

fn dfs<F: FnMut(&TernaryTable)>(cells: &mut Vec<usize>, n: usize, index: usize, visit: &mut F) {
    if index == n * n * n {
        let table = TernaryTable::new(n, cells.clone()).expect("filled cells form a table");
        visit(&table);
        return;
    }
    for value in 0..n {
        cells[index] = value;
        if consistent(cells, n) {
            dfs(cells, n, index + 1, visit);
        }
    }
    cells[index] = UNSET;
}

fn check_size(n: usize) -> Result<(), AlgebraError> {
    if n == 0 {
        Err(AlgebraError::EmptyCarrier)
    } else if n > MAX_ENUMERATION_SIZE {
        Err(AlgebraError::CarrierTooLarge {
            n,
            limit: MAX_ENUMERATION_SIZE,
        })
    } else {
        Ok(())
    }
}

/// Streams every semiheap on {0..n-1} to `visit`, in ascending
/// lexicographic table order, without materializing the collection.
pub fn for_each_semiheap<F: FnMut(&TernaryTable)>(
    n: usize,
    mut visit: F,
) -> Result<(), AlgebraError> {
    check_size(n)?;
    let mut cells = vec![UNSET; n * n * n];
    dfs(&mut cells, n, 0, &mut visit);
    Ok(())
}

/// Restrictions a consumer can ask of enumerated semiheaps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SemiheapFilter {
    All,
    Heap,
    Diheap,
    HasFullPair,
    Abelian,
}

impl SemiheapFilter {
    fn admits(self, t: &TernaryTable) -> bool {
        match self {
            Self::All => true,
            Self::Heap => classify(t).heap,
            Self::Diheap => classify(t).diheap,
            Self::HasFullPair => !biunit_pairs(t).full_pairs().is_empty(),
            Self::Abelian => is_abelian(t),
        }
    }
}

fn prefixes(n: usize) -> Vec<Vec<usize>> {
    let depth = n.min(n * n * n);
    let mut found = Vec::new();
    let mut cells = vec![UNSET; n * n * n];
    fn fill(
        cells: &mut Vec<usize>,
        n: usize,
        index: usize,
        depth: usize,
        found: &mut Vec<Vec<usize>>,
    ) {
        if index == depth {
            found.push(cells[..depth].to_vec());
            return;
        }
        for value in 0..n {
            cells[index] = value;
            if consistent(cells, n) {
                fill(cells, n, index + 1, depth, found);
            }
        }
        cells[index] = UNSET;
    }
    fill(&mut cells, n, 0, depth, &mut found);
    found
}

/// Collects the semiheaps passing `filter`, splitting the search tree over
/// its leading-cells prefixes across threads. Raw mode returns tables in
/// ascending lexicographic order; `up_to_iso` returns one canonical
/// representative per isomorphism class, again sorted.
pub fn enumerate_semiheaps_where(
    n: usize,
    filter: SemiheapFilter,
    up_to_iso: bool,
) -> Result<Vec<TernaryTable>, AlgebraError> {
    check_size(n)?;
    let survivors: Vec<TernaryTable> = prefixes(n)
        .into_par_iter()
        .map(|prefix| {
            let mut cells = vec![UNSET; n * n * n];
            cells[..prefix.len()].copy_from_slice(&prefix);
            let mut out = Vec::new();
            dfs(&mut cells, n, prefix.len(), &mut |t| {
                if filter.admits(t) {
                    out.push(t.clone());
                }
            });
            out
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    if !up_to_iso {
        return Ok(survivors);
    }
    let classes: BTreeSet<TernaryTable> = survivors
        .into_iter()
        .map(|t| canonical_form(&t).into_table())
        .collect();
    Ok(classes.into_iter().collect())
}

/// All semiheaps on {0..n-1}, optionally one per isomorphism class.
pub fn enumerate_semiheaps(n: usize, up_to_iso: bool) -> Result<Vec<TernaryTable>, AlgebraError> {
    enumerate_semiheaps_where(n, SemiheapFilter::All, up_to_iso)
}

//! Biunit pairs, biunit elements, and the classification they induce.
//!
//! A pair (a, b) is a left biunit pair when [a,b,x] = x for all x, a right
//! biunit pair when [x,a,b] = x for all x, and a (full) biunit pair when it
//! is both. An element e is a biunit when (e, e) is a full pair.

use crate::error::AlgebraError;
use crate::law::{is_abelian, is_semiheap, LawReport, Violation, WitnessSink};
use crate::table::{Endomap, TernaryTable};
use crate::twist::twist;

/// Counts of left, right, and full biunit pairs — an isomorphism invariant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BiunitFingerprint {
    pub left: usize,
    pub right: usize,
    pub full: usize,
}

/// Every ordered pair of a ternar, classified.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiunitPairReport {
    left_pairs: Vec<(usize, usize)>,
    right_pairs: Vec<(usize, usize)>,
    full_pairs: Vec<(usize, usize)>,
    biunit_elements: Vec<usize>,
}

impl BiunitPairReport {
    pub fn left_pairs(&self) -> &[(usize, usize)] {
        &self.left_pairs
    }

    pub fn right_pairs(&self) -> &[(usize, usize)] {
        &self.right_pairs
    }

    pub fn full_pairs(&self) -> &[(usize, usize)] {
        &self.full_pairs
    }

    pub fn biunit_elements(&self) -> &[usize] {
        &self.biunit_elements
    }

    pub fn is_left_pair(&self, a: usize, b: usize) -> bool {
        self.left_pairs.binary_search(&(a, b)).is_ok()
    }

    pub fn is_right_pair(&self, a: usize, b: usize) -> bool {
        self.right_pairs.binary_search(&(a, b)).is_ok()
    }

    pub fn is_full_pair(&self, a: usize, b: usize) -> bool {
        self.full_pairs.binary_search(&(a, b)).is_ok()
    }

    /// The unique partner completing a full pair with `a` in first position.
    pub fn partner_of(&self, a: usize) -> Option<usize> {
        self.full_pairs
            .iter()
            .find(|&&(x, _)| x == a)
            .map(|&(_, b)| b)
    }

    pub fn fingerprint(&self) -> BiunitFingerprint {
        BiunitFingerprint {
            left: self.left_pairs.len(),
            right: self.right_pairs.len(),
            full: self.full_pairs.len(),
        }
    }
}

/// Classifies every ordered pair of the ternar; pairs come out sorted.
pub fn biunit_pairs(t: &TernaryTable) -> BiunitPairReport {
    let n = t.n();
    let mut left_pairs = Vec::new();
    let mut right_pairs = Vec::new();
    let mut full_pairs = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let left = (0..n).all(|x| t.get(a, b, x) == x);
            let right = (0..n).all(|x| t.get(x, a, b) == x);
            if left {
                left_pairs.push((a, b));
            }
            if right {
                right_pairs.push((a, b));
            }
            if left && right {
                full_pairs.push((a, b));
            }
        }
    }
    let biunit_elements = full_pairs
        .iter()
        .filter(|&&(a, b)| a == b)
        .map(|&(a, _)| a)
        .collect();
    BiunitPairReport {
        left_pairs,
        right_pairs,
        full_pairs,
        biunit_elements,
    }
}

/// Structural flags of a ternar. The heap and diheap flags are only raised
/// on semiheaps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Classification {
    pub semiheap: bool,
    pub abelian: bool,
    pub heap: bool,
    pub diheap: bool,
}

/// Flags the table as semiheap/abelian/heap/diheap, with heap ⇒ diheap ⇒
/// semiheap enforced: a heap has every (a, a) as a full biunit pair, a
/// diheap has every element in first position of some full pair.
pub fn classify(t: &TernaryTable) -> Classification {
    let semiheap = is_semiheap(t);
    let abelian = is_abelian(t);
    let (heap, diheap) = if semiheap {
        let report = biunit_pairs(t);
        let heap = (0..t.n()).all(|a| report.is_full_pair(a, a));
        let diheap = heap || (0..t.n()).all(|a| report.partner_of(a).is_some());
        (heap, diheap)
    } else {
        (false, false)
    };
    Classification {
        semiheap,
        abelian,
        heap,
        diheap,
    }
}

/// For a diheap, the involution pairing each element with its unique biunit
/// partner. The result is validated to be an involution and a warp whose
/// twist is a heap.
pub fn partner_involution(t: &TernaryTable) -> Result<Endomap, AlgebraError> {
    if !is_semiheap(t) {
        return Err(AlgebraError::NotSemiheap);
    }
    let report = biunit_pairs(t);
    let image = (0..t.n())
        .map(|a| {
            report
                .partner_of(a)
                .ok_or(AlgebraError::NotDiheap { element: a })
        })
        .collect::<Result<Vec<_>, _>>()?;
    let psi = Endomap::new(t.n(), image)?;
    assert!(psi.is_involution(), "partner map must be an involution");
    assert!(
        crate::twist::is_warp(t, &psi).expect("carrier sizes match"),
        "partner map must be a warp"
    );
    let twisted = twist(t, &psi)?;
    assert!(
        classify(&twisted).heap,
        "twisting by the partner involution must yield a heap"
    );
    Ok(psi)
}

/// Checks closure of the given pairs under the componentwise bracket of the
/// product ternar, and closure of the set of first coordinates of full
/// pairs under the bracket itself.
///
/// Closure is guaranteed for pairs that are simultaneously left and right
/// biunit; a family of one-sided pairs can fail it, and any failures are
/// reported as violations rather than errors.
pub fn biunit_pair_product_closure(
    t: &TernaryTable,
    pairs: &[(usize, usize)],
    witness_limit: usize,
) -> LawReport {
    let report = biunit_pairs(t);
    let mut sink = WitnessSink::new(witness_limit);

    for &(a, b) in pairs {
        if !report.is_left_pair(a, b)
            && !report.is_right_pair(a, b)
            && !sink.record(Violation::new("pair-not-biunit", vec![a, b]))
        {
            return sink.finish();
        }
    }

    let lefts: Vec<_> = pairs
        .iter()
        .copied()
        .filter(|&(a, b)| report.is_left_pair(a, b))
        .collect();
    let rights: Vec<_> = pairs
        .iter()
        .copied()
        .filter(|&(a, b)| report.is_right_pair(a, b))
        .collect();

    type Member = fn(&BiunitPairReport, usize, usize) -> bool;
    type Family<'a> = (&'a [(usize, usize)], &'static str, Member);
    let families: [Family; 2] = [
        (&lefts, "left-pair-closure", BiunitPairReport::is_left_pair),
        (
            &rights,
            "right-pair-closure",
            BiunitPairReport::is_right_pair,
        ),
    ];
    for (family, law, member) in families {
        for &(a1, b1) in family {
            for &(a2, b2) in family {
                for &(a3, b3) in family {
                    let q = (t.get(a1, a2, a3), t.get(b1, b2, b3));
                    if !member(&report, q.0, q.1)
                        && !sink.record(Violation::new(law, vec![a1, b1, a2, b2, a3, b3, q.0, q.1]))
                    {
                        return sink.finish();
                    }
                }
            }
        }
    }

    let mut firsts: Vec<usize> = report.full_pairs().iter().map(|&(a, _)| a).collect();
    firsts.dedup();
    for &x in &firsts {
        for &y in &firsts {
            for &z in &firsts {
                let v = t.get(x, y, z);
                if !firsts.contains(&v)
                    && !sink.record(Violation::new(
                        "full-pair-carrier-closure",
                        vec![x, y, z, v],
                    ))
                {
                    return sink.finish();
                }
            }
        }
    }

    sink.finish()
}

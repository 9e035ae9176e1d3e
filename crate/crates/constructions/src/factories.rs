//! Ternary-algebra factories: each returns a validated table whose
//! advertised classification is asserted in debug builds.

use semiheaps_core::{
    check_group, classify, is_associative, is_semiheap, AlgebraError, BinaryTable, Endomap,
    TernaryTable,
};

fn group_error(report: &semiheaps_core::LawReport) -> Option<AlgebraError> {
    let v = report.violations().first()?;
    Some(match v.law {
        "associativity" => AlgebraError::NotAssociative {
            a: v.witness[0],
            b: v.witness[1],
            c: v.witness[2],
        },
        "identity" => AlgebraError::NoIdentity,
        _ => AlgebraError::NoInverse {
            element: v.witness[0],
        },
    })
}

/// The heap [a,b,c] = a·b⁻¹·c of a group.
pub fn group_heap(g: &BinaryTable) -> Result<TernaryTable, AlgebraError> {
    if let Some(err) = group_error(&check_group(g, 1)) {
        return Err(err);
    }
    let identity = g.identity().expect("validated group");
    let n = g.n();
    let inverse: Vec<usize> = (0..n)
        .map(|a| {
            (0..n)
                .find(|&b| g.op(a, b) == identity && g.op(b, a) == identity)
                .expect("validated group")
        })
        .collect();
    let t = TernaryTable::from_fn(n, |a, b, c| g.op(g.op(a, inverse[b]), c))?;
    debug_assert!(classify(&t).heap);
    Ok(t)
}

/// The semiheap [a,b,c] = a·b*·c of a semigroup with an antihomomorphic
/// involution.
pub fn involuted_semigroup_semiheap(
    s: &BinaryTable,
    star: &Endomap,
) -> Result<TernaryTable, AlgebraError> {
    if s.n() != star.n() {
        return Err(AlgebraError::CarrierMismatch {
            left: s.n(),
            right: star.n(),
        });
    }
    let assoc = semiheaps_core::check_associative(s, 1);
    if let Some(v) = assoc.violations().first() {
        return Err(AlgebraError::NotAssociative {
            a: v.witness[0],
            b: v.witness[1],
            c: v.witness[2],
        });
    }
    for a in 0..s.n() {
        if star.apply(star.apply(a)) != a {
            return Err(AlgebraError::NotInvolution { element: a });
        }
    }
    for a in 0..s.n() {
        for b in 0..s.n() {
            if star.apply(s.op(a, b)) != s.op(star.apply(b), star.apply(a)) {
                return Err(AlgebraError::NotAntihomomorphism { a, b });
            }
        }
    }
    let t = TernaryTable::from_fn(s.n(), |a, b, c| s.op(s.op(a, star.apply(b)), c))?;
    debug_assert!(is_semiheap(&t));
    Ok(t)
}

/// The abelian diheap [a,b,c] = a+b+c on Z_n; a heap only for n ≤ 2.
pub fn cyclic_sum_diheap(n: usize) -> Result<TernaryTable, AlgebraError> {
    let t = TernaryTable::from_fn(n, |a, b, c| (a + b + c) % n)?;
    debug_assert!({
        let c = classify(&t);
        c.semiheap && c.abelian && c.diheap && c.heap == (n <= 2)
    });
    Ok(t)
}

/// The m odd residues mod 2m under a+b+c; element i stands for the residue
/// 2i+1. A diheap pairing each residue with its negation.
pub fn odd_residues(m: usize) -> Result<TernaryTable, AlgebraError> {
    if m == 0 {
        return Err(AlgebraError::EmptyCarrier);
    }
    let modulus = 2 * m;
    let t = TernaryTable::from_fn(m, |a, b, c| {
        let sum = ((2 * a + 1) + (2 * b + 1) + (2 * c + 1)) % modulus;
        (sum - 1) / 2
    })?;
    debug_assert!({
        let c = classify(&t);
        c.semiheap && c.abelian && c.diheap
    });
    Ok(t)
}

/// Residue represented by element i of `odd_residues(m)`.
pub fn odd_residue_value(i: usize) -> usize {
    2 * i + 1
}

/// The semigroup with constant product c on n elements. Maps fixing c are
/// switches for it; every endomap still induces the constant semiheap.
pub fn constant_semigroup(n: usize, c: usize) -> Result<BinaryTable, AlgebraError> {
    if n == 0 {
        return Err(AlgebraError::EmptyCarrier);
    }
    if c >= n {
        return Err(AlgebraError::ElementRange { value: c, n });
    }
    let s = BinaryTable::from_fn(n, |_, _| c)?;
    debug_assert!(is_associative(&s));
    Ok(s)
}

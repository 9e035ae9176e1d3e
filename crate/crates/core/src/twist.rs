//! Twists and warps: unary maps applied to the middle argument.

use crate::error::AlgebraError;
use crate::law::{is_semiheap, LawReport, Violation, WitnessSink};
use crate::table::{Endomap, TernaryTable};

/// The φ-twist [a,b,c]_φ = [a, φ(b), c]. No law is assumed of the result.
pub fn twist(t: &TernaryTable, phi: &Endomap) -> Result<TernaryTable, AlgebraError> {
    if phi.n() != t.n() {
        return Err(AlgebraError::CarrierMismatch {
            left: t.n(),
            right: phi.n(),
        });
    }
    TernaryTable::from_fn(t.n(), |a, b, c| t.get(a, phi.apply(b), c))
}

/// Whether twisting the semiheap `t` by `phi` yields a semiheap again.
pub fn is_twist(t: &TernaryTable, phi: &Endomap) -> Result<bool, AlgebraError> {
    if !is_semiheap(t) {
        return Err(AlgebraError::NotSemiheap);
    }
    Ok(is_semiheap(&twist(t, phi)?))
}

/// Checks the warp identity η([a,η(b),c]) = [η(a),b,η(c)] over all triples.
pub fn check_warp(
    t: &TernaryTable,
    eta: &Endomap,
    witness_limit: usize,
) -> Result<LawReport, AlgebraError> {
    if eta.n() != t.n() {
        return Err(AlgebraError::CarrierMismatch {
            left: t.n(),
            right: eta.n(),
        });
    }
    let n = t.n();
    let mut sink = WitnessSink::new(witness_limit);
    'scan: for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let lhs = eta.apply(t.get(a, eta.apply(b), c));
                let rhs = t.get(eta.apply(a), b, eta.apply(c));
                if lhs != rhs && !sink.record(Violation::new("warp", vec![a, b, c])) {
                    break 'scan;
                }
            }
        }
    }
    Ok(sink.finish())
}

/// Whether `eta` satisfies the warp identity on `t`.
pub fn is_warp(t: &TernaryTable, eta: &Endomap) -> Result<bool, AlgebraError> {
    Ok(check_warp(t, eta, 1)?.holds())
}

//! Switches on semigroups: maps φ with φ(a·φ(b)·c) = φ(c)·b·φ(a), and the
//! semiheaps they induce via [a,b,c] = a·φ(b)·c.

use crate::error::AlgebraError;
use crate::law::{check_associative, LawReport, Violation, WitnessSink};
use crate::table::{BinaryTable, Endomap, TernaryTable};

fn require_carrier(s: &BinaryTable, phi: &Endomap) -> Result<(), AlgebraError> {
    if s.n() != phi.n() {
        return Err(AlgebraError::CarrierMismatch {
            left: s.n(),
            right: phi.n(),
        });
    }
    Ok(())
}

fn require_associative(s: &BinaryTable) -> Result<(), AlgebraError> {
    let report = check_associative(s, 1);
    match report.violations().first() {
        None => Ok(()),
        Some(v) => Err(AlgebraError::NotAssociative {
            a: v.witness[0],
            b: v.witness[1],
            c: v.witness[2],
        }),
    }
}

fn switch_violation(s: &BinaryTable, phi: &Endomap, a: usize, b: usize, c: usize) -> bool {
    let lhs = phi.apply(s.op(s.op(a, phi.apply(b)), c));
    let rhs = s.op(s.op(phi.apply(c), b), phi.apply(a));
    lhs != rhs
}

/// Checks the switch identity over all triples of the semigroup `s`.
pub fn check_switch(
    s: &BinaryTable,
    phi: &Endomap,
    witness_limit: usize,
) -> Result<LawReport, AlgebraError> {
    require_carrier(s, phi)?;
    require_associative(s)?;
    let n = s.n();
    let mut sink = WitnessSink::new(witness_limit);
    'scan: for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if switch_violation(s, phi, a, b, c)
                    && !sink.record(Violation::new("switch", vec![a, b, c]))
                {
                    break 'scan;
                }
            }
        }
    }
    Ok(sink.finish())
}

/// Whether `phi` satisfies the switch identity on the semigroup `s`.
pub fn is_switch(s: &BinaryTable, phi: &Endomap) -> Result<bool, AlgebraError> {
    Ok(check_switch(s, phi, 1)?.holds())
}

/// The induced ternary operation [a,b,c] = a·φ(b)·c. Requires φ to be a
/// switch, which makes the result a semiheap.
pub fn semiheap_from_switch(s: &BinaryTable, phi: &Endomap) -> Result<TernaryTable, AlgebraError> {
    let report = check_switch(s, phi, 1)?;
    if let Some(v) = report.violations().first() {
        return Err(AlgebraError::NotSwitch {
            a: v.witness[0],
            b: v.witness[1],
            c: v.witness[2],
        });
    }
    let table = TernaryTable::from_fn(s.n(), |a, b, c| s.op(s.op(a, phi.apply(b)), c))?;
    debug_assert!(crate::law::is_semiheap(&table));
    Ok(table)
}

/// A monoid together with a validated switch for it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwitchMonoid {
    monoid: BinaryTable,
    switch: Endomap,
    identity: usize,
}

impl SwitchMonoid {
    /// Validates associativity, the existence of an identity, and the
    /// switch law before wrapping.
    pub fn new(monoid: BinaryTable, switch: Endomap) -> Result<Self, AlgebraError> {
        require_carrier(&monoid, &switch)?;
        require_associative(&monoid)?;
        let identity = monoid.identity().ok_or(AlgebraError::NoIdentity)?;
        let report = check_switch(&monoid, &switch, 1)?;
        if let Some(v) = report.violations().first() {
            return Err(AlgebraError::NotSwitch {
                a: v.witness[0],
                b: v.witness[1],
                c: v.witness[2],
            });
        }
        Ok(Self {
            monoid,
            switch,
            identity,
        })
    }

    pub fn monoid(&self) -> &BinaryTable {
        &self.monoid
    }

    pub fn switch(&self) -> &Endomap {
        &self.switch
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn n(&self) -> usize {
        self.monoid.n()
    }
}

fn power(s: &BinaryTable, identity: usize, base: usize, exponent: usize) -> usize {
    let mut acc = identity;
    for _ in 0..exponent {
        acc = s.op(acc, base);
    }
    acc
}

/// Verifies the six structure statements about a switch monoid at the
/// element `u` with φ(u) = identity:
/// involution-iff-unit, unit-inverse, product-rule, shift-rule, power-rule,
/// and bijective.
pub fn check_switch_monoid_laws(
    m: &SwitchMonoid,
    u: usize,
    witness_limit: usize,
) -> Result<LawReport, AlgebraError> {
    let s = m.monoid();
    let phi = m.switch();
    let one = m.identity();
    let n = m.n();
    if u >= n {
        return Err(AlgebraError::ElementRange { value: u, n });
    }
    if phi.apply(u) != one {
        return Err(AlgebraError::NotUnitPreimage {
            u,
            got: phi.apply(u),
            identity: one,
        });
    }

    let mut sink = WitnessSink::new(witness_limit);

    // (1) φ is an involutive antihomomorphism exactly when u is the identity
    let involutive = (0..n).all(|a| phi.apply(phi.apply(a)) == a);
    let antihom =
        (0..n).all(|a| (0..n).all(|b| phi.apply(s.op(a, b)) == s.op(phi.apply(b), phi.apply(a))));
    if (involutive && antihom) != (u == one) {
        sink.record(Violation::new("involution-iff-unit", vec![u]));
    }

    // (2) u is invertible with inverse φ(1)
    let u_inv = phi.apply(one);
    let invertible = s.op(u, u_inv) == one && s.op(u_inv, u) == one;
    if !invertible && sink.is_open() {
        sink.record(Violation::new("unit-inverse", vec![u]));
    }

    // (3) φ(a·b) = φ(b)·u·φ(a) and φ(a)·φ(b) = φ(b·u⁻¹·a)
    'product: for a in 0..n {
        for b in 0..n {
            let first = phi.apply(s.op(a, b)) == s.op(s.op(phi.apply(b), u), phi.apply(a));
            let second = s.op(phi.apply(a), phi.apply(b)) == phi.apply(s.op(s.op(b, u_inv), a));
            if !(first && second) && !sink.record(Violation::new("product-rule", vec![a, b])) {
                break 'product;
            }
        }
    }

    // (4) the four u-shift identities, indexed 0–3 in the witness
    'shift: for a in 0..n {
        let rules = [
            s.op(phi.apply(a), u_inv) == phi.apply(s.op(u_inv, a)),
            s.op(u_inv, phi.apply(a)) == phi.apply(s.op(a, u_inv)),
            phi.apply(s.op(u, a)) == s.op(phi.apply(a), u),
            phi.apply(s.op(a, u)) == s.op(u, phi.apply(a)),
        ];
        for (i, ok) in rules.into_iter().enumerate() {
            if !ok && !sink.record(Violation::new("shift-rule", vec![i, a])) {
                break 'shift;
            }
        }
    }

    // (5) φ(uⁿ) = uⁿ⁻¹ for n in [−N, N], N the order of u; witnesses are
    // (uⁿ, expected, got)
    if invertible {
        let order = (1..)
            .find(|&k| power(s, one, u, k) == one)
            .expect("powers of a unit cycle back to the identity");
        'power: for exp in -(order as i64)..=(order as i64) {
            let (base, magnitude) = if exp >= 0 {
                (u, exp as usize)
            } else {
                (u_inv, (-exp) as usize)
            };
            let u_n = power(s, one, base, magnitude);
            let (pred_base, pred_magnitude) = if exp >= 1 {
                (u, (exp - 1) as usize)
            } else {
                (u_inv, (1 - exp) as usize)
            };
            let expected = power(s, one, pred_base, pred_magnitude);
            let got = phi.apply(u_n);
            if got != expected
                && !sink.record(Violation::new("power-rule", vec![u_n, expected, got]))
            {
                break 'power;
            }
        }
    }

    // (6) φ is a bijection
    if !phi.is_bijective() && sink.is_open() {
        let mut seen = vec![None; n];
        for a in 0..n {
            let img = phi.apply(a);
            if let Some(prev) = seen[img] {
                sink.record(Violation::new("bijective", vec![prev, a]));
                break;
            }
            seen[img] = Some(a);
        }
    }

    Ok(sink.finish())
}

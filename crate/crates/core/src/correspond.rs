//! The two mutually inverse assignments between semiheaps with a chosen
//! full biunit pair and monoids with a bijective switch, plus the group of
//! middle shifts a pair generates and the isomorphism linking two pairs.

use std::collections::BTreeSet;

use crate::biunit::{biunit_pairs, BiunitPairReport};
use crate::curry::{left_shift, middle_shift, retract, right_shift};
use crate::error::AlgebraError;
use crate::law::{is_semiheap, LawReport, Violation, WitnessSink, DEFAULT_WITNESS_LIMIT};
use crate::switch::{semiheap_from_switch, SwitchMonoid};
use crate::table::{Endomap, TernaryTable};

fn require_full_pair(
    t: &TernaryTable,
    report: &BiunitPairReport,
    pair: (usize, usize),
) -> Result<(), AlgebraError> {
    t.check_elements(&[pair.0, pair.1])?;
    if !report.is_full_pair(pair.0, pair.1) {
        return Err(AlgebraError::NotBiunitPair {
            a: pair.0,
            b: pair.1,
        });
    }
    Ok(())
}

/// Sends a semiheap with full biunit pair (a, b) to the monoid (S, ⋄ₐ)
/// with identity b and switch μ_bb, where x ⋄ₐ y = [x,a,y].
///
/// Everything the correspondence promises is validated rather than
/// trusted: b is the identity, μ_bb is a bijective switch sending a to b,
/// and x ⋄ₐ μ_bb(y) ⋄ₐ z reconstructs the bracket. A failure here is an
/// implementation bug, so it panics instead of returning an error.
pub fn omega(t: &TernaryTable, pair: (usize, usize)) -> Result<SwitchMonoid, AlgebraError> {
    if !is_semiheap(t) {
        return Err(AlgebraError::NotSemiheap);
    }
    let report = biunit_pairs(t);
    require_full_pair(t, &report, pair)?;
    let (a, b) = pair;

    let product = retract(t, a)?;
    let mu_bb = middle_shift(t, b, b)?;
    let m = SwitchMonoid::new(product, mu_bb)
        .expect("the middle currying at a full biunit pair must carry a switch monoid");

    assert_eq!(
        m.identity(),
        b,
        "the pair's second element must be the identity"
    );
    assert!(
        m.switch().is_bijective(),
        "the switch μ_bb must be a bijection"
    );
    assert_eq!(m.switch().apply(a), b, "μ_bb must send a to b");
    let n = t.n();
    let s = m.monoid();
    let phi = m.switch();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                assert_eq!(
                    t.get(x, y, z),
                    s.op(s.op(x, phi.apply(y)), z),
                    "x ⋄ₐ μ_bb(y) ⋄ₐ z must reconstruct the bracket"
                );
            }
        }
    }
    Ok(m)
}

/// Sends a monoid with bijective switch φ to the semiheap a·φ(b)·c with
/// the full biunit pair (φ⁻¹(1), 1). Inverse to `omega`.
pub fn lambda_corr(m: &SwitchMonoid) -> Result<(TernaryTable, (usize, usize)), AlgebraError> {
    let inverse = m
        .switch()
        .inverse()
        .ok_or(AlgebraError::SwitchNotBijective)?;
    let table = semiheap_from_switch(m.monoid(), m.switch())
        .expect("a validated switch monoid always induces a semiheap");
    let pair = (inverse.apply(m.identity()), m.identity());
    assert!(
        biunit_pairs(&table).is_full_pair(pair.0, pair.1),
        "(φ⁻¹(1), 1) must be a full biunit pair of the induced semiheap"
    );
    Ok((table, pair))
}

/// The classical construction at a biunit element e: the monoid (S, ⋄ₑ)
/// with identity e and the antihomomorphic involution μ_ee. Equals
/// `omega(t, (e, e))`; additionally validates the involution and
/// antihomomorphism properties and, for every other biunit u, that
/// ρ_eu(x) = [x,e,u] is an isomorphism of the induced involuted monoids.
pub fn involuted_monoid_of_biunit(
    t: &TernaryTable,
    e: usize,
) -> Result<SwitchMonoid, AlgebraError> {
    if !is_semiheap(t) {
        return Err(AlgebraError::NotSemiheap);
    }
    t.check_elements(&[e])?;
    let report = biunit_pairs(t);
    if !report.is_full_pair(e, e) {
        return Err(AlgebraError::NotBiunit { element: e });
    }
    let m = omega(t, (e, e)).expect("(e, e) was just checked to be a full pair");

    let n = t.n();
    let s = m.monoid();
    let phi = m.switch();
    assert!(phi.is_involution(), "μ_ee must be an involution");
    for x in 0..n {
        for y in 0..n {
            assert_eq!(
                phi.apply(s.op(x, y)),
                s.op(phi.apply(y), phi.apply(x)),
                "μ_ee must be an antihomomorphism"
            );
        }
    }

    for &u in report.biunit_elements() {
        if u == e {
            continue;
        }
        let rho = right_shift(t, e, u)?;
        let other = retract(t, u)?;
        let mu_uu = middle_shift(t, u, u)?;
        assert!(rho.is_bijective(), "ρ_eu must be a bijection");
        assert_eq!(rho.apply(e), u, "ρ_eu must send identity to identity");
        for x in 0..n {
            for y in 0..n {
                assert_eq!(
                    rho.apply(s.op(x, y)),
                    other.op(rho.apply(x), rho.apply(y)),
                    "ρ_eu must be a monoid homomorphism"
                );
            }
            assert_eq!(
                rho.apply(phi.apply(x)),
                mu_uu.apply(rho.apply(x)),
                "ρ_eu must intertwine the involutions"
            );
        }
    }
    Ok(m)
}

/// The subgroup of permutations generated by the middle shifts of a full
/// biunit pair: {Id, μ_aa, μ_bb, μ_ab, μ_ba} closed under composition.
///
/// Validates the generator identities relating middle shifts to edge
/// shifts (μ_aa∘μ_ab = μ_ba∘μ_aa = ρ_aa = λ_aa and its (b,b) mirror,
/// λ_aa∘λ_bb = ρ_aa∘ρ_bb = Id, μ_aa∘μ_bb = μ_ab² = μ_ba² = λ_ab = ρ_ab =
/// Id) and the group axioms of the closure. Elements come out sorted.
pub fn currying_group(
    t: &TernaryTable,
    pair: (usize, usize),
) -> Result<Vec<Endomap>, AlgebraError> {
    if !is_semiheap(t) {
        return Err(AlgebraError::NotSemiheap);
    }
    let report = biunit_pairs(t);
    require_full_pair(t, &report, pair)?;
    let (a, b) = pair;

    let id = Endomap::identity(t.n());
    let mu_aa = middle_shift(t, a, a)?;
    let mu_bb = middle_shift(t, b, b)?;
    let mu_ab = middle_shift(t, a, b)?;
    let mu_ba = middle_shift(t, b, a)?;
    for generator in [&mu_aa, &mu_bb, &mu_ab, &mu_ba] {
        assert!(generator.is_bijective(), "pair shifts must be bijections");
    }

    let lambda_aa = left_shift(t, a, a)?;
    let lambda_bb = left_shift(t, b, b)?;
    let rho_aa = right_shift(t, a, a)?;
    let rho_bb = right_shift(t, b, b)?;
    let compose = |f: &Endomap, g: &Endomap| f.compose(g).expect("same carrier");
    for (composite, edge) in [
        (compose(&mu_aa, &mu_ab), &rho_aa),
        (compose(&mu_ba, &mu_aa), &rho_aa),
        (compose(&mu_bb, &mu_ba), &rho_bb),
        (compose(&mu_ab, &mu_bb), &rho_bb),
        (compose(&mu_aa, &mu_ab), &lambda_aa),
        (compose(&mu_ba, &mu_aa), &lambda_aa),
        (compose(&mu_bb, &mu_ba), &lambda_bb),
        (compose(&mu_ab, &mu_bb), &lambda_bb),
    ] {
        assert_eq!(
            &composite, edge,
            "middle shifts must compose to edge shifts"
        );
    }
    for composite in [
        compose(&lambda_aa, &lambda_bb),
        compose(&rho_aa, &rho_bb),
        compose(&mu_aa, &mu_bb),
        compose(&mu_ab, &mu_ab),
        compose(&mu_ba, &mu_ba),
    ] {
        assert_eq!(composite, id, "pair shifts must cancel to the identity");
    }
    assert_eq!(
        left_shift(t, a, b)?,
        id,
        "λ_ab of a left pair is the identity"
    );
    assert_eq!(
        right_shift(t, a, b)?,
        id,
        "ρ_ab of a right pair is the identity"
    );

    let mut closure: BTreeSet<Endomap> = BTreeSet::new();
    closure.insert(id.clone());
    closure.extend([mu_aa, mu_bb, mu_ab, mu_ba]);
    loop {
        let mut fresh = Vec::new();
        for f in &closure {
            for g in &closure {
                let fg = compose(f, g);
                if !closure.contains(&fg) {
                    fresh.push(fg);
                }
            }
        }
        if fresh.is_empty() {
            break;
        }
        closure.extend(fresh);
    }
    for f in &closure {
        assert!(
            closure
                .iter()
                .any(|g| compose(f, g) == id && compose(g, f) == id),
            "the closure must contain inverses"
        );
    }
    Ok(closure.into_iter().collect())
}

/// The connecting isomorphism λ_da between the monoids of two full biunit
/// pairs, with the law checks that certify it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoPairIsomorphism {
    iso: Endomap,
    checks: LawReport,
}

impl TwoPairIsomorphism {
    pub fn iso(&self) -> &Endomap {
        &self.iso
    }

    pub fn checks(&self) -> &LawReport {
        &self.checks
    }
}

/// For full biunit pairs (a,b) and (c,d) of one semiheap: λ_da is a monoid
/// isomorphism (S,⋄ₐ,b) → (S,⋄_c,d) with λ_da(b) = d, its switch relation
/// is λ_da∘μ_bb = μ_dd∘λ_ad⁻¹ with λ_ad⁻¹ = λ_cb, and each pair's middle
/// shifts μ_pq, μ_qp are anti-automorphisms of both induced semigroups
/// while μ_pp is an anti-isomorphism between them.
pub fn two_pair_isomorphism(
    t: &TernaryTable,
    p1: (usize, usize),
    p2: (usize, usize),
) -> Result<TwoPairIsomorphism, AlgebraError> {
    if !is_semiheap(t) {
        return Err(AlgebraError::NotSemiheap);
    }
    let report = biunit_pairs(t);
    require_full_pair(t, &report, p1)?;
    require_full_pair(t, &report, p2)?;
    let (a, b) = p1;
    let (c, d) = p2;
    let n = t.n();

    let iso = left_shift(t, d, a)?;
    let product_a = retract(t, a)?;
    let product_c = retract(t, c)?;
    let mut sink = WitnessSink::new(DEFAULT_WITNESS_LIMIT);

    if !iso.is_bijective() || iso.apply(b) != d {
        sink.record(Violation::new("monoid-isomorphism", vec![b]));
    }
    'hom: for x in 0..n {
        for y in 0..n {
            if iso.apply(product_a.op(x, y)) != product_c.op(iso.apply(x), iso.apply(y))
                && !sink.record(Violation::new("monoid-isomorphism", vec![x, y]))
            {
                break 'hom;
            }
        }
    }

    let mu_bb = middle_shift(t, b, b)?;
    let mu_dd = middle_shift(t, d, d)?;
    let lambda_ad_inv = left_shift(t, a, d)?
        .inverse()
        .expect("shifts along biunit pairs are bijections");
    let lambda_cb = left_shift(t, c, b)?;
    if lambda_ad_inv != lambda_cb && sink.is_open() {
        sink.record(Violation::new("inverse-shift", vec![a, d, c, b]));
    }
    for x in 0..n {
        let lhs = iso.apply(mu_bb.apply(x));
        let rhs = mu_dd.apply(lambda_ad_inv.apply(x));
        if lhs != rhs && !sink.record(Violation::new("switch-relation", vec![x])) {
            break;
        }
    }

    'anti: for (p, q) in [(a, b), (c, d)] {
        let product_p = retract(t, p)?;
        let product_q = retract(t, q)?;
        let mu_pq = middle_shift(t, p, q)?;
        let mu_qp = middle_shift(t, q, p)?;
        let mu_pp = middle_shift(t, p, p)?;
        for x in 0..n {
            for y in 0..n {
                let anti_auto = [&mu_pq, &mu_qp].into_iter().all(|mu| {
                    mu.apply(product_p.op(x, y)) == product_p.op(mu.apply(y), mu.apply(x))
                        && mu.apply(product_q.op(x, y)) == product_q.op(mu.apply(y), mu.apply(x))
                });
                let anti_iso =
                    mu_pp.apply(product_p.op(x, y)) == product_q.op(mu_pp.apply(y), mu_pp.apply(x));
                if !(anti_auto && anti_iso)
                    && !sink.record(Violation::new("anti-automorphism", vec![p, q, x, y]))
                {
                    break 'anti;
                }
            }
        }
    }

    Ok(TwoPairIsomorphism {
        iso,
        checks: sink.finish(),
    })
}

/// Round-trip helper: Ω then Λ, returning the recovered (table, pair).
pub fn round_trip_semiheap(
    t: &TernaryTable,
    pair: (usize, usize),
) -> Result<(TernaryTable, (usize, usize)), AlgebraError> {
    lambda_corr(&omega(t, pair)?)
}

/// Round-trip helper: Λ then Ω, returning the recovered switch monoid.
pub fn round_trip_monoid(m: &SwitchMonoid) -> Result<SwitchMonoid, AlgebraError> {
    let (table, pair) = lambda_corr(m)?;
    omega(&table, pair)
}

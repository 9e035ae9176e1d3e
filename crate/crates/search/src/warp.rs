//! Warp surveys, warp-equivalence decision by closure over the twist graph,
//! and the search for non-warp compositions of warps.

use std::collections::BTreeMap;

use semiheaps_core::{
    biunit_pairs, is_semiheap, is_switch, is_warp, twist, AlgebraError, BinaryTable, Endomap,
    TernaryTable,
};

use crate::enumerate::for_each_semiheap;
use crate::maps::{endomaps, permutations};

/// Largest carrier for the nⁿ endomap surveys.
pub const MAX_SURVEY_SIZE: usize = 4;

fn check_survey_size(n: usize) -> Result<(), AlgebraError> {
    if n > MAX_SURVEY_SIZE {
        Err(AlgebraError::CarrierTooLarge {
            n,
            limit: MAX_SURVEY_SIZE,
        })
    } else {
        Ok(())
    }
}

/// The endomaps of a carrier passing some unary-law filter, in lexicographic
/// image order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EndomapSurvey {
    maps: Vec<Endomap>,
}

impl EndomapSurvey {
    pub fn maps(&self) -> &[Endomap] {
        &self.maps
    }

    /// The bijective sublist.
    pub fn bijective(&self) -> Vec<&Endomap> {
        self.maps.iter().filter(|m| m.is_bijective()).collect()
    }

    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    pub fn contains(&self, map: &Endomap) -> bool {
        self.maps.contains(map)
    }
}

/// Every endomap that is a warp of `t`.
pub fn enumerate_warps(t: &TernaryTable) -> Result<EndomapSurvey, AlgebraError> {
    check_survey_size(t.n())?;
    let mut maps = Vec::new();
    for eta in endomaps(t.n()) {
        if is_warp(t, &eta)? {
            maps.push(eta);
        }
    }
    Ok(EndomapSurvey { maps })
}

/// Every endomap that is a switch for the semigroup `s`.
pub fn enumerate_switches(s: &BinaryTable) -> Result<EndomapSurvey, AlgebraError> {
    check_survey_size(s.n())?;
    let mut maps = Vec::new();
    for phi in endomaps(s.n()) {
        if is_switch(s, &phi)? {
            maps.push(phi);
        }
    }
    Ok(EndomapSurvey { maps })
}

/// A witnessed chain of bijective warp twistings from a source table to a
/// target table: tables[0] is the source, each steps[i] is a bijective warp
/// of tables[i] with tables[i+1] its twist, and the last table is the
/// target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WarpPath {
    steps: Vec<Endomap>,
    tables: Vec<TernaryTable>,
}

impl WarpPath {
    fn new(steps: Vec<Endomap>, tables: Vec<TernaryTable>) -> Self {
        assert_eq!(tables.len(), steps.len() + 1);
        for (i, step) in steps.iter().enumerate() {
            assert!(step.is_bijective(), "path steps must be bijections");
            assert!(
                is_warp(&tables[i], step).expect("carriers match"),
                "path steps must be warps of the table they twist"
            );
            assert_eq!(
                twist(&tables[i], step).expect("carriers match"),
                tables[i + 1]
            );
        }
        Self { steps, tables }
    }

    pub fn steps(&self) -> &[Endomap] {
        &self.steps
    }

    pub fn tables(&self) -> &[TernaryTable] {
        &self.tables
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn source(&self) -> &TernaryTable {
        self.tables.first().expect("paths hold at least the source")
    }

    pub fn target(&self) -> &TernaryTable {
        self.tables.last().expect("paths hold at least the source")
    }

    /// The single map whose twist carries the source to the target: the
    /// composition φ₁∘φ₂∘…∘φ_k of the steps.
    pub fn composite(&self) -> Endomap {
        let mut map = Endomap::identity(self.source().n());
        for step in &self.steps {
            map = map.compose(step).expect("carriers match");
        }
        debug_assert_eq!(
            twist(self.source(), &map).expect("carriers match"),
            *self.target()
        );
        map
    }
}

/// Searches for a chain of bijective warp twistings carrying `t1` to `t2`,
/// breadth-first so a returned path has minimal length. The twist graph of a
/// fixed finite table is finite, so the search decides the question exactly
/// whenever it exhausts the reachable set within `max_depth`.
pub fn warp_equivalent(t1: &TernaryTable, t2: &TernaryTable, max_depth: usize) -> Option<WarpPath> {
    if t1.n() != t2.n() {
        return None;
    }
    let n = t1.n();
    // Biunit-pair counts are invariant under bijective warp twisting, but
    // only semiheaps are covered by that guarantee.
    let guarded = is_semiheap(t1);
    let fingerprint = biunit_pairs(t1).fingerprint();

    struct Node {
        table: TernaryTable,
        parent: Option<(usize, Endomap)>,
        depth: usize,
    }

    let mut nodes = vec![Node {
        table: t1.clone(),
        parent: None,
        depth: 0,
    }];
    let mut seen: BTreeMap<TernaryTable, usize> = BTreeMap::new();
    seen.insert(t1.clone(), 0);
    let perms = permutations(n);

    let mut cursor = 0;
    let mut hit = None;
    if *t1 == *t2 {
        hit = Some(0);
    }
    while hit.is_none() && cursor < nodes.len() {
        let depth = nodes[cursor].depth;
        if depth >= max_depth {
            break;
        }
        for phi in &perms {
            if !is_warp(&nodes[cursor].table, phi).expect("carriers match") {
                continue;
            }
            let next = twist(&nodes[cursor].table, phi).expect("carriers match");
            if guarded {
                assert_eq!(
                    biunit_pairs(&next).fingerprint(),
                    fingerprint,
                    "bijective warp twisting must preserve biunit-pair counts"
                );
            }
            if seen.contains_key(&next) {
                continue;
            }
            seen.insert(next.clone(), nodes.len());
            nodes.push(Node {
                table: next.clone(),
                parent: Some((cursor, phi.clone())),
                depth: depth + 1,
            });
            if next == *t2 {
                hit = Some(nodes.len() - 1);
                break;
            }
        }
        cursor += 1;
    }

    let mut at = hit?;
    let mut steps = Vec::new();
    while let Some((parent, step)) = nodes[at].parent.clone() {
        steps.push(step);
        at = parent;
    }
    steps.reverse();
    let mut tables = vec![t1.clone()];
    for step in &steps {
        let previous = tables.last().expect("chain starts at the source");
        tables.push(twist(previous, step).expect("carriers match"));
    }
    Some(WarpPath::new(steps, tables))
}

/// A semiheap with a warp, a warp of the twist, and a composite of the two
/// that fails to be a warp of the original table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WarpCompositionWitness {
    table: TernaryTable,
    first: Endomap,
    twisted: TernaryTable,
    second: Endomap,
    composite: Endomap,
}

impl WarpCompositionWitness {
    pub fn table(&self) -> &TernaryTable {
        &self.table
    }

    /// The warp φ of the base table.
    pub fn first(&self) -> &Endomap {
        &self.first
    }

    /// The φ-twist of the base table.
    pub fn twisted(&self) -> &TernaryTable {
        &self.twisted
    }

    /// The warp ψ of the twisted table.
    pub fn second(&self) -> &Endomap {
        &self.second
    }

    /// ψ∘φ, which is not a warp of the base table.
    pub fn composite(&self) -> &Endomap {
        &self.composite
    }
}

/// Sweeps every semiheap on carriers up to `n_max` with every warp φ and
/// every warp ψ of the φ-twist, returning the first composite ψ∘φ that is
/// not a warp of the base table. Along the way, every commuting pair is
/// required to compose to a warp.
pub fn find_warp_composition_counterexample(
    n_max: usize,
) -> Result<Option<WarpCompositionWitness>, AlgebraError> {
    if n_max > 3 {
        return Err(AlgebraError::CarrierTooLarge { n: n_max, limit: 3 });
    }
    let mut found: Option<WarpCompositionWitness> = None;
    for n in 1..=n_max {
        for_each_semiheap(n, |t| {
            for phi in endomaps(n) {
                if !is_warp(t, &phi).expect("carriers match") {
                    continue;
                }
                let twisted = twist(t, &phi).expect("carriers match");
                for psi in endomaps(n) {
                    if !is_warp(&twisted, &psi).expect("carriers match") {
                        continue;
                    }
                    let composite = psi.compose(&phi).expect("carriers match");
                    let composite_is_warp = is_warp(t, &composite).expect("carriers match");
                    if psi.compose(&phi) == phi.compose(&psi) {
                        assert!(composite_is_warp, "commuting warps must compose to a warp");
                    }
                    if !composite_is_warp && found.is_none() {
                        found = Some(WarpCompositionWitness {
                            table: t.clone(),
                            first: phi.clone(),
                            twisted: twisted.clone(),
                            second: psi,
                            composite,
                        });
                    }
                }
            }
        })?;
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use semiheaps_core::{classify, left_shift, partner_involution};

    fn cyclic_sum(n: usize) -> TernaryTable {
        TernaryTable::from_fn(n, |a, b, c| (a + b + c) % n).unwrap()
    }

    fn group_heap_z(n: usize) -> TernaryTable {
        TernaryTable::from_fn(n, |a, b, c| (a + n - b + c) % n).unwrap()
    }

    #[test]
    fn warps_of_the_three_element_group_heap_include_all_edge_shifts() {
        let t = group_heap_z(3);
        let survey = enumerate_warps(&t).unwrap();
        for e in 0..3 {
            let lambda = left_shift(&t, e, e).unwrap();
            let rho = semiheaps_core::right_shift(&t, e, e).unwrap();
            assert!(survey.contains(&lambda));
            assert!(survey.contains(&rho));
        }
        assert!(survey.bijective().len() <= survey.len());
    }

    #[test]
    fn switches_of_a_constant_semigroup_fix_the_absorbing_element() {
        let s = BinaryTable::from_fn(2, |_, _| 0).unwrap();
        let survey = enumerate_switches(&s).unwrap();
        let images: Vec<_> = survey.maps().iter().map(|m| m.image().to_vec()).collect();
        assert_eq!(images, vec![vec![0, 0], vec![0, 1]]);
    }

    #[test]
    fn identity_is_a_switch_on_abelian_groups() {
        let z3 = BinaryTable::from_fn(3, |a, b| (a + b) % 3).unwrap();
        let survey = enumerate_switches(&z3).unwrap();
        assert!(survey.contains(&Endomap::identity(3)));
    }

    #[test]
    fn survey_size_guard() {
        let t = TernaryTable::from_fn(5, |_, _, _| 0).unwrap();
        assert_eq!(
            enumerate_warps(&t),
            Err(AlgebraError::CarrierTooLarge { n: 5, limit: 4 })
        );
    }

    #[test]
    fn a_diheap_reaches_its_partner_twist_in_one_step() {
        let t = cyclic_sum(4);
        let psi = partner_involution(&t).unwrap();
        let heap = twist(&t, &psi).unwrap();
        assert!(classify(&heap).heap);

        let path = warp_equivalent(&t, &heap, 4).expect("twist is reachable");
        assert_eq!(path.len(), 1);
        assert_eq!(path.source(), &t);
        assert_eq!(path.target(), &heap);
        assert_eq!(twist(&t, &path.composite()).unwrap(), heap);
    }

    #[test]
    fn a_table_is_warp_equivalent_to_itself_by_the_empty_path() {
        let t = cyclic_sum(3);
        let path = warp_equivalent(&t, &t, 1).unwrap();
        assert_eq!(path.len(), 0);
        assert!(path.composite().is_identity());
    }

    #[test]
    fn edge_shift_twists_are_reachable() {
        let t = cyclic_sum(4);
        let lambda = left_shift(&t, 1, 1).unwrap();
        assert!(is_warp(&t, &lambda).unwrap());
        let target = twist(&t, &lambda).unwrap();
        let path = warp_equivalent(&t, &target, 4).expect("shift twist is reachable");
        assert!(path.len() <= 1);
    }

    #[test]
    fn tables_with_different_pair_counts_are_not_warp_equivalent() {
        let heap = group_heap_z(4);
        let constant = TernaryTable::from_fn(4, |_, _, _| 0).unwrap();
        assert_eq!(warp_equivalent(&heap, &constant, 8), None);
        assert_eq!(warp_equivalent(&heap, &cyclic_sum(3), 8), None);
    }

    #[test]
    fn commuting_translation_warps_compose_to_a_warp() {
        let t = cyclic_sum(4);
        let phi = Endomap::new(4, vec![1, 2, 3, 0]).unwrap();
        let twisted = twist(&t, &phi).unwrap();
        let psi = Endomap::new(4, vec![2, 3, 0, 1]).unwrap();
        assert!(is_warp(&t, &phi).unwrap());
        assert!(is_warp(&twisted, &psi).unwrap());
        assert_eq!(phi.compose(&psi).unwrap(), psi.compose(&phi).unwrap());
        assert!(is_warp(&t, &psi.compose(&phi).unwrap()).unwrap());
    }

    #[test]
    fn two_element_carriers_admit_no_counterexample() {
        assert_eq!(find_warp_composition_counterexample(2), Ok(None));
    }

    #[test]
    fn three_element_carriers_yield_a_counterexample() {
        let witness = find_warp_composition_counterexample(3)
            .unwrap()
            .expect("a witness exists on three elements");

        let t = witness.table();
        assert!(is_warp(t, witness.first()).unwrap());
        assert_eq!(twist(t, witness.first()).unwrap(), *witness.twisted());
        assert!(is_warp(witness.twisted(), witness.second()).unwrap());
        assert_eq!(
            witness.second().compose(witness.first()).unwrap(),
            *witness.composite()
        );
        assert!(!is_warp(t, witness.composite()).unwrap());

        let mut expected = vec![0; 27];
        expected[26] = 1;
        assert_eq!(t, &TernaryTable::new(3, expected).unwrap());
        assert_eq!(witness.first().image(), &[0, 0, 1]);
        assert_eq!(witness.second().image(), &[0, 2, 0]);
        assert_eq!(witness.composite().image(), &[0, 0, 2]);
        assert_ne!(
            witness.first().compose(witness.second()).unwrap(),
            *witness.composite()
        );

        assert_eq!(
            find_warp_composition_counterexample(4),
            Err(AlgebraError::CarrierTooLarge { n: 4, limit: 3 })
        );
    }
}

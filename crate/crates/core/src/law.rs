//! Law checkers. Every checker reports up to a bounded number of witness
//! tuples in lexicographic scan order instead of a bare boolean.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::table::{BinaryTable, Bracket, TernaryTable};

/// Default number of witnesses a checker collects before giving up the scan.
pub const DEFAULT_WITNESS_LIMIT: usize = 10;

/// One failing instance of a named law.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Violation {
    pub law: &'static str,
    pub witness: Vec<usize>,
}

impl Violation {
    pub fn new(law: &'static str, witness: Vec<usize>) -> Self {
        Self { law, witness }
    }
}

/// Outcome of a law check: holds exactly when no violation was found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawReport {
    holds: bool,
    violations: Vec<Violation>,
}

impl LawReport {
    pub fn from_violations(violations: Vec<Violation>) -> Self {
        Self {
            holds: violations.is_empty(),
            violations,
        }
    }

    pub fn holds(&self) -> bool {
        self.holds
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }
}

/// Collects witnesses until the configured bound; `record` reports whether
/// the scan should continue.
pub(crate) struct WitnessSink {
    limit: usize,
    violations: Vec<Violation>,
}

impl WitnessSink {
    pub(crate) fn new(limit: usize) -> Self {
        Self {
            limit: limit.max(1),
            violations: Vec::new(),
        }
    }

    pub(crate) fn record(&mut self, violation: Violation) -> bool {
        self.violations.push(violation);
        self.violations.len() < self.limit
    }

    pub(crate) fn is_open(&self) -> bool {
        self.violations.len() < self.limit
    }

    pub(crate) fn finish(self) -> LawReport {
        LawReport::from_violations(self.violations)
    }
}

fn para_associativity_violation<B: Bracket>(b: &B, q: [u64; 5]) -> bool {
    let [x, y, z, d, e] = q;
    let outer = b.bracket(b.bracket(x, y, z), d, e);
    outer != b.bracket(x, b.bracket(d, z, y), e) || outer != b.bracket(x, y, b.bracket(z, d, e))
}

/// Checks [[a,b,c],d,e] = [a,[d,c,b],e] = [a,b,[c,d,e]] over all quintuples
/// of any bracket, dense or lazy.
pub fn check_semiheap_bracket<B: Bracket>(b: &B, witness_limit: usize) -> LawReport {
    let n = b.size();
    let mut sink = WitnessSink::new(witness_limit);
    'scan: for a in 0..n {
        for x in 0..n {
            for c in 0..n {
                for d in 0..n {
                    for e in 0..n {
                        if para_associativity_violation(b, [a, x, c, d, e]) {
                            let witness = [a, x, c, d, e].map(|v| v as usize).to_vec();
                            if !sink.record(Violation::new("semiheap", witness)) {
                                break 'scan;
                            }
                        }
                    }
                }
            }
        }
    }
    sink.finish()
}

pub fn check_semiheap(t: &TernaryTable) -> LawReport {
    check_semiheap_bracket(t, DEFAULT_WITNESS_LIMIT)
}

pub fn is_semiheap(t: &TernaryTable) -> bool {
    check_semiheap_bracket(t, 1).holds()
}

/// Result of a seeded random law check on a bracket too large to scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampledLawReport {
    pub seed: u64,
    pub samples: usize,
    pub report: LawReport,
}

/// Checks the semiheap law on `samples` pseudorandom quintuples drawn from a
/// seeded generator; identical seed and sample count give identical output.
pub fn check_semiheap_sampled<B: Bracket>(
    b: &B,
    samples: usize,
    seed: u64,
    witness_limit: usize,
) -> SampledLawReport {
    let n = b.size();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sink = WitnessSink::new(witness_limit);
    for _ in 0..samples {
        let mut q = [0u64; 5];
        for slot in &mut q {
            *slot = rng.random_range(0..n);
        }
        if para_associativity_violation(b, q)
            && !sink.record(Violation::new("semiheap", q.map(|v| v as usize).to_vec()))
        {
            break;
        }
    }
    SampledLawReport {
        seed,
        samples,
        report: sink.finish(),
    }
}

/// The reverse table [a,b,c] ↦ [c,b,a]; a semiheap's reverse is a semiheap.
pub fn reverse(t: &TernaryTable) -> TernaryTable {
    TernaryTable::from_fn(t.n(), |a, b, c| t.get(c, b, a)).expect("reverse of a valid table")
}

/// True when the table equals its reverse.
pub fn is_abelian(t: &TernaryTable) -> bool {
    check_abelian(t, 1).holds()
}

pub fn check_abelian(t: &TernaryTable, witness_limit: usize) -> LawReport {
    let n = t.n();
    let mut sink = WitnessSink::new(witness_limit);
    'scan: for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if t.get(a, b, c) != t.get(c, b, a)
                    && !sink.record(Violation::new("abelian", vec![a, b, c]))
                {
                    break 'scan;
                }
            }
        }
    }
    sink.finish()
}

pub fn check_associative(s: &BinaryTable, witness_limit: usize) -> LawReport {
    let n = s.n();
    let mut sink = WitnessSink::new(witness_limit);
    'scan: for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if s.op(s.op(a, b), c) != s.op(a, s.op(b, c))
                    && !sink.record(Violation::new("associativity", vec![a, b, c]))
                {
                    break 'scan;
                }
            }
        }
    }
    sink.finish()
}

pub fn is_associative(s: &BinaryTable) -> bool {
    check_associative(s, 1).holds()
}

/// Associativity plus a two-sided identity.
pub fn check_monoid(s: &BinaryTable, witness_limit: usize) -> LawReport {
    let mut sink = WitnessSink::new(witness_limit);
    for v in check_associative(s, witness_limit).violations() {
        if !sink.record(v.clone()) {
            return sink.finish();
        }
    }
    if s.identity().is_none() {
        sink.record(Violation::new("identity", vec![]));
    }
    sink.finish()
}

/// Monoid laws plus a two-sided inverse for every element.
pub fn check_group(s: &BinaryTable, witness_limit: usize) -> LawReport {
    let mut sink = WitnessSink::new(witness_limit);
    for v in check_monoid(s, witness_limit).violations() {
        if !sink.record(v.clone()) {
            return sink.finish();
        }
    }
    if let Some(e) = s.identity() {
        for a in 0..s.n() {
            let invertible = (0..s.n()).any(|b| s.op(a, b) == e && s.op(b, a) == e);
            if !invertible && !sink.record(Violation::new("inverse", vec![a])) {
                break;
            }
        }
    }
    sink.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::table::TernaryTable;

    fn cyclic_sum(n: usize) -> TernaryTable {
        TernaryTable::from_fn(n, |a, b, c| (a + b + c) % n).unwrap()
    }

    fn group_heap_z3() -> TernaryTable {
        TernaryTable::from_fn(3, |a, b, c| (a + 3 - b + c) % 3).unwrap()
    }

    #[test]
    fn cyclic_sum_is_a_semiheap() {
        let report = check_semiheap(&cyclic_sum(4));
        assert!(report.holds());
        assert!(report.violations().is_empty());
    }

    #[test]
    fn difference_bracket_on_z3_is_a_semiheap() {
        assert!(check_semiheap(&group_heap_z3()).holds());
    }

    #[test]
    fn constant_in_two_arguments_fails_with_witness() {
        // [a,b,c] = 1 - c; the oracle below re-evaluates both equalities of the
        // defining law literally on all 32 quintuples.
        let t = TernaryTable::from_fn(2, |_, _, c| 1 - c).unwrap();
        let mut oracle_fail = None;
        'all: for a in 0..2 {
            for b in 0..2 {
                for c in 0..2 {
                    for d in 0..2 {
                        for e in 0..2 {
                            let lhs = t.get(t.get(a, b, c), d, e);
                            let mid = t.get(a, t.get(d, c, b), e);
                            let rhs = t.get(a, b, t.get(c, d, e));
                            if lhs != mid || lhs != rhs {
                                oracle_fail = Some(vec![a, b, c, d, e]);
                                break 'all;
                            }
                        }
                    }
                }
            }
        }
        let report = check_semiheap(&t);
        assert!(!report.holds());
        assert_eq!(report.violations()[0].witness, oracle_fail.unwrap());
        assert_eq!(report.violations()[0].law, "semiheap");
    }

    #[test]
    fn witness_limit_truncates_in_lexicographic_order() {
        let t = TernaryTable::from_fn(2, |_, _, c| 1 - c).unwrap();
        let three = check_semiheap_bracket(&t, 3);
        let ten = check_semiheap_bracket(&t, 10);
        assert_eq!(three.violations().len(), 3);
        assert_eq!(three.violations(), &ten.violations()[..3]);
        let mut sorted = ten.violations().to_vec();
        sorted.sort();
        assert_eq!(sorted, ten.violations());
    }

    #[test]
    fn reverse_swaps_outer_arguments() {
        let t = TernaryTable::from_fn(2, |a, b, c| (a + 2 * b + c) % 2).unwrap();
        let r = reverse(&t);
        for a in 0..2 {
            for b in 0..2 {
                for c in 0..2 {
                    assert_eq!(r.get(a, b, c), t.get(c, b, a));
                }
            }
        }
        assert_eq!(reverse(&r), t);
    }

    #[test]
    fn abelian_iff_equal_to_reverse() {
        let sym = cyclic_sum(4);
        assert!(is_abelian(&sym));
        assert_eq!(reverse(&sym), sym);

        let asym = TernaryTable::from_fn(2, |a, _, _| a).unwrap();
        assert!(!is_abelian(&asym));
        let report = check_abelian(&asym, 10);
        let witness = &report.violations()[0];
        let [a, b, c] = [witness.witness[0], witness.witness[1], witness.witness[2]];
        assert_ne!(asym.get(a, b, c), asym.get(c, b, a));
    }

    #[test]
    fn sampled_checker_is_deterministic_and_agrees() {
        let good = cyclic_sum(3);
        let one = check_semiheap_sampled(&good, 500, 7, 10);
        let two = check_semiheap_sampled(&good, 500, 7, 10);
        assert_eq!(one, two);
        assert!(one.report.holds());

        let bad = TernaryTable::from_fn(2, |_, _, c| 1 - c).unwrap();
        let sampled = check_semiheap_sampled(&bad, 2000, 0, 10);
        assert!(!sampled.report.holds());
    }

    #[test]
    fn binary_law_checkers() {
        let z4 = BinaryTable::from_fn(4, |a, b| (a + b) % 4).unwrap();
        assert!(check_group(&z4, 10).holds());

        let truncated_plus = BinaryTable::from_fn(3, |a, b| (a + b).min(2)).unwrap();
        assert!(check_monoid(&truncated_plus, 10).holds());
        let group_report = check_group(&truncated_plus, 10);
        assert!(!group_report.holds());
        assert_eq!(
            group_report.violations()[0],
            Violation::new("inverse", vec![1])
        );

        let boolean_or = BinaryTable::new(2, vec![0, 1, 1, 1]).unwrap();
        assert!(is_associative(&boolean_or));
        let subtraction = BinaryTable::from_fn(3, |a, b| (a + 3 - b) % 3).unwrap();
        assert!(!is_associative(&subtraction));

        let no_identity = BinaryTable::from_fn(2, |_, _| 0).unwrap();
        let report = check_monoid(&no_identity, 10);
        assert_eq!(report.violations(), &[Violation::new("identity", vec![])]);
    }
}

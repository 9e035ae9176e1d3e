use std::path::Path;

use semiheaps_core::{
    biunit_pairs, check_abelian, check_group, check_monoid, check_semiheap_bracket, LawReport,
    TernaryTable, Violation,
};

use crate::format::AlgebraFile;
use crate::{Failure, Law, EXIT_HOLDS, EXIT_VIOLATION};

pub(crate) fn run(file: &Path, law: Law, witness_limit: usize) -> Result<u8, Failure> {
    let alg = AlgebraFile::load(file)?;
    println!("command: verify");
    println!("file: {}", file.display());
    println!("law: {}", law.word());
    println!("kind: {}", alg.kind.word());
    println!("n: {}", alg.n);

    let report = match law {
        Law::Semiheap => check_semiheap_bracket(&alg.ternary()?, witness_limit),
        Law::Abelian => check_abelian(&alg.ternary()?, witness_limit),
        Law::Heap => heap_report(&alg.ternary()?, witness_limit),
        Law::Diheap => diheap_report(&alg.ternary()?, witness_limit),
        Law::Monoid => check_monoid(&alg.binary()?, witness_limit),
        Law::Group => check_group(&alg.binary()?, witness_limit),
    };

    if report.holds() {
        println!("verdict: holds");
        Ok(EXIT_HOLDS)
    } else {
        println!("verdict: fails");
        for v in report.violations() {
            if v.witness.is_empty() {
                println!("violation: {}", v.law);
            } else {
                println!(
                    "violation: {} {}",
                    v.law,
                    crate::join(v.witness.iter().copied())
                );
            }
        }
        Ok(EXIT_VIOLATION)
    }
}

/// Semiheap law plus: every element forms a full biunit pair with itself.
fn heap_report(t: &TernaryTable, witness_limit: usize) -> LawReport {
    let mut violations = check_semiheap_bracket(t, witness_limit)
        .violations()
        .to_vec();
    let pairs = biunit_pairs(t);
    for e in 0..t.n() {
        if !pairs.is_full_pair(e, e) {
            violations.push(Violation::new("biunit-element", vec![e]));
        }
    }
    violations.truncate(witness_limit.max(1));
    LawReport::from_violations(violations)
}

/// Semiheap law plus: every element opens some full biunit pair.
fn diheap_report(t: &TernaryTable, witness_limit: usize) -> LawReport {
    let mut violations = check_semiheap_bracket(t, witness_limit)
        .violations()
        .to_vec();
    let pairs = biunit_pairs(t);
    for e in 0..t.n() {
        if !(0..t.n()).any(|b| pairs.is_full_pair(e, b)) {
            violations.push(Violation::new("diheap-element", vec![e]));
        }
    }
    violations.truncate(witness_limit.max(1));
    LawReport::from_violations(violations)
}

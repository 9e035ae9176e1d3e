use std::path::Path;

use semiheaps_core::biunit_pairs;

use crate::format::AlgebraFile;
use crate::{Failure, EXIT_HOLDS};

pub(crate) fn run(file: &Path) -> Result<u8, Failure> {
    let alg = AlgebraFile::load(file)?;
    let t = alg.ternary()?;
    let labels = alg.labels();
    let show = |e: usize| match &labels {
        Some(names) => names[e].clone(),
        None => e.to_string(),
    };

    println!("command: biunits");
    println!("file: {}", file.display());
    println!("n: {}", alg.n);
    let report = biunit_pairs(&t);
    for (word, pairs) in [
        ("left-pair", report.left_pairs()),
        ("right-pair", report.right_pairs()),
        ("full-pair", report.full_pairs()),
    ] {
        println!("{word}s: {}", pairs.len());
        for &(a, b) in pairs {
            println!("{word}: {} {}", show(a), show(b));
        }
    }
    let elements = report.biunit_elements();
    if elements.is_empty() {
        println!("biunit-elements: none");
    } else {
        let listed: Vec<String> = elements.iter().map(|&e| show(e)).collect();
        println!("biunit-elements: {}", listed.join(" "));
    }
    Ok(EXIT_HOLDS)
}

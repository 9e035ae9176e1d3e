use std::path::Path;

use semiheaps_search::{ternar_isomorphic, warp_equivalent};

use crate::format::AlgebraFile;
use crate::{input_failure, Failure, Mode, EXIT_HOLDS, EXIT_VIOLATION};

/// Largest carrier the warp search will walk; its frontier enumerates all
/// n! permutations at every table it visits.
const MAX_WARP_SEARCH_SIZE: usize = 6;

pub(crate) fn run(file1: &Path, file2: &Path, mode: Mode) -> Result<u8, Failure> {
    let first = AlgebraFile::load(file1)?;
    let second = AlgebraFile::load(file2)?;
    let t1 = first.ternary()?;
    let t2 = second.ternary()?;
    if t1.n() != t2.n() {
        return Err(input_failure(format!(
            "carrier sizes differ: {} vs {}",
            t1.n(),
            t2.n()
        )));
    }

    println!("command: equiv");
    println!("mode: {}", mode.word());
    println!("file1: {}", file1.display());
    println!("file2: {}", file2.display());
    println!("n: {}", t1.n());

    match mode {
        Mode::Iso => match ternar_isomorphic(&t1, &t2) {
            Some(map) => {
                println!("verdict: isomorphic");
                println!("witness: {}", crate::join(map.image().iter().copied()));
                Ok(EXIT_HOLDS)
            }
            None => {
                println!("verdict: none");
                Ok(EXIT_VIOLATION)
            }
        },
        Mode::Warp => {
            if t1.n() > MAX_WARP_SEARCH_SIZE {
                return Err(input_failure(format!(
                    "warp search supports carriers up to {MAX_WARP_SEARCH_SIZE} elements"
                )));
            }
            // Twisting composes along a path, so the orbit has at most n!
            // tables and this depth bound makes the search exhaustive.
            let depth = (2..=t1.n()).fold(1usize, |acc, k| acc.saturating_mul(k));
            match warp_equivalent(&t1, &t2, depth) {
                Some(path) => {
                    println!("verdict: warp-equivalent");
                    println!("path-length: {}", path.len());
                    for step in path.steps() {
                        println!("step: {}", crate::join(step.image().iter().copied()));
                    }
                    Ok(EXIT_HOLDS)
                }
                None => {
                    println!("verdict: none");
                    Ok(EXIT_VIOLATION)
                }
            }
        }
    }
}

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use semiheaps_search::{enumerate_semiheaps_where, SemiheapFilter};

use crate::{input_failure, Failure, Filter, EXIT_HOLDS};

pub(crate) fn run(
    n: usize,
    up_to_iso: bool,
    filter: Option<Filter>,
    out: Option<&Path>,
) -> Result<u8, Failure> {
    println!("command: enumerate");
    println!("n: {n}");
    println!("filter: {}", filter.map_or("all", Filter::word));
    println!("up-to-iso: {up_to_iso}");

    let chosen = match filter {
        None => SemiheapFilter::All,
        Some(Filter::Heap) => SemiheapFilter::Heap,
        Some(Filter::Diheap) => SemiheapFilter::Diheap,
        Some(Filter::HasBiunitPair) => SemiheapFilter::HasFullPair,
    };
    let tables = enumerate_semiheaps_where(n, chosen, up_to_iso)
        .map_err(|e| input_failure(e.to_string()))?;
    println!("count: {}", tables.len());

    if let Some(path) = out {
        let mut text = String::new();
        writeln!(text, "kind: ternar-list").unwrap();
        writeln!(text, "n: {n}").unwrap();
        writeln!(text, "count: {}", tables.len()).unwrap();
        for t in &tables {
            writeln!(text, "table: {}", crate::join(t.entries().iter().copied())).unwrap();
        }
        fs::write(path, text).map_err(|e| input_failure(format!("{}: {e}", path.display())))?;
        println!("out: {}", path.display());
    }
    Ok(EXIT_HOLDS)
}

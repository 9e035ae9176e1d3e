//! Exhaustive iteration over endomaps and permutations of a finite carrier.

use itertools::Itertools;
use semiheaps_core::Endomap;

/// All nⁿ endomaps of {0..n-1}, in lexicographic order of their image
/// vectors. Empty for n = 0.
pub fn endomaps(n: usize) -> Box<dyn Iterator<Item = Endomap>> {
    if n == 0 {
        return Box::new(std::iter::empty());
    }
    Box::new(
        std::iter::repeat_n(0..n, n)
            .multi_cartesian_product()
            .map(move |image| Endomap::new(n, image).expect("entries lie in the carrier")),
    )
}

/// All n! permutations of {0..n-1}, in lexicographic order of their image
/// vectors. Empty for n = 0.
pub fn permutations(n: usize) -> Vec<Endomap> {
    if n == 0 {
        return Vec::new();
    }
    (0..n)
        .permutations(n)
        .map(|image| Endomap::new(n, image).expect("permutations lie in the carrier"))
        .collect()
}

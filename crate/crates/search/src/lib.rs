//! Exhaustive searches over small ternary and binary tables: enumeration of
//! semiheaps, semigroups, and monoids by constraint-pruned backtracking,
//! canonical forms and isomorphism testing, warp surveys, warp-equivalence
//! decision by closure over the twist graph, and counterexample mining.
//!
//! Everything here is exact. Carriers are capped where the search space
//! would otherwise explode, and the caps are part of each function's
//! contract.

mod canon;
mod enumerate;
mod maps;
mod monoids;
mod warp;

pub use canon::{
    canonical_binary_form, canonical_form, relabel, relabel_binary, ternar_isomorphic,
    CanonicalForm,
};
pub use enumerate::{
    enumerate_semiheaps, enumerate_semiheaps_where, for_each_semiheap, SemiheapFilter,
    MAX_ENUMERATION_SIZE,
};
pub use maps::{endomaps, permutations};
pub use monoids::{
    enumerate_monoids, enumerate_semigroups, enumerate_switch_monoids, MAX_MONOID_SIZE,
    MAX_SEMIGROUP_SIZE,
};
pub use warp::{
    enumerate_switches, enumerate_warps, find_warp_composition_counterexample, warp_equivalent,
    EndomapSurvey, WarpCompositionWitness, WarpPath, MAX_SURVEY_SIZE,
};

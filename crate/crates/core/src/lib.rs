//! Finite ternary algebras on dense tables: semiheap law checking,
//! curryings and shifts, twists/warps/switches, biunit pairs, and the
//! correspondence between semiheaps-with-pair and switch monoids.

pub mod biunit;
pub mod correspond;
pub mod curry;
pub mod error;
pub mod law;
pub mod switch;
pub mod table;
pub mod twist;

pub use biunit::{
    biunit_pair_product_closure, biunit_pairs, classify, partner_involution, BiunitFingerprint,
    BiunitPairReport, Classification,
};
pub use correspond::{
    currying_group, involuted_monoid_of_biunit, lambda_corr, omega, round_trip_monoid,
    round_trip_semiheap, two_pair_isomorphism, TwoPairIsomorphism,
};
pub use curry::{
    curry_binary, left_shift, middle_shift, retract, right_shift, shift, CurryPos, ShiftKind,
};
pub use error::AlgebraError;
pub use law::{
    check_abelian, check_associative, check_group, check_monoid, check_semiheap,
    check_semiheap_bracket, check_semiheap_sampled, is_abelian, is_associative, is_semiheap,
    reverse, LawReport, SampledLawReport, Violation, DEFAULT_WITNESS_LIMIT,
};
pub use switch::{
    check_switch, check_switch_monoid_laws, is_switch, semiheap_from_switch, SwitchMonoid,
};
pub use table::{BinaryTable, Bracket, Endomap, TernaryTable};
pub use twist::{check_warp, is_twist, is_warp, twist};

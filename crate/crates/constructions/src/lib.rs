//! Ready-made semiheaps, diheaps, and the semigroups they come from.
//!
//! Everything here produces tables (or lazy brackets, where tables would not
//! fit in memory) for the `semiheaps-core` checkers to consume: heaps of
//! groups, involuted-semigroup semiheaps, cyclic sums, odd residues, relation
//! semiheaps, cubic-matrix semiheaps, and a few stock groups and monoids to
//! feed them.

mod cubic;
mod factories;
mod groups;
mod lazy;
mod relation;

pub use cubic::{cubic_matrix_semiheap, CubicScalars, MAX_CUBIC_SIDE};
pub use factories::{
    constant_semigroup, cyclic_sum_diheap, group_heap, involuted_semigroup_semiheap,
    odd_residue_value, odd_residues,
};
pub use groups::{
    boolean_matrix_monoid, boolean_matrix_transpose, cyclic_group, klein_group, symmetric_group_3,
};
pub use lazy::LazyTernar;
pub use relation::{
    relation_semiheap, relation_semiheap_lazy, Relation, DENSE_RELATION_BITS, LAZY_RELATION_BITS,
};

//! Binary relations A → B encoded as integers, and the semiheap they form
//! under [R₁,R₂,R₃] = R₁ ∘ R₂ᵀ ∘ R₃.

use semiheaps_core::{is_semiheap, AlgebraError, TernaryTable};

use crate::lazy::LazyTernar;

/// Largest |A|·|B| for which the 2^(|A||B|)-element carrier is materialized
/// as a dense table.
pub const DENSE_RELATION_BITS: usize = 4;
/// Largest |A|·|B| served lazily; keeps every relation code within u32.
pub const LAZY_RELATION_BITS: usize = 24;

/// A relation between {0..|A|} and {0..|B|}, held as a membership bitset
/// with pair (x, y) at bit x·|B| + y.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Relation {
    source: usize,
    target: usize,
    bits: u64,
}

impl Relation {
    pub fn new(source: usize, target: usize, bits: u64) -> Result<Self, AlgebraError> {
        if source == 0 || target == 0 {
            return Err(AlgebraError::EmptyCarrier);
        }
        let width = source * target;
        if width > LAZY_RELATION_BITS {
            return Err(AlgebraError::CarrierTooLarge {
                n: width,
                limit: LAZY_RELATION_BITS,
            });
        }
        if bits >> width != 0 {
            return Err(AlgebraError::EntryRange {
                value: bits as usize,
                n: 1 << width,
            });
        }
        Ok(Self {
            source,
            target,
            bits,
        })
    }

    /// The identity relation on a square carrier.
    pub fn diagonal(size: usize) -> Result<Self, AlgebraError> {
        let bits = (0..size).fold(0u64, |acc, i| acc | 1 << (i * size + i));
        Self::new(size, size, bits)
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn contains(&self, x: usize, y: usize) -> bool {
        debug_assert!(x < self.source && y < self.target);
        self.bits >> (x * self.target + y) & 1 == 1
    }

    /// The converse relation Rᵀ ⊆ B×A.
    pub fn transpose(&self) -> Self {
        let mut bits = 0u64;
        for x in 0..self.source {
            for y in 0..self.target {
                if self.contains(x, y) {
                    bits |= 1 << (y * self.source + x);
                }
            }
        }
        Self {
            source: self.target,
            target: self.source,
            bits,
        }
    }

    /// Relational composition: (x, z) ∈ R;S iff some y has (x,y) ∈ R and
    /// (y,z) ∈ S.
    pub fn compose(&self, other: &Relation) -> Result<Self, AlgebraError> {
        if self.target != other.source {
            return Err(AlgebraError::CarrierMismatch {
                left: self.target,
                right: other.source,
            });
        }
        let mut bits = 0u64;
        for x in 0..self.source {
            for z in 0..other.target {
                if (0..self.target).any(|y| self.contains(x, y) && other.contains(y, z)) {
                    bits |= 1 << (x * other.target + z);
                }
            }
        }
        Ok(Self {
            source: self.source,
            target: other.target,
            bits,
        })
    }

    /// The ternary product R₁ ∘ R₂ᵀ ∘ R₃ of same-shaped relations.
    pub fn bracket(&self, second: &Relation, third: &Relation) -> Result<Self, AlgebraError> {
        self.compose(&second.transpose())?.compose(third)
    }
}

/// The semiheap of all relations A → B as a dense table; element k is the
/// relation with bitset k.
pub fn relation_semiheap(size_a: usize, size_b: usize) -> Result<TernaryTable, AlgebraError> {
    if size_a == 0 || size_b == 0 {
        return Err(AlgebraError::EmptyCarrier);
    }
    let width = size_a * size_b;
    if width > DENSE_RELATION_BITS {
        return Err(AlgebraError::CarrierTooLarge {
            n: width,
            limit: DENSE_RELATION_BITS,
        });
    }
    let n = 1usize << width;
    let t = TernaryTable::from_fn(n, |a, b, c| {
        let r1 = Relation::new(size_a, size_b, a as u64).expect("in range");
        let r2 = Relation::new(size_a, size_b, b as u64).expect("in range");
        let r3 = Relation::new(size_a, size_b, c as u64).expect("in range");
        r1.bracket(&r2, &r3).expect("same shape").bits() as usize
    })?;
    debug_assert!(is_semiheap(&t));
    Ok(t)
}

/// The same semiheap served lazily for carriers too large to materialize;
/// the diagonal relation is distinguished on square carriers.
pub fn relation_semiheap_lazy(size_a: usize, size_b: usize) -> Result<LazyTernar, AlgebraError> {
    if size_a == 0 || size_b == 0 {
        return Err(AlgebraError::EmptyCarrier);
    }
    let width = size_a * size_b;
    if width > LAZY_RELATION_BITS {
        return Err(AlgebraError::CarrierTooLarge {
            n: width,
            limit: LAZY_RELATION_BITS,
        });
    }
    let size = 1u64 << width;
    let mut lazy = LazyTernar::new(size, move |a, b, c| {
        let r1 = Relation::new(size_a, size_b, a).expect("in range");
        let r2 = Relation::new(size_a, size_b, b).expect("in range");
        let r3 = Relation::new(size_a, size_b, c).expect("in range");
        r1.bracket(&r2, &r3).expect("same shape").bits()
    })?;
    if size_a == size_b {
        lazy.distinguish("diagonal", Relation::diagonal(size_a)?.bits())?;
    }
    Ok(lazy)
}

//! Dense operation tables on carriers {0..n-1} and the evaluation
//! interface shared with lazily computed brackets.

use std::fmt;

use crate::error::AlgebraError;

fn validate_entries(n: usize, expected: usize, entries: &[usize]) -> Result<(), AlgebraError> {
    if n == 0 {
        return Err(AlgebraError::EmptyCarrier);
    }
    if entries.len() != expected {
        return Err(AlgebraError::TableLength {
            n,
            expected,
            got: entries.len(),
        });
    }
    for &value in entries {
        if value >= n {
            return Err(AlgebraError::EntryRange { value, n });
        }
    }
    Ok(())
}

/// Anything that can evaluate a ternary bracket on a carrier {0..size-1}.
///
/// Dense tables and lazily computed brackets implement this, so every law
/// checker works on either representation.
pub trait Bracket {
    fn size(&self) -> u64;
    fn bracket(&self, a: u64, b: u64, c: u64) -> u64;
}

/// A total ternary operation, stored densely in row-major (a, b, c) order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TernaryTable {
    n: usize,
    entries: Vec<usize>,
}

impl TernaryTable {
    pub fn new(n: usize, entries: Vec<usize>) -> Result<Self, AlgebraError> {
        validate_entries(n, n * n * n, &entries)?;
        Ok(Self { n, entries })
    }

    /// Builds the table by evaluating `f` on every triple; entries are validated.
    pub fn from_fn(
        n: usize,
        mut f: impl FnMut(usize, usize, usize) -> usize,
    ) -> Result<Self, AlgebraError> {
        if n == 0 {
            return Err(AlgebraError::EmptyCarrier);
        }
        let mut entries = Vec::with_capacity(n * n * n);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    entries.push(f(a, b, c));
                }
            }
        }
        Self::new(n, entries)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Evaluates [a, b, c].
    #[inline]
    pub fn get(&self, a: usize, b: usize, c: usize) -> usize {
        debug_assert!(a < self.n && b < self.n && c < self.n);
        self.entries[(a * self.n + b) * self.n + c]
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn contains(&self, element: usize) -> bool {
        element < self.n
    }

    fn check_element(&self, value: usize) -> Result<(), AlgebraError> {
        if value < self.n {
            Ok(())
        } else {
            Err(AlgebraError::ElementRange { value, n: self.n })
        }
    }

    /// Validates that every given value names an element of the carrier.
    pub fn check_elements(&self, values: &[usize]) -> Result<(), AlgebraError> {
        values.iter().try_for_each(|&v| self.check_element(v))
    }
}

impl Bracket for TernaryTable {
    fn size(&self) -> u64 {
        self.n as u64
    }

    fn bracket(&self, a: u64, b: u64, c: u64) -> u64 {
        self.get(a as usize, b as usize, c as usize) as u64
    }
}

impl fmt::Debug for TernaryTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TernaryTable(n={};", self.n)?;
        for (i, e) in self.entries.iter().enumerate() {
            if i % (self.n * self.n) == 0 {
                write!(f, " |")?;
            }
            write!(f, " {e}")?;
        }
        write!(f, ")")
    }
}

/// A total binary operation. The identity element, when one exists, is
/// discovered on construction rather than declared by the caller.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryTable {
    n: usize,
    entries: Vec<usize>,
    identity: Option<usize>,
}

impl BinaryTable {
    pub fn new(n: usize, entries: Vec<usize>) -> Result<Self, AlgebraError> {
        validate_entries(n, n * n, &entries)?;
        let identity =
            (0..n).find(|&e| (0..n).all(|x| entries[e * n + x] == x && entries[x * n + e] == x));
        Ok(Self {
            n,
            entries,
            identity,
        })
    }

    pub fn from_fn(
        n: usize,
        mut f: impl FnMut(usize, usize) -> usize,
    ) -> Result<Self, AlgebraError> {
        if n == 0 {
            return Err(AlgebraError::EmptyCarrier);
        }
        let mut entries = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                entries.push(f(a, b));
            }
        }
        Self::new(n, entries)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Evaluates a · b.
    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        debug_assert!(a < self.n && b < self.n);
        self.entries[a * self.n + b]
    }

    /// The discovered two-sided identity, if the table has one.
    pub fn identity(&self) -> Option<usize> {
        self.identity
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// Validates that every given value names an element of the carrier.
    pub fn check_elements(&self, values: &[usize]) -> Result<(), AlgebraError> {
        for &value in values {
            if value >= self.n {
                return Err(AlgebraError::ElementRange { value, n: self.n });
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryTable(n={};", self.n)?;
        for (i, e) in self.entries.iter().enumerate() {
            if i % self.n == 0 {
                write!(f, " |")?;
            }
            write!(f, " {e}")?;
        }
        write!(f, ")")
    }
}

/// A total unary map on a carrier; twists, warps, switches, and shifts all
/// live here. Bijectivity is computed on demand, never assumed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Endomap {
    n: usize,
    image: Vec<usize>,
}

impl Endomap {
    pub fn new(n: usize, image: Vec<usize>) -> Result<Self, AlgebraError> {
        validate_entries(n, n, &image)?;
        Ok(Self { n, image })
    }

    pub fn identity(n: usize) -> Self {
        Self::new(n, (0..n).collect()).expect("carrier must be nonempty")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        debug_assert!(x < self.n);
        self.image[x]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn is_bijective(&self) -> bool {
        let mut seen = vec![false; self.n];
        self.image
            .iter()
            .all(|&y| !std::mem::replace(&mut seen[y], true))
    }

    pub fn is_involution(&self) -> bool {
        (0..self.n).all(|x| self.image[self.image[x]] == x)
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(x, &y)| x == y)
    }

    /// The inverse map, when this map is a bijection.
    pub fn inverse(&self) -> Option<Self> {
        let mut inv = vec![self.n; self.n];
        for (x, &y) in self.image.iter().enumerate() {
            if inv[y] != self.n {
                return None;
            }
            inv[y] = x;
        }
        Some(Self {
            n: self.n,
            image: inv,
        })
    }

    /// Composition self ∘ inner, i.e. x ↦ self(inner(x)).
    pub fn compose(&self, inner: &Endomap) -> Result<Self, AlgebraError> {
        if self.n != inner.n {
            return Err(AlgebraError::CarrierMismatch {
                left: self.n,
                right: inner.n,
            });
        }
        Ok(Self {
            n: self.n,
            image: (0..self.n).map(|x| self.image[inner.image[x]]).collect(),
        })
    }
}

impl fmt::Debug for Endomap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Endomap(")?;
        for (i, e) in self.image.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_empty_carrier() {
        assert_eq!(
            TernaryTable::new(0, vec![]),
            Err(AlgebraError::EmptyCarrier)
        );
        assert_eq!(BinaryTable::new(0, vec![]), Err(AlgebraError::EmptyCarrier));
        assert_eq!(Endomap::new(0, vec![]), Err(AlgebraError::EmptyCarrier));
    }

    #[test]
    fn rejects_out_of_range_entries() {
        assert_eq!(
            TernaryTable::new(2, vec![0; 7]),
            Err(AlgebraError::TableLength {
                n: 2,
                expected: 8,
                got: 7
            })
        );
        assert_eq!(
            TernaryTable::new(1, vec![1]),
            Err(AlgebraError::EntryRange { value: 1, n: 1 })
        );
    }

    #[test]
    #[allow(clippy::identity_op)]
    fn row_major_indexing() {
        let t = TernaryTable::from_fn(3, |a, b, c| (a + 2 * b + c) % 3).unwrap();
        assert_eq!(t.get(1, 2, 2), (1 + 4 + 2) % 3);
        assert_eq!(t.entries()[(1 * 3 + 2) * 3 + 2], t.get(1, 2, 2));
    }

    #[test]
    fn identity_is_discovered() {
        let z4 = BinaryTable::from_fn(4, |a, b| (a + b) % 4).unwrap();
        assert_eq!(z4.identity(), Some(0));
        let shifted = BinaryTable::from_fn(4, |a, b| (a + b + 1) % 4).unwrap();
        assert_eq!(shifted.identity(), Some(3));
        let constant = BinaryTable::from_fn(2, |_, _| 0).unwrap();
        assert_eq!(constant.identity(), None);
    }

    #[test]
    fn one_sided_identity_is_not_discovered() {
        // x * y = y: every element is a left identity, none is two-sided (n = 2).
        let t = BinaryTable::from_fn(2, |_, b| b).unwrap();
        assert_eq!(t.identity(), None);
    }

    #[test]
    fn endomap_bijectivity_and_inverse() {
        let swap = Endomap::new(2, vec![1, 0]).unwrap();
        assert!(swap.is_bijective());
        assert!(swap.is_involution());
        assert_eq!(swap.inverse(), Some(swap.clone()));

        let collapse = Endomap::new(2, vec![0, 0]).unwrap();
        assert!(!collapse.is_bijective());
        assert_eq!(collapse.inverse(), None);

        let cycle = Endomap::new(3, vec![1, 2, 0]).unwrap();
        let inv = cycle.inverse().unwrap();
        assert!(cycle.compose(&inv).unwrap().is_identity());
        assert!(inv.compose(&cycle).unwrap().is_identity());
    }

    #[test]
    fn compose_respects_order() {
        let f = Endomap::new(3, vec![1, 1, 2]).unwrap();
        let g = Endomap::new(3, vec![2, 0, 1]).unwrap();
        let fg = f.compose(&g).unwrap();
        assert_eq!(fg.image(), &[2, 1, 1]);
    }
}

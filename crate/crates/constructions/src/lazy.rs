//! Lazily evaluated ternary brackets for carriers too large to tabulate.

use std::collections::BTreeMap;
use std::fmt;

use semiheaps_core::{AlgebraError, Bracket};

/// A ternary algebra given by a pure bracket function over 0..size, with
/// optional named distinguished elements.
pub struct LazyTernar {
    size: u64,
    bracket: Box<dyn Fn(u64, u64, u64) -> u64 + Send + Sync>,
    distinguished: BTreeMap<String, u64>,
}

impl LazyTernar {
    pub fn new<F>(size: u64, bracket: F) -> Result<Self, AlgebraError>
    where
        F: Fn(u64, u64, u64) -> u64 + Send + Sync + 'static,
    {
        if size == 0 {
            return Err(AlgebraError::EmptyCarrier);
        }
        Ok(Self {
            size,
            bracket: Box::new(bracket),
            distinguished: BTreeMap::new(),
        })
    }

    /// Names an element so callers can refer to it without knowing the
    /// encoding.
    pub fn distinguish(&mut self, name: &str, element: u64) -> Result<(), AlgebraError> {
        if element >= self.size {
            return Err(AlgebraError::ElementRange {
                value: element as usize,
                n: self.size as usize,
            });
        }
        self.distinguished.insert(name.to_string(), element);
        Ok(())
    }

    pub fn distinguished(&self) -> &BTreeMap<String, u64> {
        &self.distinguished
    }

    pub fn element(&self, name: &str) -> Option<u64> {
        self.distinguished.get(name).copied()
    }
}

impl Bracket for LazyTernar {
    fn size(&self) -> u64 {
        self.size
    }

    fn bracket(&self, a: u64, b: u64, c: u64) -> u64 {
        debug_assert!(a < self.size && b < self.size && c < self.size);
        (self.bracket)(a, b, c)
    }
}

impl fmt::Debug for LazyTernar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LazyTernar")
            .field("size", &self.size)
            .field("distinguished", &self.distinguished)
            .finish_non_exhaustive()
    }
}

use thiserror::Error;

/// Error type shared by every table constructor and checker in the workspace.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("carrier must contain at least one element")]
    EmptyCarrier,

    #[error("table holds {got} entries but a carrier of {n} elements needs {expected}")]
    TableLength {
        n: usize,
        expected: usize,
        got: usize,
    },

    #[error("table entry {value} lies outside the carrier 0..{n}")]
    EntryRange { value: usize, n: usize },

    #[error("element {value} lies outside the carrier 0..{n}")]
    ElementRange { value: usize, n: usize },

    #[error("carrier sizes differ: {left} vs {right}")]
    CarrierMismatch { left: usize, right: usize },

    #[error("operation is not associative: witness ({a}, {b}, {c})")]
    NotAssociative { a: usize, b: usize, c: usize },

    #[error("operation has no identity element")]
    NoIdentity,

    #[error("element {element} has no inverse")]
    NoInverse { element: usize },

    #[error("table is not a semiheap")]
    NotSemiheap,

    #[error("({a}, {b}) is not a full biunit pair")]
    NotBiunitPair { a: usize, b: usize },

    #[error("element {element} is not a biunit")]
    NotBiunit { element: usize },

    #[error("not a diheap: element {element} is the first coordinate of no full biunit pair")]
    NotDiheap { element: usize },

    #[error("map fails the switch law: witness ({a}, {b}, {c})")]
    NotSwitch { a: usize, b: usize, c: usize },

    #[error("switch is not bijective")]
    SwitchNotBijective,

    #[error("map sends {u} to {got}, not to the identity {identity}")]
    NotUnitPreimage {
        u: usize,
        got: usize,
        identity: usize,
    },

    #[error("star map is not an involution: witness {element}")]
    NotInvolution { element: usize },

    #[error("star map is not an antihomomorphism: witness ({a}, {b})")]
    NotAntihomomorphism { a: usize, b: usize },

    #[error("map is not a bijection")]
    NotBijective,

    #[error("carrier of {n} elements exceeds the limit of {limit} for this operation")]
    CarrierTooLarge { n: usize, limit: usize },
}

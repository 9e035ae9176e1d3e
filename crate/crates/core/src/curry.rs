//! Binary and unary curryings of a ternary operation.

use crate::error::AlgebraError;
use crate::table::{BinaryTable, Endomap, TernaryTable};

/// Which argument slot the curried element occupies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CurryPos {
    Left,
    Middle,
    Right,
}

/// Curries one element into the bracket:
/// left gives x ⋄ y = [a,x,y], middle gives [x,a,y], right gives [x,y,a].
/// The middle case is the a-retract of the ternar.
pub fn curry_binary(
    t: &TernaryTable,
    position: CurryPos,
    a: usize,
) -> Result<BinaryTable, AlgebraError> {
    t.check_elements(&[a])?;
    BinaryTable::from_fn(t.n(), |x, y| match position {
        CurryPos::Left => t.get(a, x, y),
        CurryPos::Middle => t.get(x, a, y),
        CurryPos::Right => t.get(x, y, a),
    })
}

/// The a-retract x ⋄ y = [x, a, y].
pub fn retract(t: &TernaryTable, a: usize) -> Result<BinaryTable, AlgebraError> {
    curry_binary(t, CurryPos::Middle, a)
}

/// Which unary shift a curried pair produces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShiftKind {
    /// x ↦ [a, b, x]
    Left,
    /// x ↦ [a, x, b]
    Middle,
    /// x ↦ [x, a, b]
    Right,
}

/// Curries a pair into the bracket, yielding one of the three shifts.
pub fn shift(
    t: &TernaryTable,
    kind: ShiftKind,
    a: usize,
    b: usize,
) -> Result<Endomap, AlgebraError> {
    t.check_elements(&[a, b])?;
    let image = (0..t.n())
        .map(|x| match kind {
            ShiftKind::Left => t.get(a, b, x),
            ShiftKind::Middle => t.get(a, x, b),
            ShiftKind::Right => t.get(x, a, b),
        })
        .collect();
    Endomap::new(t.n(), image)
}

pub fn left_shift(t: &TernaryTable, a: usize, b: usize) -> Result<Endomap, AlgebraError> {
    shift(t, ShiftKind::Left, a, b)
}

pub fn middle_shift(t: &TernaryTable, a: usize, b: usize) -> Result<Endomap, AlgebraError> {
    shift(t, ShiftKind::Middle, a, b)
}

pub fn right_shift(t: &TernaryTable, a: usize, b: usize) -> Result<Endomap, AlgebraError> {
    shift(t, ShiftKind::Right, a, b)
}

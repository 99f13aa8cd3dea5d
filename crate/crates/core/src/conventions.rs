//! Shared index and sign conventions.
//!
//! Everything that evaluates diagrams — the matrix functor, the state-sum
//! oracle, the 1d cobordism evaluation — must agree on how composite tensor
//! indices are ordered, which smoothing of a crossing carries which weight,
//! and how a crossing contributes to the writhe. Those choices live here and
//! nowhere else.

use crate::tangle::Sign;

/// Composite index for a pair of factors, left factor major:
/// `(i1, i2) -> i1 * dim2 + i2`. The leftmost strand is the most significant
/// digit of a tensor index throughout the crate.
#[inline]
pub fn kron_index(i1: usize, dim2: usize, i2: usize) -> usize {
    i1 * dim2 + i2
}

/// The two planar smoothings of a crossing.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Smoothing {
    /// Two parallel strands: bottom-left to top-left, bottom-right to top-right.
    Vertical,
    /// Cap below, cup above: bottom pair joined, top pair joined.
    CupCap,
}

/// Smoothings of a crossing with the exponent of the bracket variable each one
/// carries: an over-crossing is `A * Vertical + A^-1 * CupCap`, an
/// under-crossing the reverse.
pub fn smoothings(over: bool) -> [(Smoothing, i64); 2] {
    if over {
        [(Smoothing::Vertical, 1), (Smoothing::CupCap, -1)]
    } else {
        [(Smoothing::Vertical, -1), (Smoothing::CupCap, 1)]
    }
}

/// Writhe contribution of a crossing whose strands run in vertical directions
/// `s` (bottom-left to top-right strand) and `t` (bottom-right to top-left
/// strand). An over-crossing counts +1 when the directions agree, -1 when they
/// disagree; an under-crossing is the negation.
pub fn crossing_sign(over: bool, s: Sign, t: Sign) -> i64 {
    let aligned = if s == t { 1 } else { -1 };
    if over {
        aligned
    } else {
        -aligned
    }
}

//! Evaluation of sliced diagrams: a monoidal functor into matrices.
//!
//! A sign word of length w is sent to the w-fold tensor power of the strand
//! module, a slice to the Kronecker product of its generator matrices
//! (leftmost factor most significant), and a diagram to the product of its
//! slice matrices from the bottom up. Closed diagrams evaluate to 1x1
//! matrices; [`link_invariant`] post-processes that scalar into a framing-
//! corrected invariant.

mod bracket;
mod theory;

pub use bracket::bracket_statesum;
pub use theory::{
    bracket_theory, check_theory, default_theory, TheoryCheck, TheoryData, TheoryReport,
};

use alloc::vec::Vec;
use core::fmt;

use crate::ring::{LaurentPoly, RingError, RingMatrix};
use crate::tangle::{Generator, SignWord, SlicedDiagram};

/// Interface words wider than this are refused: the slice matrices are dense
/// and grow as `dim^(2 width)`.
pub const MAX_EVAL_WIDTH: usize = 10;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum EvalError {
    /// The diagram has an interface word wider than [`MAX_EVAL_WIDTH`].
    TooWide { width: usize, max: usize },
    /// `link_invariant` needs a closed diagram.
    NotClosed { source: SignWord, target: SignWord },
    /// The state sum enumerates `2^crossings` resolutions and refuses to
    /// run past this.
    TooManyCrossings { count: usize, max: usize },
    Ring(RingError),
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalError::TooWide { width, max } => {
                write!(f, "diagram is {} strands wide; evaluation caps at {}", width, max)
            }
            EvalError::NotClosed { source, target } => write!(
                f,
                "link invariants need a closed diagram, got \"{}\" -> \"{}\"",
                source, target
            ),
            EvalError::TooManyCrossings { count, max } => {
                write!(f, "state sum over {} crossings; the oracle caps at {}", count, max)
            }
            EvalError::Ring(e) => write!(f, "{}", e),
        }
    }
}

impl From<RingError> for EvalError {
    fn from(e: RingError) -> Self {
        EvalError::Ring(e)
    }
}

impl core::error::Error for EvalError {}

fn slice_matrix(slice: &[Generator], th: &TheoryData) -> Result<RingMatrix, EvalError> {
    let mut m = RingMatrix::identity(th.var().clone(), 1);
    for g in slice {
        m = m.kronecker(th.generator_matrix(g))?;
    }
    Ok(m)
}

/// Evaluates a diagram to a `dim^target x dim^source` matrix.
pub fn eval(d: &SlicedDiagram, th: &TheoryData) -> Result<RingMatrix, EvalError> {
    let width = d.max_width();
    if width > MAX_EVAL_WIDTH {
        return Err(EvalError::TooWide { width, max: MAX_EVAL_WIDTH });
    }
    let dim_src = th.dim().pow(d.source().len() as u32);
    let mut acc = RingMatrix::identity(th.var().clone(), dim_src);
    for slice in d.slices() {
        acc = slice_matrix(slice, th)?.matmul(&acc)?;
    }
    Ok(acc)
}

/// The scalar value of a closed diagram.
pub fn eval_closed(d: &SlicedDiagram, th: &TheoryData) -> Result<LaurentPoly, EvalError> {
    if !d.source().is_empty() || !d.target().is_empty() {
        return Err(EvalError::NotClosed {
            source: d.source().clone(),
            target: d.target(),
        });
    }
    let m = eval(d, th)?;
    Ok(m.as_scalar().expect("closed diagrams evaluate to scalars").clone())
}

/// The invariant of a closed diagram and its intermediate values.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinkInvariantReport {
    pub writhe: i64,
    /// Raw scalar evaluation (an unknot gives the loop value δ).
    pub bracket: LaurentPoly,
    /// `kink^(-writhe) * bracket / δ`, so an unknot gives 1. Distinguishes
    /// links regardless of the diagram's framing.
    pub normalized: LaurentPoly,
    /// The normalized value rewritten in `q` with `A^e = q^(e / -4)`, when
    /// every exponent permits; `None` marks values that stay in `A`.
    pub jones: Option<LaurentPoly>,
}

/// Evaluates a closed diagram and corrects for framing: multiplies by
/// `kink^(-writhe)` and divides out one loop value so the unknot reports 1.
/// A diagram with no generators at all reports 1 directly.
pub fn link_invariant(d: &SlicedDiagram, th: &TheoryData) -> Result<LinkInvariantReport, EvalError> {
    let bracket = eval_closed(d, th)?;
    let writhe = d.writhe();
    let corrected = if writhe >= 0 {
        &bracket * &th.kink_inv().pow(writhe as u32)
    } else {
        &bracket * &th.kink().pow((-writhe) as u32)
    };
    let has_generators = d.slices().iter().any(|s| !s.is_empty());
    let normalized =
        if has_generators { corrected.div_exact(th.delta())? } else { corrected };
    let jones = jones_form(&normalized);
    Ok(LinkInvariantReport { writhe, bracket, normalized, jones })
}

/// Rewrites a polynomial in `A` as one in `q = A^-4` when all exponents are
/// multiples of four.
fn jones_form(p: &LaurentPoly) -> Option<LaurentPoly> {
    if p.terms().any(|(e, _)| e % 4 != 0) {
        return None;
    }
    let terms: Vec<(i64, num_bigint::BigInt)> =
        p.terms().map(|(e, c)| (e / -4, c.clone())).collect();
    Some(LaurentPoly::from_terms("q", terms))
}

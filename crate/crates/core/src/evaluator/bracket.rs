//! Brute-force state sum for closed diagrams, used as an oracle against the
//! matrix evaluation. Every crossing is resolved into each of its two planar
//! smoothings; each resolved diagram is a 1-cobordism composite whose circles
//! are counted exactly, contributing `A^(sum of smoothing weights) * δ^circles`.

use crate::cobordism::{Matching1, Point};
use crate::conventions::{self, Smoothing};
use crate::ring::LaurentPoly;
use crate::tangle::{Generator, SlicedDiagram};

use super::{EvalError, TheoryData};

/// Caps the number of crossings: the sum has `2^count` terms.
pub const MAX_STATESUM_CROSSINGS: usize = 24;

fn resolved_matching(g: &Generator, smoothing: Smoothing) -> Matching1 {
    let m = match g {
        Generator::Id(_) => {
            Matching1::unoriented(1, 1, &[(Point::Bottom(0), Point::Top(0))], 0)
        }
        Generator::Cup(_) => Matching1::unoriented(0, 2, &[(Point::Top(0), Point::Top(1))], 0),
        Generator::Cap(_) => {
            Matching1::unoriented(2, 0, &[(Point::Bottom(0), Point::Bottom(1))], 0)
        }
        _ => match smoothing {
            Smoothing::Vertical => Matching1::unoriented(
                2,
                2,
                &[(Point::Bottom(0), Point::Top(0)), (Point::Bottom(1), Point::Top(1))],
                0,
            ),
            Smoothing::CupCap => Matching1::unoriented(
                2,
                2,
                &[(Point::Bottom(0), Point::Bottom(1)), (Point::Top(0), Point::Top(1))],
                0,
            ),
        },
    };
    m.expect("fixed matchings are well formed")
}

/// Evaluates a closed diagram by summing over all crossing resolutions.
/// Agrees with [`super::eval`] on closed diagrams; the empty diagram gives 1.
pub fn bracket_statesum(d: &SlicedDiagram, th: &TheoryData) -> Result<LaurentPoly, EvalError> {
    if !d.source().is_empty() || !d.target().is_empty() {
        return Err(EvalError::NotClosed {
            source: d.source().clone(),
            target: d.target(),
        });
    }
    let k = d.crossing_count();
    if k > MAX_STATESUM_CROSSINGS {
        return Err(EvalError::TooManyCrossings { count: k, max: MAX_STATESUM_CROSSINGS });
    }
    let mut total = LaurentPoly::zero(th.var().clone());
    for mask in 0u64..(1u64 << k) {
        let mut exp_sum = 0i64;
        let mut ci = 0u32;
        let mut cur = Matching1::empty();
        for slice in d.slices() {
            let mut m = Matching1::empty();
            for g in slice {
                let gm = match g.crossing() {
                    None => resolved_matching(g, Smoothing::Vertical),
                    Some(over) => {
                        let pick = ((mask >> ci) & 1) as usize;
                        ci += 1;
                        let (smoothing, e) = conventions::smoothings(over)[pick];
                        exp_sum += e;
                        resolved_matching(g, smoothing)
                    }
                };
                m = m.disjoint_union(&gm);
            }
            cur = m.after(&cur).expect("slice widths line up");
        }
        let term = th
            .delta()
            .pow(cur.circles() as u32);
        total = &total + &(&term * &LaurentPoly::monomial(th.var().clone(), 1, exp_sum));
    }
    Ok(total)
}

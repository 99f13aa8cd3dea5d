//! Sliced diagrams: morphisms of the oriented tangle category.
//!
//! A diagram is a bottom sign word plus a stack of slices, each slice a
//! left-to-right list of elementary generators. Composition stacks the second
//! diagram on top of the first; the tensor product places diagrams side by
//! side, padding the shorter one with identity slices on top.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::word::{Sign, SignWord};
use crate::conventions;

/// Elementary generator of a slice. Crossings store their input signs;
/// `Over` means the strand entering at the bottom-left passes over.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Generator {
    Id(Sign),
    /// Creates a pair of opposite strands: `() -> (s, -s)`.
    Cup(Sign),
    /// Annihilates a pair of opposite strands: `(s, -s) -> ()`.
    Cap(Sign),
    /// `(s, t) -> (t, s)`, bottom-left strand on top.
    Over(Sign, Sign),
    /// `(s, t) -> (t, s)`, bottom-left strand underneath.
    Under(Sign, Sign),
}

impl Generator {
    pub fn input_len(&self) -> usize {
        match self {
            Generator::Id(_) => 1,
            Generator::Cup(_) => 0,
            Generator::Cap(_) | Generator::Over(..) | Generator::Under(..) => 2,
        }
    }

    pub fn output_len(&self) -> usize {
        match self {
            Generator::Id(_) => 1,
            Generator::Cup(_) => 2,
            Generator::Cap(_) => 0,
            Generator::Over(..) | Generator::Under(..) => 2,
        }
    }

    pub fn input_signs(&self) -> Vec<Sign> {
        match *self {
            Generator::Id(s) => vec![s],
            Generator::Cup(_) => vec![],
            Generator::Cap(s) => vec![s, s.flip()],
            Generator::Over(s, t) | Generator::Under(s, t) => vec![s, t],
        }
    }

    pub fn output_signs(&self) -> Vec<Sign> {
        match *self {
            Generator::Id(s) => vec![s],
            Generator::Cup(s) => vec![s, s.flip()],
            Generator::Cap(_) => vec![],
            Generator::Over(s, t) | Generator::Under(s, t) => vec![t, s],
        }
    }

    /// `Some(true)` for `Over`, `Some(false)` for `Under`, `None` otherwise.
    pub fn crossing(&self) -> Option<bool> {
        match self {
            Generator::Over(..) => Some(true),
            Generator::Under(..) => Some(false),
            _ => None,
        }
    }

    /// Top-to-bottom reflection with strand orientations carried along, so
    /// that boundary words are preserved: cups and caps trade places, and a
    /// crossing's two strands swap roles, turning over into under (reflection
    /// negates crossing signs).
    pub fn flipped(&self) -> Generator {
        match *self {
            Generator::Id(s) => Generator::Id(s),
            Generator::Cup(s) => Generator::Cap(s),
            Generator::Cap(s) => Generator::Cup(s),
            Generator::Over(s, t) => Generator::Under(t, s),
            Generator::Under(s, t) => Generator::Over(t, s),
        }
    }

    /// Mirror image: over-crossings become under-crossings in place.
    pub fn mirrored(&self) -> Generator {
        match *self {
            Generator::Over(s, t) => Generator::Under(s, t),
            Generator::Under(s, t) => Generator::Over(s, t),
            g => g,
        }
    }
}

/// Validation failure inside one slice. Indices are 1-based for reporting.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ValidationError {
    pub slice: usize,
    pub column: usize,
    pub reason: String,
}

impl fmt::Display for ValidationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "slice {}, column {}: {}", self.slice, self.column, self.reason)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum TangleError {
    Validation(ValidationError),
    /// `compose` requires the target of the first diagram to equal the source
    /// of the second.
    BoundaryMismatch { expected: SignWord, found: SignWord },
    /// Braid letter out of range (letters are nonzero with |letter| < n).
    BraidLetter { index: usize, letter: i64 },
    /// Braids need at least one strand.
    BraidStrands,
    /// Trace closure needs equal source and target words.
    ClosureBoundary { source: SignWord, target: SignWord },
    /// Plat closure needs words of the form (s, -s, t, -t, ...).
    PlatWord { word: SignWord, column: usize },
    /// A move did not apply at the requested location.
    MoveNotApplicable(String),
}

impl fmt::Display for TangleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TangleError::Validation(e) => write!(f, "invalid diagram: {}", e),
            TangleError::BoundaryMismatch { expected, found } => {
                write!(f, "boundary mismatch: expected \"{}\", found \"{}\"", expected, found)
            }
            TangleError::BraidLetter { index, letter } => {
                write!(f, "braid letter {} at position {} is out of range", letter, index + 1)
            }
            TangleError::BraidStrands => write!(f, "braids need at least one strand"),
            TangleError::ClosureBoundary { source, target } => write!(
                f,
                "trace closure needs source = target, got \"{}\" and \"{}\"",
                source, target
            ),
            TangleError::PlatWord { word, column } => {
                write!(f, "word \"{}\" is not plat-closable at column {}", word, column)
            }
            TangleError::MoveNotApplicable(reason) => {
                write!(f, "move not applicable: {}", reason)
            }
        }
    }
}

impl core::error::Error for TangleError {}

/// A sliced oriented tangle diagram. Structural equality: two diagrams are
/// equal only slice by slice.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SlicedDiagram {
    bottom: SignWord,
    slices: Vec<Vec<Generator>>,
}

impl SlicedDiagram {
    /// Builds and validates a diagram.
    pub fn new(bottom: SignWord, slices: Vec<Vec<Generator>>) -> Result<Self, TangleError> {
        let d = SlicedDiagram { bottom, slices };
        d.validate()?;
        Ok(d)
    }

    /// The identity morphism of `w`: a single slice of identity strands
    /// (the identity of the empty word is the empty diagram).
    pub fn identity(w: &SignWord) -> Self {
        let slices = if w.is_empty() {
            vec![]
        } else {
            vec![w.iter().map(Generator::Id).collect()]
        };
        SlicedDiagram { bottom: w.clone(), slices }
    }

    pub fn empty() -> Self {
        SlicedDiagram { bottom: SignWord::empty(), slices: vec![] }
    }

    pub fn source(&self) -> &SignWord {
        &self.bottom
    }

    pub fn slices(&self) -> &[Vec<Generator>] {
        &self.slices
    }

    pub fn num_slices(&self) -> usize {
        self.slices.len()
    }

    /// Checks that each slice consumes exactly the word below it with matching
    /// signs; reports the first failure with 1-based slice and column.
    pub fn validate(&self) -> Result<(), TangleError> {
        let mut word = self.bottom.clone();
        for (si, slice) in self.slices.iter().enumerate() {
            let mut pos = 0usize;
            let mut out = Vec::new();
            for g in slice {
                for (k, expect) in g.input_signs().iter().enumerate() {
                    match word.get(pos + k) {
                        Some(found) if found == *expect => {}
                        Some(found) => {
                            return Err(TangleError::Validation(ValidationError {
                                slice: si + 1,
                                column: pos + k + 1,
                                reason: format!(
                                    "{:?} expects '{}' but the strand is '{}'",
                                    g, expect, found
                                ),
                            }))
                        }
                        None => {
                            return Err(TangleError::Validation(ValidationError {
                                slice: si + 1,
                                column: pos + k + 1,
                                reason: format!("{:?} reaches past the end of the word", g),
                            }))
                        }
                    }
                }
                pos += g.input_len();
                out.extend(g.output_signs());
            }
            if pos != word.len() {
                return Err(TangleError::Validation(ValidationError {
                    slice: si + 1,
                    column: pos + 1,
                    reason: format!("slice consumes {} of {} strands", pos, word.len()),
                }));
            }
            word = SignWord::new(out);
        }
        Ok(())
    }

    /// The word at the top, computed by walking the slices.
    pub fn target(&self) -> SignWord {
        let mut word = self.bottom.clone();
        for slice in &self.slices {
            let mut out = Vec::new();
            for g in slice {
                out.extend(g.output_signs());
            }
            word = SignWord::new(out);
        }
        word
    }

    /// All interface words bottom to top; length `num_slices() + 1`.
    pub fn interface_words(&self) -> Vec<SignWord> {
        let mut words = Vec::with_capacity(self.slices.len() + 1);
        let mut word = self.bottom.clone();
        words.push(word.clone());
        for slice in &self.slices {
            let mut out = Vec::new();
            for g in slice {
                out.extend(g.output_signs());
            }
            word = SignWord::new(out);
            words.push(word.clone());
        }
        words
    }

    /// Width of the widest interface word.
    pub fn max_width(&self) -> usize {
        self.interface_words().iter().map(SignWord::len).max().unwrap_or(0)
    }

    /// `top ∘ bottom`: stacks `top` on `bottom` (bottom acts first).
    pub fn compose(top: &SlicedDiagram, bottom: &SlicedDiagram) -> Result<SlicedDiagram, TangleError> {
        let mid = bottom.target();
        if mid != *top.source() {
            return Err(TangleError::BoundaryMismatch {
                expected: mid,
                found: top.source().clone(),
            });
        }
        let mut slices = bottom.slices.clone();
        slices.extend(top.slices.iter().cloned());
        Ok(SlicedDiagram { bottom: bottom.bottom.clone(), slices })
    }

    /// Side-by-side tensor product; the diagram with fewer slices is padded
    /// with identity slices on top. Deterministic slice alignment.
    pub fn tensor(left: &SlicedDiagram, right: &SlicedDiagram) -> SlicedDiagram {
        let bottom = left.bottom.concat(&right.bottom);
        let n = left.slices.len().max(right.slices.len());
        let left_top = left.target();
        let right_top = right.target();
        let mut slices = Vec::with_capacity(n);
        for i in 0..n {
            let mut slice = match left.slices.get(i) {
                Some(s) => s.clone(),
                None => left_top.iter().map(Generator::Id).collect(),
            };
            match right.slices.get(i) {
                Some(s) => slice.extend(s.iter().copied()),
                None => slice.extend(right_top.iter().map(Generator::Id)),
            }
            slices.push(slice);
        }
        SlicedDiagram { bottom, slices }
    }

    /// Sum of crossing signs (see [`conventions::crossing_sign`]).
    pub fn writhe(&self) -> i64 {
        let mut w = 0;
        for slice in &self.slices {
            for g in slice {
                if let (Some(over), [s, t]) = (g.crossing(), g.input_signs().as_slice()) {
                    w += conventions::crossing_sign(over, *s, *t);
                }
            }
        }
        w
    }

    /// Number of crossing generators.
    pub fn crossing_count(&self) -> usize {
        self.slices
            .iter()
            .flat_map(|s| s.iter())
            .filter(|g| g.crossing().is_some())
            .count()
    }

    /// Top-to-bottom reflection with orientations carried along: swaps source
    /// and target words without involution and negates the writhe.
    pub fn flipped(&self) -> SlicedDiagram {
        let bottom = self.target();
        let slices = self
            .slices
            .iter()
            .rev()
            .map(|slice| slice.iter().map(Generator::flipped).collect())
            .collect();
        SlicedDiagram { bottom, slices }
    }

    /// Mirror image: every crossing swapped over<->under, geometry unchanged.
    pub fn mirror(&self) -> SlicedDiagram {
        let slices = self
            .slices
            .iter()
            .map(|slice| slice.iter().map(Generator::mirrored).collect())
            .collect();
        SlicedDiagram { bottom: self.bottom.clone(), slices }
    }

    /// Diagram of a braid word on `n` strands, one slice per letter. Letter
    /// `+i` is an over-crossing of strands `i, i+1` (1-based), `-i` the
    /// under-crossing. All strands point up when `upward`, else down.
    pub fn braid(word: &[i64], n: usize, upward: bool) -> Result<SlicedDiagram, TangleError> {
        if n == 0 {
            return Err(TangleError::BraidStrands);
        }
        let sign = if upward { Sign::Plus } else { Sign::Minus };
        let bottom = SignWord::repeated(sign, n);
        let mut slices = Vec::with_capacity(word.len());
        for (index, &letter) in word.iter().enumerate() {
            let i = letter.unsigned_abs() as usize;
            if letter == 0 || i >= n {
                return Err(TangleError::BraidLetter { index, letter });
            }
            let mut slice: Vec<Generator> = Vec::with_capacity(n - 1);
            slice.extend((0..i - 1).map(|_| Generator::Id(sign)));
            slice.push(if letter > 0 {
                Generator::Over(sign, sign)
            } else {
                Generator::Under(sign, sign)
            });
            slice.extend((i + 1..n).map(|_| Generator::Id(sign)));
            slices.push(slice);
        }
        Ok(SlicedDiagram { bottom, slices })
    }

    /// Trace closure: routes every top point around the right side back to the
    /// matching bottom point with nested arcs. Requires source = target.
    pub fn closure_trace(&self) -> Result<SlicedDiagram, TangleError> {
        let w = self.bottom.clone();
        let top = self.target();
        if w != top {
            return Err(TangleError::ClosureBoundary { source: w, target: top });
        }
        let n = w.len();
        let returns: SignWord = w.involute().reversed();
        let mut slices: Vec<Vec<Generator>> = Vec::new();
        // Bottom arcs, outermost first: after k slices the word is
        // w[..k] ++ reverse(involute(w[..k])).
        for k in 0..n {
            let mut slice: Vec<Generator> = Vec::new();
            slice.extend(w.iter().take(k).map(Generator::Id));
            slice.push(Generator::Cup(w.get(k).unwrap()));
            slice.extend((0..k).map(|j| Generator::Id(w.get(k - 1 - j).unwrap().flip())));
            slices.push(slice);
        }
        // The diagram itself, with identity strands for the returns.
        for slice in &self.slices {
            let mut s = slice.clone();
            s.extend(returns.iter().map(Generator::Id));
            slices.push(s);
        }
        // Top arcs, innermost first.
        for k in (0..n).rev() {
            let mut slice: Vec<Generator> = Vec::new();
            slice.extend(w.iter().take(k).map(Generator::Id));
            slice.push(Generator::Cap(w.get(k).unwrap()));
            slice.extend((0..k).map(|j| Generator::Id(w.get(k - 1 - j).unwrap().flip())));
            slices.push(slice);
        }
        SlicedDiagram::new(SignWord::empty(), slices)
    }

    /// Plat closure: caps off adjacent pairs. Both boundary words must consist
    /// of pairs `(s, -s)`.
    pub fn closure_plat(&self) -> Result<SlicedDiagram, TangleError> {
        let cups = plat_pairs(&self.bottom)?;
        let top = self.target();
        let caps = plat_pairs(&top)?;
        let mut slices: Vec<Vec<Generator>> = Vec::new();
        if !cups.is_empty() {
            slices.push(cups.iter().map(|s| Generator::Cup(*s)).collect());
        }
        slices.extend(self.slices.iter().cloned());
        if !caps.is_empty() {
            slices.push(caps.iter().map(|s| Generator::Cap(*s)).collect());
        }
        SlicedDiagram::new(SignWord::empty(), slices)
    }
}

fn plat_pairs(w: &SignWord) -> Result<Vec<Sign>, TangleError> {
    if !w.len().is_multiple_of(2) {
        return Err(TangleError::PlatWord { word: w.clone(), column: w.len() });
    }
    let mut pairs = Vec::with_capacity(w.len() / 2);
    for i in (0..w.len()).step_by(2) {
        let (s, t) = (w.get(i).unwrap(), w.get(i + 1).unwrap());
        if t != s.flip() {
            return Err(TangleError::PlatWord { word: w.clone(), column: i + 2 });
        }
        pairs.push(s);
    }
    Ok(pairs)
}

impl fmt::Debug for SlicedDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "bottom: \"{}\"", self.bottom)?;
        for slice in &self.slices {
            writeln!(f, "  {:?}", slice)?;
        }
        Ok(())
    }
}

/// Input and output start columns of each generator in a slice.
pub(crate) struct SliceLayout {
    pub in_start: Vec<usize>,
    pub out_start: Vec<usize>,
}

pub(crate) fn layout(slice: &[Generator]) -> SliceLayout {
    let mut in_start = Vec::with_capacity(slice.len());
    let mut out_start = Vec::with_capacity(slice.len());
    let (mut i, mut o) = (0usize, 0usize);
    for g in slice {
        in_start.push(i);
        out_start.push(o);
        i += g.input_len();
        o += g.output_len();
    }
    SliceLayout { in_start, out_start }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> SignWord {
        SignWord::parse(s).unwrap()
    }

    #[test]
    fn identity_and_empty() {
        let id = SlicedDiagram::identity(&w("+-"));
        assert_eq!(id.num_slices(), 1);
        assert_eq!(id.target(), w("+-"));
        assert_eq!(SlicedDiagram::identity(&SignWord::empty()), SlicedDiagram::empty());
    }

    #[test]
    fn validation_rejects_bad_cap() {
        // cap over (++) must fail at slice 1
        let d = SlicedDiagram::new(w("++"), vec![vec![Generator::Cap(Sign::Plus)]]);
        match d {
            Err(TangleError::Validation(e)) => {
                assert_eq!(e.slice, 1);
                assert_eq!(e.column, 2);
            }
            other => panic!("expected validation error, got {:?}", other.err()),
        }
    }

    #[test]
    fn validation_requires_full_consumption() {
        let d = SlicedDiagram::new(w("++"), vec![vec![Generator::Id(Sign::Plus)]]);
        assert!(matches!(d, Err(TangleError::Validation(_))));
    }

    #[test]
    fn bookkeeping_of_boundary_words() {
        // source "--+-+", cap in the middle, then a crossing: target "-+-"
        let d = SlicedDiagram::new(
            w("--+-+"),
            vec![
                vec![
                    Generator::Id(Sign::Minus),
                    Generator::Cap(Sign::Minus),
                    Generator::Id(Sign::Minus),
                    Generator::Id(Sign::Plus),
                ],
                vec![
                    Generator::Id(Sign::Minus),
                    Generator::Over(Sign::Minus, Sign::Plus),
                ],
            ],
        )
        .unwrap();
        assert_eq!(d.source(), &w("--+-+"));
        assert_eq!(d.target(), w("-+-"));
    }

    #[test]
    fn compose_checks_boundaries() {
        let cup = SlicedDiagram::new(SignWord::empty(), vec![vec![Generator::Cup(Sign::Plus)]]).unwrap();
        let cap = SlicedDiagram::new(w("+-"), vec![vec![Generator::Cap(Sign::Plus)]]).unwrap();
        let circle = SlicedDiagram::compose(&cap, &cup).unwrap();
        assert_eq!(circle.source(), &SignWord::empty());
        assert_eq!(circle.target(), SignWord::empty());
        assert!(matches!(
            SlicedDiagram::compose(&cap, &cap),
            Err(TangleError::BoundaryMismatch { .. })
        ));
        // matching lengths but mismatched signs
        let minus_cup =
            SlicedDiagram::new(SignWord::empty(), vec![vec![Generator::Cup(Sign::Minus)]]).unwrap();
        assert!(matches!(
            SlicedDiagram::compose(&cap, &minus_cup),
            Err(TangleError::BoundaryMismatch { .. })
        ));
        // composing with the identity appends an identity slice
        let t = SlicedDiagram::compose(&SlicedDiagram::identity(&w("+-")), &cup).unwrap();
        assert_eq!(t.num_slices(), cup.num_slices() + 1);
    }

    #[test]
    fn tensor_pads_with_identities() {
        let cup = SlicedDiagram::new(SignWord::empty(), vec![vec![Generator::Cup(Sign::Plus)]]).unwrap();
        let two = SlicedDiagram::compose(
            &SlicedDiagram::identity(&w("+-")),
            &cup,
        )
        .unwrap();
        let t = SlicedDiagram::tensor(&two, &cup);
        t.validate().unwrap();
        assert_eq!(t.target(), w("+-+-"));
        // right factor is one slice shorter, so its top gets identity padding
        assert_eq!(t.slices()[1].len(), 2 + 2);
    }

    #[test]
    fn braid_words_and_writhe() {
        let b = SlicedDiagram::braid(&[1, 1, 1], 2, true).unwrap();
        assert_eq!(b.writhe(), 3);
        assert_eq!(b.crossing_count(), 3);
        let b = SlicedDiagram::braid(&[1, -2], 3, true).unwrap();
        assert_eq!(b.writhe(), 0);
        assert_eq!(SlicedDiagram::braid(&[], 3, true).unwrap().target(), w("+++"));
        assert!(matches!(
            SlicedDiagram::braid(&[3], 3, true),
            Err(TangleError::BraidLetter { index: 0, letter: 3 })
        ));
        assert!(matches!(
            SlicedDiagram::braid(&[0], 2, true),
            Err(TangleError::BraidLetter { .. })
        ));
    }

    #[test]
    fn trace_closure_of_a_braid_is_closed() {
        let b = SlicedDiagram::braid(&[1], 2, true).unwrap();
        let c = b.closure_trace().unwrap();
        assert!(c.source().is_empty());
        assert!(c.target().is_empty());
        assert_eq!(c.writhe(), 1);
        // closure adds no crossings
        assert_eq!(c.crossing_count(), 1);
    }

    #[test]
    fn plat_closure_requires_paired_words() {
        let id = SlicedDiagram::identity(&w("+-+-"));
        let c = id.closure_plat().unwrap();
        assert!(c.source().is_empty() && c.target().is_empty());
        let id = SlicedDiagram::identity(&w("++"));
        assert!(matches!(id.closure_plat(), Err(TangleError::PlatWord { column: 2, .. })));
    }

    #[test]
    fn flipped_swaps_source_and_target() {
        let d = SlicedDiagram::new(
            w("+"),
            vec![
                vec![Generator::Id(Sign::Plus), Generator::Cup(Sign::Minus)],
                vec![Generator::Over(Sign::Plus, Sign::Minus), Generator::Id(Sign::Plus)],
            ],
        )
        .unwrap();
        let f = d.flipped();
        f.validate().unwrap();
        assert_eq!(f.source(), &d.target());
        assert_eq!(f.target(), *d.source());
        assert_eq!(f.flipped(), d);
    }
}

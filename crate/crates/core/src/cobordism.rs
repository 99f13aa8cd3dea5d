//! The category of 1-dimensional cobordisms between oriented 0-manifolds,
//! and its toy TQFT.
//!
//! An object is a sign word (points with orientations); a morphism is a
//! perfect matching of the boundary points by oriented intervals, plus a
//! number of free circles. The functor [`Matching1::tqft_eval`] sends a point
//! to a free module of chosen rank, an interval to an identity / pairing /
//! copairing, and a circle to the rank — so the invariant of the circle is
//! the rank itself.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::ring::{LaurentPoly, RingMatrix, Var};
use crate::tangle::{Sign, SignWord};

/// A boundary point of a 1-cobordism: `Bottom(i)` is the i-th source point,
/// `Top(j)` the j-th target point (0-based, left to right).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Point {
    Bottom(usize),
    Top(usize),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CobordError {
    /// A point is unmatched, matched twice, or out of range.
    Pairing { point: String, reason: String },
    /// An interval's endpoint orientations are incompatible.
    Orientation { a: String, b: String },
    /// Composition requires the middle objects to agree.
    BoundaryMismatch { expected: SignWord, found: SignWord },
}

impl fmt::Display for CobordError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CobordError::Pairing { point, reason } => {
                write!(f, "bad matching at {}: {}", point, reason)
            }
            CobordError::Orientation { a, b } => {
                write!(f, "interval {}-{} has incompatible orientations", a, b)
            }
            CobordError::BoundaryMismatch { expected, found } => {
                write!(f, "boundary mismatch: expected \"{}\", found \"{}\"", expected, found)
            }
        }
    }
}

impl core::error::Error for CobordError {}

/// A 1-cobordism, stored as a fixed-point-free involution on the boundary
/// points (bottom points first) plus a circle count. Equality is on the nose.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matching1 {
    src: SignWord,
    tgt: SignWord,
    /// length `src.len() + tgt.len()`; index `i < src.len()` is `Bottom(i)`,
    /// index `src.len() + j` is `Top(j)`
    partner: Vec<usize>,
    circles: usize,
}

fn point_name(i: usize, m: usize) -> String {
    if i < m {
        format!("b{}", i + 1)
    } else {
        format!("t{}", i - m + 1)
    }
}

impl Matching1 {
    /// Builds an oriented cobordism and checks the matching. Each interval
    /// must run coherently: a through strand keeps its sign, while an interval
    /// with both endpoints on the same side turns around, so its endpoint
    /// signs are opposite.
    pub fn new(
        src: SignWord,
        tgt: SignWord,
        pairs: &[(Point, Point)],
        circles: usize,
    ) -> Result<Self, CobordError> {
        let c = Self::unoriented_words(src, tgt, pairs, circles)?;
        let m = c.src.len();
        for (i, &j) in c.partner.iter().enumerate() {
            if i > j {
                continue;
            }
            let si = c.point_sign(i);
            let sj = c.point_sign(j);
            let through = (i < m) != (j < m);
            let compatible = if through { si == sj } else { si == sj.flip() };
            if !compatible {
                return Err(CobordError::Orientation {
                    a: point_name(i, m),
                    b: point_name(j, m),
                });
            }
        }
        Ok(c)
    }

    /// Builds a cobordism with the orientation check skipped; the boundary
    /// words are all-`+` placeholders. Used where intervals have no preferred
    /// direction, e.g. the state-sum side of the bracket.
    pub fn unoriented(
        src_len: usize,
        tgt_len: usize,
        pairs: &[(Point, Point)],
        circles: usize,
    ) -> Result<Self, CobordError> {
        Self::unoriented_words(
            SignWord::repeated(Sign::Plus, src_len),
            SignWord::repeated(Sign::Plus, tgt_len),
            pairs,
            circles,
        )
    }

    fn unoriented_words(
        src: SignWord,
        tgt: SignWord,
        pairs: &[(Point, Point)],
        circles: usize,
    ) -> Result<Self, CobordError> {
        let m = src.len();
        let n = tgt.len();
        let flat = |p: Point| -> Result<usize, CobordError> {
            match p {
                Point::Bottom(i) if i < m => Ok(i),
                Point::Top(j) if j < n => Ok(m + j),
                _ => Err(CobordError::Pairing {
                    point: format!("{:?}", p),
                    reason: String::from("out of range"),
                }),
            }
        };
        let mut partner = vec![usize::MAX; m + n];
        for &(a, b) in pairs {
            let (x, y) = (flat(a)?, flat(b)?);
            if x == y {
                return Err(CobordError::Pairing {
                    point: point_name(x, m),
                    reason: String::from("matched with itself"),
                });
            }
            for p in [x, y] {
                if partner[p] != usize::MAX {
                    return Err(CobordError::Pairing {
                        point: point_name(p, m),
                        reason: String::from("matched twice"),
                    });
                }
            }
            partner[x] = y;
            partner[y] = x;
        }
        if let Some(i) = partner.iter().position(|&p| p == usize::MAX) {
            return Err(CobordError::Pairing {
                point: point_name(i, m),
                reason: String::from("unmatched"),
            });
        }
        Ok(Matching1 { src, tgt, partner, circles })
    }

    fn point_sign(&self, i: usize) -> Sign {
        let m = self.src.len();
        if i < m {
            self.src.get(i).unwrap()
        } else {
            self.tgt.get(i - m).unwrap()
        }
    }

    pub fn identity(w: &SignWord) -> Self {
        let m = w.len();
        let partner = (0..2 * m).map(|i| if i < m { m + i } else { i - m }).collect();
        Matching1 { src: w.clone(), tgt: w.clone(), partner, circles: 0 }
    }

    pub fn empty() -> Self {
        Matching1 { src: SignWord::empty(), tgt: SignWord::empty(), partner: vec![], circles: 0 }
    }

    /// The closed circle: endomorphism of the empty object.
    pub fn circle() -> Self {
        Matching1 { src: SignWord::empty(), tgt: SignWord::empty(), partner: vec![], circles: 1 }
    }

    /// `() -> (s, -s)`.
    pub fn cup(s: Sign) -> Self {
        let tgt: SignWord = [s, s.flip()].into_iter().collect();
        Matching1 { src: SignWord::empty(), tgt, partner: vec![1, 0], circles: 0 }
    }

    /// `(s, -s) -> ()`.
    pub fn cap(s: Sign) -> Self {
        let src: SignWord = [s, s.flip()].into_iter().collect();
        Matching1 { src, tgt: SignWord::empty(), partner: vec![1, 0], circles: 0 }
    }

    pub fn src(&self) -> &SignWord {
        &self.src
    }

    pub fn tgt(&self) -> &SignWord {
        &self.tgt
    }

    pub fn circles(&self) -> usize {
        self.circles
    }

    /// The partner of a boundary point.
    pub fn partner_of(&self, p: Point) -> Point {
        let m = self.src.len();
        let i = match p {
            Point::Bottom(i) => i,
            Point::Top(j) => m + j,
        };
        let q = self.partner[i];
        if q < m {
            Point::Bottom(q)
        } else {
            Point::Top(q - m)
        }
    }

    /// `self ∘ first`: glues `first`'s target to `self`'s source, following
    /// chains through the interface; interface loops become circles.
    pub fn after(&self, first: &Matching1) -> Result<Matching1, CobordError> {
        if first.tgt != self.src {
            return Err(CobordError::BoundaryMismatch {
                expected: first.tgt.clone(),
                found: self.src.clone(),
            });
        }
        let m = first.src.len();
        let n = self.src.len();
        let p = self.tgt.len();
        let mut partner = vec![usize::MAX; m + p];
        let mut seen_mid = vec![false; n];
        // walk from each outer point to the far end of its component
        for (start, slot) in partner.iter_mut().enumerate() {
            let mut at: usize; // flattened node in whichever matching we are in
            let mut in_first = start < m;
            at = if in_first { first.partner[start] } else { self.partner[n + (start - m)] };
            let end = loop {
                if in_first {
                    if at < m {
                        break at;
                    }
                    let j = at - m;
                    seen_mid[j] = true;
                    in_first = false;
                    at = self.partner[j];
                } else {
                    if at >= n {
                        break m + (at - n);
                    }
                    seen_mid[at] = true;
                    in_first = true;
                    at = first.partner[m + at];
                }
            };
            *slot = end;
        }
        // components that never reach the outside are circles
        let mut circles = first.circles + self.circles;
        for j0 in 0..n {
            if seen_mid[j0] {
                continue;
            }
            circles += 1;
            let mut j = j0;
            loop {
                seen_mid[j] = true;
                let r = self.partner[j];
                debug_assert!(r < n, "component must stay inside");
                seen_mid[r] = true;
                let q = first.partner[m + r];
                debug_assert!(q >= m, "component must stay inside");
                j = q - m;
                if j == j0 {
                    break;
                }
            }
        }
        Ok(Matching1 { src: first.src.clone(), tgt: self.tgt.clone(), partner, circles })
    }

    /// Places `right` to the right of `self`.
    pub fn disjoint_union(&self, right: &Matching1) -> Matching1 {
        let (m1, n1) = (self.src.len(), self.tgt.len());
        let (m2, n2) = (right.src.len(), right.tgt.len());
        let map_left = |i: usize| if i < m1 { i } else { m1 + m2 + (i - m1) };
        let map_right = |i: usize| if i < m2 { m1 + i } else { m1 + m2 + n1 + (i - m2) };
        let mut partner = vec![usize::MAX; m1 + m2 + n1 + n2];
        for (i, &j) in self.partner.iter().enumerate() {
            partner[map_left(i)] = map_left(j);
        }
        for (i, &j) in right.partner.iter().enumerate() {
            partner[map_right(i)] = map_right(j);
        }
        Matching1 {
            src: self.src.concat(&right.src),
            tgt: self.tgt.concat(&right.tgt),
            partner,
            circles: self.circles + right.circles,
        }
    }

    /// Evaluates the cobordism under the rank-`dim` theory: a matrix from
    /// `dim^src` to `dim^tgt` coordinates (leftmost point most significant)
    /// over constant polynomials in `var`. Each interval forces its two point
    /// indices equal; each circle contributes a factor `dim`.
    pub fn tqft_eval(&self, dim: usize, var: impl Into<Var>) -> RingMatrix {
        let var = var.into();
        let m = self.src.len();
        let n = self.tgt.len();
        let rows = dim.pow(n as u32);
        let cols = dim.pow(m as u32);
        let mut factor = BigInt::one();
        for _ in 0..self.circles {
            factor *= dim as i64;
        }
        let digit = |idx: usize, len: usize, k: usize| -> usize {
            (idx / dim.pow((len - 1 - k) as u32)) % dim
        };
        let mut out = RingMatrix::zeros(var.clone(), rows, cols);
        for col in 0..cols {
            'row: for row in 0..rows {
                let index_of = |pt: usize| -> usize {
                    if pt < m {
                        digit(col, m, pt)
                    } else {
                        digit(row, n, pt - m)
                    }
                };
                for (i, &j) in self.partner.iter().enumerate() {
                    if i < j && index_of(i) != index_of(j) {
                        continue 'row;
                    }
                }
                out.set_entry(row, col, LaurentPoly::constant(var.clone(), factor.clone()))
                    .expect("same variable");
            }
        }
        out
    }

    fn sorted_pairs(&self) -> Vec<(usize, usize)> {
        let mut pairs: Vec<(usize, usize)> = self
            .partner
            .iter()
            .enumerate()
            .filter(|&(i, &j)| i < j)
            .map(|(i, &j)| (i, j))
            .collect();
        pairs.sort_unstable();
        pairs
    }
}

impl fmt::Display for Matching1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.src.len();
        write!(f, "1cob src=\"{}\" tgt=\"{}\" pairs=[", self.src, self.tgt)?;
        for (k, (i, j)) in self.sorted_pairs().into_iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "({},{})", point_name(i, m), point_name(j, m))?;
        }
        write!(f, "] circles={}", self.circles)
    }
}

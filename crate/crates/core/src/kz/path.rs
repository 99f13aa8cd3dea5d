//! Paths of marked points in the plane.
//!
//! A path is a sequence of segments; during one segment every point follows
//! its own coordinate curve over `t ∈ [0, 1]`, simultaneously. Curves carry
//! point identity: the k-th curve of every segment describes the same marked
//! point, so a braid generator is two half-circles and `n - 2` stationary
//! lines, and consecutive segments must agree where they meet.

use alloc::vec::Vec;
use core::f64::consts::PI;
use num_complex::Complex64;

use super::KzError;

/// How close two points may come before the transport refuses to integrate:
/// braid paths keep a true separation of 1.0 between grid slots, so any
/// declared clearance below that is honest.
pub const BRAID_GRID_SEPARATION: f64 = 1.0;

#[derive(Clone, Debug)]
pub enum CoordCurve {
    /// Constant-velocity straight line (stationary when `from == to`).
    Line { from: Complex64, to: Complex64 },
    /// Circular arc at constant angular velocity; angles in radians.
    Arc { center: Complex64, radius: f64, from_angle: f64, to_angle: f64 },
}

impl CoordCurve {
    pub fn at(&self, t: f64) -> Complex64 {
        match *self {
            CoordCurve::Line { from, to } => from + (to - from) * t,
            CoordCurve::Arc { center, radius, from_angle, to_angle } => {
                let theta = from_angle + (to_angle - from_angle) * t;
                center + Complex64::new(libm::cos(theta), libm::sin(theta)) * radius
            }
        }
    }

    pub fn velocity(&self, t: f64) -> Complex64 {
        match *self {
            CoordCurve::Line { from, to } => to - from,
            CoordCurve::Arc { center: _, radius, from_angle, to_angle } => {
                let sweep = to_angle - from_angle;
                let theta = from_angle + sweep * t;
                // d/dt of r e^{iθ(t)} = i r θ' e^{iθ(t)}
                Complex64::new(0.0, 1.0)
                    * Complex64::new(libm::cos(theta), libm::sin(theta))
                    * (radius * sweep)
            }
        }
    }

    pub fn start(&self) -> Complex64 {
        self.at(0.0)
    }

    pub fn end(&self) -> Complex64 {
        self.at(1.0)
    }
}

/// Simultaneous motion of all points over one unit of time.
#[derive(Clone, Debug)]
pub struct Segment {
    curves: Vec<CoordCurve>,
}

impl Segment {
    pub fn new(curves: Vec<CoordCurve>) -> Self {
        Segment { curves }
    }

    pub fn n_points(&self) -> usize {
        self.curves.len()
    }

    pub fn curves(&self) -> &[CoordCurve] {
        &self.curves
    }

    pub fn points_at(&self, t: f64) -> Vec<Complex64> {
        self.curves.iter().map(|c| c.at(t)).collect()
    }

    pub fn velocities_at(&self, t: f64) -> Vec<Complex64> {
        self.curves.iter().map(|c| c.velocity(t)).collect()
    }
}

/// A piecewise path in the configuration space of `n` distinct points,
/// carrying the declared minimum separation the integrator should enforce.
#[derive(Clone, Debug)]
pub struct ConfigPath {
    n: usize,
    clearance: f64,
    segments: Vec<Segment>,
}

const JOIN_TOLERANCE: f64 = 1e-9;

impl ConfigPath {
    /// Validates point counts and continuity at the joints.
    pub fn new(n: usize, clearance: f64, segments: Vec<Segment>) -> Result<Self, KzError> {
        if clearance.is_nan() || clearance <= 0.0 {
            return Err(KzError::Clearance { value: clearance });
        }
        for (si, seg) in segments.iter().enumerate() {
            if seg.n_points() != n {
                return Err(KzError::PathShape {
                    segment: si,
                    expected: n,
                    found: seg.n_points(),
                });
            }
        }
        for si in 1..segments.len() {
            for k in 0..n {
                let prev = segments[si - 1].curves[k].end();
                let here = segments[si].curves[k].start();
                if (prev - here).norm() > JOIN_TOLERANCE {
                    return Err(KzError::Discontinuous { segment: si, point: k });
                }
            }
        }
        Ok(ConfigPath { n, clearance, segments })
    }

    pub fn n_points(&self) -> usize {
        self.n
    }

    pub fn clearance(&self) -> f64 {
        self.clearance
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn start(&self) -> Vec<Complex64> {
        match self.segments.first() {
            Some(seg) => seg.points_at(0.0),
            None => Vec::new(),
        }
    }

    pub fn end(&self) -> Vec<Complex64> {
        match self.segments.last() {
            Some(seg) => seg.points_at(1.0),
            None => Vec::new(),
        }
    }

    /// Smallest pairwise separation over a sampled grid.
    pub fn min_separation(&self, samples_per_segment: usize) -> f64 {
        let mut best = f64::INFINITY;
        for seg in &self.segments {
            for s in 0..=samples_per_segment {
                let t = s as f64 / samples_per_segment as f64;
                let pts = seg.points_at(t);
                for i in 0..pts.len() {
                    for j in i + 1..pts.len() {
                        let d = (pts[i] - pts[j]).norm();
                        if d < best {
                            best = d;
                        }
                    }
                }
            }
        }
        best
    }
}

fn grid_x(slot: usize) -> Complex64 {
    Complex64::new(slot as f64 + 1.0, 0.0)
}

/// The configuration path of a braid word on `n` points.
///
/// Points start on the real axis at `1, ..., n`. The letter `+i` swaps the
/// points in slots `i` and `i+1` by a counterclockwise half-turn around
/// their midpoint (the left point passes below); `-i` turns clockwise.
/// Curves follow point identity through the swaps, so the composite is a
/// genuine path in ordered configuration space. Pairs of points never come
/// closer than 1.0; `clearance` must lie in `(0, 1)` and is recorded on the
/// path as the separation the integrator enforces.
pub fn braid_path(word: &[i64], n: usize, clearance: f64) -> Result<ConfigPath, KzError> {
    if n < 2 {
        return Err(KzError::Strands { found: n, needed: 2 });
    }
    if !(clearance > 0.0 && clearance < BRAID_GRID_SEPARATION) {
        return Err(KzError::Clearance { value: clearance });
    }
    // slot_of[k] = current grid slot of point k
    let mut slot_of: Vec<usize> = (0..n).collect();
    let mut segments = Vec::with_capacity(word.len());
    for (index, &letter) in word.iter().enumerate() {
        let i = letter.unsigned_abs() as usize;
        if letter == 0 || i >= n {
            return Err(KzError::BraidLetter { index, letter });
        }
        let (left_slot, right_slot) = (i - 1, i);
        let center = (grid_x(left_slot) + grid_x(right_slot)) * 0.5;
        let ccw = letter > 0;
        let mut curves = Vec::with_capacity(n);
        for &slot in &slot_of {
            let curve = if slot == left_slot {
                let (from_angle, to_angle) = if ccw { (PI, 2.0 * PI) } else { (PI, 0.0) };
                CoordCurve::Arc { center, radius: 0.5, from_angle, to_angle }
            } else if slot == right_slot {
                let (from_angle, to_angle) = if ccw { (0.0, PI) } else { (0.0, -PI) };
                CoordCurve::Arc { center, radius: 0.5, from_angle, to_angle }
            } else {
                CoordCurve::Line { from: grid_x(slot), to: grid_x(slot) }
            };
            curves.push(curve);
        }
        segments.push(Segment::new(curves));
        // the two points trade slots
        for s in slot_of.iter_mut() {
            if *s == left_slot {
                *s = right_slot;
            } else if *s == right_slot {
                *s = left_slot;
            }
        }
    }
    ConfigPath::new(n, clearance, segments)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: Complex64, b: Complex64) -> bool {
        (a - b).norm() < 1e-9
    }

    #[test]
    fn braid_paths_are_continuous_and_permute_endpoints() {
        let p = braid_path(&[1, 2, 1], 3, 0.5).unwrap();
        assert_eq!(p.segments().len(), 3);
        let start = p.start();
        let end = p.end();
        assert!(close(start[0], Complex64::new(1.0, 0.0)));
        // sigma1 sigma2 sigma1 reverses three points
        assert!(close(end[0], Complex64::new(3.0, 0.0)));
        assert!(close(end[1], Complex64::new(2.0, 0.0)));
        assert!(close(end[2], Complex64::new(1.0, 0.0)));
    }

    #[test]
    fn inverse_letter_retraces_the_same_slots() {
        let p = braid_path(&[1, -1], 2, 0.5).unwrap();
        let end = p.end();
        assert!(close(end[0], Complex64::new(1.0, 0.0)));
        assert!(close(end[1], Complex64::new(2.0, 0.0)));
    }

    #[test]
    fn separation_never_drops_below_the_grid_distance() {
        let p = braid_path(&[1, 2, 1, -1, -2], 3, 0.9).unwrap();
        let sep = p.min_separation(64);
        assert!(sep > 0.999, "separation {}", sep);
    }

    #[test]
    fn bad_inputs_are_rejected() {
        assert!(matches!(braid_path(&[1], 2, 0.0), Err(KzError::Clearance { .. })));
        assert!(matches!(braid_path(&[1], 2, 1.0), Err(KzError::Clearance { .. })));
        assert!(matches!(braid_path(&[2], 2, 0.5), Err(KzError::BraidLetter { .. })));
        assert!(matches!(braid_path(&[0], 2, 0.5), Err(KzError::BraidLetter { .. })));
        assert!(matches!(braid_path(&[], 1, 0.5), Err(KzError::Strands { .. })));
    }

    #[test]
    fn discontinuity_is_caught() {
        let a = Segment::new(alloc::vec![CoordCurve::Line {
            from: Complex64::new(0.0, 0.0),
            to: Complex64::new(1.0, 0.0),
        }]);
        let b = Segment::new(alloc::vec![CoordCurve::Line {
            from: Complex64::new(2.0, 0.0),
            to: Complex64::new(3.0, 0.0),
        }]);
        assert!(matches!(
            ConfigPath::new(1, 0.5, alloc::vec![a, b]),
            Err(KzError::Discontinuous { segment: 1, point: 0 })
        ));
    }

    #[test]
    fn arc_velocity_matches_finite_differences() {
        let arc = CoordCurve::Arc {
            center: Complex64::new(1.5, 0.0),
            radius: 0.5,
            from_angle: PI,
            to_angle: 2.0 * PI,
        };
        let h = 1e-6;
        for &t in &[0.1, 0.4, 0.9] {
            let fd = (arc.at(t + h) - arc.at(t - h)) / (2.0 * h);
            assert!((fd - arc.velocity(t)).norm() < 1e-6);
        }
    }
}

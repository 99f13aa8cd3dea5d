//! Flat connections on configuration space and their parallel transport.
//!
//! A configuration of `n` distinct points `z_1, ..., z_n` in the plane moves
//! along a path; a state vector in `(C^dim)^{⊗n}` is transported by solving
//!
//! ```text
//! U'(t) = h * sum_{i<j} Omega_ij * (z_i' - z_j') / (z_i - z_j) * U(t)
//! ```
//!
//! The site matrices `Omega_ij` are stored exactly (rational entries), so
//! flatness — the condition making transport depend only on the homotopy
//! class of the path — can be verified by exact arithmetic:
//!
//! * `[Omega_ij, Omega_ik + Omega_jk] = 0` for distinct `i, j, k`,
//! * `[Omega_ij, Omega_kl] = 0` for disjoint pairs.
//!
//! The default configuration places `Omega_ij = P_ij - I/2` with `P_ij` the
//! transposition of tensor factors `i` and `j` of `(C^2)^{⊗n}`; transporting
//! it along braid generator paths gives a braid-group representation, which
//! [`braid_relation_check`] probes numerically.

mod cmatrix;
mod exact;
mod path;
mod transport;

pub use cmatrix::ComplexMatrix;
pub use exact::{commutator, omega_site, RatMatrix};
pub use path::{braid_path, ConfigPath, CoordCurve, Segment, BRAID_GRID_SEPARATION};
pub use transport::{braid_relation_check, transport, BraidRelationReport, Transport};

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

#[derive(Clone, Debug, PartialEq)]
pub enum KzError {
    /// Clearance must be positive (and below the grid spacing for braid paths).
    Clearance { value: f64 },
    /// A segment has the wrong number of coordinate curves.
    PathShape { segment: usize, expected: usize, found: usize },
    /// A point jumps between the end of one segment and the start of the next.
    Discontinuous { segment: usize, point: usize },
    /// Two points came closer than the declared clearance during transport.
    TooClose { segment: usize, t: f64, separation: f64 },
    /// Braid letter out of range: need `1 <= |letter| <= n - 1`.
    BraidLetter { index: usize, letter: i64 },
    /// Too few strands/points for the requested construction.
    Strands { found: usize, needed: usize },
    /// Step count must be positive.
    Steps,
    /// Path and configuration disagree on the number of points.
    PointCount { expected: usize, found: usize },
    /// Wrong number of site matrices: need one per unordered pair.
    PairCount { expected: usize, found: usize },
    /// A site matrix has the wrong dimensions.
    Size { index: usize, expected: usize, found: usize },
    /// A site matrix is not invariant under swapping its two tensor factors.
    NotSymmetric { i: usize, j: usize },
}

impl fmt::Display for KzError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KzError::Clearance { value } => {
                write!(f, "clearance {value} out of range")
            }
            KzError::PathShape { segment, expected, found } => {
                write!(f, "segment {segment} has {found} curves, expected {expected}")
            }
            KzError::Discontinuous { segment, point } => {
                write!(f, "point {point} jumps at the start of segment {segment}")
            }
            KzError::TooClose { segment, t, separation } => {
                write!(
                    f,
                    "points at separation {separation} (below clearance) in segment {segment} at t={t}"
                )
            }
            KzError::BraidLetter { index, letter } => {
                write!(f, "braid letter {letter} at position {index} out of range")
            }
            KzError::Strands { found, needed } => {
                write!(f, "need at least {needed} points, got {found}")
            }
            KzError::Steps => write!(f, "step count must be positive"),
            KzError::PointCount { expected, found } => {
                write!(f, "path has {found} points, configuration has {expected}")
            }
            KzError::PairCount { expected, found } => {
                write!(f, "got {found} site matrices, expected {expected}")
            }
            KzError::Size { index, expected, found } => {
                write!(f, "site matrix {index} is {found}x{found}, expected {expected}x{expected}")
            }
            KzError::NotSymmetric { i, j } => {
                write!(f, "site matrix for pair ({i},{j}) is not swap-invariant")
            }
        }
    }
}

impl core::error::Error for KzError {}

/// Position of the unordered pair `(i, j)`, `i < j`, in lexicographic order
/// over `n` points.
fn pair_position(i: usize, j: usize, n: usize) -> usize {
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

/// A connection datum: one exact site matrix per unordered pair of points,
/// plus the global coupling constant `h`.
#[derive(Clone, Debug)]
pub struct KzConfig {
    n: usize,
    dim: usize,
    h: f64,
    omegas: Vec<RatMatrix>,
}

impl KzConfig {
    /// The standard connection on `(C^2)^{⊗n}`: `Omega_ij = P_ij - I/2`.
    pub fn default_config(n: usize, h: f64) -> Result<KzConfig, KzError> {
        if n < 2 {
            return Err(KzError::Strands { found: n, needed: 2 });
        }
        let mut omegas = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                omegas.push(omega_site(i, j, n));
            }
        }
        Ok(KzConfig { n, dim: 2, h, omegas })
    }

    /// Builds a configuration from explicit site matrices, one per pair
    /// `(i, j)` with `i < j` in lexicographic order, each of size `dim^n` and
    /// invariant under transposing tensor factors `i` and `j`. Flatness is
    /// *not* required here; ask [`KzConfig::flatness_check`] separately.
    pub fn new(n: usize, dim: usize, h: f64, omegas: Vec<RatMatrix>) -> Result<KzConfig, KzError> {
        if n < 2 {
            return Err(KzError::Strands { found: n, needed: 2 });
        }
        let pairs = n * (n - 1) / 2;
        if omegas.len() != pairs {
            return Err(KzError::PairCount { expected: pairs, found: omegas.len() });
        }
        let total = dim.pow(n as u32);
        for (index, m) in omegas.iter().enumerate() {
            if m.n() != total {
                return Err(KzError::Size { index, expected: total, found: m.n() });
            }
        }
        let mut pair = 0usize;
        for i in 0..n {
            for j in i + 1..n {
                let m = &omegas[pair];
                for x in 0..total {
                    let sx = exact::transpose_index(x, i, j, n, dim);
                    if sx < x {
                        continue; // swapping is an involution; the mirror row covered this
                    }
                    for y in 0..total {
                        let sy = exact::transpose_index(y, i, j, n, dim);
                        if m.entry(sx, sy) != m.entry(x, y) {
                            return Err(KzError::NotSymmetric { i, j });
                        }
                    }
                }
                pair += 1;
            }
        }
        Ok(KzConfig { n, dim, h, omegas })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn h(&self) -> f64 {
        self.h
    }

    /// Dimension of the full state space, `dim^n`.
    pub fn dim_total(&self) -> usize {
        self.dim.pow(self.n as u32)
    }

    /// The site matrix for the pair `(i, j)`, `i < j`.
    pub fn omega(&self, i: usize, j: usize) -> &RatMatrix {
        assert!(i < j && j < self.n, "pair ({i},{j}) out of range");
        &self.omegas[pair_position(i, j, self.n)]
    }

    /// All site matrices as complex floats, in pair order.
    pub(crate) fn omegas_numeric(&self) -> Vec<ComplexMatrix> {
        self.omegas.iter().map(RatMatrix::to_complex).collect()
    }

    /// Verifies the flatness identities by exact arithmetic.
    pub fn flatness_check(&self) -> FlatnessReport {
        let n = self.n;
        let mut identities_checked = 0usize;
        let mut failures = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let oij = self.omega(i, j);
                    let oik = self.omega(i, k);
                    let ojk = self.omega(j, k);
                    let rotations = [
                        (oij, oik, ojk, (i, j)),
                        (oik, oij, ojk, (i, k)),
                        (ojk, oij, oik, (j, k)),
                    ];
                    for (a, b, c, pair) in rotations {
                        identities_checked += 1;
                        if !commutator(a, &b.add(c)).is_zero() {
                            failures.push(format!(
                                "[omega({},{}), sum of the other two] != 0 on triple ({i},{j},{k})",
                                pair.0, pair.1
                            ));
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                for k in i + 1..n {
                    for l in k + 1..n {
                        if (k, l) <= (i, j) || k == i || k == j || l == i || l == j {
                            continue;
                        }
                        identities_checked += 1;
                        if !commutator(self.omega(i, j), self.omega(k, l)).is_zero() {
                            failures.push(format!(
                                "[omega({i},{j}), omega({k},{l})] != 0"
                            ));
                        }
                    }
                }
            }
        }
        FlatnessReport { identities_checked, failures }
    }
}

/// Outcome of [`KzConfig::flatness_check`].
#[derive(Clone, Debug)]
pub struct FlatnessReport {
    pub identities_checked: usize,
    pub failures: Vec<String>,
}

impl FlatnessReport {
    pub fn is_flat(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for FlatnessReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_flat() {
            write!(f, "flat: all {} commutator identities hold exactly", self.identities_checked)
        } else {
            writeln!(f, "NOT flat: {} of {} identities fail", self.failures.len(), self.identities_checked)?;
            for line in &self.failures {
                writeln!(f, "  {line}")?;
            }
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use num_traits::Zero;

    #[test]
    fn pair_positions_are_lexicographic() {
        // n = 4: (0,1) (0,2) (0,3) (1,2) (1,3) (2,3)
        let expect = [((0, 1), 0), ((0, 2), 1), ((0, 3), 2), ((1, 2), 3), ((1, 3), 4), ((2, 3), 5)];
        for ((i, j), pos) in expect {
            assert_eq!(pair_position(i, j, 4), pos);
        }
    }

    #[test]
    fn the_default_connection_is_flat() {
        for n in 2..=4 {
            let config = KzConfig::default_config(n, 1.0).unwrap();
            let report = config.flatness_check();
            assert!(report.is_flat(), "n={n}: {report}");
        }
        // n = 4 exercises both triples and disjoint pairs
        let report = KzConfig::default_config(4, 1.0).unwrap().flatness_check();
        assert_eq!(report.identities_checked, 4 * 3 + 3);
    }

    #[test]
    fn a_perturbed_connection_fails_flatness() {
        let config = KzConfig::default_config(3, 1.0).unwrap();
        let mut omegas = alloc::vec::Vec::new();
        for i in 0..3 {
            for j in i + 1..3 {
                omegas.push(config.omega(i, j).clone());
            }
        }
        // break omega(0,1) while keeping it swap-invariant: zero it out
        omegas[0] = RatMatrix::zeros(8);
        let broken = KzConfig::new(3, 2, 1.0, omegas).unwrap();
        let report = broken.flatness_check();
        assert!(!report.is_flat());
        assert!(!report.failures.is_empty());
    }

    #[test]
    fn constructor_validates_shape_and_symmetry() {
        let good = KzConfig::default_config(2, 1.0).unwrap();
        assert!(matches!(KzConfig::default_config(1, 1.0), Err(KzError::Strands { .. })));
        assert!(matches!(
            KzConfig::new(2, 2, 1.0, alloc::vec![]),
            Err(KzError::PairCount { expected: 1, found: 0 })
        ));
        assert!(matches!(
            KzConfig::new(2, 2, 1.0, alloc::vec![RatMatrix::zeros(3)]),
            Err(KzError::Size { index: 0, expected: 4, found: 3 })
        ));
        // an asymmetric matrix: a single off-diagonal entry not mirrored
        let mut bad = RatMatrix::zeros(4);
        bad.set_entry(0, 1, BigRational::from_integer(1.into()));
        assert!(matches!(
            KzConfig::new(2, 2, 1.0, alloc::vec![bad]),
            Err(KzError::NotSymmetric { i: 0, j: 1 })
        ));
        // round-trip the good one through the validating constructor
        let rebuilt = KzConfig::new(2, 2, 1.0, alloc::vec![good.omega(0, 1).clone()]).unwrap();
        assert!(rebuilt.flatness_check().is_flat());
        assert_eq!(rebuilt.dim_total(), 4);
        assert!(!rebuilt.omega(0, 1).entry(0, 0).is_zero());
    }
}

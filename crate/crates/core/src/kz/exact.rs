//! Exact rational matrices: the site operators and the flatness identities
//! are checked in ℚ, not in floating point.

use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::cmatrix::ComplexMatrix;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatMatrix {
    n: usize,
    entries: Vec<BigRational>,
}

impl RatMatrix {
    pub fn zeros(n: usize) -> Self {
        RatMatrix { n, entries: vec![BigRational::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.entries[i * n + i] = BigRational::one();
        }
        m
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> BigRational) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m.entries[i * n + j] = f(i, j);
            }
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.n + j]
    }

    pub fn set_entry(&mut self, i: usize, j: usize, v: BigRational) {
        self.entries[i * self.n + j] = v;
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "matrix sizes differ");
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        RatMatrix { n: self.n, entries }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "matrix sizes differ");
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect();
        RatMatrix { n: self.n, entries }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "matrix sizes differ");
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self.entries[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &rhs.entries[k * n + j];
                    if b.is_zero() {
                        continue;
                    }
                    let cell = &mut out.entries[i * n + j];
                    *cell = &*cell + &(a * b);
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn to_complex(&self) -> ComplexMatrix {
        ComplexMatrix::from_fn(self.n, |i, j| {
            let r = &self.entries[i * self.n + j];
            let num = r.numer().to_f64().expect("site operator entries are small");
            let den = r.denom().to_f64().expect("site operator entries are small");
            Complex64::new(num / den, 0.0)
        })
    }
}

/// `[a, b] = ab - ba`.
pub fn commutator(a: &RatMatrix, b: &RatMatrix) -> RatMatrix {
    a.mul(b).sub(&b.mul(a))
}

/// The site operator Ω acting on factors `i` and `j` of the `n`-fold tensor
/// power of the rank-2 module: the transposition of the two factors minus
/// half the identity. Exact, with entries in {0, ±1, ±1/2}.
pub fn omega_site(i: usize, j: usize, n: usize) -> RatMatrix {
    assert!(i < n && j < n && i != j, "site indices must be distinct and within range");
    let dim = 2usize;
    let total = dim.pow(n as u32);
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let mut m = RatMatrix::zeros(total);
    for x in 0..total {
        let y = transpose_index(x, i, j, n, dim);
        let cell = m.entry(y, x) + BigRational::one();
        m.set_entry(y, x, cell);
        let diag = m.entry(x, x) - &half;
        m.set_entry(x, x, diag);
    }
    m
}

/// Swaps the base-`dim` digits `i` and `j` of `index`; digit 0 is the
/// leftmost point, i.e. the most significant.
pub(crate) fn transpose_index(index: usize, i: usize, j: usize, n: usize, dim: usize) -> usize {
    let place = |k: usize| dim.pow((n - 1 - k) as u32);
    let di = (index / place(i)) % dim;
    let dj = (index / place(j)) % dim;
    index - di * place(i) - dj * place(j) + dj * place(i) + di * place(j)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    #[test]
    fn omega_on_two_points_is_swap_minus_half() {
        let o = omega_site(0, 1, 2);
        assert_eq!(o.n(), 4);
        // rows: 00, 01, 10, 11
        let expect = [
            [rat(1, 2), rat(0, 1), rat(0, 1), rat(0, 1)],
            [rat(0, 1), rat(-1, 2), rat(1, 1), rat(0, 1)],
            [rat(0, 1), rat(1, 1), rat(-1, 2), rat(0, 1)],
            [rat(0, 1), rat(0, 1), rat(0, 1), rat(1, 2)],
        ];
        for (r, row) in expect.iter().enumerate() {
            for (c, want) in row.iter().enumerate() {
                assert_eq!(o.entry(r, c), want, "entry ({}, {})", r, c);
            }
        }
    }

    #[test]
    fn omega_squares_to_a_combination() {
        // (P - I/2)^2 = I - P + P^2/... with P^2 = I: Ω² = I - P + I/4 = 5/4 I - P
        // so Ω² + Ω = 5/4 I - P + P - I/2 = 3/4 I
        let o = omega_site(0, 1, 2);
        let sq = o.mul(&o);
        let sum = sq.add(&o);
        let mut expect = RatMatrix::zeros(4);
        for d in 0..4 {
            expect.set_entry(d, d, rat(3, 4));
        }
        assert_eq!(sum, expect);
    }

    #[test]
    fn commutator_of_disjoint_sites_vanishes() {
        let a = omega_site(0, 1, 4);
        let b = omega_site(2, 3, 4);
        assert!(commutator(&a, &b).is_zero());
        let c = omega_site(0, 2, 4);
        assert!(!commutator(&a, &c).is_zero());
    }

    #[test]
    fn to_complex_carries_values() {
        let o = omega_site(0, 1, 2).to_complex();
        assert_eq!(o.entry(0, 0).re, 0.5);
        assert_eq!(o.entry(1, 2).re, 1.0);
        assert_eq!(o.entry(1, 1).re, -0.5);
    }
}

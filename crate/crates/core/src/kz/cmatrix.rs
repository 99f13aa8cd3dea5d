//! Small dense square complex matrices for the numerical transport. Sizes in
//! play are `2^n` for a handful of strands, so everything is straightforward
//! dense arithmetic; shape mismatches are programming errors and panic.

use alloc::vec;
use alloc::vec::Vec;
use num_complex::Complex64;

#[derive(Clone, PartialEq, Debug)]
pub struct ComplexMatrix {
    n: usize,
    entries: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(n: usize) -> Self {
        ComplexMatrix { n, entries: vec![Complex64::new(0.0, 0.0); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.entries[i * n + i] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
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

    pub fn entry(&self, i: usize, j: usize) -> Complex64 {
        self.entries[i * self.n + j]
    }

    pub fn set_entry(&mut self, i: usize, j: usize, v: Complex64) {
        self.entries[i * self.n + j] = v;
    }

    fn zip(&self, other: &Self, f: impl Fn(Complex64, Complex64) -> Complex64) -> Self {
        assert_eq!(self.n, other.n, "matrix sizes differ");
        let entries =
            self.entries.iter().zip(&other.entries).map(|(&a, &b)| f(a, b)).collect();
        ComplexMatrix { n: self.n, entries }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a - b)
    }

    pub fn scale(&self, s: Complex64) -> Self {
        let entries = self.entries.iter().map(|&a| a * s).collect();
        ComplexMatrix { n: self.n, entries }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "matrix sizes differ");
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.entries[i * n + k];
                if a.re == 0.0 && a.im == 0.0 {
                    continue;
                }
                for j in 0..n {
                    out.entries[i * n + j] += a * rhs.entries[k * n + j];
                }
            }
        }
        out
    }

    /// Square root of the sum of squared moduli. Dominates the operator norm,
    /// so error bounds stated in it are conservative.
    pub fn frobenius_norm(&self) -> f64 {
        let sum: f64 = self.entries.iter().map(|z| z.re * z.re + z.im * z.im).sum();
        libm::sqrt(sum)
    }

    /// Frobenius distance to the identity.
    pub fn distance_from_identity(&self) -> f64 {
        self.sub(&Self::identity(self.n)).frobenius_norm()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn multiplication_and_identity() {
        let a = ComplexMatrix::from_fn(2, |i, j| c((i * 2 + j) as f64, 1.0));
        let id = ComplexMatrix::identity(2);
        assert_eq!(a.mul(&id), a);
        assert_eq!(id.mul(&a), a);
        // [0+i, 1+i; 2+i, 3+i]^2 by hand: entry (0,0) = (0+i)(0+i) + (1+i)(2+i)
        let sq = a.mul(&a);
        assert_eq!(sq.entry(0, 0), c(0.0, 1.0) * c(0.0, 1.0) + c(1.0, 1.0) * c(2.0, 1.0));
    }

    #[test]
    fn frobenius_norm_of_identity() {
        let id = ComplexMatrix::identity(4);
        assert!(libm::fabs(id.frobenius_norm() - 2.0) < 1e-12);
        assert_eq!(id.distance_from_identity(), 0.0);
    }
}

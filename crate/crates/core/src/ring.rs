//! Laurent polynomials over the integers and dense matrices over them.
//!
//! Coefficients are arbitrary-precision (`BigInt`), so no operation overflows.
//! A polynomial is kept in canonical form at all times: the term map never
//! stores a zero coefficient, which makes equality a structural comparison.

use alloc::borrow::ToOwned;
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Interned variable name. Cloning is a refcount bump, which keeps large
/// matrices of polynomials cheap to build.
#[derive(Clone, Eq, PartialOrd, Ord)]
pub struct Var(Arc<str>);

impl Var {
    pub fn new(name: &str) -> Self {
        Var(Arc::from(name))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl PartialEq for Var {
    fn eq(&self, other: &Self) -> bool {
        // Compare by content: two independently created "A"s are the same variable.
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl core::hash::Hash for Var {
    fn hash<H: core::hash::Hasher>(&self, state: &mut H) {
        self.0.hash(state)
    }
}

impl PartialEq<&str> for Var {
    fn eq(&self, other: &&str) -> bool {
        &*self.0 == *other
    }
}

impl From<&str> for Var {
    fn from(s: &str) -> Self {
        Var::new(s)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Errors from ring operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingError {
    /// Two operands carry different variable names.
    VariableMismatch(Var, Var),
    /// Matrix dimensions do not line up: `(rows, cols)` of both operands.
    ShapeMismatch((usize, usize), (usize, usize)),
    /// Exact division failed (nonzero remainder or non-dividing coefficient).
    InexactDivision,
    DivisionByZero,
    /// `subst_monomial` requires a nonzero exponent factor.
    ZeroExponentFactor,
    /// Textual polynomial could not be parsed; `offset` is a 0-based byte offset.
    Parse { offset: usize, reason: String },
}

impl fmt::Display for RingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingError::VariableMismatch(a, b) => {
                write!(f, "variable mismatch: {} vs {}", a, b)
            }
            RingError::ShapeMismatch(a, b) => {
                write!(f, "shape mismatch: {}x{} vs {}x{}", a.0, a.1, b.0, b.1)
            }
            RingError::InexactDivision => write!(f, "division is not exact"),
            RingError::DivisionByZero => write!(f, "division by zero"),
            RingError::ZeroExponentFactor => write!(f, "exponent factor must be nonzero"),
            RingError::Parse { offset, reason } => {
                write!(f, "polynomial parse error at offset {}: {}", offset, reason)
            }
        }
    }
}

impl core::error::Error for RingError {}

/// A Laurent polynomial in one variable over `BigInt`.
///
/// Terms are kept sorted by exponent; no stored coefficient is zero. Equality
/// requires both the variable names and the term maps to match.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    var: Var,
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero(var: impl Into<Var>) -> Self {
        LaurentPoly { var: var.into(), terms: BTreeMap::new() }
    }

    pub fn one(var: impl Into<Var>) -> Self {
        Self::monomial(var, 1, 0)
    }

    pub fn constant(var: impl Into<Var>, c: impl Into<BigInt>) -> Self {
        Self::monomial(var, c, 0)
    }

    /// `c * var^e`.
    pub fn monomial(var: impl Into<Var>, c: impl Into<BigInt>, e: i64) -> Self {
        let mut terms = BTreeMap::new();
        let c = c.into();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        LaurentPoly { var: var.into(), terms }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed and zero results dropped.
    pub fn from_terms<C: Into<BigInt>>(
        var: impl Into<Var>,
        terms: impl IntoIterator<Item = (i64, C)>,
    ) -> Self {
        let mut p = Self::zero(var);
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    pub fn var(&self) -> &Var {
        &self.var
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(One::is_one)
    }

    /// Coefficient of `var^e` (zero if absent).
    pub fn coeff(&self, e: i64) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Smallest exponent present, `None` for the zero polynomial.
    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// Largest exponent present, `None` for the zero polynomial.
    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_var(&self, other: &Self) -> Result<(), RingError> {
        if self.var == other.var {
            Ok(())
        } else {
            Err(RingError::VariableMismatch(self.var.clone(), other.var.clone()))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, RingError> {
        self.check_var(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, RingError> {
        self.check_var(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, -c.clone());
        }
        Ok(out)
    }

    /// Convolution product.
    pub fn checked_mul(&self, other: &Self) -> Result<Self, RingError> {
        self.check_var(other)?;
        let mut out = Self::zero(self.var.clone());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        let terms = self.terms.iter().map(|(e, c)| (*e, -c)).collect();
        LaurentPoly { var: self.var.clone(), terms }
    }

    /// Nonnegative power by repeated multiplication.
    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one(self.var.clone());
        for _ in 0..n {
            out = out.checked_mul(self).expect("same variable");
        }
        out
    }

    /// Substitutes the variable by `(-1)^negate * new_var^exponent_factor`:
    /// each term `c * x^e` becomes `c * (-1)^(e*negate) * y^(e*f)`.
    pub fn subst_monomial(
        &self,
        new_var: impl Into<Var>,
        exponent_factor: i64,
        negate_var: bool,
    ) -> Result<Self, RingError> {
        if exponent_factor == 0 {
            return Err(RingError::ZeroExponentFactor);
        }
        let mut out = Self::zero(new_var);
        for (e, c) in &self.terms {
            let c = if negate_var && e.rem_euclid(2) == 1 { -c.clone() } else { c.clone() };
            out.add_term(e * exponent_factor, c);
        }
        Ok(out)
    }

    /// Exact division; fails with `InexactDivision` unless `other` divides
    /// `self` in the Laurent ring.
    pub fn div_exact(&self, other: &Self) -> Result<Self, RingError> {
        self.check_var(other)?;
        if other.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero(self.var.clone()));
        }
        let div_max = other.max_exp().unwrap();
        let div_lead = &other.terms[&div_max];
        let span = (self.max_exp().unwrap() - self.min_exp().unwrap())
            + (other.max_exp().unwrap() - other.min_exp().unwrap());
        let mut rem = self.clone();
        let mut quot = Self::zero(self.var.clone());
        // An exact quotient has at most span+1 terms; more iterations than
        // that means the division does not terminate (e.g. 1 / (1 + q)).
        for _ in 0..=span {
            if rem.is_zero() {
                return Ok(quot);
            }
            let rem_max = rem.max_exp().unwrap();
            let lead = &rem.terms[&rem_max];
            if (lead % div_lead) != BigInt::zero() {
                return Err(RingError::InexactDivision);
            }
            let qc = lead / div_lead;
            let qe = rem_max - div_max;
            for (e, c) in &other.terms {
                rem.add_term(e + qe, -(c * &qc));
            }
            quot.add_term(qe, qc);
        }
        if rem.is_zero() {
            Ok(quot)
        } else {
            Err(RingError::InexactDivision)
        }
    }

    /// Parses the canonical textual form (`-A^-2 - A^2`, `2*q`, `7`, ...).
    /// Monomials must use `expected_var`; pure constants always parse.
    pub fn parse(text: &str, expected_var: &str) -> Result<Self, RingError> {
        parse_poly(text, expected_var)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        // Ascending exponents; `c*v^e` with `1*` elided and `^1` shortened.
        let mut first = true;
        for (e, c) in &self.terms {
            let neg = c.is_negative();
            if first {
                if neg {
                    f.write_str("-")?;
                }
                first = false;
            } else if neg {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let mag = c.magnitude();
            match (mag.is_one(), *e) {
                (_, 0) => write!(f, "{}", mag)?,
                (true, 1) => write!(f, "{}", self.var)?,
                (true, e) => write!(f, "{}^{}", self.var, e)?,
                (false, 1) => write!(f, "{}*{}", mag, self.var)?,
                (false, e) => write!(f, "{}*{}^{}", mag, self.var, e)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

macro_rules! poly_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl core::ops::$trait for &LaurentPoly {
            type Output = LaurentPoly;
            /// Panics on variable mismatch; use the `checked_*` form when the
            /// variables are not known to agree.
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                self.$checked(rhs).expect("operands share a variable")
            }
        }
    };
}

poly_binop!(Add, add, checked_add);
poly_binop!(Sub, sub, checked_sub);
poly_binop!(Mul, mul, checked_mul);

impl core::ops::Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly::neg(self)
    }
}

fn parse_poly(text: &str, expected_var: &str) -> Result<LaurentPoly, RingError> {
    let err = |offset: usize, reason: &str| RingError::Parse {
        offset,
        reason: reason.to_owned(),
    };
    let bytes = text.as_bytes();
    let mut pos = 0usize;
    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    let parse_int = |pos: &mut usize| -> Result<i64, RingError> {
        let start = *pos;
        if *pos < bytes.len() && (bytes[*pos] == b'-' || bytes[*pos] == b'+') {
            *pos += 1;
        }
        let digits = *pos;
        while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
            *pos += 1;
        }
        if *pos == digits {
            return Err(err(start, "expected integer"));
        }
        text[start..*pos]
            .parse::<i64>()
            .map_err(|_| err(start, "integer out of range"))
    };
    let mut out = LaurentPoly::zero(expected_var);
    skip_ws(&mut pos);
    if pos == bytes.len() {
        return Err(err(pos, "empty polynomial"));
    }
    let mut first = true;
    while pos < bytes.len() {
        // Sign separator (optional before the first term).
        let mut sign = BigInt::one();
        skip_ws(&mut pos);
        match bytes.get(pos) {
            Some(b'+') => pos += 1,
            Some(b'-') => {
                sign = -sign;
                pos += 1;
            }
            _ if first => {}
            _ => return Err(err(pos, "expected '+' or '-'")),
        }
        first = false;
        skip_ws(&mut pos);
        // Coefficient, variable, or both joined by '*'.
        let mut coeff: Option<BigInt> = None;
        if bytes.get(pos).is_some_and(u8::is_ascii_digit) {
            let start = pos;
            while bytes.get(pos).is_some_and(u8::is_ascii_digit) {
                pos += 1;
            }
            let mag: BigInt = text[start..pos]
                .parse()
                .expect("digit run is a valid BigInt");
            coeff = Some(mag);
            skip_ws(&mut pos);
            if bytes.get(pos) == Some(&b'*') {
                pos += 1;
                skip_ws(&mut pos);
            } else {
                out.add_term(0, sign * coeff.take().unwrap());
                skip_ws(&mut pos);
                continue;
            }
        }
        let start = pos;
        while bytes
            .get(pos)
            .is_some_and(|b| b.is_ascii_alphanumeric() || *b == b'_')
        {
            pos += 1;
        }
        if pos == start {
            return Err(err(start, "expected variable or coefficient"));
        }
        if &text[start..pos] != expected_var {
            return Err(err(start, "unexpected variable name"));
        }
        skip_ws(&mut pos);
        let e = if bytes.get(pos) == Some(&b'^') {
            pos += 1;
            parse_int(&mut pos)?
        } else {
            1
        };
        out.add_term(e, sign * coeff.unwrap_or_else(BigInt::one));
        skip_ws(&mut pos);
    }
    Ok(out)
}

/// Dense row-major matrix over [`LaurentPoly`]; all entries share one variable.
#[derive(Clone, PartialEq, Eq)]
pub struct RingMatrix {
    var: Var,
    rows: usize,
    cols: usize,
    entries: Vec<LaurentPoly>,
}

impl RingMatrix {
    pub fn zeros(var: impl Into<Var>, rows: usize, cols: usize) -> Self {
        let var = var.into();
        let entries = vec![LaurentPoly::zero(var.clone()); rows * cols];
        RingMatrix { var, rows, cols, entries }
    }

    pub fn identity(var: impl Into<Var>, n: usize) -> Self {
        let mut m = Self::zeros(var, n, n);
        for i in 0..n {
            m.entries[i * n + i] = LaurentPoly::one(m.var.clone());
        }
        m
    }

    pub fn from_fn(
        var: impl Into<Var>,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> LaurentPoly,
    ) -> Result<Self, RingError> {
        let mut m = Self::zeros(var, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                let p = f(i, j);
                if p.var() != &m.var {
                    return Err(RingError::VariableMismatch(m.var, p.var().clone()));
                }
                m.entries[i * cols + j] = p;
            }
        }
        Ok(m)
    }

    pub fn var(&self) -> &Var {
        &self.var
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn set_entry(&mut self, i: usize, j: usize, p: LaurentPoly) -> Result<(), RingError> {
        if p.var() != &self.var {
            return Err(RingError::VariableMismatch(self.var.clone(), p.var().clone()));
        }
        self.entries[i * self.cols + j] = p;
        Ok(())
    }

    /// The single entry of a 1x1 matrix.
    pub fn as_scalar(&self) -> Option<&LaurentPoly> {
        if self.rows == 1 && self.cols == 1 {
            Some(&self.entries[0])
        } else {
            None
        }
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = self.entry(i, j);
                    if i == j {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    fn check_var(&self, other: &Self) -> Result<(), RingError> {
        if self.var == other.var {
            Ok(())
        } else {
            Err(RingError::VariableMismatch(self.var.clone(), other.var.clone()))
        }
    }

    /// Matrix product `self * rhs`. Zero entries are skipped, which matters: the
    /// slice matrices built from Kronecker products are mostly zeros.
    pub fn matmul(&self, rhs: &Self) -> Result<Self, RingError> {
        self.check_var(rhs)?;
        if self.cols != rhs.rows {
            return Err(RingError::ShapeMismatch((self.rows, self.cols), (rhs.rows, rhs.cols)));
        }
        let mut out = Self::zeros(self.var.clone(), self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.entry(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.entry(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let acc = &mut out.entries[i * rhs.cols + j];
                    *acc = &*acc + &(a * b);
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product with the left factor major: block `(i1, j1)` of the
    /// result is `self[i1][j1] * rhs`, i.e. composite index `i1 * rhs.rows + i2`.
    pub fn kronecker(&self, rhs: &Self) -> Result<Self, RingError> {
        self.check_var(rhs)?;
        let rows = self.rows * rhs.rows;
        let cols = self.cols * rhs.cols;
        let mut out = Self::zeros(self.var.clone(), rows, cols);
        for i1 in 0..self.rows {
            for j1 in 0..self.cols {
                let a = self.entry(i1, j1);
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..rhs.rows {
                    for j2 in 0..rhs.cols {
                        let b = rhs.entry(i2, j2);
                        if b.is_zero() {
                            continue;
                        }
                        out.entries[(i1 * rhs.rows + i2) * cols + (j1 * rhs.cols + j2)] = a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Multiplies every entry by `s`.
    pub fn scale(&self, s: &LaurentPoly) -> Result<Self, RingError> {
        if s.var() != &self.var {
            return Err(RingError::VariableMismatch(self.var.clone(), s.var().clone()));
        }
        let entries = self.entries.iter().map(|e| e * s).collect();
        Ok(RingMatrix { var: self.var.clone(), rows: self.rows, cols: self.cols, entries })
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, RingError> {
        self.check_var(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(RingError::ShapeMismatch(
                (self.rows, self.cols),
                (other.rows, other.cols),
            ));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        Ok(RingMatrix { var: self.var.clone(), rows: self.rows, cols: self.cols, entries })
    }
}

impl fmt::Debug for RingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}x{} over {}:", self.rows, self.cols, self.var)?;
        for i in 0..self.rows {
            f.write_str("[")?;
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.entry(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms("q", terms.iter().copied())
    }

    #[test]
    fn addition_cancels_to_canonical_form() {
        // (q + q^-1) + (q - q^-1) = 2q
        let a = p(&[(1, 1), (-1, 1)]);
        let b = p(&[(1, 1), (-1, -1)]);
        let sum = &a + &b;
        assert_eq!(sum, p(&[(1, 2)]));
        assert_eq!(&a - &a, LaurentPoly::zero("q"));
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn multiplication_is_convolution() {
        let one = LaurentPoly::one("q");
        let a = p(&[(2, -1), (-2, -1)]); // -q^2 - q^-2
        assert_eq!(&a * &one, a);
        // (-q^2 - q^-2)^2 = q^4 + 2 + q^-4
        assert_eq!(a.pow(2), p(&[(4, 1), (0, 2), (-4, 1)]));
    }

    #[test]
    fn variable_mismatch_is_an_error() {
        let a = LaurentPoly::one("q");
        let b = LaurentPoly::one("A");
        assert!(matches!(a.checked_add(&b), Err(RingError::VariableMismatch(_, _))));
        assert!(matches!(a.checked_mul(&b), Err(RingError::VariableMismatch(_, _))));
    }

    #[test]
    fn subst_monomial_examples() {
        let a2 = LaurentPoly::monomial("A", 1, 2);
        let s = a2.subst_monomial("q", -4, false).unwrap();
        assert_eq!(s, LaurentPoly::monomial("q", 1, -8));

        let a = LaurentPoly::from_terms("A", [(1i64, 1i64), (-1, 1)]);
        let s = a.subst_monomial("q", 2, false).unwrap();
        assert_eq!(s, p(&[(2, 1), (-2, 1)]));

        // negate_var flips the sign of odd-exponent terms only
        let b = LaurentPoly::from_terms("A", [(1i64, 1i64), (2, 1), (3, 1)]);
        let s = b.subst_monomial("q", 1, true).unwrap();
        assert_eq!(s, p(&[(1, -1), (2, 1), (3, -1)]));

        assert_eq!(
            a.subst_monomial("q", 0, false),
            Err(RingError::ZeroExponentFactor)
        );
    }

    #[test]
    fn exact_division() {
        let delta = p(&[(2, -1), (-2, -1)]);
        let sq = delta.pow(2);
        assert_eq!(sq.div_exact(&delta).unwrap(), delta);
        // monomial division shifts exponents
        let m = p(&[(3, -2)]);
        assert_eq!(p(&[(5, 4)]).div_exact(&m).unwrap(), p(&[(2, -2)]));
        // q^2 + 1 is not divisible by q + 1
        let r = p(&[(2, 1), (0, 1)]).div_exact(&p(&[(1, 1), (0, 1)]));
        assert_eq!(r, Err(RingError::InexactDivision));
        assert_eq!(p(&[(0, 1)]).div_exact(&p(&[])), Err(RingError::DivisionByZero));
    }

    #[test]
    fn display_canonical_form() {
        use alloc::string::ToString;
        assert_eq!(LaurentPoly::zero("A").to_string(), "0");
        assert_eq!(p(&[(1, 2)]).to_string(), "2*q");
        assert_eq!(p(&[(0, -7)]).to_string(), "-7");
        let delta = LaurentPoly::from_terms("A", [(2i64, -1i64), (-2, -1)]);
        assert_eq!(delta.to_string(), "-A^-2 - A^2");
        assert_eq!(
            LaurentPoly::from_terms("A", [(5i64, 3i64), (1, -1)]).to_string(),
            "-A + 3*A^5"
        );
    }

    #[test]
    fn parse_round_trips_and_rejects_junk() {
        use alloc::string::ToString;
        for text in ["0", "2*q", "-7", "-q^-2 - q^2", "q + q^3 - q^4", "2*q^-3 + 1"] {
            let parsed = LaurentPoly::parse(text, "q").unwrap();
            assert_eq!(parsed.to_string(), *text);
        }
        // non-canonical spellings still parse
        assert_eq!(LaurentPoly::parse("+1*q^1", "q").unwrap(), p(&[(1, 1)]));
        assert_eq!(LaurentPoly::parse("q - q", "q").unwrap(), LaurentPoly::zero("q"));
        assert!(matches!(
            LaurentPoly::parse("q + ", "q"),
            Err(RingError::Parse { .. })
        ));
        assert!(matches!(
            LaurentPoly::parse("A^2", "q"),
            Err(RingError::Parse { offset: 0, .. })
        ));
        assert!(matches!(
            LaurentPoly::parse("2**q", "q"),
            Err(RingError::Parse { .. })
        ));
    }

    #[test]
    fn matmul_identity_and_shapes() {
        let id = RingMatrix::identity("q", 2);
        let m = RingMatrix::from_fn("q", 2, 3, |i, j| {
            LaurentPoly::monomial("q", 1 + i as i64, j as i64)
        })
        .unwrap();
        assert_eq!(id.matmul(&m).unwrap(), m);
        assert!(matches!(
            m.matmul(&id),
            Err(RingError::ShapeMismatch(_, _))
        ));
        let one = RingMatrix::from_fn("q", 1, 1, |_, _| LaurentPoly::one("q")).unwrap();
        assert_eq!(one.matmul(&one).unwrap(), one);
    }

    #[test]
    fn kronecker_shapes_and_identity() {
        let a = RingMatrix::zeros("q", 2, 3);
        let b = RingMatrix::zeros("q", 4, 1);
        let k = a.kronecker(&b).unwrap();
        assert_eq!((k.rows(), k.cols()), (8, 3));
        let id2 = RingMatrix::identity("q", 2);
        let id3 = RingMatrix::identity("q", 3);
        assert!(id2.kronecker(&id3).unwrap().is_identity());
    }

    #[test]
    fn kronecker_block_order_is_left_factor_major() {
        // a = [[0, 1], [q, 0]] tensored with I2: block (i1, j1) = a[i1][j1] * I2
        let a = RingMatrix::from_fn("q", 2, 2, |i, j| match (i, j) {
            (0, 1) => LaurentPoly::one("q"),
            (1, 0) => LaurentPoly::monomial("q", 1, 1),
            _ => LaurentPoly::zero("q"),
        })
        .unwrap();
        let k = a.kronecker(&RingMatrix::identity("q", 2)).unwrap();
        assert_eq!(k.entry(0, 2), &LaurentPoly::one("q"));
        assert_eq!(k.entry(1, 3), &LaurentPoly::one("q"));
        assert_eq!(k.entry(2, 0), &LaurentPoly::monomial("q", 1, 1));
        assert_eq!(k.entry(3, 1), &LaurentPoly::monomial("q", 1, 1));
        assert_eq!(k.entry(0, 0), &LaurentPoly::zero("q"));
    }
}

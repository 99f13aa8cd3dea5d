//! The rank-two bracket theory: matrices assigned to elementary generators.
//!
//! Strands carry a rank-2 free module over ℤ[A, A⁻¹]. Cups and caps are the
//! (co)pairings `(0, -A, A⁻¹, 0)`; a crossing resolves into the two planar
//! smoothings with weights `A^{±1}` (see [`conventions::smoothings`]). The
//! loop value is δ = -A² - A⁻² and a positive kink scales a strand by
//! κ = -A³. Orientations never enter the matrices — they only drive the
//! writhe bookkeeping — so both sign variants of a generator share one
//! matrix.

use alloc::vec::Vec;
use core::fmt;

use crate::conventions::{self, Smoothing};
use crate::ring::{LaurentPoly, RingMatrix, Var};
use crate::tangle::Generator;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TheoryData {
    var: Var,
    dim: usize,
    id: RingMatrix,
    cup: RingMatrix,
    cap: RingMatrix,
    r_over: RingMatrix,
    r_under: RingMatrix,
    delta: LaurentPoly,
    kink: LaurentPoly,
    kink_inv: LaurentPoly,
}

impl TheoryData {
    pub fn var(&self) -> &Var {
        &self.var
    }

    /// Rank of the strand module.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Value of a closed loop.
    pub fn delta(&self) -> &LaurentPoly {
        &self.delta
    }

    /// Scale factor of a positive kink.
    pub fn kink(&self) -> &LaurentPoly {
        &self.kink
    }

    pub fn kink_inv(&self) -> &LaurentPoly {
        &self.kink_inv
    }

    pub fn cup(&self) -> &RingMatrix {
        &self.cup
    }

    pub fn cap(&self) -> &RingMatrix {
        &self.cap
    }

    pub fn r_over(&self) -> &RingMatrix {
        &self.r_over
    }

    pub fn r_under(&self) -> &RingMatrix {
        &self.r_under
    }

    /// The matrix of one generator; orientations are ignored.
    pub fn generator_matrix(&self, g: &Generator) -> &RingMatrix {
        match g {
            Generator::Id(_) => &self.id,
            Generator::Cup(_) => &self.cup,
            Generator::Cap(_) => &self.cap,
            Generator::Over(..) => &self.r_over,
            Generator::Under(..) => &self.r_under,
        }
    }
}

/// The bracket theory in the variable `A`.
pub fn default_theory() -> TheoryData {
    bracket_theory("A")
}

/// The bracket theory in a caller-chosen variable.
pub fn bracket_theory(var: impl Into<Var>) -> TheoryData {
    let var = var.into();
    let m = |c: i64, e: i64| LaurentPoly::monomial(var.clone(), c, e);
    let dim = 2usize;
    let id = RingMatrix::identity(var.clone(), dim);
    let mut cup = RingMatrix::zeros(var.clone(), dim * dim, 1);
    cup.set_entry(1, 0, m(-1, 1)).unwrap();
    cup.set_entry(2, 0, m(1, -1)).unwrap();
    let mut cap = RingMatrix::zeros(var.clone(), 1, dim * dim);
    cap.set_entry(0, 1, m(1, 1)).unwrap();
    cap.set_entry(0, 2, m(-1, -1)).unwrap();
    let turnback = cup.matmul(&cap).unwrap();
    let id2 = RingMatrix::identity(var.clone(), dim * dim);
    let resolve = |over: bool| -> RingMatrix {
        let mut r = RingMatrix::zeros(var.clone(), dim * dim, dim * dim);
        for (smoothing, exp) in conventions::smoothings(over) {
            let part = match smoothing {
                Smoothing::Vertical => &id2,
                Smoothing::CupCap => &turnback,
            };
            r = r.checked_add(&part.scale(&m(1, exp)).unwrap()).unwrap();
        }
        r
    };
    let r_over = resolve(true);
    let r_under = resolve(false);
    let delta = LaurentPoly::from_terms(var.clone(), [(2, -1), (-2, -1)]);
    let kink = m(-1, 3);
    let kink_inv = m(-1, -3);
    TheoryData { var, dim, id, cup, cap, r_over, r_under, delta, kink, kink_inv }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TheoryCheck {
    pub name: &'static str,
    pub pass: bool,
}

/// Outcome of the structural identities a theory must satisfy for the
/// evaluation to be move-invariant.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TheoryReport {
    pub checks: Vec<TheoryCheck>,
}

impl TheoryReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

impl fmt::Display for TheoryReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{} {}", if c.pass { "ok  " } else { "FAIL" }, c.name)?;
        }
        Ok(())
    }
}

/// Verifies the identities behind move invariance: the zigzag equations, the
/// loop value, two-sided crossing inverses, the Yang-Baxter equation and the
/// kink factors.
pub fn check_theory(th: &TheoryData) -> TheoryReport {
    let var = th.var().clone();
    let id1 = RingMatrix::identity(var.clone(), th.dim());
    let mut checks = Vec::new();
    let mut push = |name: &'static str, pass: bool| checks.push(TheoryCheck { name, pass });

    let loop_val = th.cap().matmul(th.cup()).unwrap();
    push(
        "loop-value",
        loop_val.as_scalar() == Some(th.delta()),
    );

    let right = th
        .cap()
        .kronecker(&id1)
        .unwrap()
        .matmul(&id1.kronecker(th.cup()).unwrap())
        .unwrap();
    push("zigzag-right", right.is_identity());
    let left = id1
        .kronecker(th.cap())
        .unwrap()
        .matmul(&th.cup().kronecker(&id1).unwrap())
        .unwrap();
    push("zigzag-left", left.is_identity());

    push(
        "crossing-inverse",
        th.r_over().matmul(th.r_under()).unwrap().is_identity()
            && th.r_under().matmul(th.r_over()).unwrap().is_identity(),
    );

    let lo = th.r_over().kronecker(&id1).unwrap();
    let hi = id1.kronecker(th.r_over()).unwrap();
    let lhs = lo.matmul(&hi).unwrap().matmul(&lo).unwrap();
    let rhs = hi.matmul(&lo).unwrap().matmul(&hi).unwrap();
    push("yang-baxter", lhs == rhs);

    let kink_of = |r: &RingMatrix| -> RingMatrix {
        id1.kronecker(th.cap())
            .unwrap()
            .matmul(&r.kronecker(&id1).unwrap())
            .unwrap()
            .matmul(&id1.kronecker(th.cup()).unwrap())
            .unwrap()
    };
    push(
        "kink-factor",
        kink_of(th.r_over()) == id1.scale(th.kink()).unwrap()
            && kink_of(th.r_under()) == id1.scale(th.kink_inv()).unwrap(),
    );
    push(
        "kink-inverse",
        (th.kink() * th.kink_inv()).is_one(),
    );

    TheoryReport { checks }
}

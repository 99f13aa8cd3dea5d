//! Property tests for the exact Laurent-polynomial ring and its matrices.

use proptest::collection::vec;
use proptest::prelude::*;
use tangle_core::ring::{LaurentPoly, RingMatrix};

fn poly() -> impl Strategy<Value = LaurentPoly> {
    vec((-8i64..=8, -9i64..=9), 0..6)
        .prop_map(|terms| LaurentPoly::from_terms("q", terms))
}

fn nonzero_poly() -> impl Strategy<Value = LaurentPoly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = RingMatrix> {
    vec(poly(), rows * cols).prop_map(move |entries| {
        let mut it = entries.into_iter();
        RingMatrix::from_fn("q", rows, cols, |_, _| it.next().unwrap()).unwrap()
    })
}

proptest! {
    #[test]
    fn addition_is_commutative_and_associative(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
    }

    #[test]
    fn multiplication_is_commutative_and_associative(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn multiplication_distributes(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn subtraction_is_adding_the_negation(a in poly(), b in poly()) {
        prop_assert_eq!(&a - &b, &a + &b.neg());
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn units_behave(a in poly()) {
        prop_assert_eq!(&a + &LaurentPoly::zero("q"), a.clone());
        prop_assert_eq!(&a * &LaurentPoly::one("q"), a.clone());
        prop_assert!((&a * &LaurentPoly::zero("q")).is_zero());
    }

    #[test]
    fn display_parse_round_trips(a in poly()) {
        let text = a.to_string();
        let back = LaurentPoly::parse(&text, "q").unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn exact_division_recovers_the_factor(a in poly(), b in nonzero_poly()) {
        let product = &a * &b;
        prop_assert_eq!(product.div_exact(&b).unwrap(), a);
    }

    #[test]
    fn substitution_is_a_ring_map(
        a in poly(),
        b in poly(),
        f in prop_oneof![Just(-3i64), Just(-1), Just(1), Just(2), Just(4)],
        negate in any::<bool>(),
    ) {
        let s = |p: &LaurentPoly| p.subst_monomial("t", f, negate).unwrap();
        prop_assert_eq!(s(&(&a + &b)), &s(&a) + &s(&b));
        prop_assert_eq!(s(&(&a * &b)), &s(&a) * &s(&b));
        prop_assert!(s(&LaurentPoly::one("q")).is_one());
    }

    #[test]
    fn matmul_is_associative(a in matrix(2, 3), b in matrix(3, 2), c in matrix(2, 2)) {
        let left = a.matmul(&b).unwrap().matmul(&c).unwrap();
        let right = a.matmul(&b.matmul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn matmul_respects_identities(a in matrix(2, 3)) {
        let left = RingMatrix::identity("q", 2).matmul(&a).unwrap();
        let right = a.matmul(&RingMatrix::identity("q", 3)).unwrap();
        prop_assert_eq!(&left, &a);
        prop_assert_eq!(&right, &a);
    }

    #[test]
    fn kronecker_mixed_product(
        a in matrix(2, 2),
        b in matrix(3, 2),
        c in matrix(2, 2),
        d in matrix(2, 3),
    ) {
        // (A ⊗ B)(C ⊗ D) = (AC) ⊗ (BD)
        let lhs = a.kronecker(&b).unwrap().matmul(&c.kronecker(&d).unwrap()).unwrap();
        let rhs = a.matmul(&c).unwrap().kronecker(&b.matmul(&d).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn kronecker_is_associative(a in matrix(2, 1), b in matrix(1, 2), c in matrix(2, 2)) {
        let left = a.kronecker(&b).unwrap().kronecker(&c).unwrap();
        let right = a.kronecker(&b.kronecker(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn scalar_matrices_multiply_like_scalars(a in poly(), b in poly()) {
        let ma = RingMatrix::from_fn("q", 1, 1, |_, _| a.clone()).unwrap();
        let mb = RingMatrix::from_fn("q", 1, 1, |_, _| b.clone()).unwrap();
        let product = ma.matmul(&mb).unwrap();
        prop_assert_eq!(product.as_scalar().unwrap(), &(&a * &b));
    }
}

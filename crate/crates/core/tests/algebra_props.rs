mod common;

use common::*;
use ncwitt::{eval_matrix, parse, CoefficientRing, FreePoly, Matrix, MatrixAssignment};
use proptest::prelude::*;

fn arb_ring() -> impl Strategy<Value = CoefficientRing> {
    prop_oneof![Just(zz()), Just(fp(2)), Just(fp(3)), Just(fp(6))]
}

fn arb_triple() -> impl Strategy<Value = (FreePoly, FreePoly, FreePoly)> {
    arb_ring().prop_flat_map(|r| {
        (arb_poly(r.clone(), 6, 8), arb_poly(r.clone(), 6, 8), arb_poly(r, 6, 8))
    })
}

fn arb_matrix(ring: CoefficientRing, dim: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(prop::collection::vec(-4i64..=4, dim), dim)
        .prop_map(move |rows| Matrix::from_rows(&ring, rows).unwrap())
}

fn arb_assignment(ring: CoefficientRing, dim: usize) -> impl Strategy<Value = MatrixAssignment> {
    (arb_matrix(ring.clone(), dim), arb_matrix(ring.clone(), dim))
        .prop_map(move |(x, y)| MatrixAssignment::new(&ring, [("X", x), ("Y", y)]).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn ring_axioms((f, g, h) in arb_triple()) {
        let zero = FreePoly::zero(f.gens(), f.ring());
        let one = FreePoly::one(f.gens(), f.ring());
        prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert_eq!(&(&f + &g) * &h, &(&f * &h) + &(&g * &h));
        prop_assert_eq!(&f + &zero, f.clone());
        prop_assert_eq!(&f * &one, f.clone());
        prop_assert_eq!(&one * &f, f.clone());
        prop_assert!((&f + &(-&f)).is_zero());
        prop_assert!((&f * &zero).is_zero());
    }

    #[test]
    fn outputs_are_canonical((f, g, _h) in arb_triple()) {
        for out in [&f + &g, &f - &g, &f * &g, f.commutator(&g).unwrap(), f.pow(2)] {
            prop_assert!(out.is_canonical());
            let again = FreePoly::from_terms(
                out.gens(),
                out.ring(),
                out.terms().map(|(w, c)| (w.clone(), c.clone())),
            );
            prop_assert_eq!(again, out);
        }
    }

    #[test]
    fn parse_format_round_trip(r in arb_ring(), f in arb_int_poly(6, 8)) {
        let f = f.coerce(&r).unwrap();
        let text = f.to_string();
        prop_assert_eq!(parse(&text, f.gens(), f.ring()).unwrap(), f);
    }

    #[test]
    fn pow_is_repeated_mul(f in arb_int_poly(2, 3), k in 0u64..5) {
        let mut want = FreePoly::one(f.gens(), f.ring());
        for _ in 0..k {
            want = &want * &f;
        }
        prop_assert_eq!(f.pow(k), want);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn eval_is_unital_ring_homomorphism(
        (asg, f, g) in (prop_oneof![Just(zz()), Just(fp(2)), Just(fp(3))], 2usize..=3)
            .prop_flat_map(|(r, d)| (arb_assignment(r, d), arb_int_poly(4, 5), arb_int_poly(4, 5)))
    ) {
        let ef = eval_matrix(&f, &asg).unwrap();
        let eg = eval_matrix(&g, &asg).unwrap();
        prop_assert_eq!(eval_matrix(&(&f * &g), &asg).unwrap(), ef.mul(&eg).unwrap());
        prop_assert_eq!(eval_matrix(&(&f + &g), &asg).unwrap(), ef.add(&eg).unwrap());
        let one = FreePoly::one(f.gens(), f.ring());
        prop_assert_eq!(eval_matrix(&one, &asg).unwrap(), Matrix::identity(asg.dim(), asg.ring()));
    }

    #[test]
    fn trace_kills_commutators(
        (asg, f, g) in (prop_oneof![Just(fp(2)), Just(fp(3))], 2usize..=3)
            .prop_flat_map(|(r, d)| (arb_assignment(r, d), arb_int_poly(5, 6), arb_int_poly(5, 6)))
    ) {
        let c = f.commutator(&g).unwrap();
        prop_assert_eq!(eval_matrix(&c, &asg).unwrap().trace(), 0.into());
    }
}

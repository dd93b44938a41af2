mod common;

use common::*;
use ncwitt::algebra::{eval_matrix, Matrix, MatrixAssignment};
use ncwitt::ghost::int_ghost_components;
use ncwitt::hesselholt::{witt_eq, WittVector};
use ncwitt::{ghost_components, ghost_inverse_int, witt_add_int, witt_mul_int, FreePoly, IntWittVector, NecklacePoly};
use num_bigint::BigInt;
use proptest::prelude::*;

fn arb_prime() -> impl Strategy<Value = u64> {
    prop_oneof![Just(2u64), Just(3u64), Just(5u64)]
}

fn arb_int_witt(p: u64, n: usize) -> impl Strategy<Value = IntWittVector> {
    prop::collection::vec(-1000i64..=1000, n)
        .prop_map(move |c| IntWittVector::new(prime(p), c.into_iter().map(BigInt::from).collect()))
}

fn arb_witt_triple() -> impl Strategy<Value = (IntWittVector, IntWittVector, IntWittVector)> {
    (prop_oneof![Just(2u64), Just(3u64)], 1usize..=4)
        .prop_flat_map(|(p, n)| (arb_int_witt(p, n), arb_int_witt(p, n), arb_int_witt(p, n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn ghost_round_trip((p, n) in (arb_prime(), 1usize..=5), seed in prop::collection::vec(-50i64..=50, 5)) {
        let coords: Vec<BigInt> = seed.into_iter().take(n).map(BigInt::from).collect();
        let ghost = int_ghost_components(&coords, prime(p));
        let back = ghost_inverse_int(&ghost, prime(p)).unwrap();
        prop_assert_eq!(back.coords(), coords.as_slice());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ghost_is_additive_and_multiplicative((a, b, _c) in arb_witt_triple()) {
        let s = witt_add_int(&a, &b).unwrap();
        let m = witt_mul_int(&a, &b).unwrap();
        let (ga, gb) = (a.ghost(), b.ghost());
        let sum: Vec<BigInt> = ga.iter().zip(&gb).map(|(x, y)| x + y).collect();
        let prod: Vec<BigInt> = ga.iter().zip(&gb).map(|(x, y)| x * y).collect();
        prop_assert_eq!(s.ghost(), sum);
        prop_assert_eq!(m.ghost(), prod);
    }

    #[test]
    fn witt_ring_axioms((a, b, c) in arb_witt_triple()) {
        let add = |x: &IntWittVector, y: &IntWittVector| witt_add_int(x, y).unwrap();
        let mul = |x: &IntWittVector, y: &IntWittVector| witt_mul_int(x, y).unwrap();
        prop_assert_eq!(add(&add(&a, &b), &c), add(&a, &add(&b, &c)));
        prop_assert_eq!(add(&a, &b), add(&b, &a));
        prop_assert_eq!(mul(&mul(&a, &b), &c), mul(&a, &mul(&b, &c)));
        prop_assert_eq!(mul(&a, &b), mul(&b, &a));
        prop_assert_eq!(mul(&a, &add(&b, &c)), add(&mul(&a, &b), &mul(&a, &c)));
    }

    #[test]
    fn verschiebung_ghost_identity(
        (p, coords) in (prop_oneof![Just(2u64), Just(3u64)], 1usize..=3)
            .prop_flat_map(|(p, n)| (Just(p), arb_coords(n, 2, 2)))
    ) {
        let pr = prime(p);
        let w = WittVector::new(pr, coords.clone()).unwrap();
        let shifted = w.verschiebung();
        let gv = ghost_components(shifted.coords(), pr).unwrap();
        let gw = ghost_components(&coords, pr).unwrap();
        prop_assert!(gv[0].is_zero());
        for k in 1..coords.len() {
            prop_assert_eq!(&gv[k], &gw[k - 1].scale(&BigInt::from(p)));
        }
        // same identity after projection
        let iv = shifted.ghost_image().unwrap();
        let iw = w.ghost_image().unwrap();
        for k in 1..coords.len() {
            prop_assert_eq!(&iv.coords()[k], &iw.coords()[k - 1].scale(&BigInt::from(p)));
        }
    }
}

/// Matrix version of the Witt polynomials, written independently of
/// `ghost_components`.
fn matrix_ghost(coords: &[Matrix], p: u64) -> Vec<Matrix> {
    (0..coords.len())
        .map(|k| {
            let mut acc = Matrix::zero(coords[0].dim(), coords[0].ring());
            for (i, m) in coords.iter().enumerate().take(k + 1) {
                let term = m.pow(p.pow((k - i) as u32)).scale(&BigInt::from(p.pow(i as u32)));
                acc = acc.add(&term).unwrap();
            }
            acc
        })
        .collect()
}

fn arb_int_matrix() -> impl Strategy<Value = Matrix> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, 2), 2)
        .prop_map(|rows| Matrix::from_rows(&zz(), rows).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn ghost_components_commute_with_evaluation(
        (p, coords) in (prop_oneof![Just(2u64), Just(3u64)], 1usize..=3)
            .prop_flat_map(|(p, n)| (Just(p), arb_coords(n, 2, 2))),
        mx in arb_int_matrix(),
        my in arb_int_matrix(),
    ) {
        let asg = MatrixAssignment::new(&zz(), [("X", mx), ("Y", my)]).unwrap();
        let ghost = ghost_components(&coords, prime(p)).unwrap();
        let evaluated: Vec<Matrix> = coords.iter().map(|a| eval_matrix(a, &asg).unwrap()).collect();
        let want = matrix_ghost(&evaluated, p);
        for (g, m) in ghost.iter().zip(&want) {
            prop_assert_eq!(&eval_matrix(g, &asg).unwrap(), m);
        }
    }

    #[test]
    fn first_coordinate_commutators_change_ghosts_only_by_multiples_of_p(
        (p, coords) in prop_oneof![
            (Just(2u64), arb_coords(3, 2, 2)),
            (Just(3u64), arb_coords(2, 2, 2)),
        ],
        f in arb_int_poly(1, 2),
        g in arb_int_poly(2, 2),
    ) {
        let pr = prime(p);
        let mut moved = coords.clone();
        moved[0] = &moved[0] + &f.commutator(&g).unwrap();
        let a = WittVector::new(pr, coords.clone()).unwrap();
        let b = WittVector::new(pr, moved.clone()).unwrap();
        let diff = b.ghost_image().unwrap().sub(&a.ghost_image().unwrap()).unwrap();
        prop_assert!(diff.coords()[0].is_zero());
        prop_assert!(diff.reduce_mod(p).unwrap().is_zero());
        // In W_1 = A/[A,A] the two vectors coincide.
        let a1 = WittVector::new(pr, coords[..1].to_vec()).unwrap();
        let b1 = WittVector::new(pr, moved[..1].to_vec()).unwrap();
        prop_assert!(witt_eq(&a1, &b1).unwrap());
        prop_assert_eq!(witt_eq(&a, &b).unwrap(), witt_eq(&b, &a).unwrap());
        prop_assert!(witt_eq(&a, &a).unwrap());
    }
}

#[test]
fn first_coordinate_commutator_is_visible_in_w2() {
    // (YX - XY)^2 projects to 2*XYXY - 2*XXYY, so (0 + [Y, X], 0) != (0, 0) in W_2.
    let p = prime(2);
    let x = FreePoly::generator(&xy(), &zz(), "X").unwrap();
    let y = FreePoly::generator(&xy(), &zz(), "Y").unwrap();
    let zero = FreePoly::zero(&xy(), &zz());
    let c = y.commutator(&x).unwrap();
    let a = WittVector::new(p, vec![zero.clone(), zero.clone()]).unwrap();
    let b = WittVector::new(p, vec![c, zero]).unwrap();
    assert!(!witt_eq(&a, &b).unwrap());
    let g = b.ghost_image().unwrap();
    assert_eq!(g.coords()[1].to_string(), "-2*X*X*Y*Y + 2*X*Y*X*Y");
}

#[test]
fn zero_first_coordinate_is_fine() {
    let p = prime(2);
    let x = FreePoly::generator(&xy(), &zz(), "X").unwrap();
    let zero = FreePoly::zero(&xy(), &zz());
    let g = ghost_components(&[zero, x.clone()], p).unwrap();
    assert_eq!(g[1], x.scale(&BigInt::from(2)));
    assert_eq!(NecklacePoly::project(&g[0]), NecklacePoly::zero(&xy(), &zz()));
}

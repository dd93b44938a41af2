#![allow(dead_code)]

use ncwitt::{CoefficientRing, FreePoly, GeneratorSet, Prime, Word};
use proptest::prelude::*;

pub fn xy() -> GeneratorSet {
    GeneratorSet::xy()
}

pub fn zz() -> CoefficientRing {
    CoefficientRing::Integers
}

pub fn fp(p: u64) -> CoefficientRing {
    CoefficientRing::modular(p).unwrap()
}

pub fn prime(p: u64) -> Prime {
    Prime::new(p).unwrap()
}

/// Random polynomials in `{X, Y}` with words of length `<= max_deg`, at most
/// `max_terms` terms and small coefficients.
pub fn arb_poly(ring: CoefficientRing, max_deg: usize, max_terms: usize) -> BoxedStrategy<FreePoly> {
    let term = (prop::collection::vec(0u8..2, 0..=max_deg), -6i64..=6);
    prop::collection::vec(term, 0..=max_terms)
        .prop_map(move |terms| {
            FreePoly::from_terms(
                &xy(),
                &ring,
                terms.into_iter().map(|(w, c)| (Word::from_letters(w), c.into())),
            )
        })
        .boxed()
}

pub fn arb_int_poly(max_deg: usize, max_terms: usize) -> BoxedStrategy<FreePoly> {
    arb_poly(zz(), max_deg, max_terms)
}

pub fn arb_coords(n: usize, max_deg: usize, max_terms: usize) -> BoxedStrategy<Vec<FreePoly>> {
    prop::collection::vec(arb_int_poly(max_deg, max_terms), n).boxed()
}

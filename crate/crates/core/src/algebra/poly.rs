use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::generators::GeneratorSet;
use super::ring::CoefficientRing;
use super::word::Word;
use crate::error::{Error, Result};

/// An element of the free associative algebra over ℤ or ℤ/m.
///
/// Stored as a sparse map from words to nonzero, normalized coefficients, so
/// structural equality is equality in the algebra.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FreePoly {
    gens: GeneratorSet,
    ring: CoefficientRing,
    terms: BTreeMap<Word, BigInt>,
}

/// Adds `c` to the coefficient of `w`, dropping the entry if it cancels.
pub(crate) fn accumulate(
    terms: &mut BTreeMap<Word, BigInt>,
    ring: &CoefficientRing,
    w: Word,
    c: BigInt,
) {
    match terms.entry(w) {
        Entry::Vacant(e) => {
            let c = ring.normalize(c);
            if !c.is_zero() {
                e.insert(c);
            }
        }
        Entry::Occupied(mut e) => {
            let sum = ring.normalize(std::mem::take(e.get_mut()) + c);
            if sum.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = sum;
            }
        }
    }
}

impl FreePoly {
    pub fn zero(gens: &GeneratorSet, ring: &CoefficientRing) -> Self {
        FreePoly { gens: gens.clone(), ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn one(gens: &GeneratorSet, ring: &CoefficientRing) -> Self {
        Self::constant(gens, ring, BigInt::one())
    }

    pub fn constant(gens: &GeneratorSet, ring: &CoefficientRing, c: impl Into<BigInt>) -> Self {
        Self::monomial(gens, ring, Word::empty(), c)
    }

    pub fn monomial(
        gens: &GeneratorSet,
        ring: &CoefficientRing,
        word: Word,
        c: impl Into<BigInt>,
    ) -> Self {
        Self::from_terms(gens, ring, [(word, c.into())])
    }

    /// The generator called `name`.
    pub fn generator(gens: &GeneratorSet, ring: &CoefficientRing, name: &str) -> Result<Self> {
        let i = gens
            .index_of(name)
            .ok_or_else(|| Error::UnknownGenerator { name: name.to_owned(), pos: 0 })?;
        Ok(Self::monomial(gens, ring, Word::letter(i), 1))
    }

    /// Builds a canonical polynomial from arbitrary (possibly repeated or
    /// zero) terms. Panics if a word uses a letter outside `gens`.
    pub fn from_terms<I>(gens: &GeneratorSet, ring: &CoefficientRing, terms: I) -> Self
    where
        I: IntoIterator<Item = (Word, BigInt)>,
    {
        let mut map = BTreeMap::new();
        for (w, c) in terms {
            if let Some(m) = w.max_letter() {
                assert!((m as usize) < gens.len(), "letter {m} outside generator set [{gens}]");
            }
            accumulate(&mut map, ring, w, c);
        }
        FreePoly { gens: gens.clone(), ring: ring.clone(), terms: map }
    }

    pub fn gens(&self) -> &GeneratorSet {
        &self.gens
    }

    pub fn ring(&self) -> &CoefficientRing {
        &self.ring
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &BigInt)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> BigInt {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Length of the longest word, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next_back().map(Word::len)
    }

    /// True if no coefficient is zero and every coefficient is normalized.
    pub fn is_canonical(&self) -> bool {
        self.terms.values().all(|c| !c.is_zero() && self.ring.normalize(c.clone()) == *c)
    }

    fn check_compatible(&self, other: &FreePoly) -> Result<()> {
        self.gens.check_same(&other.gens)?;
        self.ring.check_same(&other.ring)
    }

    pub fn add(&self, other: &FreePoly) -> Result<FreePoly> {
        self.check_compatible(other)?;
        let mut terms = self.terms.clone();
        for (w, c) in &other.terms {
            accumulate(&mut terms, &self.ring, w.clone(), c.clone());
        }
        Ok(FreePoly { terms, ..self.empty_like() })
    }

    pub fn sub(&self, other: &FreePoly) -> Result<FreePoly> {
        self.check_compatible(other)?;
        let mut terms = self.terms.clone();
        for (w, c) in &other.terms {
            accumulate(&mut terms, &self.ring, w.clone(), -c);
        }
        Ok(FreePoly { terms, ..self.empty_like() })
    }

    /// Product in the free algebra: words concatenate, so the result is not
    /// commutative.
    pub fn mul(&self, other: &FreePoly) -> Result<FreePoly> {
        self.check_compatible(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &FreePoly) -> FreePoly {
        let mut terms = BTreeMap::new();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                accumulate(&mut terms, &self.ring, u.concat(v), a * b);
            }
        }
        FreePoly { terms, ..self.empty_like() }
    }

    /// `self^k` by square-and-multiply; `self^0` is the identity.
    pub fn pow(&self, k: u64) -> FreePoly {
        let mut result = FreePoly::one(&self.gens, &self.ring);
        if k == 0 {
            return result;
        }
        // Single-term fast path: (c·w)^k = c^k·w^k.
        if self.terms.len() == 1 {
            let (w, c) = self.terms.iter().next().unwrap();
            let times = usize::try_from(k).expect("exponent overflow");
            return FreePoly::from_terms(
                &self.gens,
                &self.ring,
                [(w.repeat(times), num_traits::pow(c.clone(), times))],
            );
        }
        let mut base = self.clone();
        let mut k = k;
        loop {
            if k & 1 == 1 {
                result = result.mul_unchecked(&base);
            }
            k >>= 1;
            if k == 0 {
                break;
            }
            base = base.mul_unchecked(&base);
        }
        result
    }

    pub fn scale(&self, c: &BigInt) -> FreePoly {
        FreePoly::from_terms(
            &self.gens,
            &self.ring,
            self.terms.iter().map(|(w, a)| (w.clone(), a * c)),
        )
    }

    /// `fg - gf`.
    pub fn commutator(&self, other: &FreePoly) -> Result<FreePoly> {
        self.check_compatible(other)?;
        self.mul_unchecked(other).sub(&other.mul_unchecked(self))
    }

    /// Coefficientwise reduction of an integer polynomial modulo `m`.
    pub fn reduce_mod(&self, m: impl Into<BigInt>) -> Result<FreePoly> {
        if !self.ring.is_integers() {
            return Err(Error::IntegerRingRequired(self.ring.to_string()));
        }
        let ring = CoefficientRing::modular(m)?;
        Ok(FreePoly::from_terms(
            &self.gens,
            &ring,
            self.terms.iter().map(|(w, c)| (w.clone(), c.clone())),
        ))
    }

    /// The same polynomial with coefficients read in `ring`. Used to push
    /// integer polynomials into a modular ring.
    pub fn coerce(&self, ring: &CoefficientRing) -> Result<FreePoly> {
        match (&self.ring, ring) {
            (a, b) if a == b => Ok(self.clone()),
            (CoefficientRing::Integers, _) => Ok(FreePoly::from_terms(
                &self.gens,
                ring,
                self.terms.iter().map(|(w, c)| (w.clone(), c.clone())),
            )),
            (a, b) => Err(Error::RingMismatch { left: a.to_string(), right: b.to_string() }),
        }
    }

    pub(crate) fn require_integers(&self) -> Result<()> {
        if self.ring.is_integers() {
            Ok(())
        } else {
            Err(Error::IntegerRingRequired(self.ring.to_string()))
        }
    }

    fn empty_like(&self) -> FreePoly {
        FreePoly::zero(&self.gens, &self.ring)
    }
}

impl fmt::Display for FreePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::parse::format_terms(&self.gens, self.terms.iter()))
    }
}

impl fmt::Debug for FreePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FreePoly[{}]({})", self.ring, self)
    }
}

// Operator sugar over the checked methods. These panic on mismatched
// generator sets or rings; use the named methods to get a `Result`.

impl Add for &FreePoly {
    type Output = FreePoly;
    fn add(self, rhs: &FreePoly) -> FreePoly {
        FreePoly::add(self, rhs).expect("FreePoly + FreePoly")
    }
}

impl Sub for &FreePoly {
    type Output = FreePoly;
    fn sub(self, rhs: &FreePoly) -> FreePoly {
        FreePoly::sub(self, rhs).expect("FreePoly - FreePoly")
    }
}

impl Mul for &FreePoly {
    type Output = FreePoly;
    fn mul(self, rhs: &FreePoly) -> FreePoly {
        FreePoly::mul(self, rhs).expect("FreePoly * FreePoly")
    }
}

impl Neg for &FreePoly {
    type Output = FreePoly;
    fn neg(self) -> FreePoly {
        self.scale(&BigInt::from(-1))
    }
}

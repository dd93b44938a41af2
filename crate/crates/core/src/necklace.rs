//! The commutator quotient `A/[A,A]` of a free algebra.
//!
//! `[A,A]` is spanned by `uv - vu` for words `u`, `v`, so two words agree in
//! the quotient exactly when they are cyclic rotations of each other. Each
//! class is represented by its lexicographically least rotation.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::algebra::{accumulate, CoefficientRing, FreePoly, GeneratorSet, Word};
use crate::error::{Error, Result};
use crate::prime::Prime;

/// Start index of the least rotation of `s` (Booth's algorithm, linear time).
pub fn least_rotation_index(s: &[u8]) -> usize {
    let n = s.len();
    if n < 2 {
        return 0;
    }
    let at = |i: usize| s[i % n];
    let mut fail: Vec<isize> = vec![-1; 2 * n];
    let mut k: usize = 0;
    for j in 1..2 * n {
        let c = at(j);
        let mut i = fail[j - k - 1];
        while i != -1 && c != at(k + i as usize + 1) {
            if c < at(k + i as usize + 1) {
                k = j - i as usize - 1;
            }
            i = fail[i as usize];
        }
        if i == -1 && c != at(k) {
            if c < at(k) {
                k = j;
            }
            fail[j - k] = -1;
        } else {
            fail[j - k] = i + 1;
        }
    }
    k
}

/// The canonical representative of the cyclic class of `w`.
pub fn min_rotation(w: &Word) -> Word {
    w.rotate(least_rotation_index(w.letters()))
}

/// An element of `A/[A,A]` (or its reduction mod m), keyed by minimal
/// rotations.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NecklacePoly {
    gens: GeneratorSet,
    ring: CoefficientRing,
    terms: BTreeMap<Word, BigInt>,
}

impl NecklacePoly {
    pub fn zero(gens: &GeneratorSet, ring: &CoefficientRing) -> Self {
        NecklacePoly { gens: gens.clone(), ring: ring.clone(), terms: BTreeMap::new() }
    }

    /// Image of `f` in the quotient.
    pub fn project(f: &FreePoly) -> Self {
        let mut terms = BTreeMap::new();
        for (w, c) in f.terms() {
            accumulate(&mut terms, f.ring(), min_rotation(w), c.clone());
        }
        NecklacePoly { gens: f.gens().clone(), ring: f.ring().clone(), terms }
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
        self.terms.get(&min_rotation(w)).cloned().unwrap_or_default()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The representative polynomial whose words are the stored necklaces.
    pub fn embed(&self) -> FreePoly {
        FreePoly::from_terms(
            &self.gens,
            &self.ring,
            self.terms.iter().map(|(w, c)| (w.clone(), c.clone())),
        )
    }

    pub fn add(&self, other: &NecklacePoly) -> Result<NecklacePoly> {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &NecklacePoly) -> Result<NecklacePoly> {
        self.combine(other, true)
    }

    fn combine(&self, other: &NecklacePoly, negate: bool) -> Result<NecklacePoly> {
        self.gens.check_same(&other.gens)?;
        self.ring.check_same(&other.ring)?;
        let mut terms = self.terms.clone();
        for (w, c) in &other.terms {
            let c = if negate { -c } else { c.clone() };
            accumulate(&mut terms, &self.ring, w.clone(), c);
        }
        Ok(NecklacePoly { gens: self.gens.clone(), ring: self.ring.clone(), terms })
    }

    pub fn scale(&self, c: &BigInt) -> NecklacePoly {
        let mut terms = BTreeMap::new();
        for (w, a) in &self.terms {
            accumulate(&mut terms, &self.ring, w.clone(), a * c);
        }
        NecklacePoly { gens: self.gens.clone(), ring: self.ring.clone(), terms }
    }

    pub fn neg(&self) -> NecklacePoly {
        self.scale(&BigInt::from(-1))
    }

    /// Coefficientwise reduction of an integer class modulo `m`.
    pub fn reduce_mod(&self, m: impl Into<BigInt>) -> Result<NecklacePoly> {
        Ok(NecklacePoly::project(&self.embed().reduce_mod(m)?))
    }

    /// True if every key is its own minimal rotation and no coefficient is zero.
    pub fn is_canonical(&self) -> bool {
        self.terms.keys().all(|w| &min_rotation(w) == w)
            && self.terms.values().all(|c| !self.ring.is_zero(c))
    }
}

impl fmt::Display for NecklacePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.embed(), f)
    }
}

impl fmt::Debug for NecklacePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NecklacePoly[{}]({})", self.ring, self)
    }
}

/// Serialized as an ordered JSON object `{word: "coefficient"}` in
/// degree-lex order.
impl Serialize for NecklacePoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.terms.len()))?;
        for (w, c) in &self.terms {
            map.serialize_entry(&w.label(&self.gens), &c.to_string())?;
        }
        map.end()
    }
}

/// `f ≡ g` in `A/[A,A]`.
pub fn necklace_eq(f: &FreePoly, g: &FreePoly) -> Result<bool> {
    Ok(NecklacePoly::project(&f.sub(g)?).is_zero())
}

/// The p-th power map on `A/([A,A] + pA)`: raise any representative to the
/// p-th power and project.
pub fn frobenius_p(f: &NecklacePoly, p: Prime) -> Result<NecklacePoly> {
    match f.ring.modulus() {
        Some(m) if *m == p.to_bigint() => {}
        Some(m) => {
            return match u64::try_from(m) {
                Ok(q) if !crate::prime::is_prime(q) => Err(Error::NotPrime(q)),
                _ => Err(Error::RingMismatch {
                    left: f.ring.to_string(),
                    right: format!("Z/{p}"),
                }),
            }
        }
        None => return Err(Error::RingMismatch { left: f.ring.to_string(), right: format!("Z/{p}") }),
    }
    Ok(NecklacePoly::project(&f.embed().pow(p.get())))
}

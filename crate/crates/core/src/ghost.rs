//! Witt polynomials `ω_k(a) = Σ_{i≤k} p^i a_i^{p^{k-i}}`, the ghost map into
//! `(A/[A,A])^n`, and classical integer Witt vectors via ghost coordinates.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::algebra::FreePoly;
use crate::error::{Error, Result};
use crate::necklace::NecklacePoly;
use crate::prime::Prime;

/// `(ω_0(a), …, ω_{n-1}(a))` as polynomials, before any quotient.
///
/// Coefficients must be integers: the `p^i` scalars are meaningless once
/// torsion is allowed.
pub fn ghost_components(coords: &[FreePoly], p: Prime) -> Result<Vec<FreePoly>> {
    let Some(first) = coords.first() else {
        return Ok(Vec::new());
    };
    for a in coords {
        a.require_integers()?;
        first.gens().check_same(a.gens())?;
    }
    let n = coords.len();
    let mut ghost: Vec<FreePoly> = vec![FreePoly::zero(first.gens(), first.ring()); n];
    for (i, a) in coords.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let scalar = p.pow_big(i);
        // power = a_i^{p^{k-i}} for k = i, i+1, …
        let mut power = a.clone();
        for (k, slot) in ghost.iter_mut().enumerate().skip(i) {
            if k > i {
                power = power.pow(p.get());
            }
            *slot = slot.add(&power.scale(&scalar))?;
        }
    }
    Ok(ghost)
}

/// A point of `(A/[A,A])^n`: the common target of every ghost map.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GhostVector {
    prime: Prime,
    coords: Vec<NecklacePoly>,
}

impl GhostVector {
    pub fn new(prime: Prime, coords: Vec<NecklacePoly>) -> Result<Self> {
        if let Some(first) = coords.first() {
            for c in &coords[1..] {
                first.gens().check_same(c.gens())?;
                first.ring().check_same(c.ring())?;
            }
        }
        Ok(GhostVector { prime, coords })
    }

    /// Projects each entry of a vector in `A^n`.
    pub fn project(prime: Prime, coords: &[FreePoly]) -> Result<Self> {
        GhostVector::new(prime, coords.iter().map(NecklacePoly::project).collect())
    }

    pub fn prime(&self) -> Prime {
        self.prime
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coords(&self) -> &[NecklacePoly] {
        &self.coords
    }

    pub fn get(&self, i: usize) -> Option<&NecklacePoly> {
        self.coords.get(i)
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(NecklacePoly::is_zero)
    }

    fn check_compatible(&self, other: &GhostVector) -> Result<()> {
        if self.prime != other.prime {
            return Err(Error::PrimeMismatch { left: self.prime.get(), right: other.prime.get() });
        }
        if self.len() != other.len() {
            return Err(Error::LengthMismatch { left: self.len(), right: other.len() });
        }
        Ok(())
    }

    pub fn add(&self, other: &GhostVector) -> Result<GhostVector> {
        self.check_compatible(other)?;
        let coords =
            self.coords.iter().zip(&other.coords).map(|(a, b)| a.add(b)).collect::<Result<_>>()?;
        Ok(GhostVector { prime: self.prime, coords })
    }

    pub fn sub(&self, other: &GhostVector) -> Result<GhostVector> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> GhostVector {
        GhostVector { prime: self.prime, coords: self.coords.iter().map(NecklacePoly::neg).collect() }
    }

    pub fn scale(&self, c: &BigInt) -> GhostVector {
        GhostVector { prime: self.prime, coords: self.coords.iter().map(|x| x.scale(c)).collect() }
    }

    /// Entrywise reduction modulo `m`.
    pub fn reduce_mod(&self, m: impl Into<BigInt>) -> Result<GhostVector> {
        let m = m.into();
        let coords = self.coords.iter().map(|c| c.reduce_mod(m.clone())).collect::<Result<_>>()?;
        Ok(GhostVector { prime: self.prime, coords })
    }
}

impl Serialize for GhostVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coords.serialize(s)
    }
}

/// `ω̄`: Witt polynomials followed by projection to the commutator quotient.
pub fn ghost_map(coords: &[FreePoly], p: Prime) -> Result<GhostVector> {
    GhostVector::project(p, &ghost_components(coords, p)?)
}

/// A classical p-typical Witt vector with integer coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntWittVector {
    prime: Prime,
    coords: Vec<BigInt>,
}

impl IntWittVector {
    pub fn new(prime: Prime, coords: Vec<BigInt>) -> Self {
        IntWittVector { prime, coords }
    }

    pub fn zero(prime: Prime, n: usize) -> Self {
        IntWittVector { prime, coords: vec![BigInt::zero(); n] }
    }

    /// `(c, 0, …, 0)`.
    pub fn teichmuller(prime: Prime, c: BigInt, n: usize) -> Self {
        let mut w = Self::zero(prime, n);
        if n > 0 {
            w.coords[0] = c;
        }
        w
    }

    pub fn prime(&self) -> Prime {
        self.prime
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    /// Integer ghost components `ω_0, …, ω_{n-1}`.
    pub fn ghost(&self) -> Vec<BigInt> {
        int_ghost_components(&self.coords, self.prime)
    }
}

impl Serialize for IntWittVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("IntWittVector", 2)?;
        st.serialize_field("prime", &self.prime)?;
        let coords: Vec<String> = self.coords.iter().map(ToString::to_string).collect();
        st.serialize_field("coords", &coords)?;
        st.end()
    }
}

pub fn int_ghost_components(coords: &[BigInt], p: Prime) -> Vec<BigInt> {
    let n = coords.len();
    let mut ghost = vec![BigInt::zero(); n];
    for (i, a) in coords.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let scalar = p.pow_big(i);
        let mut power = a.clone();
        for (k, slot) in ghost.iter_mut().enumerate().skip(i) {
            if k > i {
                power = num_traits::pow(power, p.get() as usize);
            }
            *slot += &scalar * &power;
        }
    }
    ghost
}

/// Recovers Witt coordinates from integer ghost components by exact division,
/// coordinate by coordinate. Fails with the first index whose division by
/// `p^i` leaves a remainder.
pub fn ghost_inverse_int(ghost: &[BigInt], p: Prime) -> Result<IntWittVector> {
    let mut coords: Vec<BigInt> = Vec::with_capacity(ghost.len());
    for (i, w) in ghost.iter().enumerate() {
        let mut rest = w.clone();
        for (j, a) in coords.iter().enumerate() {
            let e = p.pow_u64(i - j) as usize;
            rest -= p.pow_big(j) * num_traits::pow(a.clone(), e);
        }
        let (q, r) = rest.div_rem(&p.pow_big(i));
        if !r.is_zero() {
            return Err(Error::NotInImage { index: i });
        }
        coords.push(q);
    }
    Ok(IntWittVector { prime: p, coords })
}

fn check_pair(a: &IntWittVector, b: &IntWittVector) -> Result<()> {
    if a.prime != b.prime {
        return Err(Error::PrimeMismatch { left: a.prime.get(), right: b.prime.get() });
    }
    if a.len() != b.len() {
        return Err(Error::LengthMismatch { left: a.len(), right: b.len() });
    }
    Ok(())
}

fn invert_sum(ghost: &[BigInt], p: Prime, what: &str) -> Result<IntWittVector> {
    ghost_inverse_int(ghost, p).map_err(|e| {
        Error::Invariant(format!("{what} left the image of the ghost map: {e}"))
    })
}

/// Witt vector sum: add ghost components, then invert.
pub fn witt_add_int(a: &IntWittVector, b: &IntWittVector) -> Result<IntWittVector> {
    check_pair(a, b)?;
    let ghost: Vec<BigInt> = a.ghost().into_iter().zip(b.ghost()).map(|(x, y)| x + y).collect();
    invert_sum(&ghost, a.prime, "Witt sum")
}

/// Witt vector product: multiply ghost components, then invert.
pub fn witt_mul_int(a: &IntWittVector, b: &IntWittVector) -> Result<IntWittVector> {
    check_pair(a, b)?;
    let ghost: Vec<BigInt> = a.ghost().into_iter().zip(b.ghost()).map(|(x, y)| x * y).collect();
    invert_sum(&ghost, a.prime, "Witt product")
}

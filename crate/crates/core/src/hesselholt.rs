//! Truncated Witt vectors `W_n(A)` of a possibly non-commutative ring.
//!
//! A `WittVector` carries a coordinate tuple, i.e. a chosen preimage under
//! the set map `A^n → W_n(A)`. Equality and every other semantic question
//! is answered through the ghost image, which is injective when `A/[A,A]`
//! has no p-torsion. That is the case for free algebras over ℤ, whose
//! commutator quotient is free on necklaces.
//!
//! There is deliberately no coordinate-level addition.

use crate::algebra::FreePoly;
use crate::error::{Error, Result};
use crate::ghost::{ghost_map, GhostVector};
use crate::prime::Prime;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WittVector {
    prime: Prime,
    coords: Vec<FreePoly>,
}

impl WittVector {
    /// Coordinates must have integer coefficients and share generators.
    pub fn new(prime: Prime, coords: Vec<FreePoly>) -> Result<Self> {
        if let Some(first) = coords.first() {
            for a in &coords {
                a.require_integers()?;
                first.gens().check_same(a.gens())?;
            }
        }
        Ok(WittVector { prime, coords })
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

    pub fn coords(&self) -> &[FreePoly] {
        &self.coords
    }

    /// `⟨a⟩ = (a, 0, …, 0)`.
    pub fn teichmuller(a: &FreePoly, n: usize, prime: Prime) -> Result<Self> {
        a.require_integers()?;
        let zero = FreePoly::zero(a.gens(), a.ring());
        let mut coords = vec![zero; n];
        if let Some(c) = coords.first_mut() {
            *c = a.clone();
        }
        Ok(WittVector { prime, coords })
    }

    /// `V(a_0, a_1, …) = (0, a_0, a_1, …)`; the last coordinate falls off.
    pub fn verschiebung(&self) -> WittVector {
        let Some(first) = self.coords.first() else {
            return self.clone();
        };
        let mut coords = Vec::with_capacity(self.len());
        coords.push(FreePoly::zero(first.gens(), first.ring()));
        coords.extend_from_slice(&self.coords[..self.len() - 1]);
        WittVector { prime: self.prime, coords }
    }

    pub fn ghost_image(&self) -> Result<GhostVector> {
        ghost_map(&self.coords, self.prime)
    }
}

/// Equality in `W_n(A)`, decided by comparing ghost images.
pub fn witt_eq(a: &WittVector, b: &WittVector) -> Result<bool> {
    if a.prime != b.prime {
        return Err(Error::PrimeMismatch { left: a.prime.get(), right: b.prime.get() });
    }
    if a.len() != b.len() {
        return Err(Error::LengthMismatch { left: a.len(), right: b.len() });
    }
    Ok(a.ghost_image()? == b.ghost_image()?)
}

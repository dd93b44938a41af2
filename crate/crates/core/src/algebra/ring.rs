use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Coefficient ring of a polynomial: the integers or residues modulo `m >= 2`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CoefficientRing {
    Integers,
    Modular(BigInt),
}

impl CoefficientRing {
    pub fn modular(m: impl Into<BigInt>) -> Result<Self> {
        let m = m.into();
        if m < BigInt::from(2) {
            return Err(Error::InvalidModulus(m.to_string()));
        }
        Ok(CoefficientRing::Modular(m))
    }

    pub fn is_integers(&self) -> bool {
        matches!(self, CoefficientRing::Integers)
    }

    pub fn modulus(&self) -> Option<&BigInt> {
        match self {
            CoefficientRing::Integers => None,
            CoefficientRing::Modular(m) => Some(m),
        }
    }

    /// Canonical representative: unchanged over ℤ, in `[0, m)` otherwise.
    pub fn normalize(&self, c: BigInt) -> BigInt {
        match self {
            CoefficientRing::Integers => c,
            CoefficientRing::Modular(m) => c.mod_floor(m),
        }
    }

    pub fn is_zero(&self, c: &BigInt) -> bool {
        match self {
            CoefficientRing::Integers => c.is_zero(),
            CoefficientRing::Modular(m) => c.mod_floor(m).is_zero(),
        }
    }

    pub fn one(&self) -> BigInt {
        BigInt::one()
    }

    pub(crate) fn check_same(&self, other: &CoefficientRing) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch { left: self.to_string(), right: other.to_string() })
        }
    }

    /// Parses `"int"` or a decimal modulus.
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        if t == "int" || t == "Z" {
            return Ok(CoefficientRing::Integers);
        }
        let m: BigInt = t.parse().map_err(|_| Error::InvalidModulus(t.to_owned()))?;
        CoefficientRing::modular(m)
    }
}

impl fmt::Display for CoefficientRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientRing::Integers => write!(f, "Z"),
            CoefficientRing::Modular(m) => write!(f, "Z/{m}"),
        }
    }
}

impl fmt::Debug for CoefficientRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

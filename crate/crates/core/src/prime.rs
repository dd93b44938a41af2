use std::fmt;

use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A rational prime, checked at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }

    pub fn to_bigint(self) -> BigInt {
        BigInt::from(self.0)
    }

    /// `p^e` as an exact integer.
    pub fn pow_big(self, e: usize) -> BigInt {
        num_traits::pow(self.to_bigint(), e)
    }

    /// `p^e` as an exponent for polynomial powers. Panics on `u64` overflow,
    /// which would mean a polynomial power no machine could expand anyway.
    pub fn pow_u64(self, e: usize) -> u64 {
        let e = u32::try_from(e).expect("exponent overflow");
        self.0.checked_pow(e).expect("p^e overflows u64")
    }

    /// All primes `<= bound`, ascending.
    pub fn up_to(bound: u64) -> Vec<Prime> {
        (2..=bound).filter(|&n| is_prime(n)).map(Prime).collect()
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Serialize for Prime {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_u64(self.0)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

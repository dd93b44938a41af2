use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::FreePoly;
use super::ring::CoefficientRing;
use crate::error::{Error, Result};

/// A square matrix over ℤ or ℤ/m, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    dim: usize,
    ring: CoefficientRing,
    entries: Vec<BigInt>,
}

impl Matrix {
    pub fn zero(dim: usize, ring: &CoefficientRing) -> Self {
        Matrix { dim, ring: ring.clone(), entries: vec![BigInt::zero(); dim * dim] }
    }

    pub fn identity(dim: usize, ring: &CoefficientRing) -> Self {
        let mut m = Self::zero(dim, ring);
        for i in 0..dim {
            m.entries[i * dim + i] = BigInt::one();
        }
        m
    }

    pub fn from_rows<I, R, C>(ring: &CoefficientRing, rows: I) -> Result<Self>
    where
        I: IntoIterator<Item = R>,
        R: IntoIterator<Item = C>,
        C: Into<BigInt>,
    {
        let rows: Vec<Vec<BigInt>> =
            rows.into_iter().map(|r| r.into_iter().map(Into::into).collect()).collect();
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::DimensionMismatch("matrix must have at least one row".into()));
        }
        if let Some(bad) = rows.iter().find(|r| r.len() != dim) {
            return Err(Error::DimensionMismatch(format!(
                "expected {dim} columns, found a row of length {}",
                bad.len()
            )));
        }
        let entries = rows.into_iter().flatten().map(|c| ring.normalize(c)).collect();
        Ok(Matrix { dim, ring: ring.clone(), entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ring(&self) -> &CoefficientRing {
        &self.ring
    }

    pub fn get(&self, row: usize, col: usize) -> &BigInt {
        &self.entries[row * self.dim + col]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigInt]> + '_ {
        self.entries.chunks(self.dim)
    }

    fn check_compatible(&self, other: &Matrix) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(format!("{} vs {}", self.dim, other.dim)));
        }
        self.ring.check_same(&other.ring)
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.check_compatible(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| self.ring.normalize(a + b))
            .collect();
        Ok(Matrix { entries, ..self.clone() })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.check_compatible(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Matrix) -> Matrix {
        let n = self.dim;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = BigInt::zero();
                for k in 0..n {
                    acc += &self.entries[i * n + k] * &other.entries[k * n + j];
                }
                entries.push(self.ring.normalize(acc));
            }
        }
        Matrix { dim: n, ring: self.ring.clone(), entries }
    }

    pub fn scale(&self, c: &BigInt) -> Matrix {
        let entries = self.entries.iter().map(|a| self.ring.normalize(a * c)).collect();
        Matrix { entries, ..self.clone() }
    }

    pub fn pow(&self, mut k: u64) -> Matrix {
        let mut result = Matrix::identity(self.dim, &self.ring);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul_unchecked(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        result
    }

    pub fn trace(&self) -> BigInt {
        let t = (0..self.dim).map(|i| &self.entries[i * self.dim + i]).sum();
        self.ring.normalize(t)
    }

    /// Reads the matrix in another ring; allowed only from ℤ.
    pub fn coerce(&self, ring: &CoefficientRing) -> Result<Matrix> {
        if &self.ring == ring {
            return Ok(self.clone());
        }
        if !self.ring.is_integers() {
            return Err(Error::RingMismatch { left: self.ring.to_string(), right: ring.to_string() });
        }
        let entries = self.entries.iter().map(|a| ring.normalize(a.clone())).collect();
        Ok(Matrix { dim: self.dim, ring: ring.clone(), entries })
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> =
            self.rows().map(|r| r.iter().map(ToString::to_string).collect()).collect();
        write!(f, "Matrix[{}]{:?}", self.ring, rows)
    }
}

/// One `d × d` matrix per generator name, all over the same ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixAssignment {
    dim: usize,
    ring: CoefficientRing,
    matrices: BTreeMap<String, Matrix>,
}

impl MatrixAssignment {
    pub fn new<I, S>(ring: &CoefficientRing, assign: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, Matrix)>,
        S: Into<String>,
    {
        let mut matrices = BTreeMap::new();
        let mut dim = None;
        for (name, m) in assign {
            let name = name.into();
            if &m.ring != ring {
                return Err(Error::RingMismatch { left: m.ring.to_string(), right: ring.to_string() });
            }
            match dim {
                None => dim = Some(m.dim),
                Some(d) if d != m.dim => {
                    return Err(Error::DimensionMismatch(format!(
                        "generator `{name}` has dimension {}, expected {d}",
                        m.dim
                    )))
                }
                _ => {}
            }
            matrices.insert(name, m);
        }
        let dim = dim
            .ok_or_else(|| Error::DimensionMismatch("assignment must name a generator".into()))?;
        Ok(MatrixAssignment { dim, ring: ring.clone(), matrices })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ring(&self) -> &CoefficientRing {
        &self.ring
    }

    pub fn get(&self, name: &str) -> Option<&Matrix> {
        self.matrices.get(name)
    }
}

/// Substitutes the assigned matrices for the generators of `f`.
///
/// This is a unital ring homomorphism. An integer polynomial may be
/// evaluated in a modular matrix ring (coefficients are reduced); any other
/// ring combination must match exactly.
pub fn eval_matrix(f: &FreePoly, asg: &MatrixAssignment) -> Result<Matrix> {
    let ring = &asg.ring;
    if !f.ring().is_integers() && f.ring() != ring {
        return Err(Error::RingMismatch { left: f.ring().to_string(), right: ring.to_string() });
    }
    let by_index: Vec<Option<&Matrix>> =
        f.gens().symbols().iter().map(|s| asg.matrices.get(s)).collect();

    let mut acc = Matrix::zero(asg.dim, ring);
    // prefix[k] is the product of the first k letters of the previous word;
    // terms come in degree-lex order, so neighbours often share prefixes.
    let mut prefix: Vec<Matrix> = vec![Matrix::identity(asg.dim, ring)];
    let mut prev: &[u8] = &[];
    for (w, c) in f.terms() {
        let letters = w.letters();
        let common = letters.iter().zip(prev).take_while(|(a, b)| a == b).count();
        prefix.truncate(common + 1);
        for &l in &letters[common..] {
            let m = by_index[l as usize]
                .ok_or_else(|| Error::MissingGenerator(f.gens().name(l).to_owned()))?;
            let next = prefix.last().unwrap().mul_unchecked(m);
            prefix.push(next);
        }
        prev = letters;
        acc = acc.add(&prefix[letters.len()].scale(c))?;
    }
    Ok(acc)
}

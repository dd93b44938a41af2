//! The `eval --matrices` input format:
//! `{"dimension": d, "modulus": m | "int", "assign": {"X": [[...]], ...}}`.

use std::collections::BTreeMap;

use anyhow::{bail, Context, Result};
use ncwitt::{CoefficientRing, Matrix, MatrixAssignment};
use num_bigint::BigInt;
use serde::Deserialize;

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum Scalar {
    Int(i64),
    Text(String),
}

impl Scalar {
    fn to_bigint(&self) -> Result<BigInt> {
        match self {
            Scalar::Int(n) => Ok(BigInt::from(*n)),
            Scalar::Text(s) => s.trim().parse().with_context(|| format!("`{s}` is not an integer")),
        }
    }
}

#[derive(Debug, Deserialize)]
pub struct MatrixFile {
    dimension: usize,
    modulus: Scalar,
    assign: BTreeMap<String, Vec<Vec<Scalar>>>,
}

impl MatrixFile {
    pub fn ring(&self) -> Result<CoefficientRing> {
        Ok(match &self.modulus {
            Scalar::Text(s) if s == "int" => CoefficientRing::Integers,
            m => CoefficientRing::modular(m.to_bigint()?)?,
        })
    }

    pub fn generator_names(&self) -> Vec<String> {
        self.assign.keys().cloned().collect()
    }

    pub fn assignment(&self) -> Result<MatrixAssignment> {
        let ring = self.ring()?;
        let mut mats = Vec::with_capacity(self.assign.len());
        for (name, rows) in &self.assign {
            let rows: Vec<Vec<BigInt>> = rows
                .iter()
                .map(|r| r.iter().map(Scalar::to_bigint).collect::<Result<_>>())
                .collect::<Result<_>>()?;
            let m = Matrix::from_rows(&ring, rows).with_context(|| format!("matrix for `{name}`"))?;
            if m.dim() != self.dimension {
                bail!("matrix for `{name}` is {0}x{0}, expected dimension {1}", m.dim(), self.dimension);
            }
            mats.push((name.clone(), m));
        }
        Ok(MatrixAssignment::new(&ring, mats)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_numbers_and_strings() {
        let f: MatrixFile = serde_json::from_str(
            r#"{"dimension":2,"modulus":3,"assign":{"X":[[0,0],[1,0]],"Y":[["0","1"],["0","-3"]]}}"#,
        )
        .unwrap();
        let asg = f.assignment().unwrap();
        assert_eq!(asg.dim(), 2);
        assert_eq!(asg.get("Y").unwrap().get(1, 1), &BigInt::from(0));
        assert_eq!(f.generator_names(), vec!["X", "Y"]);
    }

    #[test]
    fn integer_modulus_and_bad_dimension() {
        let f: MatrixFile =
            serde_json::from_str(r#"{"dimension":3,"modulus":"int","assign":{"X":[[1,2],[3,4]]}}"#)
                .unwrap();
        assert_eq!(f.ring().unwrap(), CoefficientRing::Integers);
        assert!(f.assignment().is_err());
        let f: MatrixFile =
            serde_json::from_str(r#"{"dimension":1,"modulus":1,"assign":{"X":[[1]]}}"#).unwrap();
        assert!(f.ring().is_err());
    }
}

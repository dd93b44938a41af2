//! Sparse exact arithmetic in free associative algebras over ℤ and ℤ/m,
//! and evaluation into matrix rings.

mod generators;
mod matrix;
mod parse;
mod poly;
mod ring;
mod word;

pub use generators::{GeneratorSet, MAX_GENERATORS};
pub use matrix::{eval_matrix, Matrix, MatrixAssignment};
pub use parse::parse;
pub use poly::FreePoly;
pub(crate) use poly::accumulate;
pub use ring::CoefficientRing;
pub use word::Word;

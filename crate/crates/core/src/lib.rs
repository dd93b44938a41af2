//! Exact p-typical Witt vector calculus over free associative algebras.
//!
//! Two constructions are modelled at finite truncation `n`:
//!
//! * [`hesselholt`]: `W_n(A)`, elements given by coordinates and compared
//!   through the ghost map `ω̄` into `(A/[A,A])^n`;
//! * [`cuntz_deninger`]: the subgroup `X_n(A) ⊂ A^n` with membership
//!   certificates, and `E_n(A)` through its ghost map `η̄`.
//!
//! [`verify`] contains the decision procedures that show, for a concrete
//! prime, that `⟨X⟩⟨Y⟩` has a ghost image no Witt vector over `ℤ{X,Y}` can
//! have.

pub mod algebra;
pub mod cuntz_deninger;
pub mod error;
pub mod ghost;
pub mod hesselholt;
pub mod necklace;
pub mod prime;
pub mod verify;

pub use algebra::{eval_matrix, parse, CoefficientRing, FreePoly, GeneratorSet, Matrix, MatrixAssignment, Word};
pub use error::{Error, Result};
pub use ghost::{ghost_components, ghost_inverse_int, ghost_map, witt_add_int, witt_mul_int, GhostVector, IntWittVector};
pub use necklace::{frobenius_p, min_rotation, necklace_eq, NecklacePoly};
pub use prime::Prime;

//! Exact computations with finite-dimensional associative algebras and
//! their polynomial deformations.
//!
//! All arithmetic is exact over the Gaussian rationals `ℚ(i)` (or over `ℚ`
//! where an algorithm is generic in [`linalg::Field`]).
//!
//! * [`linalg`]: exact scalars and dense linear algebra.
//! * [`ncpoly`]: noncommutative polynomials and the relation parser.
//! * [`algebra`]: structure-constant algebras and their quotients.
//! * [`presentation`]: algebras from generators and relations.
//! * [`structure`]: radical and Wedderburn block profiles.
//! * [`deform`]: polynomial deformation families and parameter scans.
//! * [`obstruct`]: word-family spans and admissible deformation targets.

pub mod algebra;
pub mod deform;
pub mod linalg;
pub mod ncpoly;
pub mod obstruct;
pub mod presentation;
pub mod structure;

pub use algebra::StructureAlgebra;
pub use linalg::{Field, Matrix, Scalar, Subspace};
pub use structure::BlockProfile;

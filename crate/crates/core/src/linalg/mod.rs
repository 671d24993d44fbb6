//! Exact scalars and dense linear algebra.

mod field;
mod matrix;
mod scalar;
mod subspace;

pub use field::Field;
pub use matrix::Matrix;
pub use scalar::{Scalar, ScalarParseError};
pub use subspace::{span_join, Subspace};

pub use num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
}

/// Rank of a matrix; free-function form for symmetry with [`Matrix::kernel`].
pub fn rref<F: Field>(m: &Matrix<F>) -> (Matrix<F>, usize) {
    m.rref()
}

pub fn kernel<F: Field>(m: &Matrix<F>) -> Subspace<F> {
    m.kernel()
}

/// Componentwise `a + b`.
pub fn vec_add<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect()
}

/// Componentwise `a - b`.
pub fn vec_sub<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    a.iter().zip(b).map(|(x, y)| x.clone() - y.clone()).collect()
}

pub fn vec_scale<F: Field>(c: &F, a: &[F]) -> Vec<F> {
    a.iter().map(|x| x.clone() * c).collect()
}

pub fn is_zero_vec<F: Field>(a: &[F]) -> bool {
    a.iter().all(Field::is_zero)
}

/// Unit coordinate vector `e_i` of length `n`.
pub fn unit_vector<F: Field>(n: usize, i: usize) -> Vec<F> {
    let mut v = vec![F::zero(); n];
    v[i] = F::one();
    v
}

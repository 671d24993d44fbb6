use super::{Field, LinalgError, Matrix};

/// Subspace of `F^n` stored as the nonzero rows of its reduced row echelon
/// basis. Two subspaces are equal iff their basis matrices are identical.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace<F> {
    ambient_dim: usize,
    basis: Matrix<F>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Matrix::zeros(0, ambient_dim) }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Matrix::identity(ambient_dim) }
    }

    /// Span of the given vectors.
    pub fn from_vectors(ambient_dim: usize, vectors: Vec<Vec<F>>) -> Result<Self, LinalgError> {
        let vectors: Vec<Vec<F>> = vectors.into_iter().filter(|v| !v.iter().all(Field::is_zero)).collect();
        let mut m = Matrix::from_rows(ambient_dim, vectors)?;
        let rank = m.rref_in_place();
        let rows = m.row_vectors().take(rank).map(<[F]>::to_vec).collect();
        let basis = Matrix::from_rows(ambient_dim, rows)?;
        Ok(Subspace { ambient_dim, basis })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn basis(&self) -> &Matrix<F> {
        &self.basis
    }

    pub fn basis_vectors(&self) -> impl Iterator<Item = &[F]> + '_ {
        self.basis.row_vectors()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.basis.pivot_columns()
    }

    /// Smallest subspace containing both.
    pub fn join(&self, other: &Subspace<F>) -> Result<Subspace<F>, LinalgError> {
        if self.ambient_dim != other.ambient_dim {
            return Err(LinalgError::DimensionMismatch { expected: self.ambient_dim, found: other.ambient_dim });
        }
        let vectors = self.basis_vectors().chain(other.basis_vectors()).map(<[F]>::to_vec).collect();
        Subspace::from_vectors(self.ambient_dim, vectors)
    }

    /// Joins extra vectors into the span.
    pub fn extend<I: IntoIterator<Item = Vec<F>>>(&self, vectors: I) -> Result<Subspace<F>, LinalgError> {
        let all = self.basis_vectors().map(<[F]>::to_vec).chain(vectors).collect();
        Subspace::from_vectors(self.ambient_dim, all)
    }

    /// Reduces `v` against the rref basis. The result vanishes on every pivot
    /// column and is zero iff `v` lies in the subspace.
    pub fn residue(&self, v: &[F]) -> Result<Vec<F>, LinalgError> {
        if v.len() != self.ambient_dim {
            return Err(LinalgError::DimensionMismatch { expected: self.ambient_dim, found: v.len() });
        }
        let mut out = v.to_vec();
        for (row, pivot) in self.basis_vectors().zip(self.pivots()) {
            if out[pivot].is_zero() {
                continue;
            }
            let factor = out[pivot].clone();
            for (o, r) in out.iter_mut().zip(row) {
                if !r.is_zero() {
                    *o -= &(factor.clone() * r);
                }
            }
        }
        Ok(out)
    }

    pub fn contains(&self, v: &[F]) -> Result<bool, LinalgError> {
        Ok(self.residue(v)?.iter().all(Field::is_zero))
    }

    pub fn contains_subspace(&self, other: &Subspace<F>) -> Result<bool, LinalgError> {
        for v in other.basis_vectors() {
            if !self.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Free-function form of [`Subspace::join`].
pub fn span_join<F: Field>(a: &Subspace<F>, b: &Subspace<F>) -> Result<Subspace<F>, LinalgError> {
    a.join(b)
}

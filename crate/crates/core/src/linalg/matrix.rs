use std::fmt;

use super::{Field, LinalgError, Subspace};

/// Dense row-major matrix over an exact field.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    /// Builds a matrix from equally long rows. `cols` is needed for the
    /// zero-row case.
    pub fn from_rows(cols: usize, rows: Vec<Vec<F>>) -> Result<Self, LinalgError> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let n_rows = rows.len();
        for row in rows {
            if row.len() != cols {
                return Err(LinalgError::DimensionMismatch { expected: cols, found: row.len() });
            }
            data.extend(row);
        }
        Ok(Matrix { rows: n_rows, cols, data })
    }

    /// Builds a matrix whose j-th column is `columns[j]`.
    pub fn from_columns(rows: usize, columns: &[Vec<F>]) -> Result<Self, LinalgError> {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(LinalgError::DimensionMismatch { expected: rows, found: col.len() });
            }
            for (i, v) in col.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> impl Iterator<Item = &[F]> + '_ {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn column(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Field::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn trace(&self) -> F {
        let mut acc = F::zero();
        for i in 0..self.rows.min(self.cols) {
            acc += &self[(i, i)];
        }
        acc
    }

    pub fn mul_mat(&self, other: &Matrix<F>) -> Result<Matrix<F>, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch { expected: self.cols, found: other.rows });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        let p = a.clone() * b;
                        out[(i, j)] += &p;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[F]) -> Result<Vec<F>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::DimensionMismatch { expected: self.cols, found: v.len() });
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = F::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a.clone() * b);
                    }
                }
                acc
            })
            .collect())
    }

    /// Reduced row echelon form and rank.
    pub fn rref(&self) -> (Matrix<F>, usize) {
        let mut m = self.clone();
        let rank = m.rref_in_place();
        (m, rank)
    }

    /// Column indices of the pivots of an rref matrix, one per nonzero row.
    pub fn pivot_columns(&self) -> Vec<usize> {
        self.row_vectors()
            .filter_map(|row| row.iter().position(|v| !v.is_zero()))
            .collect()
    }

    pub(crate) fn rref_in_place(&mut self) -> usize {
        let (rows, cols) = (self.rows, self.cols);
        let mut rank = 0;
        for col in 0..cols {
            if rank == rows {
                break;
            }
            let Some(pivot) = (rank..rows).find(|&r| !self[(r, col)].is_zero()) else {
                continue;
            };
            self.swap_rows(rank, pivot);
            let inv = self[(rank, col)].inv().expect("pivot is nonzero");
            for j in col..cols {
                let v = std::mem::replace(&mut self[(rank, j)], F::zero());
                self[(rank, j)] = v * &inv;
            }
            for r in 0..rows {
                if r == rank || self[(r, col)].is_zero() {
                    continue;
                }
                let factor = self[(r, col)].clone();
                for j in col..cols {
                    let p = &self.data[rank * cols + j];
                    if p.is_zero() {
                        continue;
                    }
                    let delta = factor.clone() * p;
                    self.data[r * cols + j] -= &delta;
                }
            }
            rank += 1;
        }
        rank
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// Null space `{v : M·v = 0}`.
    pub fn kernel(&self) -> Subspace<F> {
        let (r, rank) = self.rref();
        let pivots = r.pivot_columns();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let basis: Vec<Vec<F>> = (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![F::zero(); self.cols];
                v[free] = F::one();
                for (row, &p) in pivots.iter().enumerate().take(rank) {
                    v[p] = -r[(row, free)].clone();
                }
                v
            })
            .collect();
        Subspace::from_vectors(self.cols, basis).expect("kernel vectors have ambient length")
    }

    /// Determinant by exact elimination. Panics on non-square input.
    pub fn determinant(&self) -> F {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = F::one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !m[(r, col)].is_zero()) else {
                return F::zero();
            };
            if pivot != col {
                m.swap_rows(pivot, col);
                det = -det;
            }
            let p = m[(col, col)].clone();
            det = det * &p;
            let inv = p.inv().expect("pivot is nonzero");
            for r in col + 1..n {
                if m[(r, col)].is_zero() {
                    continue;
                }
                let factor = m[(r, col)].clone() * &inv;
                for j in col..n {
                    let delta = factor.clone() * &m[(col, j)];
                    m[(r, j)] -= &delta;
                }
            }
        }
        det
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Matrix<G> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }
}

impl<F> std::ops::Index<(usize, usize)> for Matrix<F> {
    type Output = F;

    fn index(&self, (i, j): (usize, usize)) -> &F {
        &self.data[i * self.cols + j]
    }
}

impl<F> std::ops::IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        &mut self.data[i * self.cols + j]
    }
}

impl<F: Field> fmt::Display for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

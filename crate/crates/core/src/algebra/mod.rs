//! Finite-dimensional unital associative algebras given by structure
//! constants.

mod file;
mod standard;

pub use file::AlgebraFile;
pub use standard::{direct_sum, dual_numbers, exterior_algebra, matrix_algebra, matrix_direct_sum, upper_triangular};

use crate::linalg::{unit_vector, BigRational, Field, LinalgError, Matrix, Scalar, Subspace};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("malformed algebra: {0}")]
    Shape(String),
    #[error("subspace is not a two-sided ideal")]
    NotAnIdeal,
    #[error("ideal contains the unit; the quotient would be the zero ring")]
    UnitInIdeal,
}

/// An algebra with basis `d_0..d_{n-1}` and products
/// `d_i ∘ d_j = Σ_l table[i][j][l] d_l`. Elements are coordinate vectors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StructureAlgebra<F = Scalar> {
    dim: usize,
    labels: Vec<String>,
    table: Vec<Vec<F>>,
    unit: Vec<F>,
    // nonzero (l, c) entries of table[i * dim + j]
    sparse: Vec<Vec<(usize, F)>>,
}

/// One failed axiom check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    Associativity { i: usize, j: usize, k: usize },
    LeftUnit { j: usize },
    RightUnit { j: usize },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::Associativity { i, j, k } => write!(f, "associativity fails on basis triple ({i}, {j}, {k})"),
            Violation::LeftUnit { j } => write!(f, "unit * d_{j} != d_{j}"),
            Violation::RightUnit { j } => write!(f, "d_{j} * unit != d_{j}"),
        }
    }
}

/// Result of [`StructureAlgebra::validate`]; empty iff the table is a unital
/// associative algebra.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl std::fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.violations.is_empty() {
            return f.write_str("valid");
        }
        for v in &self.violations {
            writeln!(f, "{v}")?;
        }
        Ok(())
    }
}

impl<F: Field> StructureAlgebra<F> {
    /// `table[i][j]` holds the coordinates of `d_i ∘ d_j`. Only shapes are
    /// checked here; see [`validate`](Self::validate) for the axioms.
    pub fn new(labels: Vec<String>, table: Vec<Vec<Vec<F>>>, unit: Vec<F>) -> Result<Self, AlgebraError> {
        let dim = labels.len();
        if dim == 0 {
            return Err(AlgebraError::Shape("dimension must be at least 1".into()));
        }
        if unit.len() != dim {
            return Err(AlgebraError::Shape(format!("unit has {} coordinates, expected {dim}", unit.len())));
        }
        if table.len() != dim {
            return Err(AlgebraError::Shape(format!("table has {} rows, expected {dim}", table.len())));
        }
        let mut flat = Vec::with_capacity(dim * dim);
        for (i, row) in table.into_iter().enumerate() {
            if row.len() != dim {
                return Err(AlgebraError::Shape(format!("table row {i} has {} entries, expected {dim}", row.len())));
            }
            for (j, v) in row.into_iter().enumerate() {
                if v.len() != dim {
                    return Err(AlgebraError::Shape(format!(
                        "product ({i}, {j}) has {} coordinates, expected {dim}",
                        v.len()
                    )));
                }
                flat.push(v);
            }
        }
        Ok(Self::from_flat(labels, flat, unit))
    }

    fn from_flat(labels: Vec<String>, table: Vec<Vec<F>>, unit: Vec<F>) -> Self {
        let sparse = table
            .iter()
            .map(|v| v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(l, c)| (l, c.clone())).collect())
            .collect();
        StructureAlgebra { dim: labels.len(), labels, table, unit, sparse }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &[F] {
        &self.unit
    }

    /// Coordinates of `d_i ∘ d_j`.
    pub fn product(&self, i: usize, j: usize) -> &[F] {
        &self.table[i * self.dim + j]
    }

    pub fn basis_element(&self, i: usize) -> Vec<F> {
        unit_vector(self.dim, i)
    }

    pub fn zero_element(&self) -> Vec<F> {
        vec![F::zero(); self.dim]
    }

    fn check_len(&self, v: &[F]) -> Result<(), AlgebraError> {
        if v.len() != self.dim {
            return Err(LinalgError::DimensionMismatch { expected: self.dim, found: v.len() }.into());
        }
        Ok(())
    }

    /// Bilinear extension of the table.
    pub fn multiply(&self, a: &[F], b: &[F]) -> Result<Vec<F>, AlgebraError> {
        self.check_len(a)?;
        self.check_len(b)?;
        Ok(self.mul_unchecked(a, b))
    }

    pub(crate) fn mul_unchecked(&self, a: &[F], b: &[F]) -> Vec<F> {
        let n = self.dim;
        let mut out = vec![F::zero(); n];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let entries = &self.sparse[i * n + j];
                if entries.is_empty() {
                    continue;
                }
                let coeff = ai.clone() * bj;
                for (l, c) in entries {
                    out[*l] += &(coeff.clone() * c);
                }
            }
        }
        out
    }

    /// `d_i ∘ v`
    pub(crate) fn basis_times(&self, i: usize, v: &[F]) -> Vec<F> {
        let n = self.dim;
        let mut out = vec![F::zero(); n];
        for (j, vj) in v.iter().enumerate() {
            if vj.is_zero() {
                continue;
            }
            for (l, c) in &self.sparse[i * n + j] {
                out[*l] += &(vj.clone() * c);
            }
        }
        out
    }

    /// `v ∘ d_j`
    pub(crate) fn times_basis(&self, v: &[F], j: usize) -> Vec<F> {
        let n = self.dim;
        let mut out = vec![F::zero(); n];
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for (l, c) in &self.sparse[i * n + j] {
                out[*l] += &(vi.clone() * c);
            }
        }
        out
    }

    /// Matrix of `y ↦ a ∘ y`; column `j` holds `a ∘ d_j`.
    pub fn left_regular(&self, a: &[F]) -> Result<Matrix<F>, AlgebraError> {
        self.check_len(a)?;
        let cols: Vec<Vec<F>> = (0..self.dim).map(|j| self.times_basis(a, j)).collect();
        Ok(Matrix::from_columns(self.dim, &cols)?)
    }

    /// Checks associativity on every basis triple and the two unit laws.
    pub fn validate(&self) -> ValidationReport {
        let n = self.dim;
        let mut violations = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let ij = self.product(i, j);
                for k in 0..n {
                    let left = self.times_basis(ij, k);
                    let right = self.basis_times(i, self.product(j, k));
                    if left != right {
                        violations.push(Violation::Associativity { i, j, k });
                    }
                }
            }
        }
        for j in 0..n {
            let dj = self.basis_element(j);
            if self.mul_unchecked(&self.unit, &dj) != dj {
                violations.push(Violation::LeftUnit { j });
            }
            if self.mul_unchecked(&dj, &self.unit) != dj {
                violations.push(Violation::RightUnit { j });
            }
        }
        ValidationReport { violations }
    }

    /// Smallest two-sided ideal containing `seed`.
    pub fn ideal_closure(&self, seed: &Subspace<F>) -> Result<Subspace<F>, AlgebraError> {
        if seed.ambient_dim() != self.dim {
            return Err(LinalgError::DimensionMismatch { expected: self.dim, found: seed.ambient_dim() }.into());
        }
        let mut current = seed.clone();
        // each round either stops or raises the dimension, so at most n rounds
        for _ in 0..=self.dim {
            let mut extra = Vec::new();
            for v in current.basis_vectors() {
                for i in 0..self.dim {
                    extra.push(self.basis_times(i, v));
                    extra.push(self.times_basis(v, i));
                }
            }
            let next = current.extend(extra)?;
            if next.dim() == current.dim() {
                return Ok(current);
            }
            current = next;
        }
        unreachable!("ideal closure grows at most dim times")
    }

    /// Subalgebra generated by the unit and `gens`.
    pub fn subalgebra_closure(&self, gens: &[Vec<F>]) -> Result<Subspace<F>, AlgebraError> {
        for g in gens {
            self.check_len(g)?;
        }
        let mut current = Subspace::from_vectors(self.dim, vec![self.unit.clone()])?;
        for _ in 0..=self.dim {
            let extra: Vec<Vec<F>> = current
                .basis_vectors()
                .flat_map(|v| gens.iter().map(move |g| (v, g)))
                .map(|(v, g)| self.mul_unchecked(v, g))
                .collect();
            let next = current.extend(extra)?;
            if next.dim() == current.dim() {
                return Ok(current);
            }
            current = next;
        }
        unreachable!("subalgebra closure grows at most dim times")
    }

    /// Span of all products `u ∘ v` with `u ∈ a`, `v ∈ b`.
    pub fn product_space(&self, a: &Subspace<F>, b: &Subspace<F>) -> Result<Subspace<F>, AlgebraError> {
        let vectors = a
            .basis_vectors()
            .flat_map(|u| b.basis_vectors().map(move |v| (u, v)))
            .map(|(u, v)| self.mul_unchecked(u, v))
            .collect();
        Ok(Subspace::from_vectors(self.dim, vectors)?)
    }

    /// Whether `sub` is closed under left and right multiplication.
    pub fn is_ideal(&self, sub: &Subspace<F>) -> Result<bool, AlgebraError> {
        Ok(self.ideal_closure(sub)?.dim() == sub.dim())
    }

    /// Whether some power of the subspace vanishes.
    pub fn is_nilpotent(&self, sub: &Subspace<F>) -> Result<bool, AlgebraError> {
        let mut power = sub.clone();
        for _ in 0..=self.dim {
            if power.is_zero() {
                return Ok(true);
            }
            let next = self.product_space(&power, sub)?;
            if next.dim() == power.dim() {
                return Ok(next.is_zero());
            }
            power = next;
        }
        Ok(power.is_zero())
    }

    /// Quotient by a two-sided ideal. The new basis is the old basis elements
    /// at the non-pivot coordinates of the ideal's rref basis; the returned
    /// projection maps old coordinates to new ones.
    pub fn quotient(&self, ideal: &Subspace<F>) -> Result<(StructureAlgebra<F>, Matrix<F>), AlgebraError> {
        if !self.is_ideal(ideal)? {
            return Err(AlgebraError::NotAnIdeal);
        }
        if ideal.contains(&self.unit)? {
            return Err(AlgebraError::UnitInIdeal);
        }
        let mut is_pivot = vec![false; self.dim];
        for p in ideal.pivots() {
            is_pivot[p] = true;
        }
        let keep: Vec<usize> = (0..self.dim).filter(|&c| !is_pivot[c]).collect();
        let project = |v: &[F]| -> Result<Vec<F>, AlgebraError> {
            let r = ideal.residue(v)?;
            Ok(keep.iter().map(|&c| r[c].clone()).collect())
        };
        let m = keep.len();
        let mut proj = Matrix::zeros(m, self.dim);
        for c in 0..self.dim {
            let col = project(&self.basis_element(c))?;
            for (r, v) in col.into_iter().enumerate() {
                proj[(r, c)] = v;
            }
        }
        let mut table = Vec::with_capacity(m * m);
        for &a in &keep {
            for &b in &keep {
                table.push(project(self.product(a, b))?);
            }
        }
        let labels = keep.iter().map(|&c| self.labels[c].clone()).collect();
        let unit = project(&self.unit)?;
        Ok((StructureAlgebra::from_flat(labels, table, unit), proj))
    }

    /// Same table with every coefficient mapped into another field.
    pub fn map_field<G: Field>(&self, f: impl Fn(&F) -> G) -> StructureAlgebra<G> {
        let table = self.table.iter().map(|v| v.iter().map(&f).collect()).collect();
        let unit = self.unit.iter().map(&f).collect();
        StructureAlgebra::from_flat(self.labels.clone(), table, unit)
    }

    /// The algebra in the basis `new_i = Σ_k basis[i][k] d_k`. `basis` must
    /// be invertible.
    pub fn change_basis(&self, basis: &Matrix<F>) -> Result<StructureAlgebra<F>, AlgebraError> {
        let n = self.dim;
        if basis.rows() != n || basis.cols() != n {
            return Err(AlgebraError::Shape("change of basis must be square of the algebra dimension".into()));
        }
        // column c of `coords` holds new basis vector c in old coordinates
        let coords = basis.transpose();
        let (inv, rank) = {
            let mut aug = Matrix::zeros(n, 2 * n);
            for r in 0..n {
                for c in 0..n {
                    aug[(r, c)] = coords[(r, c)].clone();
                }
                aug[(r, n + r)] = F::one();
            }
            aug.rref()
        };
        if rank < n || (0..n).any(|i| !inv[(i, i)].is_one()) {
            return Err(AlgebraError::Shape("change of basis is singular".into()));
        }
        let mut to_new = Matrix::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                to_new[(r, c)] = inv[(r, n + c)].clone();
            }
        }
        let elems: Vec<Vec<F>> = basis.row_vectors().map(<[F]>::to_vec).collect();
        let mut table = Vec::with_capacity(n * n);
        for a in &elems {
            for b in &elems {
                table.push(to_new.mul_vec(&self.mul_unchecked(a, b))?);
            }
        }
        let unit = to_new.mul_vec(&self.unit)?;
        Ok(StructureAlgebra::from_flat(self.labels.clone(), table, unit))
    }
}

impl StructureAlgebra<Scalar> {
    /// The same algebra over ℚ when every coefficient is real.
    pub fn to_rational(&self) -> Option<StructureAlgebra<BigRational>> {
        let real = self.table.iter().flatten().chain(&self.unit).all(Scalar::is_real);
        real.then(|| self.map_field(|c| c.re.clone()))
    }
}

impl StructureAlgebra<BigRational> {
    pub fn to_gaussian(&self) -> StructureAlgebra<Scalar> {
        self.map_field(|c| Scalar::real(c.clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(v: i64) -> Scalar {
        Scalar::from_int(v)
    }

    fn span(alg: &StructureAlgebra, idx: &[usize]) -> Subspace<Scalar> {
        Subspace::from_vectors(alg.dim(), idx.iter().map(|&i| alg.basis_element(i)).collect()).unwrap()
    }

    #[test]
    fn multiply_examples() {
        let dual: StructureAlgebra = dual_numbers();
        let x = dual.basis_element(1);
        assert_eq!(dual.multiply(&x, &x).unwrap(), dual.zero_element());

        let m2: StructureAlgebra = matrix_algebra(2);
        // basis order e11, e12, e21, e22
        let prod = m2.multiply(&m2.basis_element(1), &m2.basis_element(2)).unwrap();
        assert_eq!(prod, m2.basis_element(0));

        let a = vec![s(3), s(-1), s(2), s(5)];
        assert_eq!(m2.multiply(m2.unit(), &a).unwrap(), a);
        assert!(m2.multiply(&a, &[s(1)]).is_err());
    }

    #[test]
    fn left_regular_examples() {
        let m2: StructureAlgebra = matrix_algebra(2);
        assert_eq!(m2.left_regular(m2.unit()).unwrap(), Matrix::identity(4));
        let dual: StructureAlgebra = dual_numbers();
        let lx = dual.left_regular(&dual.basis_element(1)).unwrap();
        assert!(!lx.is_zero());
        assert!(lx.mul_mat(&lx).unwrap().is_zero());
        let l11 = m2.left_regular(&m2.basis_element(0)).unwrap();
        assert_eq!(l11.rank(), 2);
        assert_eq!(l11.mul_mat(&l11).unwrap(), l11);
    }

    #[test]
    fn validate_examples() {
        assert!(matrix_algebra::<Scalar>(2).validate().is_valid());
        assert!(matrix_algebra::<Scalar>(1).validate().is_valid());
        // perturbing the unit's square 1∘1 by +1 in either coordinate breaks the algebra
        for l in 0..2 {
            let mut t: StructureAlgebra = dual_numbers();
            t.table[0][l] += &s(1);
            let t = StructureAlgebra::from_flat(t.labels.clone(), t.table.clone(), t.unit.clone());
            let report = t.validate();
            assert!(!report.is_valid());
            // 1∘1 = 2·1 breaks associativity, 1∘1 = 1 + x only the unit law
            let assoc = report.violations.iter().any(|v| matches!(v, Violation::Associativity { .. }));
            assert_eq!(assoc, l == 0);
        }
        let mut t: StructureAlgebra = upper_triangular(2);
        t.table[2] = vec![s(0), s(1), s(1)]; // e11∘e22 := e12 + e22
        let t = StructureAlgebra::from_flat(t.labels.clone(), t.table.clone(), t.unit.clone());
        assert!(!t.validate().is_valid());
    }

    #[test]
    fn ideal_closure_examples() {
        let m2: StructureAlgebra = matrix_algebra(2);
        assert_eq!(m2.ideal_closure(&span(&m2, &[0])).unwrap().dim(), 4);
        assert!(m2.ideal_closure(&Subspace::zero(4)).unwrap().is_zero());
        let ut: StructureAlgebra = upper_triangular(2);
        let strict = span(&ut, &[1]);
        assert_eq!(ut.ideal_closure(&strict).unwrap(), strict);
        assert!(ut.ideal_closure(&Subspace::zero(2)).is_err());
    }

    #[test]
    fn quotient_examples() {
        let ut: StructureAlgebra = upper_triangular(2);
        let (q, proj) = ut.quotient(&span(&ut, &[1])).unwrap();
        assert_eq!(q.dim(), 2);
        assert!(q.validate().is_valid());
        // e11, e22 survive as orthogonal idempotents
        assert_eq!(q.product(0, 0), &[s(1), s(0)][..]);
        assert_eq!(q.product(0, 1), &[s(0), s(0)][..]);
        assert_eq!(q.product(1, 1), &[s(0), s(1)][..]);
        assert_eq!(proj.rows(), 2);

        let m2: StructureAlgebra = matrix_algebra(2);
        let (same, _) = m2.quotient(&Subspace::zero(4)).unwrap();
        assert_eq!(same, m2);

        let dual: StructureAlgebra = dual_numbers();
        let (one_dim, _) = dual.quotient(&span(&dual, &[1])).unwrap();
        assert_eq!(one_dim.dim(), 1);
        assert!(one_dim.validate().is_valid());

        assert_eq!(m2.quotient(&span(&m2, &[1])), Err(AlgebraError::NotAnIdeal));
        assert_eq!(m2.quotient(&Subspace::full(4)), Err(AlgebraError::UnitInIdeal));
    }

    fn element(n: usize) -> impl Strategy<Value = Vec<Scalar>> {
        prop::collection::vec((-5i64..6, 1i64..4).prop_map(|(a, b)| Scalar::ratio(a, b)), n)
    }

    fn corpus() -> Vec<StructureAlgebra> {
        vec![
            matrix_algebra(2),
            upper_triangular(3),
            exterior_algebra(2),
            direct_sum(&[matrix_algebra(2), dual_numbers()]),
        ]
    }

    proptest! {
        #[test]
        fn regular_representation_is_multiplicative(which in 0usize..4, seed_a in element(7), seed_b in element(7)) {
            let alg = &corpus()[which];
            let n = alg.dim();
            let (a, b) = (&seed_a[..n], &seed_b[..n]);
            let lab = alg.left_regular(&alg.multiply(a, b).unwrap()).unwrap();
            let prod = alg.left_regular(a).unwrap().mul_mat(&alg.left_regular(b).unwrap()).unwrap();
            prop_assert_eq!(lab, prod);
        }

        #[test]
        fn ideal_closure_is_monotone_and_idempotent(which in 0usize..4, v in element(7), w in element(7)) {
            let alg = &corpus()[which];
            let n = alg.dim();
            let small = Subspace::from_vectors(n, vec![v[..n].to_vec()]).unwrap();
            let big = small.extend(vec![w[..n].to_vec()]).unwrap();
            let cs = alg.ideal_closure(&small).unwrap();
            let cb = alg.ideal_closure(&big).unwrap();
            prop_assert!(cs.contains_subspace(&small).unwrap());
            prop_assert!(cb.contains_subspace(&cs).unwrap());
            prop_assert_eq!(alg.ideal_closure(&cs).unwrap(), cs.clone());
            if !cs.contains(alg.unit()).unwrap() {
                let (q, _) = alg.quotient(&cs).unwrap();
                prop_assert!(q.validate().is_valid());
            }
        }
    }
}

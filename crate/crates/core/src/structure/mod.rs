//! The radical and the Wedderburn block profile read off the
//! standard-identity filtration.

mod profile;

use std::collections::BTreeMap;

use serde::Serialize;

pub use profile::{enumerate_semisimple_types, BlockProfile, ProfileParseError};

use crate::algebra::{AlgebraError, StructureAlgebra};
use crate::linalg::{Field, Matrix, Subspace};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StructureError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("trace-form kernel is not a nilpotent ideal ({0}); the table is not a valid algebra")]
    RadicalCheck(&'static str),
    #[error("filtration layer {j} has dimension {dim}, not divisible by {}", j * j)]
    NonIntegralLayer { j: usize, dim: usize },
    #[error("identity filtration leaves dimension {dim} above the largest possible block")]
    ResidualFiltration { dim: usize },
}

/// Dimensions of `I'_m` for `m = 0..=⌊√n⌋` on the semisimplification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiltrationReport {
    pub dims: Vec<usize>,
    /// `layer_dims[j - 1] = dims[j - 1] - dims[j]`
    pub layer_dims: Vec<usize>,
    pub radical_dim: usize,
}

impl FiltrationReport {
    /// Layer `j ≥ 1`; zero past the end.
    pub fn layer(&self, j: usize) -> usize {
        j.checked_sub(1).and_then(|i| self.layer_dims.get(i)).copied().unwrap_or(0)
    }
}

/// Gram matrix `G[i][j] = tr(L_{d_i} L_{d_j})` of the trace form.
pub fn trace_form<F: Field>(alg: &StructureAlgebra<F>) -> Matrix<F> {
    let n = alg.dim();
    // tr(L_{d_k}); the form is then linear in the product d_i d_j
    let traces: Vec<F> = (0..n)
        .map(|k| {
            let mut t = F::zero();
            for l in 0..n {
                t += &alg.product(k, l)[l];
            }
            t
        })
        .collect();
    let mut gram = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let mut g = F::zero();
            for (c, t) in alg.product(i, j).iter().zip(&traces) {
                if !c.is_zero() && !t.is_zero() {
                    g += &(c.clone() * t);
                }
            }
            gram[(i, j)] = g;
        }
    }
    gram
}

/// Jacobson radical as the kernel of the trace form.
pub fn radical<F: Field>(alg: &StructureAlgebra<F>) -> Result<Subspace<F>, StructureError> {
    let rad = trace_form(alg).kernel();
    if !alg.is_ideal(&rad)? {
        return Err(StructureError::RadicalCheck("not an ideal"));
    }
    if !alg.is_nilpotent(&rad)? {
        return Err(StructureError::RadicalCheck("not nilpotent"));
    }
    Ok(rad)
}

pub fn is_semisimple<F: Field>(alg: &StructureAlgebra<F>) -> Result<bool, StructureError> {
    Ok(radical(alg)?.is_zero())
}

/// `s_k` evaluated on every increasing `k`-subset of the basis, one level at
/// a time. Subsets with vanishing value are dropped.
struct StandardLevels<'a, F> {
    alg: &'a StructureAlgebra<F>,
    k: usize,
    values: BTreeMap<Vec<usize>, Vec<F>>,
}

impl<'a, F: Field> StandardLevels<'a, F> {
    fn new(alg: &'a StructureAlgebra<F>) -> Self {
        let values = BTreeMap::from([(Vec::new(), alg.unit().to_vec())]);
        StandardLevels { alg, k: 0, values }
    }

    /// `s_k(S) = Σ_p (-1)^p d_{S[p]} · s_{k-1}(S \ S[p])`, pushed forward from
    /// each nonzero `s_{k-1}(T)`.
    fn advance(&mut self) {
        let n = self.alg.dim();
        let mut next: BTreeMap<Vec<usize>, Vec<F>> = BTreeMap::new();
        for (t, v) in &self.values {
            for a in 0..n {
                let p = match t.binary_search(&a) {
                    Ok(_) => continue,
                    Err(p) => p,
                };
                let prod = self.alg.basis_times(a, v);
                if prod.iter().all(F::is_zero) {
                    continue;
                }
                let mut s = t.clone();
                s.insert(p, a);
                let slot = next.entry(s).or_insert_with(|| vec![F::zero(); n]);
                for (x, y) in slot.iter_mut().zip(&prod) {
                    if p % 2 == 0 {
                        *x += y;
                    } else {
                        *x -= y;
                    }
                }
            }
        }
        next.retain(|_, v| v.iter().any(|c| !c.is_zero()));
        self.values = next;
        self.k += 1;
    }

    fn span(&self) -> Subspace<F> {
        Subspace::from_vectors(self.alg.dim(), self.values.values().cloned().collect())
            .expect("values have the algebra's dimension")
    }
}

/// Span of `s_{2m}` over all basis tuples. Only increasing tuples are
/// evaluated; alternation makes the rest redundant. `m = 0` gives the
/// span of the unit.
pub fn identity_span<F: Field>(alg: &StructureAlgebra<F>, m: usize) -> Subspace<F> {
    let mut levels = StandardLevels::new(alg);
    while levels.k < 2 * m && !levels.values.is_empty() {
        levels.advance();
    }
    levels.span()
}

/// `I'_m`: the two-sided ideal generated by [`identity_span`].
pub fn identity_ideal<F: Field>(alg: &StructureAlgebra<F>, m: usize) -> Result<Subspace<F>, StructureError> {
    Ok(alg.ideal_closure(&identity_span(alg, m))?)
}

/// `dim I'_m(A)` for `m = 0..=⌊√n⌋`, sharing one subset recursion.
pub fn identity_filtration<F: Field>(alg: &StructureAlgebra<F>) -> Result<Vec<usize>, StructureError> {
    let r = alg.dim().isqrt();
    let mut dims = vec![alg.dim()];
    let mut levels = StandardLevels::new(alg);
    for _ in 1..=r {
        levels.advance();
        levels.advance();
        if levels.values.is_empty() {
            dims.resize(r + 1, 0);
            break;
        }
        dims.push(alg.ideal_closure(&levels.span())?.dim());
    }
    Ok(dims)
}

/// Block profile of `A` (of `A/J` when `A` is not semisimple) with the
/// filtration it was read from.
pub fn block_profile<F: Field>(alg: &StructureAlgebra<F>) -> Result<(BlockProfile, FiltrationReport), StructureError> {
    let rad = radical(alg)?;
    let quotient;
    let ss = if rad.is_zero() {
        alg
    } else {
        quotient = alg.quotient(&rad)?.0;
        &quotient
    };
    let dims = identity_filtration(ss)?;
    let r = dims.len() - 1;
    if dims[r] != 0 {
        return Err(StructureError::ResidualFiltration { dim: dims[r] });
    }
    let layer_dims: Vec<usize> = dims.windows(2).map(|w| w[0] - w[1]).collect();
    let mut counts = Vec::new();
    for (idx, &dim) in layer_dims.iter().enumerate() {
        let j = idx + 1;
        if dim % (j * j) != 0 {
            return Err(StructureError::NonIntegralLayer { j, dim });
        }
        counts.push((j as u32, (dim / (j * j)) as u32));
    }
    let report = FiltrationReport { dims, layer_dims, radical_dim: rad.dim() };
    Ok((BlockProfile::from_counts(counts), report))
}

/// Everything `analyze` reports about one algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub dim: usize,
    pub radical_dim: usize,
    pub semisimple: bool,
    pub profile: BlockProfile,
    pub filtration: FiltrationReport,
}

pub fn analyze<F: Field>(alg: &StructureAlgebra<F>) -> Result<StructureReport, StructureError> {
    let (profile, filtration) = block_profile(alg)?;
    Ok(StructureReport {
        dim: alg.dim(),
        radical_dim: filtration.radical_dim,
        semisimple: filtration.radical_dim == 0,
        profile,
        filtration,
    })
}

//! Small algebras with known structure, used as models and test fixtures.

use super::StructureAlgebra;
use crate::linalg::{Field, Scalar};

fn table_from<F: Field>(
    n: usize,
    mut product: impl FnMut(usize, usize) -> Vec<(usize, F)>,
) -> Vec<Vec<Vec<F>>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut v = vec![F::zero(); n];
                    for (l, c) in product(i, j) {
                        v[l] += &c;
                    }
                    v
                })
                .collect()
        })
        .collect()
}

/// `M_k` on matrix units `e_{ab}`, basis index `a·k + b`.
pub fn matrix_algebra<F: Field>(k: usize) -> StructureAlgebra<F> {
    let n = k * k;
    let labels = (0..n).map(|i| format!("e{}{}", i / k + 1, i % k + 1)).collect();
    let table = table_from(n, |i, j| {
        let (a, b) = (i / k, i % k);
        let (c, d) = (j / k, j % k);
        if b == c {
            vec![(a * k + d, F::one())]
        } else {
            vec![]
        }
    });
    let mut unit = vec![F::zero(); n];
    for a in 0..k {
        unit[a * k + a] = F::one();
    }
    StructureAlgebra::new(labels, table, unit).expect("matrix unit table is well-formed")
}

/// Upper-triangular `k×k` matrices on the units `e_{ab}`, `a ≤ b`, in row order.
pub fn upper_triangular<F: Field>(k: usize) -> StructureAlgebra<F> {
    let units: Vec<(usize, usize)> = (0..k).flat_map(|a| (a..k).map(move |b| (a, b))).collect();
    let index = |a: usize, b: usize| units.iter().position(|&u| u == (a, b)).expect("upper unit");
    let labels = units.iter().map(|(a, b)| format!("e{}{}", a + 1, b + 1)).collect();
    let table = table_from(units.len(), |i, j| {
        let (a, b) = units[i];
        let (c, d) = units[j];
        if b == c {
            vec![(index(a, d), F::one())]
        } else {
            vec![]
        }
    });
    let mut unit = vec![F::zero(); units.len()];
    for a in 0..k {
        unit[index(a, a)] = F::one();
    }
    StructureAlgebra::new(labels, table, unit).expect("upper-triangular table is well-formed")
}

/// `ℚ[x]/(x²)` on the basis `1, x`.
pub fn dual_numbers<F: Field>() -> StructureAlgebra<F> {
    let table = table_from(2, |i, j| match (i, j) {
        (0, j) => vec![(j, F::one())],
        (i, 0) => vec![(i, F::one())],
        _ => vec![],
    });
    StructureAlgebra::new(vec!["1".into(), "x".into()], table, vec![F::one(), F::zero()])
        .expect("dual number table is well-formed")
}

/// Exterior algebra on `g` generators, basis indexed by subsets (bitmasks)
/// in increasing order. `g = 2` gives the basis `1, x, y, xy`.
pub fn exterior_algebra<F: Field>(g: usize) -> StructureAlgebra<F> {
    let n = 1usize << g;
    let names: Vec<String> = (0..g)
        .map(|i| match i {
            0 => "x".to_string(),
            1 => "y".to_string(),
            _ => format!("z{i}"),
        })
        .collect();
    let labels = (0..n)
        .map(|mask| {
            if mask == 0 {
                return "1".to_string();
            }
            (0..g).filter(|b| mask >> b & 1 == 1).map(|b| names[b].as_str()).collect::<Vec<_>>().join("*")
        })
        .collect();
    let table = table_from(n, |a, b| {
        if a & b != 0 {
            return vec![];
        }
        // sign of merging the sorted letters of a and b
        let mut swaps = 0;
        for bit in 0..g {
            if b >> bit & 1 == 1 {
                swaps += (a >> (bit + 1)).count_ones();
            }
        }
        let sign = if swaps % 2 == 0 { F::one() } else { -F::one() };
        vec![(a | b, sign)]
    });
    StructureAlgebra::new(labels, table, crate::linalg::unit_vector(n, 0)).expect("exterior table is well-formed")
}

/// Direct product of algebras, basis concatenated in order.
pub fn direct_sum<F: Field>(parts: &[StructureAlgebra<F>]) -> StructureAlgebra<F> {
    let n: usize = parts.iter().map(StructureAlgebra::dim).sum();
    let mut offsets = Vec::with_capacity(parts.len());
    let mut owner = Vec::with_capacity(n);
    let mut off = 0;
    for (p, alg) in parts.iter().enumerate() {
        offsets.push(off);
        owner.extend((0..alg.dim()).map(|local| (p, local)));
        off += alg.dim();
    }
    let labels = owner
        .iter()
        .map(|&(p, local)| {
            if parts.len() == 1 {
                parts[p].labels()[local].clone()
            } else {
                format!("{}_{}", parts[p].labels()[local], p)
            }
        })
        .collect();
    let table = table_from(n, |i, j| {
        let (pi, li) = owner[i];
        let (pj, lj) = owner[j];
        if pi != pj {
            return vec![];
        }
        parts[pi]
            .product(li, lj)
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(l, c)| (offsets[pi] + l, c.clone()))
            .collect()
    });
    let unit = parts.iter().flat_map(|p| p.unit().iter().cloned()).collect();
    StructureAlgebra::new(labels, table, unit).expect("direct sum table is well-formed")
}

/// `M_{n_1} ⊕ … ⊕ M_{n_k}` over the Gaussian rationals.
pub fn matrix_direct_sum(blocks: &[usize]) -> StructureAlgebra<Scalar> {
    let parts: Vec<StructureAlgebra<Scalar>> = blocks.iter().map(|&k| matrix_algebra(k)).collect();
    direct_sum(&parts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_valid_algebras() {
        let algs: Vec<StructureAlgebra<Scalar>> = vec![
            matrix_algebra(1),
            matrix_algebra(2),
            matrix_algebra(3),
            upper_triangular(2),
            upper_triangular(3),
            dual_numbers(),
            exterior_algebra(2),
            exterior_algebra(3),
            matrix_direct_sum(&[2, 1, 1]),
        ];
        for alg in algs {
            assert!(alg.validate().is_valid(), "{:?}", alg.labels());
        }
    }

    #[test]
    fn exterior_anticommutes() {
        let e: StructureAlgebra<Scalar> = exterior_algebra(2);
        assert_eq!(e.labels(), ["1", "x", "y", "x*y"]);
        // y∘x = -x∘y
        assert_eq!(e.product(2, 1), &[Scalar::from_int(0), Scalar::from_int(0), Scalar::from_int(0), Scalar::from_int(-1)][..]);
    }
}

use serde::{Deserialize, Serialize};

use super::{DeformError, DeformationFamily, Family, SampledFamily};
use crate::linalg::Scalar;
use crate::ncpoly::{check_generator_names, parse_ncpoly, TPoly};

/// JSON family description, tagged by `kind`.
///
/// `table` entries are coefficient lists `[c0, c1, ...]` of polynomials in `t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum FamilyFile {
    Table {
        dim: usize,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        labels: Vec<String>,
        unit: Vec<Scalar>,
        table: Vec<Vec<Vec<Vec<Scalar>>>>,
    },
    Relations {
        generators: Vec<String>,
        relations: Vec<String>,
        expected_dim: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        max_degree: Option<usize>,
    },
}

impl FamilyFile {
    pub fn from_json(src: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(src)
    }

    /// Builds and validates the family.
    pub fn into_family(self) -> Result<Family, DeformError> {
        match self {
            FamilyFile::Table { dim, labels, unit, table } => {
                let labels = if labels.is_empty() { (0..dim).map(|i| format!("d{i}")).collect() } else { labels };
                if labels.len() != dim {
                    return Err(DeformError::Shape(format!("{} labels for dimension {dim}", labels.len())));
                }
                let table = table
                    .into_iter()
                    .map(|row| row.into_iter().map(|v| v.into_iter().map(TPoly::from_coeffs).collect()).collect())
                    .collect();
                let fam = DeformationFamily::new(labels, table, unit)?;
                Ok(Family::Table(fam.validated()?))
            }
            FamilyFile::Relations { generators, relations, expected_dim, max_degree } => {
                check_generator_names(&generators).map_err(|e| DeformError::Shape(e.to_string()))?;
                let rels = relations
                    .iter()
                    .enumerate()
                    .map(|(i, src)| {
                        parse_ncpoly(src, &generators).map_err(|e| DeformError::Shape(format!("relation {i}: {e}")))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(Family::Relations(SampledFamily::new(generators, rels, expected_dim, max_degree)?))
            }
        }
    }
}

impl From<&DeformationFamily> for FamilyFile {
    fn from(f: &DeformationFamily) -> Self {
        let n = f.dim();
        FamilyFile::Table {
            dim: n,
            labels: f.labels().to_vec(),
            unit: f.unit().to_vec(),
            table: (0..n)
                .map(|i| (0..n).map(|j| f.product(i, j).iter().map(|c| c.coeffs().to_vec()).collect()).collect())
                .collect(),
        }
    }
}

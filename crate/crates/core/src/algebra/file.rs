use serde::{Deserialize, Serialize};

use super::{AlgebraError, StructureAlgebra};
use crate::linalg::Scalar;

/// JSON form of a [`StructureAlgebra`]:
/// `{"dim": n, "labels": [...], "unit": [scalar×n], "table": [[[scalar×n]×n]×n]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub dim: usize,
    #[serde(default)]
    pub labels: Vec<String>,
    pub unit: Vec<Scalar>,
    pub table: Vec<Vec<Vec<Scalar>>>,
}

impl AlgebraFile {
    pub fn from_json(src: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(src)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("algebra file serializes")
    }

    /// Checks shapes and builds the algebra. Missing labels default to
    /// `d0, d1, …`. The axioms are not checked here.
    pub fn into_algebra(self) -> Result<StructureAlgebra, AlgebraError> {
        let labels = if self.labels.is_empty() {
            (0..self.dim).map(|i| format!("d{i}")).collect()
        } else {
            self.labels
        };
        if labels.len() != self.dim {
            return Err(AlgebraError::Shape(format!("{} labels for dimension {}", labels.len(), self.dim)));
        }
        StructureAlgebra::new(labels, self.table, self.unit)
    }
}

impl From<&StructureAlgebra> for AlgebraFile {
    fn from(alg: &StructureAlgebra) -> Self {
        let n = alg.dim();
        AlgebraFile {
            dim: n,
            labels: alg.labels().to_vec(),
            unit: alg.unit().to_vec(),
            table: (0..n).map(|i| (0..n).map(|j| alg.product(i, j).to_vec()).collect()).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::matrix_algebra;

    #[test]
    fn json_round_trip() {
        let m2: StructureAlgebra = matrix_algebra(2);
        let text = AlgebraFile::from(&m2).to_json();
        let back = AlgebraFile::from_json(&text).unwrap().into_algebra().unwrap();
        assert_eq!(back, m2);
    }

    #[test]
    fn accepts_integer_scalars_and_rejects_bad_shapes() {
        let ok = r#"{"dim": 1, "unit": [1], "table": [[["1"]]]}"#;
        let alg = AlgebraFile::from_json(ok).unwrap().into_algebra().unwrap();
        assert_eq!(alg.labels(), ["d0"]);
        let short = r#"{"dim": 2, "unit": ["1", "0"], "table": [[["1"]]]}"#;
        assert!(AlgebraFile::from_json(short).unwrap().into_algebra().is_err());
        let bad_scalar = r#"{"dim": 1, "unit": ["1/0"], "table": [[["1"]]]}"#;
        assert!(AlgebraFile::from_json(bad_scalar).is_err());
    }
}

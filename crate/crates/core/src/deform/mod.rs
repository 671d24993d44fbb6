//! Polynomial deformation families, exact specialization and scans along
//! geometric schedules `s_k = base·2^{-k}`.

mod file;

pub use file::FamilyFile;

use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use crate::algebra::{StructureAlgebra, ValidationReport, Violation};
use crate::linalg::{BigRational, Field, Scalar};
use crate::ncpoly::{NcPoly, TPoly};
use crate::presentation::{Presentation, PresentationError};
use crate::structure::{analyze, trace_form, BlockProfile};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DeformError {
    #[error("malformed family: {0}")]
    Shape(String),
    #[error("family fails its axioms:\n{0}")]
    Invalid(ValidationReport),
    #[error("specialization parameter {0} is not real")]
    NonRealParameter(Box<Scalar>),
    #[error("schedule base {0} must be a positive rational")]
    NonPositiveBase(Box<Scalar>),
    #[error("schedule needs at least 2 samples, got {0}")]
    ScheduleTooShort(usize),
    #[error("relation template does not build at t = 0: {0}")]
    Template(Box<PresentationError>),
}

/// Structure constants `c[i][j][l] ∈ ℚ(i)[t]` over a fixed basis with a
/// unit constant in `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeformationFamily {
    dim: usize,
    labels: Vec<String>,
    unit: Vec<Scalar>,
    table: Vec<Vec<TPoly>>,
}

impl DeformationFamily {
    pub fn new(labels: Vec<String>, table: Vec<Vec<Vec<TPoly>>>, unit: Vec<Scalar>) -> Result<Self, DeformError> {
        let n = labels.len();
        if n == 0 {
            return Err(DeformError::Shape("dimension must be at least 1".into()));
        }
        if unit.len() != n {
            return Err(DeformError::Shape(format!("unit has {} entries, expected {n}", unit.len())));
        }
        if table.len() != n {
            return Err(DeformError::Shape(format!("table has {} rows, expected {n}", table.len())));
        }
        let mut flat = Vec::with_capacity(n * n);
        for (i, row) in table.into_iter().enumerate() {
            if row.len() != n {
                return Err(DeformError::Shape(format!("table row {i} has {} entries, expected {n}", row.len())));
            }
            for (j, v) in row.into_iter().enumerate() {
                if v.len() != n {
                    return Err(DeformError::Shape(format!("product ({i}, {j}) has {} coordinates, expected {n}", v.len())));
                }
                flat.push(v);
            }
        }
        Ok(DeformationFamily { dim: n, labels, unit, table: flat })
    }

    /// The family with every structure constant constant in `t`.
    pub fn constant(alg: &StructureAlgebra) -> Self {
        let n = alg.dim();
        let table = (0..n * n)
            .map(|ij| alg.product(ij / n, ij % n).iter().cloned().map(TPoly::constant).collect())
            .collect();
        DeformationFamily { dim: n, labels: alg.labels().to_vec(), unit: alg.unit().to_vec(), table }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    /// Coordinates of `d_i ∘ d_j` as polynomials in `t`.
    pub fn product(&self, i: usize, j: usize) -> &[TPoly] {
        &self.table[i * self.dim + j]
    }

    /// Largest `t`-degree among the structure constants.
    pub fn t_degree(&self) -> usize {
        self.table.iter().flatten().filter_map(TPoly::degree).max().unwrap_or(0)
    }

    /// Whether the table at `t = 0` equals `base`'s table exactly.
    pub fn reproduces(&self, base: &StructureAlgebra) -> bool {
        base.dim() == self.dim && self.evaluate(&Scalar::zero()).0 == base.unit()
            && (0..self.dim * self.dim).all(|ij| {
                let (i, j) = (ij / self.dim, ij % self.dim);
                self.product(i, j).iter().map(TPoly::constant_term).eq(base.product(i, j).iter().cloned())
            })
    }

    fn evaluate(&self, s: &Scalar) -> (Vec<Scalar>, Vec<Vec<Vec<Scalar>>>) {
        let n = self.dim;
        let table = (0..n)
            .map(|i| (0..n).map(|j| self.product(i, j).iter().map(|c| c.eval(s)).collect()).collect())
            .collect();
        (self.unit.clone(), table)
    }

    /// `(d_i d_j)` times `v` on the right, coefficientwise in `t`.
    fn times_basis(&self, v: &[TPoly], k: usize) -> Vec<TPoly> {
        let mut out = vec![TPoly::zero(); self.dim];
        for (l, vl) in v.iter().enumerate() {
            if vl.is_zero() {
                continue;
            }
            for (m, c) in self.product(l, k).iter().enumerate() {
                if !c.is_zero() {
                    out[m] = &out[m] + &(vl * c);
                }
            }
        }
        out
    }

    fn basis_times(&self, i: usize, v: &[TPoly]) -> Vec<TPoly> {
        let mut out = vec![TPoly::zero(); self.dim];
        for (l, vl) in v.iter().enumerate() {
            if vl.is_zero() {
                continue;
            }
            for (m, c) in self.product(i, l).iter().enumerate() {
                if !c.is_zero() {
                    out[m] = &out[m] + &(vl * c);
                }
            }
        }
        out
    }

    /// Checks associativity and both unit laws as identities in `t`.
    pub fn validate(&self) -> ValidationReport {
        let n = self.dim;
        let mut violations = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let left = self.times_basis(self.product(i, j), k);
                    let right = self.basis_times(i, self.product(j, k));
                    if left != right {
                        violations.push(Violation::Associativity { i, j, k });
                    }
                }
            }
        }
        let unit: Vec<TPoly> = self.unit.iter().cloned().map(TPoly::constant).collect();
        for j in 0..n {
            let dj: Vec<TPoly> = (0..n).map(|l| if l == j { TPoly::one() } else { TPoly::zero() }).collect();
            if self.times_basis(&unit, j) != dj {
                violations.push(Violation::LeftUnit { j });
            }
            if self.basis_times(j, &unit) != dj {
                violations.push(Violation::RightUnit { j });
            }
        }
        ValidationReport { violations }
    }

    pub fn validated(self) -> Result<ValidatedFamily, DeformError> {
        let report = self.validate();
        if report.is_valid() {
            Ok(ValidatedFamily(self))
        } else {
            Err(DeformError::Invalid(report))
        }
    }
}

pub fn validate_family(f: &DeformationFamily) -> ValidationReport {
    f.validate()
}

/// A family whose axioms hold identically in `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidatedFamily(DeformationFamily);

impl ValidatedFamily {
    pub fn family(&self) -> &DeformationFamily {
        &self.0
    }

    /// The algebra at `t = s`; valid for every real `s` because the axioms
    /// hold in `ℚ(i)[t]`.
    pub fn specialize(&self, s: &Scalar) -> Result<StructureAlgebra, DeformError> {
        if !s.is_real() {
            return Err(DeformError::NonRealParameter(Box::new(s.clone())));
        }
        let (unit, table) = self.0.evaluate(s);
        Ok(StructureAlgebra::new(self.0.labels.clone(), table, unit).expect("family shape was checked"))
    }

    /// `det G(t)` with `G[i][j] = tr(L_{d_i} L_{d_j})`, by interpolation.
    pub fn gram_determinant(&self) -> TPoly {
        let f = &self.0;
        let n = f.dim;
        let bound = 2 * f.t_degree() * n;
        let points: Vec<(Scalar, Scalar)> = (0..=bound as i64)
            .map(|x| {
                let s = Scalar::from_int(x);
                (s.clone(), trace_form(&self.specialize(&s).expect("real point")).determinant())
            })
            .collect();
        interpolate(&points)
    }
}

pub fn specialize(f: &ValidatedFamily, s: &Scalar) -> Result<StructureAlgebra, DeformError> {
    f.specialize(s)
}

/// Lagrange interpolation through points with distinct abscissae.
fn interpolate(points: &[(Scalar, Scalar)]) -> TPoly {
    let mut acc = TPoly::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut basis = TPoly::one();
        let mut denom = Scalar::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i != j {
                basis = &basis * &TPoly::from_coeffs(vec![-xj.clone(), Scalar::one()]);
                denom *= &(xi.clone() - xj.clone());
            }
        }
        let scale = yi.clone() * &denom.inv().expect("distinct abscissae");
        acc = &acc + &basis.scale(&scale);
    }
    acc
}

/// A presentation whose relations may depend on `t`; each sample is built
/// from scratch with `t ↦ s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampledFamily {
    generators: Vec<String>,
    relations: Vec<NcPoly>,
    expected_dim: usize,
    max_degree: Option<usize>,
}

impl SampledFamily {
    /// Fails unless the template builds to `expected_dim` at `t = 0`.
    pub fn new(
        generators: Vec<String>,
        relations: Vec<NcPoly>,
        expected_dim: usize,
        max_degree: Option<usize>,
    ) -> Result<Self, DeformError> {
        let fam = SampledFamily { generators, relations, expected_dim, max_degree };
        fam.presentation_at(&Scalar::zero())
            .and_then(|p| p.build())
            .map_err(|e| DeformError::Template(Box::new(e)))?;
        Ok(fam)
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn expected_dim(&self) -> usize {
        self.expected_dim
    }

    /// Relations with `t ↦ s`; relations vanishing at `s` are dropped.
    pub fn presentation_at(&self, s: &Scalar) -> Result<Presentation, PresentationError> {
        let rels = self.relations.iter().map(|r| r.specialize(s)).filter(|r| !r.is_zero()).collect();
        Presentation::new(self.generators.clone(), rels, self.expected_dim, self.max_degree)
    }
}

/// What a scan runs over.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Table(ValidatedFamily),
    Relations(SampledFamily),
}

/// `base·2^{-k}` for `k = 0..count`.
pub fn schedule(base: &Scalar, count: usize) -> Result<Vec<Scalar>, DeformError> {
    match base.as_rational() {
        Some(r) if r > &BigRational::from_integer(BigInt::from(0)) => {}
        _ => return Err(DeformError::NonPositiveBase(Box::new(base.clone()))),
    }
    if count < 2 {
        return Err(DeformError::ScheduleTooShort(count));
    }
    let half = Scalar::ratio(1, 2);
    let mut s = base.clone();
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        out.push(s.clone());
        s *= &half;
    }
    Ok(out)
}

fn as_string<S: Serializer>(s: &Scalar, ser: S) -> Result<S::Ok, S::Error> {
    ser.collect_str(s)
}

/// One sample of a scan. Structure fields are absent when the sample could
/// not be analyzed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanRow {
    #[serde(serialize_with = "as_string")]
    pub s: Scalar,
    pub dim: Option<usize>,
    pub semisimple: Option<bool>,
    pub radical_dim: Option<usize>,
    pub profile: Option<BlockProfile>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl ScanRow {
    fn failed(s: Scalar, dim: Option<usize>, error: String) -> Self {
        ScanRow { s, dim, semisimple: None, radical_dim: None, profile: None, error: Some(error) }
    }

    fn analyzed(s: Scalar, alg: &StructureAlgebra) -> Self {
        match analyze(alg) {
            Ok(r) => ScanRow {
                s,
                dim: Some(r.dim),
                semisimple: Some(r.semisimple),
                radical_dim: Some(r.radical_dim),
                profile: Some(r.profile),
                error: None,
            },
            Err(e) => ScanRow::failed(s, Some(alg.dim()), e.to_string()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum Verdict {
    /// Every sample from index `from` on is semisimple with this profile.
    StableSemisimpleTarget { profile: BlockProfile, from: usize },
    NeverSemisimpleOnSchedule,
    Mixed,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::StableSemisimpleTarget { profile, from } => {
                write!(f, "StableSemisimpleTarget {profile} from k0 = {from}")
            }
            Verdict::NeverSemisimpleOnSchedule => f.write_str("NeverSemisimpleOnSchedule"),
            Verdict::Mixed => f.write_str("Mixed"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanResult {
    pub rows: Vec<ScanRow>,
    pub verdict: Verdict,
}

/// Verdict from the rows alone. Any failed sample, or any sample off
/// `expected_dim`, makes the scan `Mixed`.
pub fn verdict(rows: &[ScanRow], expected_dim: Option<usize>) -> Verdict {
    let broken = rows.iter().any(|r| r.error.is_some() || r.semisimple.is_none());
    let off_dim = expected_dim.is_some_and(|e| rows.iter().any(|r| r.dim != Some(e)));
    if broken || off_dim || rows.is_empty() {
        return Verdict::Mixed;
    }
    if rows.iter().all(|r| r.semisimple == Some(false)) {
        return Verdict::NeverSemisimpleOnSchedule;
    }
    let last = rows.last().expect("nonempty");
    if last.semisimple != Some(true) {
        return Verdict::Mixed;
    }
    let same = |r: &ScanRow| r.semisimple == Some(true) && r.profile == last.profile;
    let from = rows.iter().rposition(|r| !same(r)).map_or(0, |k| k + 1);
    Verdict::StableSemisimpleTarget { profile: last.profile.clone().expect("semisimple row has a profile"), from }
}

pub fn scan(family: &Family, base: &Scalar, count: usize) -> Result<ScanResult, DeformError> {
    let points = schedule(base, count)?;
    let (rows, expected) = match family {
        Family::Table(f) => {
            let rows = points
                .into_iter()
                .map(|s| {
                    let alg = f.specialize(&s).expect("schedule points are real");
                    ScanRow::analyzed(s, &alg)
                })
                .collect::<Vec<_>>();
            (rows, None)
        }
        Family::Relations(f) => {
            let rows = points
                .into_iter()
                .map(|s| match f.presentation_at(&s).and_then(|p| p.build()) {
                    Ok(built) => ScanRow::analyzed(s, &built.algebra),
                    Err(e @ PresentationError::DimensionMismatch { found, .. }) => {
                        ScanRow::failed(s, Some(found), e.to_string())
                    }
                    Err(e) => ScanRow::failed(s, None, e.to_string()),
                })
                .collect::<Vec<_>>();
            (rows, Some(f.expected_dim))
        }
    };
    let verdict = verdict(&rows, expected);
    Ok(ScanResult { rows, verdict })
}

/// Which candidate profiles agree with a scan's stable profile.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TargetComparison {
    pub stable: Option<BlockProfile>,
    pub matches: Vec<(BlockProfile, bool)>,
    pub message: String,
}

impl TargetComparison {
    pub fn matched(&self) -> Vec<&BlockProfile> {
        self.matches.iter().filter(|(_, m)| *m).map(|(p, _)| p).collect()
    }
}

/// Semisimple ℂ-algebras are isomorphic iff their profiles agree, so at
/// most one distinct target can match.
pub fn compare_targets(result: &ScanResult, targets: &[BlockProfile]) -> TargetComparison {
    let mut distinct: Vec<BlockProfile> = Vec::new();
    for t in targets {
        if !distinct.contains(t) {
            distinct.push(t.clone());
        }
    }
    let stable = match &result.verdict {
        Verdict::StableSemisimpleTarget { profile, .. } => Some(profile.clone()),
        _ => None,
    };
    let matches: Vec<(BlockProfile, bool)> =
        distinct.into_iter().map(|p| (p.clone(), stable.as_ref() == Some(&p))).collect();
    let hits = matches.iter().filter(|(_, m)| *m).count();
    let message = match &stable {
        None => "no stable target on this schedule".to_string(),
        Some(p) if hits == 0 => format!("stable profile {p} matches none of the targets"),
        Some(p) => format!("stable profile {p} matches exactly one target"),
    };
    TargetComparison { stable, matches, message }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{dual_numbers, matrix_algebra};
    use crate::structure::{is_semisimple, radical};

    fn tp(c: &[i64]) -> TPoly {
        TPoly::from_coeffs(c.iter().map(|&v| Scalar::from_int(v)).collect())
    }

    /// `x∘x = t·1` on the basis `1, x`.
    pub(crate) fn dual_family() -> DeformationFamily {
        let (one, zero) = (tp(&[1]), tp(&[]));
        let table = vec![
            vec![vec![one.clone(), zero.clone()], vec![zero.clone(), one.clone()]],
            vec![vec![zero.clone(), one.clone()], vec![tp(&[0, 1]), zero.clone()]],
        ];
        DeformationFamily::new(vec!["1".into(), "x".into()], table, vec![Scalar::from_int(1), Scalar::from_int(0)])
            .unwrap()
    }

    #[test]
    fn validate_examples() {
        assert!(dual_family().validate().is_valid());
        assert!(DeformationFamily::constant(&matrix_algebra(2)).validate().is_valid());
        // 1∘1 = 1 + t·x
        let mut bad = dual_family();
        bad.table[0][1] = tp(&[0, 1]);
        assert!(!bad.validate().is_valid());
        // unit law broken only away from t = 0
        let mut bad = dual_family();
        bad.table[2][0] = tp(&[0, 1]);
        let report = bad.validate();
        assert!(report.violations.iter().any(|v| matches!(v, Violation::RightUnit { j: 1 })));
        assert!(!report.is_valid());
    }

    #[test]
    fn specialize_examples() {
        let f = dual_family().validated().unwrap();
        let at0 = f.specialize(&Scalar::zero()).unwrap();
        assert_eq!(at0, dual_numbers());
        assert_eq!(radical(&at0).unwrap().dim(), 1);
        let at = f.specialize(&Scalar::ratio(1, 4)).unwrap();
        assert!(is_semisimple(&at).unwrap());
        // e = 1/2 + x is idempotent at s = 1/4
        let e = vec![Scalar::ratio(1, 2), Scalar::from_int(1)];
        assert_eq!(at.multiply(&e, &e).unwrap(), e);
        assert!(f.specialize(&Scalar::i()).is_err());
        let m2 = matrix_algebra(2);
        let c = DeformationFamily::constant(&m2).validated().unwrap();
        assert_eq!(c.specialize(&Scalar::ratio(3, 7)).unwrap(), m2);
        assert!(dual_family().reproduces(&dual_numbers()));
    }

    #[test]
    fn scan_examples() {
        let dual = Family::Table(dual_family().validated().unwrap());
        let r = scan(&dual, &Scalar::ratio(1, 2), 8).unwrap();
        assert_eq!(r.verdict, Verdict::StableSemisimpleTarget { profile: "1^2".parse().unwrap(), from: 0 });
        let m2 = Family::Table(DeformationFamily::constant(&matrix_algebra(2)).validated().unwrap());
        let r = scan(&m2, &Scalar::ratio(1, 2), 12).unwrap();
        assert_eq!(r.verdict, Verdict::StableSemisimpleTarget { profile: "2^1".parse().unwrap(), from: 0 });
        let flat = Family::Table(DeformationFamily::constant(&dual_numbers()).validated().unwrap());
        let r = scan(&flat, &Scalar::ratio(1, 2), 5).unwrap();
        assert_eq!(r.verdict, Verdict::NeverSemisimpleOnSchedule);
        assert!(r.rows.iter().all(|row| row.radical_dim == Some(1)));
        assert!(scan(&flat, &Scalar::from_int(0), 5).is_err());
        assert!(scan(&flat, &Scalar::from_int(1), 1).is_err());
    }

    #[test]
    fn schedule_is_exact_and_geometric() {
        let s = schedule(&Scalar::ratio(1, 4), 4).unwrap();
        let expect: Vec<Scalar> = [4, 8, 16, 32].iter().map(|&d| Scalar::ratio(1, d)).collect();
        assert_eq!(s, expect);
    }

    fn row(semisimple: bool, profile: &str) -> ScanRow {
        ScanRow {
            s: Scalar::from_int(1),
            dim: Some(2),
            semisimple: Some(semisimple),
            radical_dim: Some(if semisimple { 0 } else { 1 }),
            profile: Some(profile.parse().unwrap()),
            error: None,
        }
    }

    #[test]
    fn verdict_rules() {
        let stable = vec![row(false, "1^1"), row(true, "2^1"), row(true, "1^2"), row(true, "1^2")];
        assert_eq!(verdict(&stable, None), Verdict::StableSemisimpleTarget { profile: "1^2".parse().unwrap(), from: 2 });
        assert_eq!(verdict(&stable, Some(3)), Verdict::Mixed);
        let tail_bad = vec![row(true, "1^2"), row(false, "1^1")];
        assert_eq!(verdict(&tail_bad, None), Verdict::Mixed);
        assert_eq!(verdict(&[row(false, "1^1"), row(false, "1^1")], None), Verdict::NeverSemisimpleOnSchedule);
        let mut failed = stable.clone();
        failed[0] = ScanRow::failed(Scalar::from_int(1), None, "boom".into());
        assert_eq!(verdict(&failed, None), Verdict::Mixed);
    }

    #[test]
    fn compare_examples() {
        let dual = Family::Table(dual_family().validated().unwrap());
        let r = scan(&dual, &Scalar::ratio(1, 4), 4).unwrap();
        let targets: Vec<BlockProfile> = vec!["1^2".parse().unwrap(), "2^1".parse().unwrap()];
        let c = compare_targets(&r, &targets);
        assert_eq!(c.matched(), [&targets[0]]);
        let c = compare_targets(&r, &targets[1..]);
        assert!(c.matched().is_empty());
        let mixed = ScanResult { rows: vec![], verdict: Verdict::Mixed };
        assert_eq!(compare_targets(&mixed, &targets).message, "no stable target on this schedule");
    }

    #[test]
    fn gram_determinant_tracks_semisimplicity() {
        let f = dual_family().validated().unwrap();
        // G = [[2, 0], [0, 2t]]
        assert_eq!(f.gram_determinant(), tp(&[0, 4]));
        let c = DeformationFamily::constant(&matrix_algebra(2)).validated().unwrap();
        assert!(c.gram_determinant().is_constant());
        assert!(!c.gram_determinant().is_zero());
    }

    #[test]
    fn sampled_family_scan() {
        let gens = vec!["x".to_string()];
        let rel = crate::ncpoly::parse_ncpoly("x^2 - t", &gens).unwrap();
        let fam = Family::Relations(SampledFamily::new(gens.clone(), vec![rel], 2, None).unwrap());
        let r = scan(&fam, &Scalar::ratio(1, 4), 6).unwrap();
        assert_eq!(r.verdict, Verdict::StableSemisimpleTarget { profile: "1^2".parse().unwrap(), from: 0 });
        // t·x = 0 kills x at every s != 0
        let rels = vec![
            crate::ncpoly::parse_ncpoly("x^2", &gens).unwrap(),
            crate::ncpoly::parse_ncpoly("t*x", &gens).unwrap(),
        ];
        let fam = Family::Relations(SampledFamily::new(gens, rels, 2, None).unwrap());
        let r = scan(&fam, &Scalar::ratio(1, 2), 3).unwrap();
        assert_eq!(r.verdict, Verdict::Mixed);
        assert!(r.rows.iter().all(|row| row.dim == Some(1)));
    }
}

use deformkit::algebra::{matrix_algebra, upper_triangular};
use deformkit::deform::{scan, verdict, DeformationFamily, Family, FamilyFile, ScanResult, ValidatedFamily, Verdict};
use deformkit::ncpoly::TPoly;
use deformkit::structure::is_semisimple;
use deformkit::{Field, Scalar};
use proptest::prelude::*;

const DUAL: &str = r#"{"kind": "table", "dim": 2, "labels": ["1", "x"], "unit": ["1", "0"],
    "table": [[[["1"], []], [[], ["1"]]], [[[], ["1"]], [["0", "1"], []]]]}"#;

fn dual_family() -> ValidatedFamily {
    match FamilyFile::from_json(DUAL).unwrap().into_family().unwrap() {
        Family::Table(f) => f,
        Family::Relations(_) => unreachable!(),
    }
}

fn tp(c: &[i64]) -> TPoly {
    TPoly::from_coeffs(c.iter().map(|&v| Scalar::from_int(v)).collect())
}

/// `ℚ[x]/(x²(x - t))` on the basis `1, x, x²`: never semisimple, but the
/// radical drops from 2 to 1 away from `t = 0`.
fn cusp_family() -> ValidatedFamily {
    let (o, z, t, t2) = (tp(&[1]), tp(&[]), tp(&[0, 1]), tp(&[0, 0, 1]));
    let e = |a: &TPoly, b: &TPoly, c: &TPoly| vec![a.clone(), b.clone(), c.clone()];
    let table = vec![
        vec![e(&o, &z, &z), e(&z, &o, &z), e(&z, &z, &o)],
        vec![e(&z, &o, &z), e(&z, &z, &o), e(&z, &z, &t)],
        vec![e(&z, &z, &o), e(&z, &z, &t), e(&z, &z, &t2)],
    ];
    let unit = vec![Scalar::from_int(1), Scalar::from_int(0), Scalar::from_int(0)];
    DeformationFamily::new(vec!["1".into(), "x".into(), "x2".into()], table, unit).unwrap().validated().unwrap()
}

#[test]
fn specialization_at_zero_is_the_base() {
    let f = dual_family();
    let at0 = f.specialize(&Scalar::from_int(0)).unwrap();
    assert!(f.family().reproduces(&at0));
    assert!(!is_semisimple(&at0).unwrap());
    let ut = upper_triangular(2);
    assert!(DeformationFamily::constant(&ut).reproduces(&ut));
    let cusp = cusp_family();
    let at0 = cusp.specialize(&Scalar::from_int(0)).unwrap();
    assert_eq!(deformkit::structure::radical(&at0).unwrap().dim(), 2);
    let at = cusp.specialize(&Scalar::ratio(1, 3)).unwrap();
    assert_eq!(deformkit::structure::radical(&at).unwrap().dim(), 1);
}

fn gram_consistency(f: &ValidatedFamily, result: &ScanResult) {
    let det: TPoly = f.gram_determinant();
    for row in &result.rows {
        assert_eq!(!det.eval(&row.s).is_zero(), row.semisimple.unwrap(), "s = {}", row.s);
    }
}

#[test]
fn gram_determinant_matches_semisimplicity_on_scans() {
    let dual = dual_family();
    let fam = Family::Table(dual.clone());
    let r = scan(&fam, &Scalar::ratio(1, 4), 10).unwrap();
    gram_consistency(&dual, &r);
    let cusp = cusp_family();
    let r = scan(&Family::Table(cusp.clone()), &Scalar::ratio(1, 2), 4).unwrap();
    assert_eq!(r.verdict, Verdict::NeverSemisimpleOnSchedule);
    assert!(r.rows.iter().all(|row| row.profile == Some("1^2".parse().unwrap())));
    assert!(cusp.gram_determinant().is_zero());
    gram_consistency(&cusp, &r);
    let m2 = DeformationFamily::constant(&matrix_algebra(2)).validated().unwrap();
    let r = scan(&Family::Table(m2.clone()), &Scalar::ratio(3, 2), 4).unwrap();
    gram_consistency(&m2, &r);
}

#[test]
fn verdict_is_a_function_of_rows() {
    let fam = Family::Table(dual_family());
    let a = scan(&fam, &Scalar::ratio(1, 4), 6).unwrap();
    let b = scan(&fam, &Scalar::ratio(1, 4), 6).unwrap();
    assert_eq!(a, b);
    assert_eq!(verdict(&a.rows, None), a.verdict);
}

proptest! {
    #[test]
    fn specializations_are_valid_algebras(num in -50i64..50, den in 1i64..30) {
        let s = Scalar::ratio(num, den);
        let alg = dual_family().specialize(&s).unwrap();
        prop_assert!(alg.validate().is_valid());
        // x² = s·1: semisimple exactly when s ≠ 0
        prop_assert_eq!(is_semisimple(&alg).unwrap(), num != 0);
    }
}

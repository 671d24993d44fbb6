use deformkit::presentation::{Presentation, PresentationError};

const ACON: [&str; 5] = ["y^6 - x^3 - y^2*x", "y^4*x + x^2 + y^2", "x^4 - y^4", "y*x^2 + y^3", "x*y + y*x"];

#[test]
fn acon_is_twelve_dimensional() {
    let built = Presentation::parse(&["x", "y"], &ACON, 12, None).unwrap().build().unwrap();
    assert_eq!(built.algebra.dim(), 12);
    assert!(built.algebra.validate().is_valid());
    let words: Vec<String> = built.word_basis.iter().map(|w| w.render(&built.generators)).collect();
    println!("basis {words:?} at degree {}", built.reducer.degree());
}

#[test]
fn acon_with_wrong_expectation_reports_found_dimension() {
    let err = Presentation::parse(&["x", "y"], &ACON, 11, None).unwrap().build().unwrap_err();
    assert!(matches!(err, PresentationError::DimensionMismatch { expected: 11, found: 12, .. }), "{err}");
}

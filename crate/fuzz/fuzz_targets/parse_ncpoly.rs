#![no_main]

use deformkit::ncpoly::parse_ncpoly;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|src: &str| {
    let gens = vec!["x".to_string(), "y".to_string()];
    if let Ok(p) = parse_ncpoly(src, &gens) {
        // printing and reparsing is the identity
        let again = parse_ncpoly(&p.to_string(), &gens).expect("rendered polynomial reparses");
        assert_eq!(p, again);
    }
});

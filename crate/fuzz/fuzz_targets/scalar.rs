#![no_main]

use deformkit::Scalar;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|src: &str| {
    if let Ok(s) = src.parse::<Scalar>() {
        assert_eq!(s.to_string().parse::<Scalar>().expect("display reparses"), s);
    }
});

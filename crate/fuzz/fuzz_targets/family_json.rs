#![no_main]

use deformkit::deform::{scan, FamilyFile};
use deformkit::Scalar;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|src: &str| {
    let Ok(file) = FamilyFile::from_json(src) else { return };
    let Ok(family) = file.into_family() else { return };
    let _ = scan(&family, &Scalar::ratio(1, 2), 3);
});

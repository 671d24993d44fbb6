#![no_main]

use deformkit::algebra::AlgebraFile;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|src: &str| {
    let Ok(file) = AlgebraFile::from_json(src) else { return };
    let Ok(alg) = file.into_algebra() else { return };
    if alg.dim() <= 8 && alg.validate().is_valid() {
        let _ = deformkit::structure::analyze(&alg);
    }
});

#![no_main]

use deformkit::presentation::PresentationFile;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|src: &str| {
    let Ok(file) = PresentationFile::from_json(src) else { return };
    let Ok(p) = file.into_presentation() else { return };
    // keep the word count bounded
    if p.generators().len() <= 2 {
        let _ = p.with_max_degree(5).build();
    }
});

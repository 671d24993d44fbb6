#![no_main]

use deformkit::BlockProfile;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|src: &str| {
    if let Ok(p) = src.parse::<BlockProfile>() {
        assert_eq!(p.to_string().parse::<BlockProfile>().expect("display reparses"), p);
    }
});

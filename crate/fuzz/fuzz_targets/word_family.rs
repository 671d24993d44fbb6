#![no_main]

use deformkit::obstruct::WordFamily;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|src: &str| {
    let words: Vec<&str> = src.lines().collect();
    let _ = WordFamily::parse(&["x", "y"], &words);
});

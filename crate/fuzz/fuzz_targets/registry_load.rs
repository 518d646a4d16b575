#![no_main]

use chromgroup::registry::Registry;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(reg) = Registry::read_from(data) {
        let back = Registry::read_from(reg.to_text().as_bytes()).expect("saved registry loads");
        assert_eq!(back, reg);
    }
});

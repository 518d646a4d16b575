#![no_main]

use chromgroup::genfile::{parse_generators, write_generators};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(group) = parse_generators(text) {
        let again = parse_generators(&write_generators(&group)).expect("written file parses");
        assert_eq!(again.order(), group.order());
    }
});

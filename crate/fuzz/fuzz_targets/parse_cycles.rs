#![no_main]

use chromgroup::Permutation;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Some((&degree, rest)) = data.split_first() else {
        return;
    };
    let Ok(text) = std::str::from_utf8(rest) else {
        return;
    };
    if let Ok(p) = Permutation::parse_cycles(text, degree as usize) {
        assert_eq!(
            Permutation::parse_cycles(&p.to_string(), p.degree()).unwrap(),
            p
        );
    }
});

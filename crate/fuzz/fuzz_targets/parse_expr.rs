#![no_main]

use chromgroup::dsl::parse;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    // accepted input must print to a canonical form that parses back to the same tree
    if let Ok(expr) = parse(text) {
        let canon = expr.to_string();
        assert_eq!(parse(&canon).expect("canonical form parses"), expr);
    }
});

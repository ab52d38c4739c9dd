#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(x) = arthur_core::text::parse_halfint(text) {
            let printed = x.to_string();
            let again = arthur_core::text::parse_halfint(&printed)
                .expect("printed half-integer must reparse");
            assert_eq!(again, x, "half-integer round trip must be exact");
        }
    }
});

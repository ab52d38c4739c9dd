#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(g) = arthur_core::text::parse_group(text) {
            let printed = g.to_string();
            let again = arthur_core::text::parse_group(&printed)
                .expect("printed group must reparse");
            assert_eq!(again, g, "group round trip must be exact");
        }
    }
});

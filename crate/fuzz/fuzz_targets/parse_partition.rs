#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(p) = arthur_core::text::parse_partition(text) {
            let printed = p.to_string();
            let again = arthur_core::text::parse_partition(&printed)
                .expect("printed partition must reparse");
            assert_eq!(again, p, "partition round trip must be exact");
        }
    }
});

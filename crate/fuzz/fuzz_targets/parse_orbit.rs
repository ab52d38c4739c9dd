#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(orbit) = arthur_core::text::parse_orbit(text) {
            let printed = orbit.to_string();
            let again = arthur_core::text::parse_orbit(&printed)
                .expect("printed orbit must reparse");
            assert_eq!(again, orbit, "orbit round trip must be exact");
        }
    }
});

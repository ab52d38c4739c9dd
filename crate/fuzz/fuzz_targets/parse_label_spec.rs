#![no_main]

use arthur_core::parameters::SelfDuality;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(rho) = arthur_core::text::parse_label_spec(text) {
            let kind = match rho.duality() {
                SelfDuality::Orthogonal => "O",
                SelfDuality::Symplectic => "S",
                SelfDuality::NotSelfDual(_) => "N",
            };
            let ram = if rho.is_unramified() { "" } else { ":ram" };
            let printed = format!("{}:{}:{}{}", rho.name(), rho.dim(), kind, ram);
            let again = arthur_core::text::parse_label_spec(&printed)
                .expect("printed label spec must reparse");
            assert_eq!(again, rho, "label-spec round trip must be exact");
        }
    }
});

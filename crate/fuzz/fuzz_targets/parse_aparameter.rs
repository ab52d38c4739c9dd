#![no_main]

use std::sync::OnceLock;

use arthur_core::parameters::{Rho, SelfDuality};
use arthur_core::text::LabelRegistry;
use libfuzzer_sys::fuzz_target;

fn registry() -> &'static LabelRegistry {
    static REGISTRY: OnceLock<LabelRegistry> = OnceLock::new();
    REGISTRY.get_or_init(|| {
        let mut reg = LabelRegistry::default();
        reg.register(&Rho::new("eta", 1, SelfDuality::Orthogonal, true).unwrap());
        reg.register(&Rho::new("tau", 2, SelfDuality::NotSelfDual("tau^".into()), false).unwrap());
        reg.register(&Rho::new("sig", 2, SelfDuality::Symplectic, true).unwrap());
        reg.register(&Rho::new("w", 3, SelfDuality::Orthogonal, true).unwrap());
        reg
    })
}

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(psi) = arthur_core::text::parse_aparameter(text, registry()) {
            let printed = psi.to_string();
            let again = arthur_core::text::parse_aparameter(&printed, registry())
                .expect("printed Arthur parameter must reparse");
            assert_eq!(again, psi, "Arthur-parameter round trip must be exact");
        }
    }
});

#![no_main]

use libfuzzer_sys::fuzz_target;
use sedmr::cli::{ConfigFile, Scenario};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(file) = ConfigFile::parse(text) {
        let cfg = file.resolve(Scenario::IdealBatch);
        if cfg.validate().is_ok() {
            // a valid config must survive its own manifest
            let back = ConfigFile::parse(&cfg.to_toml()).expect("manifest parses");
            assert_eq!(back.resolve(Scenario::IdealBatch), cfg);
        }
    }
});

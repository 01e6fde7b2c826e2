#![no_main]

use libfuzzer_sys::fuzz_target;
use sedmr::cli::parse_snapshot_list;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(times) = parse_snapshot_list(text) {
        assert!(times.iter().all(|t| t.is_finite() && *t >= 0.0));
    }
});

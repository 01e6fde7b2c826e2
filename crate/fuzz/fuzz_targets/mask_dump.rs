#![no_main]

use libfuzzer_sys::fuzz_target;
use sedmr::mr::{mask_from_records, parse_mask_dump, GridHierarchy};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(records) = parse_mask_dump(text) {
        let grid = GridHierarchy::new(256, 5, 1.0).unwrap();
        if let Ok(mask) = mask_from_records(&records, &grid) {
            assert!(mask.count() <= records.len());
        }
    }
});

#![no_main]

use libfuzzer_sys::fuzz_target;
use sedmr::mr::{decode, encode, GridHierarchy, Interpolator, MRState};

// Layout: byte 0 picks the hierarchy, the rest are little-endian f64 values
// split into coarse samples and per-level details.
fuzz_target!(|data: &[u8]| {
    let Some((&shape, rest)) = data.split_first() else {
        return;
    };
    let (n0, levels, order) = [(16, 1, 1), (32, 2, 3), (64, 3, 3), (128, 3, 5)][shape as usize % 4];
    let grid = GridHierarchy::new(n0, levels, 1.0).unwrap();
    let interp = Interpolator::new(order).unwrap();
    let mut values = rest
        .chunks_exact(8)
        .map(|c| f64::from_le_bytes(c.try_into().unwrap()))
        .filter(|v| v.is_finite() && v.abs() < 1e6);

    let coarse: Vec<f64> = values.by_ref().take(grid.coarse_points()).collect();
    let details: Vec<Vec<f64>> = (1..=levels)
        .map(|k| values.by_ref().take(grid.intervals(k)).collect())
        .collect();
    let Ok(state) = MRState::from_parts(&grid, coarse, details) else {
        return;
    };
    let Ok(fine) = decode(&state, &grid, &interp) else {
        return;
    };
    assert_eq!(fine.len(), n0 + 1);
    let again = encode(&fine, &grid, &interp).unwrap();
    let back = decode(&again, &grid, &interp).unwrap();
    let scale = fine.iter().fold(1.0f64, |m, v| m.max(v.abs()));
    for (a, b) in back.iter().zip(&fine) {
        assert!((a - b).abs() <= 1e-9 * scale);
    }
});

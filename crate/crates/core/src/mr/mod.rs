//! Point-value multiresolution on nested dyadic grids.

mod adaptive;
mod dump;
mod grid;
mod interp;
mod mask;
mod transform;

pub use adaptive::{adaptive_rhs, AdaptiveRhs};
pub use dump::{format_mask_dump, mask_from_records, parse_mask_dump, MaskRecord, MASK_HEADER};
pub use grid::GridHierarchy;
pub use interp::Interpolator;
pub use mask::{add_safety_points, SignificanceMask};
pub use transform::{compression_rate, decode, encode, truncate, MRState, ThresholdStrategy};

/// Parameters of the multiresolution acceleration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MrConfig {
    pub levels: usize,
    /// Odd interpolation degree `r`.
    pub order: usize,
    pub epsilon: f64,
}

impl Default for MrConfig {
    fn default() -> Self {
        MrConfig {
            levels: 5,
            order: 3,
            epsilon: 1e-4,
        }
    }
}

/// Thresholded mask for the current state: significant details, then
/// safety points and grading. Also returns the transform it was built from.
pub fn significance(
    fine: &[f64],
    hierarchy: &GridHierarchy,
    interp: &Interpolator,
    strategy: &ThresholdStrategy,
) -> crate::Result<(MRState, SignificanceMask, SignificanceMask)> {
    let mr = encode(fine, hierarchy, interp)?;
    let significant = truncate(&mr, strategy).mask;
    let retained = add_safety_points(&significant, interp);
    Ok((mr, significant, retained))
}

/// Details next to which the hybrid scheme evaluates fluxes exactly: the
/// significant ones, closed under grading. Safety points are left out.
pub fn flux_mask(significant: &SignificanceMask, interp: &Interpolator) -> SignificanceMask {
    let mut mask = significant.clone();
    mask.enforce_grading(interp);
    mask
}

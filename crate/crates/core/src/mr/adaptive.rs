use super::grid::GridHierarchy;
use super::interp::Interpolator;
use super::mask::SignificanceMask;
use crate::scheme::Scheme;

/// Right-hand side with the number of interface fluxes evaluated exactly.
#[derive(Debug, Clone, PartialEq)]
pub struct AdaptiveRhs {
    pub values: Vec<f64>,
    pub exact_fluxes: usize,
}

/// Hybrid flux evaluation on `G^0`.
///
/// Interface `j + 1/2` belongs to level `k` when `j = (2m + 1) 2^(k-1)`, i.e.
/// it sits just above the node carrying detail `(k, m)`; it belongs to the
/// coarsest level when `2^L` divides `j`. Coarsest-level fluxes are always
/// exact. Going down the levels, the flux at `(k, m)` is computed exactly when
/// that detail is flagged in `mask` or when its prediction stencil reaches a boundary
/// (it would read the wall-adjacent flux, or extrapolate past the last coarse
/// flux); otherwise it is predicted from the level-`k` fluxes with the same
/// interpolator used for the point values. Every flux is shared by its two
/// neighbouring nodes, so the result is conservative.
pub fn adaptive_rhs(
    scheme: &Scheme,
    u: &[f64],
    mask: &SignificanceMask,
    hierarchy: &GridHierarchy,
    interp: &Interpolator,
    t: f64,
) -> AdaptiveRhs {
    let n0 = hierarchy.n0();
    let levels = hierarchy.levels();
    let s = scheme.slopes(u);
    let q = scheme.problem().q(t);
    let mut fluxes = vec![0.0; n0];
    let mut exact = 0;

    let top = 1usize << levels;
    for m in 0..hierarchy.intervals(levels) {
        fluxes[m * top] = scheme.interface_flux(u, &s, m * top, q);
        exact += 1;
    }
    for k in (1..=levels).rev() {
        let stride = 1usize << k;
        let half = stride / 2;
        let count = hierarchy.intervals(k);
        let width = interp.width();
        let band = interp.half_width();
        for m in 0..count {
            let j = m * stride + half;
            let boundary = m < band || m + band >= count || count < width;
            if boundary || mask.get(k, m) {
                fluxes[j] = scheme.interface_flux(u, &s, j, q);
                exact += 1;
            } else {
                fluxes[j] = interp.predict_by(count, m, |i| fluxes[i * stride]);
            }
        }
    }

    let mut values = vec![0.0; n0 + 1];
    scheme.assemble(u, &fluxes, t, &mut values);
    AdaptiveRhs {
        values,
        exact_fluxes: exact,
    }
}

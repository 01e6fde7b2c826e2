use super::grid::GridHierarchy;
use super::interp::Interpolator;
use super::mask::SignificanceMask;
use crate::{Error, Result};

/// Point-value multiresolution representation: samples on the coarsest grid
/// plus the interpolation errors at the odd points of every finer grid.
#[derive(Debug, Clone, PartialEq)]
pub struct MRState {
    pub coarse: Vec<f64>,
    /// `details[k - 1][j]` is `d_j^k`.
    pub details: Vec<Vec<f64>>,
    pub mask: SignificanceMask,
}

impl MRState {
    /// Assemble from raw parts, checking sizes against the hierarchy.
    pub fn from_parts(
        hierarchy: &GridHierarchy,
        coarse: Vec<f64>,
        details: Vec<Vec<f64>>,
    ) -> Result<Self> {
        if coarse.len() != hierarchy.coarse_points() {
            return Err(Error::SizeMismatch {
                expected: hierarchy.coarse_points(),
                actual: coarse.len(),
            });
        }
        if details.len() != hierarchy.levels() {
            return Err(Error::SizeMismatch {
                expected: hierarchy.levels(),
                actual: details.len(),
            });
        }
        for (l, d) in details.iter().enumerate() {
            if d.len() != hierarchy.intervals(l + 1) {
                return Err(Error::SizeMismatch {
                    expected: hierarchy.intervals(l + 1),
                    actual: d.len(),
                });
            }
        }
        Ok(MRState {
            coarse,
            details,
            mask: SignificanceMask::full(hierarchy),
        })
    }

    pub fn detail(&self, k: usize, j: usize) -> f64 {
        self.details[k - 1][j]
    }
}

/// Level-dependent tolerances `ε_k = 2^(k-L) ε`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThresholdStrategy {
    pub epsilon: f64,
    pub levels: usize,
}

impl ThresholdStrategy {
    pub fn new(epsilon: f64, levels: usize) -> Self {
        ThresholdStrategy { epsilon, levels }
    }

    pub fn level_tolerance(&self, k: usize) -> f64 {
        self.epsilon * 2f64.powi(k as i32 - self.levels as i32)
    }
}

fn check_stencil(hierarchy: &GridHierarchy, interp: &Interpolator) -> Result<()> {
    if hierarchy.intervals(hierarchy.levels()) < interp.width() {
        return Err(Error::Hierarchy(format!(
            "coarsest grid has {} intervals, order-{} prediction needs {}",
            hierarchy.intervals(hierarchy.levels()),
            interp.order(),
            interp.width()
        )));
    }
    Ok(())
}

/// Forward transform of point values on `G^0`.
pub fn encode(fine: &[f64], hierarchy: &GridHierarchy, interp: &Interpolator) -> Result<MRState> {
    let n0 = hierarchy.n0();
    if fine.len() != n0 + 1 {
        return Err(Error::SizeMismatch {
            expected: n0 + 1,
            actual: fine.len(),
        });
    }
    check_stencil(hierarchy, interp)?;
    let levels = hierarchy.levels();
    let mut details = Vec::with_capacity(levels);
    for k in 1..=levels {
        let stride = 1usize << k;
        let coarse_len = hierarchy.intervals(k) + 1;
        let half = stride / 2;
        let d: Vec<f64> = (0..hierarchy.intervals(k))
            .map(|j| {
                let predicted = interp.predict_by(coarse_len, j, |i| fine[i * stride]);
                fine[j * stride + half] - predicted
            })
            .collect();
        details.push(d);
    }
    let stride = 1usize << levels;
    let coarse = (0..hierarchy.coarse_points())
        .map(|i| fine[i * stride])
        .collect();
    Ok(MRState {
        coarse,
        details,
        mask: SignificanceMask::full(hierarchy),
    })
}

/// Inverse transform. Every stored detail is used, so decoding a truncated
/// state reproduces its zeroed coefficients as pure prediction.
pub fn decode(mr: &MRState, hierarchy: &GridHierarchy, interp: &Interpolator) -> Result<Vec<f64>> {
    if mr.coarse.len() != hierarchy.coarse_points() {
        return Err(Error::SizeMismatch {
            expected: hierarchy.coarse_points(),
            actual: mr.coarse.len(),
        });
    }
    if mr.details.len() != hierarchy.levels() {
        return Err(Error::SizeMismatch {
            expected: hierarchy.levels(),
            actual: mr.details.len(),
        });
    }
    check_stencil(hierarchy, interp)?;
    let mut current = mr.coarse.clone();
    for k in (1..=hierarchy.levels()).rev() {
        let d = &mr.details[k - 1];
        if d.len() != hierarchy.intervals(k) {
            return Err(Error::SizeMismatch {
                expected: hierarchy.intervals(k),
                actual: d.len(),
            });
        }
        let mut finer = vec![0.0; 2 * d.len() + 1];
        for (j, v) in current.iter().enumerate() {
            finer[2 * j] = *v;
        }
        for (j, dj) in d.iter().enumerate() {
            finer[2 * j + 1] = interp.predict(&current, j) + dj;
        }
        current = finer;
    }
    Ok(current)
}

/// Mark details with `|d_j^k| >= ε_k` and zero the rest.
pub fn truncate(mr: &MRState, strategy: &ThresholdStrategy) -> MRState {
    let mut out = mr.clone();
    let mut mask_levels = Vec::with_capacity(mr.details.len());
    for (l, d) in out.details.iter_mut().enumerate() {
        let tol = strategy.level_tolerance(l + 1);
        let flags: Vec<bool> = d
            .iter_mut()
            .map(|v| {
                let keep = v.abs() >= tol;
                if !keep {
                    *v = 0.0;
                }
                keep
            })
            .collect();
        mask_levels.push(flags);
    }
    out.mask = SignificanceMask::from_levels(mask_levels);
    out
}

/// `V = (N_0 + 1) / (retained details + coarse points)`.
pub fn compression_rate(mask: &SignificanceMask, hierarchy: &GridHierarchy) -> f64 {
    (hierarchy.n0() + 1) as f64 / (mask.count() + hierarchy.coarse_points()) as f64
}

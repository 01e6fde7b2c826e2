use super::grid::GridHierarchy;
use super::interp::Interpolator;

/// Per-level significance flags; level `k` (1-based) holds `N_k` flags, one
/// per detail `(k, j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignificanceMask {
    levels: Vec<Vec<bool>>,
}

impl SignificanceMask {
    pub fn empty(hierarchy: &GridHierarchy) -> Self {
        Self::filled(hierarchy, false)
    }

    pub fn full(hierarchy: &GridHierarchy) -> Self {
        Self::filled(hierarchy, true)
    }

    fn filled(hierarchy: &GridHierarchy, flag: bool) -> Self {
        SignificanceMask {
            levels: (1..=hierarchy.levels())
                .map(|k| vec![flag; hierarchy.intervals(k)])
                .collect(),
        }
    }

    pub(crate) fn from_levels(levels: Vec<Vec<bool>>) -> Self {
        SignificanceMask { levels }
    }

    pub fn levels(&self) -> usize {
        self.levels.len()
    }

    pub fn level_len(&self, k: usize) -> usize {
        self.levels[k - 1].len()
    }

    #[inline]
    pub fn get(&self, k: usize, j: usize) -> bool {
        self.levels[k - 1][j]
    }

    #[inline]
    pub fn set(&mut self, k: usize, j: usize) {
        self.levels[k - 1][j] = true;
    }

    pub fn count(&self) -> usize {
        self.levels.iter().flatten().filter(|&&b| b).count()
    }

    pub fn count_level(&self, k: usize) -> usize {
        self.levels[k - 1].iter().filter(|&&b| b).count()
    }

    /// Retained `(k, j)` pairs, finest level first.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.levels.iter().enumerate().flat_map(|(l, flags)| {
            flags
                .iter()
                .enumerate()
                .filter(|(_, &b)| b)
                .map(move |(j, _)| (l + 1, j))
        })
    }

    /// Mark the coarser-level details that the prediction stencil of every
    /// retained detail reads from. Sweeps fine to coarse, so one pass closes
    /// the tree.
    pub fn enforce_grading(&mut self, interp: &Interpolator) {
        let top = self.levels.len();
        for k in 1..top {
            let points = self.levels[k - 1].len() + 1;
            if points < interp.width() {
                continue;
            }
            for j in 0..self.levels[k - 1].len() {
                if !self.levels[k - 1][j] {
                    continue;
                }
                let start = interp.stencil_start(points, j);
                for p in start..start + interp.width() {
                    if p % 2 == 1 {
                        self.levels[k][p / 2] = true;
                    }
                }
            }
        }
    }

    /// True when every retained detail has its stencil support retained.
    pub fn is_graded(&self, interp: &Interpolator) -> bool {
        let mut closed = self.clone();
        closed.enforce_grading(interp);
        closed == *self
    }
}

/// Enlarge a thresholded mask: same-level neighbours and the two finer
/// children of every significant detail, then close under grading.
pub fn add_safety_points(mask: &SignificanceMask, interp: &Interpolator) -> SignificanceMask {
    let mut out = mask.clone();
    for (k, j) in mask.iter() {
        if j > 0 {
            out.set(k, j - 1);
        }
        if j + 1 < mask.level_len(k) {
            out.set(k, j + 1);
        }
        if k >= 2 {
            out.set(k - 1, 2 * j);
            out.set(k - 1, 2 * j + 1);
        }
    }
    out.enforce_grading(interp);
    out
}

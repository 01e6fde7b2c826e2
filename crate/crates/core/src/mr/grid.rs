use crate::{Error, Result};

/// Nested dyadic grids `G^k`, `k = 0..=L`, with `N_k = N_0 / 2^k` intervals
/// and spacing `h_k = 2^k h_0`. The points of `G^k` are the even-indexed
/// points of `G^{k-1}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridHierarchy {
    levels: usize,
    n0: usize,
    h0: f64,
    origin: f64,
}

impl GridHierarchy {
    pub fn new(n0: usize, levels: usize, height: f64) -> Result<Self> {
        Self::with_origin(n0, levels, 0.0, height)
    }

    pub fn with_origin(n0: usize, levels: usize, origin: f64, height: f64) -> Result<Self> {
        if levels >= usize::BITS as usize - 1 {
            return Err(Error::Hierarchy(format!("too many levels ({levels})")));
        }
        let block = 1usize << levels;
        if n0 == 0 || n0 % block != 0 {
            return Err(Error::Hierarchy(format!(
                "N0 = {n0} is not a positive multiple of 2^{levels} = {block}"
            )));
        }
        if !(height > 0.0 && height.is_finite()) {
            return Err(Error::Hierarchy("domain length must be positive".into()));
        }
        Ok(GridHierarchy {
            levels,
            n0,
            h0: height / n0 as f64,
            origin,
        })
    }

    pub fn levels(&self) -> usize {
        self.levels
    }

    pub fn n0(&self) -> usize {
        self.n0
    }

    pub fn h0(&self) -> f64 {
        self.h0
    }

    /// Number of intervals `N_k` of grid `k`.
    pub fn intervals(&self, k: usize) -> usize {
        self.n0 >> k
    }

    pub fn spacing(&self, k: usize) -> f64 {
        self.h0 * (1usize << k) as f64
    }

    pub fn x(&self, k: usize, j: usize) -> f64 {
        self.origin + j as f64 * self.spacing(k)
    }

    /// Position of detail `(k, j)`: the odd point `2j + 1` of grid `k - 1`.
    pub fn detail_position(&self, k: usize, j: usize) -> f64 {
        self.x(k - 1, 2 * j + 1)
    }

    pub fn coarse_points(&self) -> usize {
        self.intervals(self.levels) + 1
    }

    /// Level and index of the detail living at fine node `i`, or `None` for
    /// points of the coarsest grid.
    #[inline]
    pub fn owner(&self, i: usize) -> Option<(usize, usize)> {
        if i % (1usize << self.levels) == 0 {
            return None;
        }
        let k = i.trailing_zeros() as usize + 1;
        Some((k, i >> k))
    }
}

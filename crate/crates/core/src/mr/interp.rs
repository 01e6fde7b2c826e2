use crate::{Error, Result};

/// Lagrange prediction of midpoint values from `2s` neighbouring samples
/// (polynomial degree `r = 2s - 1`); stencils are shifted inwards near the
/// ends of the data.
#[derive(Debug, Clone, PartialEq)]
pub struct Interpolator {
    half_width: usize,
    /// `weights[p]` evaluates at stencil coordinate `p + 1/2`.
    weights: Vec<Vec<f64>>,
}

impl Interpolator {
    pub fn new(order: usize) -> Result<Self> {
        if order % 2 == 0 {
            return Err(Error::invalid("order", "interpolation order must be odd"));
        }
        let half_width = (order + 1) / 2;
        let width = 2 * half_width;
        let weights = (0..width)
            .map(|p| lagrange_weights(width, p as f64 + 0.5))
            .collect();
        Ok(Interpolator {
            half_width,
            weights,
        })
    }

    pub fn order(&self) -> usize {
        2 * self.half_width - 1
    }

    pub fn half_width(&self) -> usize {
        self.half_width
    }

    pub fn width(&self) -> usize {
        2 * self.half_width
    }

    /// First index of the stencil used to predict at `j + 1/2` from `len`
    /// samples.
    #[inline]
    pub fn stencil_start(&self, len: usize, j: usize) -> usize {
        let centred = (j + 1).saturating_sub(self.half_width);
        centred.min(len - self.width())
    }

    /// Predicted value at `j + 1/2` from samples `value(0..len)`.
    #[inline]
    pub fn predict_by(&self, len: usize, j: usize, value: impl Fn(usize) -> f64) -> f64 {
        let start = self.stencil_start(len, j);
        let w = &self.weights[j - start];
        w.iter()
            .enumerate()
            .map(|(i, wi)| wi * value(start + i))
            .sum()
    }

    #[inline]
    pub fn predict(&self, values: &[f64], j: usize) -> f64 {
        self.predict_by(values.len(), j, |i| values[i])
    }
}

fn lagrange_weights(width: usize, x: f64) -> Vec<f64> {
    (0..width)
        .map(|i| {
            (0..width)
                .filter(|&m| m != i)
                .map(|m| (x - m as f64) / (i as f64 - m as f64))
                .product()
        })
        .collect()
}

use std::fmt::Debug;

use super::flux::{Flux, FluxModel};

/// Degenerate diffusion: coefficient `a(u) >= 0` and its primitive
/// `A(u) = ∫_0^u a(s) ds`.
pub trait Diffusion: Debug + Send + Sync {
    fn coefficient(&self, u: f64) -> f64;
    fn integrated(&self, u: f64) -> f64;

    /// Largest value of `a` over `[0, u_max]`, used for the time-step bound.
    fn max_coefficient(&self, u_max: f64) -> f64 {
        super::sampled_max(|u| self.coefficient(u), 0.0, u_max, 10_000)
    }

    fn is_zero(&self) -> bool {
        false
    }
}

/// Ideal suspension: `a ≡ 0`.
#[derive(Debug, Clone, Copy, Default)]
pub struct NoDiffusion;

impl Diffusion for NoDiffusion {
    fn coefficient(&self, _u: f64) -> f64 {
        0.0
    }

    fn integrated(&self, _u: f64) -> f64 {
        0.0
    }

    fn max_coefficient(&self, _u_max: f64) -> f64 {
        0.0
    }

    fn is_zero(&self) -> bool {
        true
    }
}

/// Power-law effective solid stress, constant up to the critical
/// concentration `u_c`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CompressionModel {
    /// Stress scale [Pa].
    pub sigma0: f64,
    pub u_c: f64,
    pub exponent_k: f64,
    /// Density difference times gravity, `Δρ g`.
    pub delta_rho_g: f64,
}

impl Default for CompressionModel {
    fn default() -> Self {
        CompressionModel {
            sigma0: 100.0,
            u_c: 0.23,
            exponent_k: 8.0,
            delta_rho_g: 1500.0 * 9.81,
        }
    }
}

impl CompressionModel {
    /// `σ_e'(u)`: zero for `u <= u_c`.
    pub fn sigma_e_prime(&self, u: f64) -> f64 {
        if u <= self.u_c {
            0.0
        } else {
            self.stress_branch(u)
        }
    }

    fn stress_branch(&self, u: f64) -> f64 {
        self.sigma0 * self.exponent_k / self.u_c * (u / self.u_c).powf(self.exponent_k - 1.0)
    }

    /// `a(u) = |f(u)| σ_e'(u) / (Δρ g u)`.
    pub fn diffusion(&self, flux: &FluxModel, u: f64) -> f64 {
        if u <= self.u_c || u <= 0.0 {
            return 0.0;
        }
        flux.value(u).abs() * self.sigma_e_prime(u) / (self.delta_rho_g * u)
    }

    /// Right limit `a(u_c+)`; `a` jumps there.
    fn diffusion_right_limit(&self, flux: &FluxModel) -> f64 {
        let u = self.u_c;
        flux.value(u).abs() * self.stress_branch(u) / (self.delta_rho_g * u)
    }
}

const GAUSS_NODES: [f64; 5] = [
    0.0,
    -0.538_469_310_105_683_1,
    0.538_469_310_105_683_1,
    -0.906_179_845_938_664,
    0.906_179_845_938_664,
];
const GAUSS_WEIGHTS: [f64; 5] = [
    0.568_888_888_888_888_9,
    0.478_628_670_499_366_47,
    0.478_628_670_499_366_47,
    0.236_926_885_056_189_08,
    0.236_926_885_056_189_08,
];

fn gauss5(g: &impl Fn(f64) -> f64, a: f64, b: f64) -> f64 {
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    GAUSS_NODES
        .iter()
        .zip(GAUSS_WEIGHTS)
        .map(|(&x, w)| w * g(mid + half * x))
        .sum::<f64>()
        * half
}

/// Sedimentation-consolidation diffusion with `A(u)` tabulated on
/// `[u_c, u_max]` and read back by monotone cubic Hermite interpolation.
#[derive(Debug, Clone)]
pub struct ConsolidationDiffusion {
    flux: FluxModel,
    compression: CompressionModel,
    lo: f64,
    step: f64,
    values: Vec<f64>,
    slopes: Vec<f64>,
}

impl ConsolidationDiffusion {
    pub const DEFAULT_TABLE_SIZE: usize = 4096;

    pub fn new(flux: FluxModel, compression: CompressionModel) -> Self {
        Self::with_table_size(flux, compression, Self::DEFAULT_TABLE_SIZE)
    }

    pub fn with_table_size(flux: FluxModel, compression: CompressionModel, nodes: usize) -> Self {
        let nodes = nodes.max(2);
        let lo = compression.u_c;
        let hi = flux.u_max.max(lo);
        let step = (hi - lo) / (nodes - 1) as f64;
        let a = |u: f64| compression.diffusion(&flux, u);

        let mut values = vec![0.0; nodes];
        // Each table cell is split into sub-panels; a is smooth on (u_c, u_max].
        const PANELS: usize = 4;
        for i in 1..nodes {
            let left = lo + (i - 1) as f64 * step;
            let width = step / PANELS as f64;
            let cell: f64 = (0..PANELS)
                .map(|p| {
                    let x0 = left + p as f64 * width;
                    gauss5(&a, x0, x0 + width)
                })
                .sum();
            values[i] = values[i - 1] + cell;
        }

        let mut slopes: Vec<f64> = (0..nodes)
            .map(|i| {
                if i == 0 {
                    compression.diffusion_right_limit(&flux)
                } else {
                    a(lo + i as f64 * step)
                }
            })
            .collect();

        // Fritsch-Carlson: keep each cubic piece monotone.
        for i in 0..nodes - 1 {
            let secant = (values[i + 1] - values[i]) / step;
            if secant <= 0.0 {
                slopes[i] = 0.0;
                slopes[i + 1] = 0.0;
                continue;
            }
            let alpha = slopes[i] / secant;
            let beta = slopes[i + 1] / secant;
            let r2 = alpha * alpha + beta * beta;
            if r2 > 9.0 {
                let tau = 3.0 / r2.sqrt();
                slopes[i] = tau * alpha * secant;
                slopes[i + 1] = tau * beta * secant;
            }
        }

        ConsolidationDiffusion {
            flux,
            compression,
            lo,
            step,
            values,
            slopes,
        }
    }

    pub fn compression(&self) -> &CompressionModel {
        &self.compression
    }

    pub fn flux(&self) -> &FluxModel {
        &self.flux
    }
}

impl Diffusion for ConsolidationDiffusion {
    fn coefficient(&self, u: f64) -> f64 {
        self.compression.diffusion(&self.flux, u)
    }

    fn integrated(&self, u: f64) -> f64 {
        if u <= self.lo || self.step <= 0.0 {
            return 0.0;
        }
        let last = self.values.len() - 1;
        let pos = (u - self.lo) / self.step;
        if pos >= last as f64 {
            return self.values[last];
        }
        let i = pos as usize;
        let t = pos - i as f64;
        let t2 = t * t;
        let t3 = t2 * t;
        let h10 = t3 - 2.0 * t2 + t;
        let h01 = -2.0 * t3 + 3.0 * t2;
        let h11 = t3 - t2;
        // increment form, so round-off cannot break monotonicity where the
        // cell increment is far below the magnitude of A
        let (lo, hi) = (self.values[i], self.values[i + 1]);
        let rise = h01 * (hi - lo) + self.step * (h10 * self.slopes[i] + h11 * self.slopes[i + 1]);
        (lo + rise).clamp(lo, hi)
    }
}

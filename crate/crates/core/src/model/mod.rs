//! Continuous problem: flux density, degenerate diffusion and the
//! initial-boundary value problems for batch and continuous settling.

mod diffusion;
mod flux;
mod problem;

pub use diffusion::{CompressionModel, ConsolidationDiffusion, Diffusion, NoDiffusion};
pub use flux::{Flux, FluxModel};
pub use problem::{InitialProfile, ProblemKind, ProblemSpec, TimeFunction};

/// Location of the maximum of `g` over `[lo, hi]`: dense sampling followed by
/// golden-section refinement around the best sample.
pub(crate) fn sampled_max(g: impl Fn(f64) -> f64, lo: f64, hi: f64, samples: usize) -> f64 {
    let step = (hi - lo) / samples as f64;
    let mut best_i = 0;
    let mut best = g(lo);
    for i in 1..=samples {
        let v = g(lo + i as f64 * step);
        if v > best {
            best = v;
            best_i = i;
        }
    }
    let mut a = (lo + (best_i as f64 - 1.0) * step).max(lo);
    let mut b = (lo + (best_i as f64 + 1.0) * step).min(hi);
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let (mut gc, mut gd) = (g(c), g(d));
    for _ in 0..80 {
        if gc > gd {
            b = d;
            d = c;
            gd = gc;
            c = b - inv_phi * (b - a);
            gc = g(c);
        } else {
            a = c;
            c = d;
            gc = gd;
            d = a + inv_phi * (b - a);
            gd = g(d);
        }
    }
    best.max(gc).max(gd)
}

#![allow(dead_code)]

use std::sync::Arc;

use sedmr::model::{
    CompressionModel, Diffusion, Flux, FluxModel, InitialProfile, NoDiffusion, ProblemKind,
    ProblemSpec, TimeFunction,
};
use std::f64::consts::PI;

use sedmr::mr::{decode, encode, truncate, GridHierarchy, Interpolator, ThresholdStrategy};
use sedmr::scheme::{Scheme, SchemeConfig};

/// `f(u) = speed * u`, on `[0, u_max]` with no clamping inside.
#[derive(Debug, Clone, Copy)]
pub struct LinearFlux {
    pub speed: f64,
    pub u_max: f64,
}

impl Flux for LinearFlux {
    fn value(&self, u: f64) -> f64 {
        self.speed * u
    }
    fn derivative(&self, _u: f64) -> f64 {
        self.speed
    }
    fn u_max(&self) -> f64 {
        self.u_max
    }
}

#[derive(Debug, Clone, Copy)]
pub struct ZeroFlux;

impl Flux for ZeroFlux {
    fn value(&self, _u: f64) -> f64 {
        0.0
    }
    fn derivative(&self, _u: f64) -> f64 {
        0.0
    }
    fn u_max(&self) -> f64 {
        1.0
    }
}

/// `A(u) = d u`.
#[derive(Debug, Clone, Copy)]
pub struct LinearDiffusion(pub f64);

impl Diffusion for LinearDiffusion {
    fn coefficient(&self, _u: f64) -> f64 {
        self.0
    }
    fn integrated(&self, u: f64) -> f64 {
        self.0 * u
    }
}

pub fn custom(
    flux: Arc<dyn Flux>,
    diffusion: Arc<dyn Diffusion>,
    kind: ProblemKind,
    initial: InitialProfile,
) -> ProblemSpec {
    ProblemSpec {
        height: 1.0,
        t_end: 1e9,
        flux,
        diffusion,
        bulk_velocity: TimeFunction::Constant(0.0),
        feed_flux: (kind == ProblemKind::ProblemB).then_some(TimeFunction::Constant(0.0)),
        initial,
        kind,
    }
}

/// Periodic pure advection with `f(u) = -u`.
pub fn advection(initial: InitialProfile) -> ProblemSpec {
    custom(
        Arc::new(LinearFlux {
            speed: -1.0,
            u_max: 10.0,
        }),
        Arc::new(NoDiffusion),
        ProblemKind::Periodic,
        initial,
    )
}

pub fn ideal_batch(u0: f64) -> ProblemSpec {
    ProblemSpec::sedimentation(
        1.0,
        3600.0,
        FluxModel::default(),
        None,
        InitialProfile::Constant(u0),
    )
}

pub fn flocculated_batch(u0: f64) -> ProblemSpec {
    ProblemSpec::sedimentation(
        1.0,
        14400.0,
        FluxModel::default(),
        Some(CompressionModel::default()),
        InitialProfile::Constant(u0),
    )
}

pub fn scheme(problem: &ProblemSpec, n: usize, theta: f64, cfl: f64) -> Scheme {
    let config = SchemeConfig::new(theta, cfl, n, problem).unwrap();
    Scheme::new(problem.clone(), config)
}

/// Scheme with a hand-set grid and time step.
pub fn scheme_with(problem: &ProblemSpec, n: usize, theta: f64, dt: f64) -> Scheme {
    let config = SchemeConfig {
        theta,
        cfl: 1.0,
        dx: problem.height / n as f64,
        dt,
    };
    Scheme::new(problem.clone(), config)
}

/// Cumulative trapezoid integrals of `max(f', 0)` and `min(f', 0)` from 0,
/// sampled at `i / cells` for `i = 0..=cells`.
pub fn split_integrals(f: &dyn Flux, cells: usize, panels_per_cell: usize) -> (Vec<f64>, Vec<f64>) {
    let panels = cells * panels_per_cell;
    let h = f.u_max() / panels as f64;
    let (mut plus, mut minus) = (vec![0.0; cells + 1], vec![0.0; cells + 1]);
    let (mut acc_p, mut acc_m) = (0.0, 0.0);
    let mut prev = f.derivative(0.0);
    for i in 1..=panels {
        let d = f.derivative(i as f64 * h);
        acc_p += 0.5 * h * (prev.max(0.0) + d.max(0.0));
        acc_m += 0.5 * h * (prev.min(0.0) + d.min(0.0));
        prev = d;
        if i % panels_per_cell == 0 {
            plus[i / panels_per_cell] = acc_p;
            minus[i / panels_per_cell] = acc_m;
        }
    }
    (plus, minus)
}

pub fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

pub fn sampled(n0: usize, f: impl Fn(f64) -> f64) -> Vec<f64> {
    (0..=n0).map(|j| f(j as f64 / n0 as f64)).collect()
}

/// Bound constant `sup err / ε` over each decade of `ε ∈ [1e-6, 1e-2]`.
pub fn decade_constants(u: &[f64], g: &GridHierarchy, it: &Interpolator) -> Vec<f64> {
    let mr = encode(u, g, it).unwrap();
    (0..4)
        .map(|dec| {
            (0..=8)
                .map(|e| {
                    let eps = 10f64.powf(-6.0 + dec as f64 + e as f64 / 8.0);
                    let t = truncate(&mr, &ThresholdStrategy::new(eps, g.levels()));
                    max_abs_diff(&decode(&t, g, it).unwrap(), u) / eps
                })
                .fold(0.0, f64::max)
        })
        .collect()
}

pub fn square_wave(x: f64) -> f64 {
    let y = x.rem_euclid(1.0);
    if (0.2..0.45).contains(&y) {
        1.0
    } else if (0.6..0.7).contains(&y) {
        0.4 + 2.0 * (y - 0.6)
    } else {
        0.1 + 0.05 * (2.0 * PI * y).sin()
    }
}

/// L1 error of periodic transport of a sine after `t_end`.
pub fn advect_sine(n: usize, t_end: f64) -> f64 {
    let u0 = |x: f64| 1.0 + 0.5 * (2.0 * PI * x).sin();
    let p = advection(InitialProfile::Function(Arc::new(u0)));
    let sc = scheme(&p, n, 1.0, 0.5);
    let steps = (t_end / sc.config().dt).ceil() as usize;
    let dt = t_end / steps as f64;
    let mut s = sc.initial_state();
    for _ in 0..steps {
        s = sc.rk2_step(&s, dt);
    }
    // u_t - u_x = 0: u(x, t) = u0(x + t)
    s.values[..n]
        .iter()
        .enumerate()
        .map(|(j, v)| (v - u0(j as f64 * s.dx + t_end)).abs())
        .sum::<f64>()
        * s.dx
}

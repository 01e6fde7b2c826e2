//! Conservative second-order discretisation on a uniform node grid.
//!
//! Node `j` sits at `x_j = j dx`, `j = 0..=n`. The total flux
//! `Φ = q u + f(u) - ∂_x A(u)` is approximated at interfaces `j + 1/2` by
//!
//! ```text
//! Φ_{j+1/2} = F_EO(u⁺_j, u⁻_{j+1}) + q(t) u⁻_{j+1} - (A(u_{j+1}) - A(u_j)) / dx
//! ```
//!
//! with `u^±_j = u_j ± (dx/2) s_j` and `s_j` the θ-limited slope. Interior
//! nodes get `du_j/dt = -(Φ_{j+1/2} - Φ_{j-1/2}) / dx`; the two boundary
//! nodes own half cells.

mod limiter;
mod numflux;

use std::sync::Arc;

pub use limiter::{limited_slope, minmod3};
pub use numflux::{find_flux_minimizer, EngquistOsher};

use crate::model::{sampled_max, ProblemKind, ProblemSpec};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SchemeConfig {
    /// Limiter parameter in `[0, 2]`.
    pub theta: f64,
    /// Courant number in `(0, 1]`.
    pub cfl: f64,
    pub dx: f64,
    pub dt: f64,
}

impl SchemeConfig {
    /// Configuration for `n` intervals with the largest stable time step.
    pub fn new(theta: f64, cfl: f64, n: usize, problem: &ProblemSpec) -> Result<Self> {
        if !(0.0..=2.0).contains(&theta) {
            return Err(Error::invalid("theta", "must lie in [0, 2]"));
        }
        if !(cfl > 0.0 && cfl <= 1.0) {
            return Err(Error::invalid("cfl", "must lie in (0, 1]"));
        }
        if n < 4 {
            return Err(Error::invalid("n0", "need at least 4 intervals"));
        }
        let dx = problem.height / n as f64;
        if !(dx > 0.0) {
            return Err(Error::invalid("height", "grid spacing must be positive"));
        }
        let dt = compute_dt(cfl, dx, &WaveBounds::of(problem));
        Ok(SchemeConfig { theta, cfl, dx, dt })
    }
}

/// `max |f'|` and `max a` over `[0, u_max]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WaveBounds {
    pub max_speed: f64,
    pub max_diffusion: f64,
}

impl WaveBounds {
    pub fn of(problem: &ProblemSpec) -> Self {
        let u_max = problem.u_max();
        let flux = problem.flux.clone();
        WaveBounds {
            max_speed: sampled_max(|u| flux.derivative(u).abs(), 0.0, u_max, 10_000),
            max_diffusion: problem.diffusion.max_coefficient(u_max),
        }
    }
}

/// `Δt = CFL h / (max|f'| + 2 max a / h)`.
pub fn compute_dt(cfl: f64, h: f64, bounds: &WaveBounds) -> f64 {
    cfl * h / (bounds.max_speed + 2.0 * bounds.max_diffusion / h)
}

/// Point values at time `t`.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    pub values: Vec<f64>,
    pub dx: f64,
    pub t: f64,
}

impl StateVector {
    pub fn new(values: Vec<f64>, dx: f64, t: f64) -> Self {
        StateVector { values, dx, t }
    }

    /// Total solids content: trapezoid end-weights, or the `n` distinct
    /// nodes for a periodic grid.
    pub fn mass(&self, kind: ProblemKind) -> f64 {
        let u = &self.values;
        let n = u.len() - 1;
        match kind {
            ProblemKind::Periodic => u[..n].iter().sum::<f64>() * self.dx,
            _ => (0.5 * (u[0] + u[n]) + u[1..n].iter().sum::<f64>()) * self.dx,
        }
    }

    /// Total variation over consecutive nodes; on a periodic grid node `n`
    /// duplicates node 0 so the wrap difference is included.
    pub fn total_variation(&self) -> f64 {
        self.values.windows(2).map(|w| (w[1] - w[0]).abs()).sum()
    }
}

/// The discrete operator for one problem on one grid.
#[derive(Debug, Clone)]
pub struct Scheme {
    problem: ProblemSpec,
    config: SchemeConfig,
    eo: EngquistOsher,
    n: usize,
}

impl Scheme {
    pub fn new(problem: ProblemSpec, config: SchemeConfig) -> Self {
        let n = (problem.height / config.dx).round() as usize;
        let eo = EngquistOsher::new(Arc::clone(&problem.flux));
        Scheme {
            problem,
            config,
            eo,
            n,
        }
    }

    pub fn problem(&self) -> &ProblemSpec {
        &self.problem
    }

    pub fn config(&self) -> &SchemeConfig {
        &self.config
    }

    pub fn intervals(&self) -> usize {
        self.n
    }

    pub fn numerical_flux(&self) -> &EngquistOsher {
        &self.eo
    }

    pub fn initial_state(&self) -> StateVector {
        StateVector::new(self.problem.initial_values(self.n), self.config.dx, 0.0)
    }

    /// Limited slopes at every node; zero at non-periodic boundary nodes.
    pub fn slopes(&self, u: &[f64]) -> Vec<f64> {
        let n = self.n;
        let (theta, dx) = (self.config.theta, self.config.dx);
        let mut s = vec![0.0; n + 1];
        for j in 1..n {
            s[j] = limited_slope(u[j - 1], u[j], u[j + 1], theta, dx);
        }
        if self.problem.kind == ProblemKind::Periodic {
            s[0] = limited_slope(u[n - 1], u[0], u[1], theta, dx);
            s[n] = s[0];
        }
        s
    }

    /// Total numerical flux `Φ_{j+1/2}` between nodes `j` and `j + 1`.
    #[inline]
    pub fn interface_flux(&self, u: &[f64], s: &[f64], j: usize, q: f64) -> f64 {
        let half = 0.5 * self.config.dx;
        let left = u[j] + half * s[j];
        let right = u[j + 1] - half * s[j + 1];
        let convective = if self.problem.kind == ProblemKind::ProblemA && j + 1 == self.n {
            self.eo.godunov(left, right)
        } else {
            self.eo.flux(left, right)
        };
        let mut total = convective + q * right;
        if !self.problem.diffusion.is_zero() {
            let a = &self.problem.diffusion;
            total -= (a.integrated(u[j + 1]) - a.integrated(u[j])) / self.config.dx;
        }
        total
    }

    /// Divergence of the interface fluxes plus the boundary rows.
    pub fn assemble(&self, u: &[f64], fluxes: &[f64], t: f64, out: &mut [f64]) {
        let n = self.n;
        let dx = self.config.dx;
        for j in 1..n {
            out[j] = -(fluxes[j] - fluxes[j - 1]) / dx;
        }
        match self.problem.kind {
            ProblemKind::Periodic => {
                out[0] = -(fluxes[0] - fluxes[n - 1]) / dx;
                out[n] = out[0];
            }
            ProblemKind::ProblemA | ProblemKind::ProblemB => {
                // f(u) - ∂_x A(u) = 0 at the bottom; only bulk discharge leaves.
                let wall = self.problem.q(t) * u[0];
                out[0] = -(fluxes[0] - wall) / (0.5 * dx);
                out[n] = match self.problem.kind {
                    ProblemKind::ProblemB => -(self.problem.psi(t) - fluxes[n - 1]) / (0.5 * dx),
                    _ => 0.0,
                };
            }
        }
    }

    /// `L(u)` such that forward Euler reads `u^{n+1} = u^n + Δt L(u^n)`.
    pub fn spatial_operator(&self, u: &[f64], t: f64) -> Vec<f64> {
        let s = self.slopes(u);
        let q = self.problem.q(t);
        let fluxes: Vec<f64> = (0..self.n)
            .map(|j| self.interface_flux(u, &s, j, q))
            .collect();
        let mut out = vec![0.0; self.n + 1];
        self.assemble(u, &fluxes, t, &mut out);
        out
    }

    /// Impose boundary values: `u_n = 0` for Problem A, wrap for periodic.
    pub fn apply_boundary(&self, u: &mut [f64]) {
        match self.problem.kind {
            ProblemKind::ProblemA => u[self.n] = 0.0,
            ProblemKind::Periodic => u[self.n] = u[0],
            ProblemKind::ProblemB => {}
        }
    }

    /// Heun step with an arbitrary right-hand side. No clipping: the update
    /// stays in flux form so mass balances to round-off.
    pub fn rk2_step_with<F>(&self, state: &StateVector, dt: f64, mut rhs: F) -> StateVector
    where
        F: FnMut(&[f64], f64) -> Vec<f64>,
    {
        let u = &state.values;
        let k1 = rhs(u, state.t);
        let mut stage: Vec<f64> = u.iter().zip(&k1).map(|(v, k)| v + dt * k).collect();
        self.apply_boundary(&mut stage);
        let k2 = rhs(&stage, state.t + dt);
        let mut next: Vec<f64> = u
            .iter()
            .zip(stage.iter().zip(&k2))
            .map(|(v, (w, k))| 0.5 * v + 0.5 * (w + dt * k))
            .collect();
        self.apply_boundary(&mut next);
        StateVector::new(next, state.dx, state.t + dt)
    }

    pub fn rk2_step(&self, state: &StateVector, dt: f64) -> StateVector {
        self.rk2_step_with(state, dt, |u, t| self.spatial_operator(u, t))
    }
}

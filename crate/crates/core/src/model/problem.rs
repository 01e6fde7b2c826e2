use std::fmt;
use std::sync::Arc;

use super::diffusion::{CompressionModel, ConsolidationDiffusion, Diffusion, NoDiffusion};
use super::flux::{Flux, FluxModel};
use crate::{Error, Result};

/// Boundary structure of the column.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProblemKind {
    /// Batch column: `u(H,t) = 0`, zero solids flux at `x = 0`.
    ProblemA,
    /// Continuous operation: prescribed feed flux `Ψ(t)` at `x = H`.
    ProblemB,
    /// Periodic wrap; used for verification of the interior scheme.
    Periodic,
}

/// Piecewise-constant function of time. `Piecewise` holds `(t_i, v_i)`
/// pairs sorted by `t_i`; the value is `v_i` on `[t_i, t_{i+1})`.
#[derive(Debug, Clone, PartialEq)]
pub enum TimeFunction {
    Constant(f64),
    Piecewise(Vec<(f64, f64)>),
}

impl TimeFunction {
    pub fn eval(&self, t: f64) -> f64 {
        match self {
            TimeFunction::Constant(v) => *v,
            TimeFunction::Piecewise(points) => {
                let mut value = points.first().map_or(0.0, |p| p.1);
                for &(ti, vi) in points {
                    if t >= ti {
                        value = vi;
                    } else {
                        break;
                    }
                }
                value
            }
        }
    }

    fn values(&self) -> Vec<f64> {
        match self {
            TimeFunction::Constant(v) => vec![*v],
            TimeFunction::Piecewise(points) => points.iter().map(|p| p.1).collect(),
        }
    }

    fn is_sorted(&self) -> bool {
        match self {
            TimeFunction::Constant(_) => true,
            TimeFunction::Piecewise(points) => points.windows(2).all(|w| w[0].0 <= w[1].0),
        }
    }
}

/// Initial concentration `u_0(x)`.
#[derive(Clone)]
pub enum InitialProfile {
    Constant(f64),
    /// `(x_i, u_i)` pairs: the value is `u_i` for `x >= x_i`.
    Steps(Vec<(f64, f64)>),
    Function(Arc<dyn Fn(f64) -> f64 + Send + Sync>),
}

impl fmt::Debug for InitialProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InitialProfile::Constant(v) => f.debug_tuple("Constant").field(v).finish(),
            InitialProfile::Steps(s) => f.debug_tuple("Steps").field(s).finish(),
            InitialProfile::Function(_) => f.write_str("Function(..)"),
        }
    }
}

impl InitialProfile {
    pub fn eval(&self, x: f64) -> f64 {
        match self {
            InitialProfile::Constant(v) => *v,
            InitialProfile::Steps(steps) => {
                let mut value = steps.first().map_or(0.0, |p| p.1);
                for &(xi, ui) in steps {
                    if x >= xi {
                        value = ui;
                    }
                }
                value
            }
            InitialProfile::Function(g) => g(x),
        }
    }
}

/// One initial-boundary value problem on `[0, H] × [0, T]`.
#[derive(Debug, Clone)]
pub struct ProblemSpec {
    pub height: f64,
    pub t_end: f64,
    pub flux: Arc<dyn Flux>,
    pub diffusion: Arc<dyn Diffusion>,
    /// Bulk velocity `q(t) <= 0`.
    pub bulk_velocity: TimeFunction,
    /// Feed flux `Ψ(t)`; present exactly for Problem B.
    pub feed_flux: Option<TimeFunction>,
    pub initial: InitialProfile,
    pub kind: ProblemKind,
}

impl ProblemSpec {
    /// Sedimentation problem from the Richardson-Zaki flux and an optional
    /// compression model (absent means ideal suspension).
    pub fn sedimentation(
        height: f64,
        t_end: f64,
        flux: FluxModel,
        compression: Option<CompressionModel>,
        initial: InitialProfile,
    ) -> Self {
        let diffusion: Arc<dyn Diffusion> = match compression {
            Some(c) => Arc::new(ConsolidationDiffusion::new(flux, c)),
            None => Arc::new(NoDiffusion),
        };
        ProblemSpec {
            height,
            t_end,
            flux: Arc::new(flux),
            diffusion,
            bulk_velocity: TimeFunction::Constant(0.0),
            feed_flux: None,
            initial,
            kind: ProblemKind::ProblemA,
        }
    }

    /// Switch to Problem B with the given bulk velocity and feed flux.
    pub fn continuous(mut self, bulk_velocity: TimeFunction, feed_flux: TimeFunction) -> Self {
        self.kind = ProblemKind::ProblemB;
        self.bulk_velocity = bulk_velocity;
        self.feed_flux = Some(feed_flux);
        self
    }

    pub fn u_max(&self) -> f64 {
        self.flux.u_max()
    }

    pub fn q(&self, t: f64) -> f64 {
        self.bulk_velocity.eval(t)
    }

    pub fn psi(&self, t: f64) -> f64 {
        self.feed_flux.as_ref().map_or(0.0, |p| p.eval(t))
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.height > 0.0 && self.height.is_finite()) {
            return Err(Error::invalid("height", "must be positive and finite"));
        }
        if !(self.t_end >= 0.0 && self.t_end.is_finite()) {
            return Err(Error::invalid("t_end", "must be non-negative and finite"));
        }
        if !self.bulk_velocity.is_sorted() {
            return Err(Error::invalid("q", "breakpoints must be sorted in time"));
        }
        if self.bulk_velocity.values().iter().any(|&q| !(q <= 0.0)) {
            return Err(Error::invalid("q", "bulk velocity must satisfy q(t) <= 0"));
        }
        match (self.kind, &self.feed_flux) {
            (ProblemKind::ProblemB, None) => {
                return Err(Error::invalid("psi", "Problem B requires a feed flux"));
            }
            (ProblemKind::ProblemA, Some(_)) => {
                return Err(Error::invalid("psi", "Problem A takes no feed flux"));
            }
            (_, Some(p)) if !p.is_sorted() => {
                return Err(Error::invalid("psi", "breakpoints must be sorted in time"));
            }
            _ => {}
        }
        let u_max = self.u_max();
        for i in 0..=1000 {
            let u = self.initial.eval(self.height * i as f64 / 1000.0);
            if !(0.0..=u_max).contains(&u) {
                return Err(Error::invalid(
                    "u0",
                    format!("initial value {u} outside [0, {u_max}]"),
                ));
            }
        }
        Ok(())
    }

    /// Initial point values on `n + 1` equispaced nodes, with the boundary
    /// node fixed by the problem kind.
    pub fn initial_values(&self, n: usize) -> Vec<f64> {
        let dx = self.height / n as f64;
        let mut u: Vec<f64> = (0..=n).map(|j| self.initial.eval(j as f64 * dx)).collect();
        match self.kind {
            ProblemKind::ProblemA => u[n] = 0.0,
            ProblemKind::Periodic => u[n] = u[0],
            ProblemKind::ProblemB => {}
        }
        u
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn piecewise_time_function() {
        let q = TimeFunction::Piecewise(vec![(0.0, -1.0), (10.0, -2.0)]);
        assert_eq!(q.eval(-1.0), -1.0);
        assert_eq!(q.eval(5.0), -1.0);
        assert_eq!(q.eval(10.0), -2.0);
        assert_eq!(q.eval(1e9), -2.0);
    }

    #[test]
    fn problem_b_requires_feed() {
        let mut p = ProblemSpec::sedimentation(
            1.0,
            10.0,
            FluxModel::default(),
            None,
            InitialProfile::Constant(0.1),
        );
        assert!(p.validate().is_ok());
        p.kind = ProblemKind::ProblemB;
        assert!(p.validate().is_err());
        let p = p.continuous(TimeFunction::Constant(-1e-5), TimeFunction::Constant(-1e-6));
        assert!(p.validate().is_ok());
    }

    #[test]
    fn positive_bulk_velocity_rejected() {
        let p = ProblemSpec::sedimentation(
            1.0,
            10.0,
            FluxModel::default(),
            None,
            InitialProfile::Constant(0.1),
        )
        .continuous(TimeFunction::Constant(1e-5), TimeFunction::Constant(0.0));
        assert!(matches!(p.validate(), Err(Error::Invalid { field, .. }) if field == "q"));
    }

    #[test]
    fn dirichlet_node_in_initial_values() {
        let p = ProblemSpec::sedimentation(
            1.0,
            10.0,
            FluxModel::default(),
            None,
            InitialProfile::Constant(0.08),
        );
        let u = p.initial_values(8);
        assert_eq!(u.len(), 9);
        assert_eq!(u[8], 0.0);
        assert!(u[..8].iter().all(|&v| v == 0.08));
    }
}

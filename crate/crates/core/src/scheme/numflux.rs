use std::sync::Arc;

use crate::model::Flux;
use crate::{Error, Result};

/// Interior minimiser `u*` of a flux that decreases and then increases on
/// `[0, u_max]`, located by bisection on `f'`.
pub fn find_flux_minimizer(flux: &dyn Flux) -> Result<f64> {
    let u_max = flux.u_max();
    const SAMPLES: usize = 10_000;
    let du = u_max / SAMPLES as f64;
    let mut lo = None;
    for i in 0..SAMPLES {
        let a = i as f64 * du;
        let b = (i + 1) as f64 * du;
        if flux.derivative(a) < 0.0 && flux.derivative(b) >= 0.0 {
            lo = Some((a, b));
            break;
        }
    }
    let (mut a, mut b) = lo.ok_or(Error::NoMinimizer { u_max })?;
    for _ in 0..200 {
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            break;
        }
        if flux.derivative(mid) < 0.0 {
            a = mid;
        } else {
            b = mid;
        }
    }
    let (da, db) = (flux.derivative(a).abs(), flux.derivative(b).abs());
    Ok(if da <= db { a } else { b })
}

#[derive(Debug, Clone, Copy)]
enum Splitting {
    /// `f` non-increasing on `[0, u*]` and non-decreasing on `[u*, u_max]`.
    Unimodal {
        u_star: f64,
        f_star: f64,
    },
    Quadrature,
}

/// Engquist-Osher numerical flux
/// `F(a, b) = f(0) + ∫_0^a max(f', 0) + ∫_0^b min(f', 0)`.
#[derive(Debug, Clone)]
pub struct EngquistOsher {
    flux: Arc<dyn Flux>,
    splitting: Splitting,
}

impl EngquistOsher {
    pub fn new(flux: Arc<dyn Flux>) -> Self {
        let u_max = flux.u_max();
        let u_star = match find_flux_minimizer(flux.as_ref()) {
            Ok(u) => Some(u),
            Err(_) => {
                let slopes: Vec<f64> = (0..=1000)
                    .map(|i| flux.derivative(u_max * i as f64 / 1000.0))
                    .collect();
                if slopes.iter().all(|&d| d <= 0.0) {
                    Some(u_max)
                } else if slopes.iter().all(|&d| d >= 0.0) {
                    Some(0.0)
                } else {
                    None
                }
            }
        };
        let splitting = match u_star {
            Some(u_star) => Splitting::Unimodal {
                u_star,
                f_star: flux.value(u_star),
            },
            None => Splitting::Quadrature,
        };
        EngquistOsher { flux, splitting }
    }

    /// Sonic point used by the closed form, if the flux admits one.
    pub fn sonic_point(&self) -> Option<f64> {
        match self.splitting {
            Splitting::Unimodal { u_star, .. } => Some(u_star),
            Splitting::Quadrature => None,
        }
    }

    #[inline]
    pub fn flux(&self, a: f64, b: f64) -> f64 {
        match self.splitting {
            Splitting::Unimodal { u_star, f_star } => {
                self.flux.value(a.max(u_star)) + self.flux.value(b.min(u_star)) - f_star
            }
            Splitting::Quadrature => self.quadrature(a, b),
        }
    }

    /// Godunov flux; used where the right state is an imposed boundary value.
    pub fn godunov(&self, a: f64, b: f64) -> f64 {
        let f = |u: f64| self.flux.value(u);
        match self.splitting {
            Splitting::Unimodal { u_star, .. } => {
                if a <= b {
                    f(u_star.clamp(a, b))
                } else {
                    f(a).max(f(b))
                }
            }
            Splitting::Quadrature => {
                let (lo, hi) = (a.min(b), a.max(b));
                let samples = (0..=2000).map(|i| f(lo + (hi - lo) * i as f64 / 2000.0));
                if a <= b {
                    samples.fold(f64::INFINITY, f64::min)
                } else {
                    samples.fold(f64::NEG_INFINITY, f64::max)
                }
            }
        }
    }

    fn quadrature(&self, a: f64, b: f64) -> f64 {
        let d = |u: f64| self.flux.derivative(u);
        self.flux.value(0.0)
            + simpson(|u| d(u).max(0.0), 0.0, a)
            + simpson(|u| d(u).min(0.0), 0.0, b)
    }
}

fn simpson(g: impl Fn(f64) -> f64, a: f64, b: f64) -> f64 {
    const PANELS: usize = 2000;
    let h = (b - a) / PANELS as f64;
    if h == 0.0 {
        return 0.0;
    }
    let mut sum = g(a) + g(b);
    for i in 1..PANELS {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        sum += w * g(a + i as f64 * h);
    }
    sum * h / 3.0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::FluxModel;

    #[derive(Debug)]
    struct Linear;
    impl Flux for Linear {
        fn value(&self, u: f64) -> f64 {
            if (0.0..=1.0).contains(&u) {
                -u
            } else {
                0.0
            }
        }
        fn derivative(&self, _u: f64) -> f64 {
            -1.0
        }
        fn u_max(&self) -> f64 {
            1.0
        }
    }

    #[derive(Debug)]
    struct Parabola;
    impl Flux for Parabola {
        fn value(&self, u: f64) -> f64 {
            -u * (1.0 - u)
        }
        fn derivative(&self, u: f64) -> f64 {
            2.0 * u - 1.0
        }
        fn u_max(&self) -> f64 {
            1.0
        }
    }

    #[test]
    fn richardson_zaki_minimizer() {
        let f = FluxModel::default();
        let u = find_flux_minimizer(&f).unwrap();
        assert!((u - 1.0 / 13.59).abs() < 1e-12);
        assert!(f.derivative(u).abs() <= 1e-12 * f.v_inf);
    }

    #[test]
    fn parabola_minimizer() {
        let u = find_flux_minimizer(&Parabola).unwrap();
        assert!((u - 0.5).abs() < 1e-14);
    }

    #[test]
    fn monotone_flux_has_no_minimizer() {
        assert!(matches!(
            find_flux_minimizer(&Linear),
            Err(Error::NoMinimizer { .. })
        ));
        // Still usable: the flux is upwinded from the right.
        let eo = EngquistOsher::new(Arc::new(Linear));
        assert_eq!(eo.flux(0.2, 0.7), -0.7);
    }

    #[test]
    fn consistency() {
        let eo = EngquistOsher::new(Arc::new(FluxModel::default()));
        let f = FluxModel::default();
        for i in 0..=1000 {
            let u = i as f64 / 1000.0;
            assert!((eo.flux(u, u) - f.value(u)).abs() < 1e-18);
        }
    }

    #[test]
    fn godunov_into_clear_liquid_is_zero() {
        let eo = EngquistOsher::new(Arc::new(FluxModel::default()));
        for i in 0..=100 {
            assert_eq!(eo.godunov(i as f64 / 100.0, 0.0), 0.0);
        }
    }
}

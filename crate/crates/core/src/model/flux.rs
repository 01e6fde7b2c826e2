use std::fmt::Debug;

/// Scalar flux density `f(u)` with support in `[0, u_max]`.
pub trait Flux: Debug + Send + Sync {
    fn value(&self, u: f64) -> f64;
    fn derivative(&self, u: f64) -> f64;
    fn u_max(&self) -> f64;
}

/// Richardson-Zaki (Kynch batch) flux `f(u) = -v_inf u (1-u)^c`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FluxModel {
    /// Settling velocity of a single particle [m/s].
    pub v_inf: f64,
    pub exponent_c: f64,
    pub u_max: f64,
}

impl Default for FluxModel {
    fn default() -> Self {
        FluxModel {
            v_inf: 6.05e-4,
            exponent_c: 12.59,
            u_max: 1.0,
        }
    }
}

impl FluxModel {
    pub fn new(v_inf: f64, exponent_c: f64, u_max: f64) -> Self {
        FluxModel {
            v_inf,
            exponent_c,
            u_max,
        }
    }

    #[inline]
    fn in_support(&self, u: f64) -> bool {
        (0.0..=self.u_max).contains(&u)
    }
}

impl Flux for FluxModel {
    #[inline]
    fn value(&self, u: f64) -> f64 {
        if !self.in_support(u) {
            return 0.0;
        }
        -self.v_inf * u * (1.0 - u).powf(self.exponent_c)
    }

    #[inline]
    fn derivative(&self, u: f64) -> f64 {
        if !self.in_support(u) {
            return 0.0;
        }
        let c = self.exponent_c;
        -self.v_inf * (1.0 - u).powf(c - 1.0) * ((1.0 - u) - c * u)
    }

    fn u_max(&self) -> f64 {
        self.u_max
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn support_endpoints_vanish() {
        let f = FluxModel::default();
        assert_eq!(f.value(0.0), 0.0);
        assert_eq!(f.value(1.0), 0.0);
        assert_eq!(f.value(-0.1), 0.0);
        assert_eq!(f.value(1.3), 0.0);
    }

    #[test]
    fn value_at_critical_concentration() {
        // -6.05e-4 * 0.23 * 0.77^12.59
        let expected = -6.05e-4 * 0.23 * (12.59 * 0.77f64.ln()).exp();
        let got = FluxModel::default().value(0.23);
        assert!((got - expected).abs() <= 1e-15);
        assert!((got + 5.18e-6).abs() <= 0.01 * 5.18e-6, "{got}");
    }

    #[test]
    fn derivative_endpoints() {
        let f = FluxModel::default();
        assert!((f.derivative(0.0) + 6.05e-4).abs() < 1e-18);
        assert_eq!(f.derivative(1.0), 0.0);
    }

    #[test]
    fn derivative_matches_central_difference() {
        let f = FluxModel::default();
        let delta = 1e-6;
        for i in 1..1000 {
            let u = i as f64 / 1000.0;
            let fd = (f.value(u + delta) - f.value(u - delta)) / (2.0 * delta);
            assert!((f.derivative(u) - fd).abs() <= 1e-6, "u={u}");
        }
    }
}

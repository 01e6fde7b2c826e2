use proptest::prelude::*;
use sedmr::model::{
    CompressionModel, ConsolidationDiffusion, Diffusion, Flux, FluxModel, InitialProfile,
    ProblemKind, ProblemSpec, TimeFunction,
};

fn rz(u: f64) -> f64 {
    -6.05e-4 * u * (1.0 - u).powf(12.59)
}

fn a_oracle(u: f64) -> f64 {
    if u <= 0.23 {
        return 0.0;
    }
    a_right(u)
}

/// Above-critical branch, continued down to `u_c` (the right limit there).
fn a_right(u: f64) -> f64 {
    let sigma = 100.0 * 8.0 / 0.23 * (u / 0.23).powi(7);
    rz(u).abs() * sigma / (14715.0 * u)
}

fn trapezoid(g: impl Fn(f64) -> f64, lo: f64, hi: f64, panels: usize) -> f64 {
    let h = (hi - lo) / panels as f64;
    let inner: f64 = (1..panels).map(|i| g(lo + i as f64 * h)).sum();
    h * (0.5 * (g(lo) + g(hi)) + inner)
}

fn consolidation() -> ConsolidationDiffusion {
    ConsolidationDiffusion::new(FluxModel::default(), CompressionModel::default())
}

#[test]
fn flux_sign_and_support_on_grid() {
    let f = FluxModel::default();
    let a = consolidation();
    for i in 0..=10_000 {
        let u = i as f64 / 10_000.0;
        assert!(f.value(u) <= 0.0);
        assert!(a.coefficient(u) >= 0.0);
        if f.value(u) == 0.0 {
            assert_eq!(a.coefficient(u), 0.0, "supp(a) outside supp(f) at {u}");
        }
    }
    assert_eq!(f.value(-0.1), 0.0);
    assert_eq!(f.value(1.2), 0.0);
}

#[test]
fn flux_matches_closed_form() {
    let f = FluxModel::default();
    for i in 0..=200 {
        let u = i as f64 / 200.0;
        assert!((f.value(u) - rz(u)).abs() <= 1e-18, "u = {u}");
    }
    let v = f.value(0.23);
    assert!((v + 5.18e-6).abs() <= 0.01 * 5.18e-6, "f(0.23) = {v}");
}

#[test]
fn sigma_jump_structure() {
    let c = CompressionModel::default();
    for i in 0..=230 {
        assert_eq!(c.sigma_e_prime(i as f64 / 1000.0), 0.0);
    }
    for i in 231..=1000 {
        assert!(c.sigma_e_prime(i as f64 / 1000.0) > 0.0);
    }
}

#[test]
fn diffusion_composition() {
    let a = consolidation();
    for u in [0.24, 0.3, 0.46, 0.7, 0.95] {
        let expect = a_oracle(u);
        assert!(
            (a.coefficient(u) - expect).abs() <= 1e-12 * expect,
            "u = {u}"
        );
    }
}

#[test]
fn integrated_diffusion_against_quadrature() {
    let a = consolidation();
    let oracle = trapezoid(a_oracle, 0.3, 0.4, 100_000);
    let table = a.integrated(0.4) - a.integrated(0.3);
    assert!(table >= 0.0);
    assert!(
        (table - oracle).abs() <= 1e-8 * oracle,
        "{table} vs {oracle}"
    );

    for u in [0.25, 0.35, 0.5, 0.8, 0.99] {
        let oracle = trapezoid(a_right, 0.23, u, 200_000);
        let got = a.integrated(u);
        assert!(
            (got - oracle).abs() <= 1e-8 * oracle,
            "A({u}) = {got} vs {oracle}"
        );
    }
    assert_eq!(a.integrated(0.23), 0.0);
    assert_eq!(a.integrated(0.0), 0.0);
}

#[test]
fn integrated_diffusion_monotone() {
    let a = consolidation();
    let mut last = 0.0;
    for i in 0..=20_000 {
        let v = a.integrated(i as f64 / 20_000.0);
        assert!(v >= last);
        last = v;
    }
}

#[test]
fn problem_validation() {
    let base = ProblemSpec::sedimentation(
        1.0,
        10.0,
        FluxModel::default(),
        None,
        InitialProfile::Constant(0.1),
    );
    base.validate().unwrap();

    let bad_u0 = ProblemSpec {
        initial: InitialProfile::Constant(1.5),
        ..base.clone()
    };
    assert!(bad_u0.validate().unwrap_err().is_validation());

    let rising = ProblemSpec {
        bulk_velocity: TimeFunction::Constant(1e-5),
        ..base.clone()
    };
    assert!(rising.validate().is_err());

    let missing_psi = ProblemSpec {
        kind: ProblemKind::ProblemB,
        ..base.clone()
    };
    assert!(missing_psi.validate().is_err());

    let with_psi = ProblemSpec {
        feed_flux: Some(TimeFunction::Constant(-1e-6)),
        ..base.clone()
    };
    assert!(with_psi.validate().is_err());

    let b = base.continuous(TimeFunction::Constant(-1e-5), TimeFunction::Constant(-1e-6));
    b.validate().unwrap();
    assert_eq!(b.kind, ProblemKind::ProblemB);
}

#[test]
fn piecewise_time_function() {
    let q = TimeFunction::Piecewise(vec![(0.0, -1.0), (10.0, -2.0), (20.0, -3.0)]);
    assert_eq!(q.eval(0.0), -1.0);
    assert_eq!(q.eval(9.999), -1.0);
    assert_eq!(q.eval(10.0), -2.0);
    assert_eq!(q.eval(1e6), -3.0);
}

proptest! {
    #[test]
    fn derivative_matches_central_difference(u in 1e-3f64..0.999) {
        let f = FluxModel::default();
        let d = 1e-6;
        let fd = (f.value(u + d) - f.value(u - d)) / (2.0 * d);
        prop_assert!((f.derivative(u) - fd).abs() <= 1e-6);
    }

    #[test]
    fn integrated_diffusion_increments_non_negative(u in 0.0f64..1.0, w in 0.0f64..1.0) {
        let a = consolidation();
        let (lo, hi) = if u < w { (u, w) } else { (w, u) };
        prop_assert!(a.integrated(hi) >= a.integrated(lo));
    }
}

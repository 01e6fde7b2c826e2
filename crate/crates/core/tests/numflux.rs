mod common;

use std::sync::Arc;

use common::{split_integrals, LinearFlux};
use proptest::prelude::*;
use sedmr::model::{Flux, FluxModel};
use sedmr::scheme::{find_flux_minimizer, EngquistOsher};

#[test]
fn closed_form_matches_quadrature_on_32_by_32_grid() {
    let f = FluxModel::default();
    let eo = EngquistOsher::new(Arc::new(f));
    // 31 cells of 32 000 panels: about 10^6 panels over [0, 1]
    let (plus, minus) = split_integrals(&f, 31, 32_000);
    let mut worst: f64 = 0.0;
    for i in 0..32 {
        for j in 0..32 {
            let (a, b) = (i as f64 / 31.0, j as f64 / 31.0);
            let oracle = f.value(0.0) + plus[i] + minus[j];
            worst = worst.max((eo.flux(a, b) - oracle).abs());
        }
    }
    assert!(worst <= 1e-9, "max deviation {worst:e}");
}

#[test]
fn minimizer_of_richardson_zaki() {
    let f = FluxModel::default();
    let u = find_flux_minimizer(&f).unwrap();
    assert!((u - 1.0 / 13.59).abs() <= 1e-12);
    assert!(f.derivative(u).abs() <= 1e-12 * f.v_inf);
}

#[test]
fn monotone_flux_has_no_minimizer_but_still_upwinds() {
    let f = LinearFlux {
        speed: -1.0,
        u_max: 1.0,
    };
    assert!(find_flux_minimizer(&f).is_err());
    let eo = EngquistOsher::new(Arc::new(f));
    assert_eq!(eo.flux(0.2, 0.7), -0.7);
    let rising = EngquistOsher::new(Arc::new(LinearFlux {
        speed: 2.0,
        u_max: 1.0,
    }));
    assert_eq!(rising.flux(0.2, 0.7), 0.4);
}

#[test]
fn one_sided_branches() {
    let f = FluxModel::default();
    let eo = EngquistOsher::new(Arc::new(f));
    let star = 1.0 / 13.59;
    for (a, b) in [(0.01, 0.05), (0.07, 0.0)] {
        assert!(a < star && b < star);
        assert!((eo.flux(a, b) - f.value(b)).abs() <= 1e-18);
    }
    for (a, b) in [(0.2, 0.5), (0.9, 0.1)] {
        assert!(a > star && b > star);
        assert!((eo.flux(a, b) - f.value(a)).abs() <= 1e-18);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn consistency(u in 0.0f64..=1.0) {
        let f = FluxModel::default();
        let eo = EngquistOsher::new(Arc::new(f));
        prop_assert!((eo.flux(u, u) - f.value(u)).abs() <= 1e-18);
    }

    #[test]
    fn monotone_in_each_argument(a in 0.0f64..1.0, b in 0.0f64..1.0, d in 0.0f64..0.1) {
        let eo = EngquistOsher::new(Arc::new(FluxModel::default()));
        prop_assert!(eo.flux((a + d).min(1.0), b) >= eo.flux(a, b) - 1e-18);
        prop_assert!(eo.flux(a, (b + d).min(1.0)) <= eo.flux(a, b) + 1e-18);
    }
}

use num_complex::Complex64;
use proptest::prelude::*;

use torwave_core::damping::DampingMode;
use torwave_core::dispersion::{
    build_r, eta_from_c, solve_velocity, velocity_nondissipative, Classification, DispersionInput,
};
use torwave_core::presets::{builtin_presets, XI_FIRST, XI_SECOND};
use torwave_core::special::{bessel_j, bessel_j1_prime};
use torwave_core::sweep::{run_sweep, run_sweep_with_jobs};

fn xi_choice() -> impl Strategy<Value = f64> {
    prop_oneof![Just(0.0), Just(XI_FIRST), Just(XI_SECOND)]
}

fn mode_choice() -> impl Strategy<Value = DampingMode> {
    prop_oneof![
        Just(DampingMode::PaperLiteral),
        Just(DampingMode::DimensionallyConsistent)
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn bessel_recurrence_consistency(xi in 1e-6f64..=50.0) {
        let z = Complex64::new(xi, 0.0);
        let lhs = z * bessel_j1_prime(z).unwrap() - bessel_j(1, z).unwrap();
        let rhs = z * bessel_j(2, z).unwrap();
        prop_assert!((lhs + rhs).norm() <= 1e-10);
    }

    #[test]
    fn undamped_matches_closed_form(
        ka in 0.5f64..10.0,
        lambda in 0.5f64..1.5,
        xi in xi_choice(),
    ) {
        let input = DispersionInput::new(ka, lambda, 0.0, xi);
        let solved = solve_velocity(&input).unwrap().c_over_beta;
        let closed = velocity_nondissipative(&input).unwrap();
        prop_assert!((solved.re - closed).abs() <= 1e-14);
        prop_assert_eq!(solved.im, 0.0);
    }

    #[test]
    fn solutions_satisfy_quadratic_and_decay(
        ka in 0.05f64..20.0,
        lambda in 0.2f64..3.0,
        delta in 0.0f64..5.0,
        xi in 0.0f64..20.0,
        mode in mode_choice(),
    ) {
        let input = DispersionInput::new(ka, lambda, delta, xi).with_mode(mode);
        let s = solve_velocity(&input).unwrap();
        prop_assert!(s.quadratic_residual() <= s.residual_tolerance());
        prop_assert_eq!(s.i.re, 0.0);
        prop_assert!(s.i.im <= 0.0);
        prop_assert!(s.c_over_beta.re >= 0.0);
        prop_assert!(s.c_over_beta.im <= 0.0);
        prop_assert_eq!(s.r, build_r(&input));
        prop_assert!((s.omega - (s.i * s.i + 4.0 * s.r)).norm() <= 1e-14 * s.r.max(1.0));
        prop_assert_eq!(
            s.classification == Classification::Propagating,
            s.omega.re > 0.0
        );
    }

    #[test]
    fn paper_literal_damping_velocity_is_closed_form(
        ka in 0.1f64..10.0,
        lambda in 0.5f64..1.5,
        delta in 0.0f64..0.5,
        xi in xi_choice(),
    ) {
        let s = solve_velocity(&DispersionInput::new(ka, lambda, delta, xi)).unwrap();
        prop_assume!(s.omega.re >= 0.0);
        prop_assert!((s.c_over_beta.re - 0.5 * s.omega.re.sqrt()).abs() <= 1e-15 * s.omega.re.sqrt());
        prop_assert!((s.c_over_beta.im + delta / (2.0 * 2.15 * ka)).abs() <= 1e-15);
    }

    #[test]
    fn damping_velocity_grows_with_delta(
        ka in 0.2f64..10.0,
        lambda in 0.5f64..1.5,
        d1 in 0.0f64..1.0,
        d2 in 0.0f64..1.0,
        xi in xi_choice(),
        mode in mode_choice(),
    ) {
        prop_assume!((d1 - d2).abs() > 1e-9);
        let (lo, hi) = if d1 < d2 { (d1, d2) } else { (d2, d1) };
        let at = |d| solve_velocity(&DispersionInput::new(ka, lambda, d, xi).with_mode(mode)).unwrap();
        // Past critical damping the slow root decays less as damping grows.
        prop_assume!(at(hi).classification == Classification::Propagating);
        prop_assert!(at(hi).c_over_beta.im.abs() > at(lo).c_over_beta.im.abs());
    }

    #[test]
    fn consistent_mode_closes_on_xi(
        ka in 0.2f64..10.0,
        lambda in 0.5f64..1.5,
        delta in 0.0f64..1.0,
        xi in prop_oneof![Just(XI_FIRST), Just(XI_SECOND), 1.0f64..12.0],
    ) {
        let input = DispersionInput::new(ka, lambda, delta, xi)
            .with_mode(DampingMode::DimensionallyConsistent);
        let s = solve_velocity(&input).unwrap();
        prop_assert!((s.eta_a - xi).norm() <= 1e-10, "eta a = {}", s.eta_a);
        prop_assert_eq!(s.eta_a, eta_from_c(&input, s.c_over_beta));
    }
}

#[test]
fn compression_raises_phase_velocity() {
    for xi in [XI_FIRST, XI_SECOND] {
        for i in 0..=50 {
            let ka = 0.5 + 0.05 * i as f64;
            let speeds: Vec<f64> = [0.7, 0.8, 0.9, 1.0]
                .iter()
                .map(|&l| {
                    solve_velocity(&DispersionInput::new(ka, l, 0.0, xi))
                        .unwrap()
                        .c_over_beta
                        .re
                })
                .collect();
            assert!(
                speeds.windows(2).all(|w| w[0] > w[1]),
                "xi={xi} ka={ka}: {speeds:?}"
            );
        }
    }
}

#[test]
fn higher_mode_is_faster() {
    for &lambda in &[0.7, 0.8, 0.9, 1.0] {
        for &delta in &[0.0, 0.1, 0.2] {
            for i in 0..=50 {
                let ka = 0.5 + 0.05 * i as f64;
                let v = |xi| {
                    solve_velocity(&DispersionInput::new(ka, lambda, delta, xi))
                        .unwrap()
                        .c_over_beta
                        .re
                };
                assert!(v(XI_SECOND) > v(XI_FIRST));
            }
        }
    }
}

#[test]
fn sweeps_are_reproducible() {
    for spec in builtin_presets() {
        let first = run_sweep(&spec).unwrap();
        assert_eq!(first, run_sweep(&spec).unwrap());
        assert_eq!(first, run_sweep_with_jobs(&spec, 4).unwrap());
        assert!(first
            .rows
            .iter()
            .all(|r| r.c_over_beta.re.is_finite() && r.c_over_beta.im.is_finite()));
        assert_eq!(first.rows.len(), spec.len());
    }
}

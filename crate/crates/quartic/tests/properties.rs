//! Property suites over randomized couplings and rule orders.

use proptest::prelude::*;
use quartic::numerics::{gauss_hermite, gaussian_expect, SeededStream};
use quartic::{onedim, twodim, zerodim};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hermite_rule_normalized_and_odd_moments_vanish(order in 8usize..60) {
        let (x, w) = gauss_hermite(order);
        let one = gaussian_expect(&x, &w, |_| 1.0);
        prop_assert!((one - 1.0).abs() < 1e-13);
        for k in 0..=5u32 {
            let m = gaussian_expect(&x, &w, |s| s.powi(2 * k as i32 + 1));
            // cancellation of symmetric nodes is relative to the absolute moment
            let mabs = gaussian_expect(&x, &w, |s| s.abs().powi(2 * k as i32 + 1));
            prop_assert!(m.abs() < 1e-13 * (1.0 + mabs), "odd moment 2k+1={} -> {m}", 2*k+1);
        }
        // even moments (2k-1)!! up to the rule's exactness degree
        let m2 = gaussian_expect(&x, &w, |s| s * s);
        let m6 = gaussian_expect(&x, &w, |s| s.powi(6));
        prop_assert!((m2 - 1.0).abs() < 1e-12);
        prop_assert!((m6 - 15.0).abs() < 1e-10);
    }

    #[test]
    fn zerodim_shift_residual(h in 1e-6f64..1e8) {
        let a = zerodim::shift_param(h).unwrap();
        prop_assert!((a * (1.0 + a) - 4.0 * h).abs() <= 1e-10 * (1.0 + 4.0 * h));
        prop_assert!(zerodim::lambda_sq(a) < 1.0);
    }

    #[test]
    fn zerodim_first_correction_negative(h in 1e-4f64..1e4) {
        prop_assert!(zerodim::energy1(h).unwrap() < 0.0);
    }

    #[test]
    fn onedim_shift_residual(h in 1e-6f64..1e9) {
        let p = onedim::solve_shift(h).unwrap();
        let res = p.a * (1.0 + p.a).sqrt() - p.g2;
        prop_assert!(res.abs() <= 1e-10 * (1.0 + p.g2));
    }

    #[test]
    fn onedim_bounds_ordered(h in 1e-4f64..1e6) {
        let b = onedim::delta_e1_bounds(h, onedim::Theta2Mode::StrongConstant).unwrap();
        prop_assert!(b.lower <= b.upper);
        prop_assert!(b.upper <= 0.0);
    }

    #[test]
    fn twodim_energy_negative_auto_mode(exp in -2f64..3f64) {
        let h = 10f64.powf(exp);
        let e = twodim::energy0(h, twodim::RMode::Auto, 1e-8).unwrap();
        prop_assert!(e < 0.0, "h={h}: E0={e}");
    }

    #[test]
    fn mc_determinism(seed in any::<u64>()) {
        let a = twodim::w_squared_montecarlo(10_000, SeededStream::new(seed)).unwrap();
        let b = twodim::w_squared_montecarlo(10_000, SeededStream::new(seed)).unwrap();
        prop_assert_eq!(a.0.to_bits(), b.0.to_bits());
    }
}

#[test]
fn zerodim_monotonicity_over_table_grid() {
    let grid = [0.01, 0.1, 0.2, 0.5, 1.0, 2.0, 5.0, 10.0, 100.0];
    let mut prev_e = f64::NEG_INFINITY;
    let mut prev_g = f64::INFINITY;
    for &h in &grid {
        let e = zerodim::energy0(h).unwrap();
        let g = zerodim::green0(h).unwrap();
        assert!(e > prev_e, "E0 must increase in h");
        assert!(g < prev_g, "G0 must decrease in h");
        prev_e = e;
        prev_g = g;
    }
}

#[test]
fn zerodim_first_correction_close_to_oracle() {
    // corrected energy within 2% of the exact value across the table grid
    for &h in &[0.01, 0.1, 0.2, 0.5, 1.0, 2.0, 5.0, 10.0, 100.0] {
        let approx = zerodim::energy(h).unwrap();
        let exact = quartic::oracles::exact_energy_zero(h, 1e-12).unwrap();
        assert!(
            ((approx - exact) / exact).abs() <= 0.02,
            "h={h}: {approx} vs {exact}"
        );
    }
}

#[test]
fn onedim_table_ordering_enum_le_eosc_le_e0() {
    for &h in &[0.1, 0.5, 1.0, 10.0, 50.0, 100.0] {
        let e0 = onedim::energy0(h).unwrap();
        let eosc = onedim::energy_osc(h).unwrap();
        let enum_ = quartic::oracles::diagonalize_aho(quartic::oracles::HamiltonianSpec {
            h,
            basis_size: 400,
        })
        .unwrap()
        .ground_energy_shifted;
        assert!(enum_ <= eosc + 1e-9 && eosc <= e0 + 1e-9, "h={h}: {enum_} {eosc} {e0}");
    }
}

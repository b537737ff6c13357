//! Weak-coupling identities across all three dimensions:
//! d = 0 series E ≈ 3h − 48h², d = 1 series E0 ≈ (3/8)g² − (11/32)g⁴,
//! and the d = 2 special values built on ζ(3).
//!
//!     cargo run --release --example weak_coupling_checks

use quartic::numerics::{integrate_0_inf, k0, ZETA3};
use quartic::{onedim, oracles, twodim};

fn main() -> quartic::Result<()> {
    println!("d=0: E_exact vs 3h - 48h^2");
    for h in [1e-3, 3e-3, 0.01] {
        let e = oracles::exact_energy_zero(h, 1e-13)?;
        let s = oracles::weak_series_zero(h)?;
        println!("  h = {h:>6}: exact {e:.7}, series {s:.7}, diff {:+.1e}", e - s);
    }

    println!("\nd=1: (E0 - (3/8)g^2)/g^4 -> -11/32 = -0.34375");
    for g2 in [1e-2, 1e-3, 1e-4] {
        let e = onedim::energy0(0.5 * g2)?;
        println!("  g^2 = {g2:>6}: {:.5}", (e - 0.375 * g2) / (g2 * g2));
    }

    println!("\nd=2 special values:");
    let uk04 = integrate_0_inf(|u| if u > 0.0 { u * k0(u).powi(4) } else { 0.0 }, 1e-11);
    println!("  int u K0^4 du      = {uk04:.7}  ((7/8)zeta3 = {:.7})", 0.875 * ZETA3);
    println!(
        "  corr double integral = {:.7}  ((7/4)zeta3 = {:.7})",
        twodim::corr_integral_weak(1e-8),
        1.75 * ZETA3
    );
    println!(
        "  int e^-t F(t)/t dt   = {:.7}  (pi^2/12  = {:.7})",
        twodim::f_integral(1e-11),
        std::f64::consts::PI.powi(2) / 12.0
    );
    Ok(())
}

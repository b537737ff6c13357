//! Bounds on the first correction to the d = 1 ground energy, built from the
//! moments of Θ. Shows both choices of <Θ²> and the strong-coupling window.
//!
//!     cargo run --release --example onedim_bounds

use quartic::onedim::{self, Theta2Mode};

fn main() -> quartic::Result<()> {
    println!("{:>8}  {:>11} {:>11}  {:>11}", "h", "lower", "upper", "E0+upper");
    for h in [0.01, 0.1, 1.0, 10.0, 100.0, 1e4] {
        let b = onedim::delta_e1_bounds(h, Theta2Mode::StrongConstant)?;
        println!(
            "{:>8}  {:>11.6} {:>11.6}  {:>11.6}",
            h,
            b.lower,
            b.upper,
            onedim::energy0(h)? + b.upper
        );
    }

    let h = 1e9f64;
    let g23 = (2.0 * h).cbrt();
    let b = onedim::delta_e1_bounds(h, Theta2Mode::StrongConstant)?;
    println!("\nstrong-coupling constants (h = 1e9, units of g^(2/3)):");
    println!("  upper        = {:.6}", b.upper / g23);
    println!("  lower        = {:.6}   (from <Theta^2> = 1.62407)", b.lower / g23);
    println!("  E0 + upper   = {:.6}", (onedim::energy0(h)? + b.upper) / g23);

    // the closed-form second moment yields a negative variance at large a —
    // carried as a diagnostic, not a usable bracket
    let bad = onedim::delta_e1_bounds(h, Theta2Mode::ClosedForm)?;
    println!(
        "\nclosed-form <Theta^2> at h = 1e9: negative_variance = {} (lower {:.4} > upper {:.4})",
        bad.negative_variance,
        bad.lower / g23,
        bad.upper / g23
    );

    // the mean <Theta> cross-checked against its 2-D integral representation
    for a in [0.1, 1.0, 10.0] {
        let closed = onedim::theta_moments(a).theta_mean;
        let quad = onedim::theta_mean_quadrature(a, 1e-10);
        println!("a = {a:>4}: <Theta> closed {closed:.8}, quadrature {quad:.8}");
    }
    Ok(())
}

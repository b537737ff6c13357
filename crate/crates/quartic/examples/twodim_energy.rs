//! The d = 2 vacuum energy: shift parameter B and 𝓔₀ across the coupling
//! range, with the weak- and strong-coupling limits.
//!
//!     cargo run --release --example twodim_energy

use quartic::twodim::{self, RMode};

fn main() -> quartic::Result<()> {
    println!("{:>8}  {:>12} {:>14}", "h", "B", "E0 [m^2/8pi]");
    for h in [1e-3, 1e-2, 0.1, 1.0, 10.0, 1e3, 1e6, 1e10] {
        let p = twodim::solve_b(h, RMode::Auto, 1e-10)?;
        let e = twodim::energy0(h, RMode::Auto, 1e-10)?;
        println!("{h:>8.0e}  {:>12.6} {:>14.6e}", p.b, e);
    }

    println!("\nweak coupling (cosh mode): E0/h^2 -> -(7/4)zeta(3) = -2.10360");
    for h in [1e-2, 1e-3, 1e-4] {
        let e = twodim::energy0(h, RMode::Cosh, 1e-11)?;
        println!("  h = {h:>5.0e}: E0/h^2 = {:.5}", e / (h * h));
    }

    let h = 1e20;
    let p = twodim::solve_b(h, RMode::Unit, 1e-10)?;
    let e = twodim::energy0(h, RMode::Unit, 1e-10)?;
    println!("\nstrong coupling (h = 1e20, unit mode):");
    println!("  B/ln(h)            = {:.5}", p.b / h.ln());
    println!("  E0                 = {e:.5e}");
    println!("  asymptotic formula = {:.5e}", twodim::asymptotic_energy(h));
    Ok(())
}

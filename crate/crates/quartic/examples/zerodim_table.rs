//! Reproduce the d = 0 reference table: leading-order and first-corrected
//! energy/Green function against the exact quadrature oracle.
//!
//!     cargo run --release --example zerodim_table

use quartic::{oracles, zerodim};

fn main() -> quartic::Result<()> {
    println!(
        "{:>8}  {:>9} {:>9} {:>9}   {:>9} {:>9} {:>9}",
        "h", "E0", "E1", "E_exact", "G0", "G1", "G_exact"
    );
    for h in [0.01, 0.1, 0.2, 0.5, 1.0, 2.0, 5.0, 10.0, 100.0] {
        println!(
            "{:>8}  {:>9.5} {:>9.5} {:>9.5}   {:>9.5} {:>9.5} {:>9.5}",
            h,
            zerodim::energy0(h)?,
            zerodim::energy(h)?,
            oracles::exact_energy_zero(h, 1e-12)?,
            zerodim::green0(h)?,
            zerodim::green(h)?,
            oracles::exact_green_zero(h, 1e-12)?,
        );
    }
    Ok(())
}

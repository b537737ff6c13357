//! The d = 1 anharmonic oscillator: leading-order energy, the two-parameter
//! oscillator-representation estimate, and the diagonalization oracle, plus
//! the strong-coupling coefficients of each.
//!
//!     cargo run --release --example onedim_energies

use quartic::{onedim, oracles};

fn main() -> quartic::Result<()> {
    println!("{:>8}  {:>9} {:>9} {:>9}", "h", "E0", "E_osc", "E_num");
    for h in [0.1, 0.5, 1.0, 10.0, 50.0, 100.0] {
        let spec = oracles::HamiltonianSpec { h, basis_size: 400 };
        println!(
            "{:>8}  {:>9.5} {:>9.5} {:>9.5}",
            h,
            onedim::energy0(h)?,
            onedim::energy_osc(h)?,
            oracles::diagonalize_aho(spec)?.ground_energy_shifted,
        );
    }

    // strong-coupling coefficients of g^{2/3}
    let h = 1e9f64;
    let g23 = (2.0 * h).cbrt();
    println!("\nstrong coupling (h = 1e9):");
    println!("  E0/g^(2/3)    = {:.6}  (closed form {:.6})", onedim::energy0(h)? / g23, onedim::strong_coefficient());
    println!("  E_osc/g^(2/3) = {:.6}", onedim::energy_osc(h)? / g23);
    let dg = oracles::diagonalize_aho(oracles::HamiltonianSpec { h: 1e6, basis_size: 400 })?;
    println!(
        "  E_num/g^(2/3) = {:.6}  (h = 1e6, unshifted ground energy)",
        (dg.ground_energy_shifted + 0.5) / (2e6f64).cbrt()
    );
    Ok(())
}

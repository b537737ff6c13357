//! The fluctuation constant w² two independent ways: deterministic 4-D
//! quadrature and importance-sampled Monte Carlo, against the closed-form
//! reference (7/2)ζ(3) − π²/6.
//!
//!     cargo run --release --example fluctuation_constant

use quartic::numerics::SeededStream;
use quartic::twodim;

fn main() -> quartic::Result<()> {
    let reference = twodim::w2_reference();
    println!("reference  : {reference:.10}");

    let quad = twodim::w_squared_quadrature(1e-3);
    println!("quadrature : {quad:.10}  (dev {:+.2e})", quad - reference);

    let (mc, se) = twodim::w_squared_montecarlo(8_000_000, SeededStream::new(1))?;
    println!(
        "montecarlo : {mc:.10} +- {se:.1e}  ({:+.2} sigma from reference)",
        (mc - reference) / se
    );
    Ok(())
}

//! Saddle-point analysis of the d = 2 shift at strong coupling: the system
//!   B = ln h − ln ξ − C − 1 − 1/ξ − 1/h = sqrt(π/(2(ξ−1)))·e^{ξ+1}
//! has solutions only for ln h ≳ 24; ξ → 1 and B → ln h − C − 2 as h → ∞.
//!
//!     cargo run --release --example twodim_saddle

use quartic::numerics::EULER_GAMMA;
use quartic::twodim;
use quartic::Error;

fn main() -> quartic::Result<()> {
    println!("{:>8}  {:>10} {:>10} {:>12} {:>12}", "h", "B_saddle", "xi", "B_full", "gap");
    for h in [1e8f64, 1e10, 1e11, 1e14, 1e20, 1e30] {
        let full = twodim::solve_b(h, twodim::RMode::Unit, 1e-10)?;
        match twodim::saddle_b(h) {
            Ok((b, xi)) => {
                let gap = b - (h.ln() - EULER_GAMMA - 2.0);
                println!("{h:>8.0e}  {b:>10.4} {xi:>10.5} {:>12.4} {gap:>12.5}", full.b);
            }
            Err(Error::NoSaddle { .. }) => {
                println!("{h:>8.0e}  {:>10} {:>10} {:>12.4}", "none", "none", full.b);
            }
            Err(e) => return Err(e),
        }
    }
    Ok(())
}

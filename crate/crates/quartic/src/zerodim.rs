//! d = 0: the ordinary integral Z(h) = ⟨exp(−h x⁴)⟩ over a standard normal,
//! with "energy" E = −ln Z and "Green function" G = ⟨x² e^{−h x⁴}⟩ / Z.
//!
//! The quartic is linearized by an auxiliary Gaussian variable which is then
//! shifted by `a` chosen so the linear term drops out: a(1+a) = 4h. The
//! leading order is closed-form; the first correction is a one-dimensional
//! Gaussian average of W(s) = −½ ln2(1 + i s λ) with λ² = 2a/(1+2a).

use crate::numerics::{gauss_hermite, gaussian_expect, ln2_complex};
use crate::{Error, Result};
use num_complex::Complex64;

/// Default Gauss–Hermite order; doubling it changes results below 1e-10.
pub const GH_ORDER: usize = 80;

/// Shift parameter: the nonnegative root of a(1+a) = 4h.
pub fn shift_param(h: f64) -> Result<f64> {
    if h < 0.0 || !h.is_finite() {
        return Err(Error::InvalidCoupling(h));
    }
    Ok(0.5 * ((1.0 + 16.0 * h).sqrt() - 1.0))
}

/// λ² = 2a/(1+2a), always below 1.
pub fn lambda_sq(a: f64) -> f64 {
    2.0 * a / (1.0 + 2.0 * a)
}

/// Leading-order energy: E0 = −a/(4(1+a)) + ½ ln(1+2a).
pub fn energy0(h: f64) -> Result<f64> {
    let a = shift_param(h)?;
    Ok(-a / (4.0 * (1.0 + a)) + 0.5 * (1.0 + 2.0 * a).ln())
}

/// First energy correction: ΔE1 = −⟨W(s)⟩ = ¼⟨ln(1+λ²s²)⟩ − λ²/4.
pub fn energy1(h: f64) -> Result<f64> {
    let a = shift_param(h)?;
    let l2 = lambda_sq(a);
    let (x, w) = gauss_hermite(GH_ORDER);
    let avg = gaussian_expect(&x, &w, |s| (1.0 + l2 * s * s).ln());
    Ok(0.25 * avg - 0.25 * l2)
}

/// E0 + ΔE1.
pub fn energy(h: f64) -> Result<f64> {
    Ok(energy0(h)? + energy1(h)?)
}

/// Leading-order Green function: G0 = (1/(1+a)) ⟨1/(1+λ²s²)⟩.
pub fn green0(h: f64) -> Result<f64> {
    let a = shift_param(h)?;
    let l2 = lambda_sq(a);
    let (x, w) = gauss_hermite(GH_ORDER);
    Ok(gaussian_expect(&x, &w, |s| 1.0 / (1.0 + l2 * s * s)) / (1.0 + a))
}

/// First Green-function correction:
/// ΔG1 = (1/(1+a)) [ ⟨W/(1+isλ)⟩ − ⟨1/(1+isλ)⟩⟨W⟩ ],
/// with all averages real by s ↔ −s symmetry.
pub fn green1(h: f64) -> Result<f64> {
    let a = shift_param(h)?;
    let lam = lambda_sq(a).sqrt();
    let (x, w) = gauss_hermite(GH_ORDER);
    let mut w_avg = Complex64::new(0.0, 0.0);
    let mut inv_avg = Complex64::new(0.0, 0.0);
    let mut winv_avg = Complex64::new(0.0, 0.0);
    for (&s, &wt) in x.iter().zip(&w) {
        let z = Complex64::new(1.0, s * lam);
        let ws = -0.5 * ln2_complex(Complex64::new(0.0, s * lam));
        w_avg += wt * ws;
        inv_avg += wt / z;
        winv_avg += wt * ws / z;
    }
    Ok((winv_avg - inv_avg * w_avg).re / (1.0 + a))
}

/// G0 + ΔG1.
pub fn green(h: f64) -> Result<f64> {
    Ok(green0(h)? + green1(h)?)
}

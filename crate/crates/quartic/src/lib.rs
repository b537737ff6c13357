//! Gaussian-shift approximation for quartic anharmonicity in d = 0, 1, 2.
//!
//! The interaction h·q⁴ (h = g²/2) is handled by trading the quartic term
//! for a Gaussian average over an auxiliary field, then shifting that field
//! so the linear term vanishes. The shift parameter `a` solves a simple
//! algebraic equation in each dimension, the leading approximation comes out
//! in closed form, and the first correction is a low-dimensional Gaussian
//! average that we evaluate by quadrature.
//!
//! - [`zerodim`]: the toy integral ⟨exp(−h x⁴)⟩ — energy and Green function,
//!   leading order plus first correction.
//! - [`onedim`]: the quantum-mechanical anharmonic oscillator — ground-state
//!   energy bounds and an oscillator-representation estimate.
//! - [`twodim`]: the two-dimensional field-theory analogue — self-consistent
//!   mass equation, ground energy, saddle point and strong-coupling
//!   asymptotics, plus the weak-coupling constant w².
//! - [`oracles`]: independent brute-force checks (direct quadrature of the
//!   d = 0 integral, Hamiltonian diagonalization in d = 1, perturbation
//!   series) used by the verification suite; these share no code path with
//!   the approximation itself beyond the basic quadrature routines.
//! - [`numerics`]: quadrature, root finding, simplex minimization, special
//!   functions, seeded RNG streams.
//! - [`cli`]: the table/scan/verify machinery behind the `quartic` binary.

pub mod cli;
pub mod numerics;
pub mod onedim;
pub mod oracles;
pub mod refdata;
pub mod twodim;
pub mod zerodim;

use thiserror::Error as ThisError;

#[derive(Debug, ThisError)]
pub enum Error {
    #[error("no sign change on [{a}, {b}]: f(a) = {fa}, f(b) = {fb}")]
    NoBracket { a: f64, b: f64, fa: f64, fb: f64 },
    #[error("invalid coupling h = {0}")]
    InvalidCoupling(f64),
    #[error("saddle-point system has no solution at h = {h} (needs roughly ln h > 24)")]
    NoSaddle { h: f64 },
    #[error("invalid argument: {0}")]
    Invalid(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

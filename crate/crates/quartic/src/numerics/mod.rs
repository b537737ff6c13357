//! Shared numerical machinery: quadrature, orthogonal-polynomial rules,
//! root finding, simplex minimization, special functions, seeded RNG.

pub mod hermite;
pub mod legendre;
pub mod optim;
pub mod quad;
pub mod rng;
pub mod roots;
pub mod special;

pub use hermite::{gauss_hermite, gaussian_expect};
pub use legendre::{gauss_legendre, gauss_legendre_on};
pub use optim::{minimize_2d_multistart, nelder_mead_2d};
pub use quad::{integrate, integrate_0_inf, integrate_log};
pub use rng::SeededStream;
pub use roots::brent;
pub use special::{e1, gamma, k0, ln2_complex, ln2_real, EULER_GAMMA, ZETA3};

//! Special functions needed by the closed forms: Gamma, the exponential
//! integral E1, the modified Bessel function K0, and the twice-subtracted
//! complex logarithm ln2(z) = ln(1+z) - z + z^2/2.

use num_complex::Complex64;

/// Euler–Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Riemann zeta(3).
pub const ZETA3: f64 = 1.202_056_903_159_594_3;

const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEF: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// Gamma function via the Lanczos approximation (g = 7, 9 terms),
/// with the reflection formula for z < 0.5.
pub fn gamma(z: f64) -> f64 {
    if z < 0.5 {
        std::f64::consts::PI / ((std::f64::consts::PI * z).sin() * gamma(1.0 - z))
    } else {
        let z = z - 1.0;
        let mut x = LANCZOS_COEF[0];
        for (i, c) in LANCZOS_COEF.iter().enumerate().skip(1) {
            x += c / (z + i as f64);
        }
        let t = z + LANCZOS_G + 0.5;
        (2.0 * std::f64::consts::PI).sqrt() * t.powf(z + 0.5) * (-t).exp() * x
    }
}

/// Exponential integral E1(x) for x > 0.
/// Power series for x <= 1, modified-Lentz continued fraction for x > 1.
pub fn e1(x: f64) -> f64 {
    assert!(x > 0.0, "e1 requires x > 0, got {x}");
    if x <= 1.0 {
        // E1(x) = -gamma - ln x + sum_{k>=1} (-1)^{k+1} x^k / (k * k!)
        let mut sum = 0.0;
        let mut term = 1.0; // x^k / k!
        for k in 1..=40 {
            term *= x / k as f64;
            let add = if k % 2 == 1 { term } else { -term } / k as f64;
            sum += add;
            if add.abs() < 1e-18 * (1.0 + sum.abs()) {
                break;
            }
        }
        -EULER_GAMMA - x.ln() + sum
    } else {
        // E1(x) = e^{-x} / (x + 1 - 1/(x + 3 - 4/(x + 5 - 9/(...))))
        let tiny = 1e-300;
        let mut b = x + 1.0;
        let mut c = 1.0 / tiny;
        let mut d = 1.0 / b;
        let mut h = d;
        for k in 1..200 {
            let a = -(k as f64) * (k as f64);
            b += 2.0;
            d = 1.0 / (a * d + b);
            c = b + a / c;
            let del = c * d;
            h *= del;
            if (del - 1.0).abs() < 1e-16 {
                break;
            }
        }
        (-x).exp() * h
    }
}

/// Modified Bessel function I0(x) by its power series (used for small x only).
fn bessel_i0_series(x: f64) -> f64 {
    let q = 0.25 * x * x;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..60 {
        term *= q / ((k * k) as f64);
        sum += term;
        if term < 1e-18 * sum {
            break;
        }
    }
    sum
}

/// Modified Bessel function K0(x) for x > 0.
///
/// For x <= 2 the standard series around the log singularity; for x > 2 the
/// integral representation K0(x) = ∫_0^∞ e^{-x cosh t} dt evaluated by the
/// trapezoid rule (the integrand is analytic and decays double-exponentially,
/// so the trapezoid rule converges geometrically). The integral form avoids
/// the cancellation the asymptotic series suffers at intermediate x.
pub fn k0(x: f64) -> f64 {
    assert!(x > 0.0, "k0 requires x > 0, got {x}");
    if x <= 2.0 {
        // K0 = -(ln(x/2) + gamma) I0(x) + sum_{k>=1} (x^2/4)^k / (k!)^2 * H_k
        let q = 0.25 * x * x;
        let mut term = 1.0;
        let mut hk = 0.0;
        let mut sum = 0.0;
        for k in 1..60 {
            term *= q / ((k * k) as f64);
            hk += 1.0 / k as f64;
            let add = term * hk;
            sum += add;
            if add < 1e-18 * (1.0 + sum) {
                break;
            }
        }
        -((0.5 * x).ln() + EULER_GAMMA) * bessel_i0_series(x) + sum
    } else if x >= 700.0 {
        // K0(700) < 1e-305; the integral truncation below would take
        // acosh of an argument < 1, so short-circuit to zero
        0.0
    } else {
        // truncate where x cosh t underflows exp
        let tmax = (745.0 / x + ((745.0 / x) * (745.0 / x) - 1.0).sqrt()).ln();
        let n = 600;
        let h = tmax / n as f64;
        let mut sum = 0.5 * (-x).exp(); // t = 0 endpoint; far endpoint is ~0
        for i in 1..n {
            sum += (-x * (h * i as f64).cosh()).exp();
        }
        sum * h
    }
}

/// Twice-subtracted logarithm ln2(z) = ln(1+z) - z + z^2/2 for complex z.
/// Series for |z| <= 0.5 (where direct evaluation loses all precision),
/// direct form otherwise.
pub fn ln2_complex(z: Complex64) -> Complex64 {
    if z.norm() <= 0.5 {
        // sum_{k>=3} (-1)^{k+1} z^k / k
        let mut pow = z * z * z;
        let mut sum = Complex64::new(0.0, 0.0);
        let mut sign = 1.0;
        for k in 3..80 {
            sum += sign * pow / k as f64;
            if pow.norm() / (k as f64) < 1e-18 * (1.0 + sum.norm()) {
                break;
            }
            pow *= z;
            sign = -sign;
        }
        sum
    } else {
        (Complex64::new(1.0, 0.0) + z).ln() - z + 0.5 * z * z
    }
}

/// Real ln2 for convenience: ln(1+x) - x + x^2/2.
pub fn ln2_real(x: f64) -> f64 {
    if x.abs() <= 0.5 {
        ln2_complex(Complex64::new(x, 0.0)).re
    } else {
        x.ln_1p() - x + 0.5 * x * x
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn gamma_matches_factorials_and_half_integers() {
        assert_relative_eq!(gamma(5.0), 24.0, max_relative = 1e-13);
        assert_relative_eq!(gamma(0.5), std::f64::consts::PI.sqrt(), max_relative = 1e-13);
        assert_relative_eq!(gamma(1.5), 0.5 * std::f64::consts::PI.sqrt(), max_relative = 1e-13);
        // Gamma(-0.5) = -2 sqrt(pi)
        assert_relative_eq!(gamma(-0.5), -2.0 * std::f64::consts::PI.sqrt(), max_relative = 1e-12);
    }

    #[test]
    fn e1_reference_values() {
        // Abramowitz & Stegun 5.1
        assert_relative_eq!(e1(1.0), 0.219_383_934_395_520_3, max_relative = 1e-12);
        assert_relative_eq!(e1(0.5), 0.559_773_594_776_160_2, max_relative = 1e-12);
        assert_relative_eq!(e1(2.0), 0.048_900_510_708_061_12, max_relative = 1e-12);
        assert_relative_eq!(e1(10.0), 4.156_968_929_685_325e-6, max_relative = 1e-11);
    }

    #[test]
    fn e1_continuous_at_switch() {
        let lo = e1(1.0 - 1e-12);
        let hi = e1(1.0 + 1e-12);
        assert!((lo - hi).abs() < 1e-11);
    }

    #[test]
    fn k0_reference_values() {
        assert_relative_eq!(k0(0.1), 2.427_069_024_702_017, max_relative = 1e-12);
        assert_eq!(k0(800.0), 0.0);
        assert_relative_eq!(k0(1.0), 0.421_024_438_240_708_3, max_relative = 1e-12);
        assert_relative_eq!(k0(2.0), 0.113_893_872_749_533_43, max_relative = 1e-9);
        assert_relative_eq!(k0(5.0), 0.003_691_098_334_042_594, max_relative = 1e-9);
        assert_relative_eq!(k0(10.0), 1.778_006_231_616_765e-5, max_relative = 1e-9);
    }

    #[test]
    fn k0_continuous_at_switch() {
        let lo = k0(2.0 - 1e-12);
        let hi = k0(2.0 + 1e-12);
        assert!((lo - hi).abs() < 1e-9 * lo.abs());
    }

    #[test]
    fn ln2_small_argument_is_cubic() {
        let z = Complex64::new(1e-5, 2e-5);
        let v = ln2_complex(z);
        let expect = z * z * z / 3.0;
        assert!((v - expect).norm() < 1e-3 * expect.norm());
    }

    #[test]
    fn ln2_matches_direct_form_at_boundary() {
        for &r in &[0.49, 0.51] {
            let z = Complex64::new(r * 0.6, r * 0.8);
            let direct = (Complex64::new(1.0, 0.0) + z).ln() - z + 0.5 * z * z;
            assert!((ln2_complex(z) - direct).norm() < 1e-14);
        }
    }
}

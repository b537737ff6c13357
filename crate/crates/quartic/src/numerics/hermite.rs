//! Gauss–Hermite quadrature for the probabilists' weight e^{-s^2/2}/√(2π),
//! built by the Golub–Welsch algorithm: the nodes are the eigenvalues of the
//! Jacobi matrix with zero diagonal and off-diagonals √k, the weights are the
//! squared first components of its eigenvectors (the weight integrates to 1).

use nalgebra::DMatrix;

/// Nodes and weights for an `n`-point rule so that
/// ⟨f⟩ = Σ w_i f(s_i) approximates ∫ f(s) e^{-s²/2}/√(2π) ds.
pub fn gauss_hermite(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1);
    let mut jac = DMatrix::<f64>::zeros(n, n);
    for k in 1..n {
        let b = (k as f64).sqrt();
        jac[(k, k - 1)] = b;
        jac[(k - 1, k)] = b;
    }
    let eig = nalgebra::SymmetricEigen::new(jac);
    let mut pairs: Vec<(f64, f64)> = (0..n)
        .map(|i| {
            let v0 = eig.eigenvectors[(0, i)];
            (eig.eigenvalues[i], v0 * v0)
        })
        .collect();
    pairs.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    (
        pairs.iter().map(|p| p.0).collect(),
        pairs.iter().map(|p| p.1).collect(),
    )
}

/// Expectation ⟨f(s)⟩ under the standard normal, with a given rule.
pub fn gaussian_expect<F: Fn(f64) -> f64>(nodes: &[f64], weights: &[f64], f: F) -> f64 {
    nodes
        .iter()
        .zip(weights)
        .map(|(&s, &w)| w * f(s))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn standard_normal_moments() {
        let (x, w) = gauss_hermite(40);
        assert_relative_eq!(gaussian_expect(&x, &w, |_| 1.0), 1.0, max_relative = 1e-13);
        assert!(gaussian_expect(&x, &w, |s| s).abs() < 1e-13);
        assert_relative_eq!(gaussian_expect(&x, &w, |s| s * s), 1.0, max_relative = 1e-13);
        assert_relative_eq!(gaussian_expect(&x, &w, |s| s.powi(4)), 3.0, max_relative = 1e-13);
        assert_relative_eq!(gaussian_expect(&x, &w, |s| s.powi(8)), 105.0, max_relative = 1e-12);
    }

    #[test]
    fn non_polynomial_expectation() {
        // E[e^{ts}] = e^{t^2/2}
        let (x, w) = gauss_hermite(80);
        let t = 1.3;
        assert_relative_eq!(
            gaussian_expect(&x, &w, |s| (t * s).exp()),
            (0.5 * t * t).exp(),
            max_relative = 1e-12
        );
    }

    #[test]
    fn order_doubling_stability() {
        let (x1, w1) = gauss_hermite(80);
        let (x2, w2) = gauss_hermite(160);
        let f = |s: f64| (1.0 + 0.7 * s * s).ln();
        let a = gaussian_expect(&x1, &w1, f);
        let b = gaussian_expect(&x2, &w2, f);
        assert!((a - b).abs() < 1e-8, "order-80 vs 160 differ: {a} vs {b}");
    }
}

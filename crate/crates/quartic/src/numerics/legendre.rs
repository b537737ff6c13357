//! Gauss–Legendre quadrature on a finite interval, built by the Golub–Welsch
//! algorithm: nodes are eigenvalues of the Jacobi matrix with zero diagonal
//! and off-diagonals k/√(4k²−1); weights are 2 × squared first eigenvector
//! components (the weight function 1 integrates to 2 on [−1, 1]).

use nalgebra::DMatrix;

/// Nodes and weights on [−1, 1] for an `n`-point rule.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1);
    let mut jac = DMatrix::<f64>::zeros(n, n);
    for k in 1..n {
        let kf = k as f64;
        let b = kf / (4.0 * kf * kf - 1.0).sqrt();
        jac[(k, k - 1)] = b;
        jac[(k - 1, k)] = b;
    }
    let eig = nalgebra::SymmetricEigen::new(jac);
    let mut pairs: Vec<(f64, f64)> = (0..n)
        .map(|i| {
            let v0 = eig.eigenvectors[(0, i)];
            (eig.eigenvalues[i], 2.0 * v0 * v0)
        })
        .collect();
    pairs.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    (
        pairs.iter().map(|p| p.0).collect(),
        pairs.iter().map(|p| p.1).collect(),
    )
}

/// The same rule mapped to [a, b]: returns (nodes, weights) so that
/// ∫_a^b f ≈ Σ w_i f(x_i).
pub fn gauss_legendre_on(n: usize, a: f64, b: f64) -> (Vec<f64>, Vec<f64>) {
    let (x, w) = gauss_legendre(n);
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    (
        x.iter().map(|&t| c + h * t).collect(),
        w.iter().map(|&wi| wi * h).collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn polynomial_exactness() {
        // an n-point rule is exact through degree 2n−1
        let (x, w) = gauss_legendre(5);
        let quad = |p: i32| -> f64 { x.iter().zip(&w).map(|(&xi, &wi)| wi * xi.powi(p)).sum() };
        for p in 0..=9 {
            let exact = if p % 2 == 0 { 2.0 / (p as f64 + 1.0) } else { 0.0 };
            assert_relative_eq!(quad(p), exact, epsilon = 1e-14);
        }
    }

    #[test]
    fn mapped_interval() {
        let (x, w) = gauss_legendre_on(20, 0.0, std::f64::consts::PI);
        let s: f64 = x.iter().zip(&w).map(|(&xi, &wi)| wi * xi.sin()).sum();
        assert_relative_eq!(s, 2.0, max_relative = 1e-13);
    }
}

use nalgebra::{Matrix3, Matrix4, SymmetricEigen};
use num_complex::Complex64;

use crate::{Error, Result};

/// Values within this distance below zero are treated as rounding noise.
pub(crate) const CLAMP_TOLERANCE: f64 = 1e-10;

pub(crate) fn clamp_nonnegative(value: f64, what: &'static str) -> Result<f64> {
    if value < -CLAMP_TOLERANCE {
        Err(Error::Inconsistent(what, value))
    } else {
        Ok(value.max(0.0))
    }
}

/// Ascending eigenvalues and the matching eigenvectors of a Hermitian 4x4 matrix.
pub(crate) fn hermitian_eigen4(m: &Matrix4<Complex64>) -> ([f64; 4], Matrix4<Complex64>) {
    // Symmetrize first so the solver never sees a rounding-level anti-Hermitian part.
    let h = (m + m.adjoint()) * Complex64::new(0.5, 0.0);
    let eig = SymmetricEigen::new(h);
    let mut order = [0usize, 1, 2, 3];
    order.sort_by(|&i, &j| eig.eigenvalues[i].total_cmp(&eig.eigenvalues[j]));
    let mut values = [0.0; 4];
    let mut vectors = Matrix4::zeros();
    for (dst, &src) in order.iter().enumerate() {
        values[dst] = eig.eigenvalues[src];
        vectors.set_column(dst, &eig.eigenvectors.column(src));
    }
    (values, vectors)
}

/// Ascending eigenvalues of a real symmetric 3x3 matrix.
pub(crate) fn symmetric_eigenvalues3(m: &Matrix3<f64>) -> [f64; 3] {
    let h = (m + m.transpose()) * 0.5;
    let values = SymmetricEigen::new(h).eigenvalues;
    let mut out = [values[0], values[1], values[2]];
    out.sort_by(f64::total_cmp);
    out
}

/// Smallest eigenvalue of a real symmetric 2x2 matrix `[[p, q], [q, r]]`
/// and the angle of its eigenvector.
pub(crate) fn symmetric_min2(p: f64, q: f64, r: f64) -> (f64, f64) {
    let mean = 0.5 * (p + r);
    let half_gap = (0.25 * (p - r) * (p - r) + q * q).sqrt();
    // The minimizing direction of p cos^2 + 2q cos sin + r sin^2.
    let angle = 0.5 * (-2.0 * q).atan2(r - p);
    (mean - half_gap, angle)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clamp_policy() {
        assert_eq!(clamp_nonnegative(-1e-12, "x"), Ok(0.0));
        assert_eq!(clamp_nonnegative(0.25, "x"), Ok(0.25));
        assert!(matches!(
            clamp_nonnegative(-1e-6, "x"),
            Err(Error::Inconsistent("x", _))
        ));
    }

    #[test]
    fn min2_matches_brute_force() {
        let (p, q, r) = (1.3, -0.4, 0.2);
        let (min, angle) = symmetric_min2(p, q, r);
        let f =
            |th: f64| p * th.cos().powi(2) + 2.0 * q * th.cos() * th.sin() + r * th.sin().powi(2);
        assert!((f(angle) - min).abs() < 1e-14);
        for k in 0..1000 {
            let th = k as f64 * core::f64::consts::PI / 1000.0;
            assert!(f(th) >= min - 1e-14);
        }
    }
}

//! Roots of low-degree complex polynomials via companion-matrix eigenvalues.

use alloc::vec::Vec;

use nalgebra::{DMatrix, Schur};
use num_complex::Complex64;

/// Leading coefficients below this fraction of the largest are dropped.
const TRIM_RELATIVE: f64 = 1e-14;

/// Evaluates `sum coeffs[k] x^k` and its derivative.
pub(crate) fn eval(coeffs: &[Complex64], x: Complex64) -> (Complex64, Complex64) {
    let mut value = Complex64::new(0.0, 0.0);
    let mut deriv = Complex64::new(0.0, 0.0);
    for c in coeffs.iter().rev() {
        deriv = deriv * x + value;
        value = value * x + c;
    }
    (value, deriv)
}

/// Finite roots of `sum coeffs[k] x^k`, ascending coefficient order.
///
/// Near-zero leading coefficients lower the degree, so roots that escape to
/// infinity are not reported. Each eigenvalue is polished with a few Newton
/// steps that are only kept when they reduce the residual.
pub(crate) fn polynomial_roots(coeffs: &[Complex64]) -> Vec<Complex64> {
    let scale = coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
    if scale == 0.0 {
        return Vec::new();
    }
    let mut degree = coeffs.len() - 1;
    while degree > 0 && coeffs[degree].norm() <= TRIM_RELATIVE * scale {
        degree -= 1;
    }
    let coeffs = &coeffs[..=degree];
    let roots: Vec<Complex64> = match degree {
        0 => Vec::new(),
        1 => alloc::vec![-coeffs[0] / coeffs[1]],
        _ => {
            let lead = coeffs[degree];
            let mut companion = DMatrix::<Complex64>::zeros(degree, degree);
            for i in 1..degree {
                companion[(i, i - 1)] = Complex64::new(1.0, 0.0);
            }
            for i in 0..degree {
                companion[(i, degree - 1)] = -coeffs[i] / lead;
            }
            let schur = Schur::try_new(companion.clone(), 1e-15, 10_000)
                .unwrap_or_else(|| Schur::new(companion));
            let (_, t) = schur.unpack();
            (0..degree).map(|i| t[(i, i)]).collect()
        }
    };
    roots.into_iter().map(|x| polish(coeffs, x)).collect()
}

fn polish(coeffs: &[Complex64], mut x: Complex64) -> Complex64 {
    let mut best = eval(coeffs, x).0.norm();
    for _ in 0..4 {
        let (value, deriv) = eval(coeffs, x);
        if deriv.norm() == 0.0 {
            break;
        }
        let candidate = x - value / deriv;
        let residual = eval(coeffs, candidate).0.norm();
        if residual < best {
            best = residual;
            x = candidate;
        } else {
            break;
        }
    }
    x
}

/// The three complex cube roots of `z`.
pub(crate) fn cube_roots(z: Complex64) -> [Complex64; 3] {
    let modulus = z.norm().cbrt();
    let arg = z.arg() / 3.0;
    let step = 2.0 * core::f64::consts::PI / 3.0;
    [0, 1, 2].map(|k| Complex64::from_polar(modulus, arg + step * k as f64))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn cube_roots_of_unity() {
        // -1 + w^3 = 0
        let roots = polynomial_roots(&[c(-1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]);
        assert_eq!(roots.len(), 3);
        for r in &roots {
            assert!((r * r * r - 1.0).norm() < 1e-14);
        }
        let mut args: Vec<f64> = roots.iter().map(|r| r.arg()).collect();
        args.sort_by(f64::total_cmp);
        let third = 2.0 * core::f64::consts::PI / 3.0;
        assert!(
            (args[0] + third).abs() < 1e-12
                && args[1].abs() < 1e-12
                && (args[2] - third).abs() < 1e-12
        );
    }

    #[test]
    fn complex_cubic_against_expansion() {
        let want = [c(0.3, -1.2), c(-2.0, 0.5), c(0.01, 0.02)];
        // (x - w0)(x - w1)(x - w2)
        let e1 = want[0] + want[1] + want[2];
        let e2 = want[0] * want[1] + want[0] * want[2] + want[1] * want[2];
        let e3 = want[0] * want[1] * want[2];
        let got = polynomial_roots(&[-e3, e2, -e1, c(1.0, 0.0)]);
        for w in want {
            let nearest = got
                .iter()
                .map(|g| (g - w).norm())
                .fold(f64::INFINITY, f64::min);
            assert!(nearest < 1e-13, "{w} {nearest}");
        }
    }

    #[test]
    fn degree_drops_with_vanishing_leading_term() {
        let roots = polynomial_roots(&[c(2.0, 0.0), c(-1.0, 0.0), c(0.0, 0.0), c(1e-20, 0.0)]);
        assert_eq!(roots, alloc::vec![c(2.0, 0.0)]);
        assert!(polynomial_roots(&[c(1.0, 0.0), c(0.0, 0.0)]).is_empty());
    }

    #[test]
    fn cube_roots_cube_back() {
        let z = c(-0.4, 0.9);
        for r in cube_roots(z) {
            assert!((r * r * r - z).norm() < 1e-14);
        }
    }
}

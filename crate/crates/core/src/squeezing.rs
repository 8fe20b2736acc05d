//! Spin squeezing of the collective pseudo-spin `S = (σ₁ + σ₂ + σ₃)/2`.
//!
//! `ξ = (4/3) min_θ Var(S·n⊥(θ))` where `n⊥` sweeps the plane orthogonal to
//! `<S>`. The closed route uses the mean-spin frame and the trigonometric
//! coefficients `A, B, C` of the transverse variance; the direct route builds
//! the full covariance matrix of `S` from the eight amplitudes.
//!
//! The transverse direction is `n⊥(θ) = ŷ cos θ + x̂ sin θ`, i.e. `θ` is
//! measured from `ŷ`. With this convention the closed coefficients reproduce
//! the direct variance at every angle.

use nalgebra::{Matrix3, Vector3};
use num_complex::Complex64;

use crate::linalg::{symmetric_eigenvalues3, symmetric_min2};
use crate::measures::ParamPoint;
use crate::state::{to_qubit_expansion, ThreeBosonState};
use crate::{Error, Result, DEFAULT_EPSILON};

const FRAC_4_3: f64 = 4.0 / 3.0;
const ZERO: Complex64 = Complex64::new(0.0, 0.0);

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct SpinVector {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl SpinVector {
    pub fn norm(&self) -> f64 {
        (self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }

    fn vector(&self) -> Vector3<f64> {
        Vector3::new(self.x, self.y, self.z)
    }
}

/// `<S> = (3rs cos φ, 3rs sin φ, (3/2)(r² + s² - t²))`.
pub fn mean_spin(p: &ParamPoint) -> Result<SpinVector> {
    p.require_normalized()?;
    let g = p.r * p.r + p.s * p.s - p.t * p.t;
    Ok(SpinVector {
        x: 3.0 * p.r * p.s * p.phi.cos(),
        y: 3.0 * p.r * p.s * p.phi.sin(),
        z: 1.5 * g,
    })
}

/// First and symmetrized second moments of `S`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpinMoments {
    pub mean: SpinVector,
    /// `<S_i S_j + S_j S_i>/2`.
    pub second: Matrix3<f64>,
}

impl SpinMoments {
    pub fn covariance(&self) -> Matrix3<f64> {
        let m = self.mean.vector();
        self.second - m * m.transpose()
    }
}

/// `S_k |psi>` for k = x, y, z on the eight-amplitude expansion.
fn spin_images(q: &[Complex64; 8]) -> [[Complex64; 8]; 3] {
    let i = Complex64::new(0.0, 1.0);
    let mut out = [[ZERO; 8]; 3];
    for (idx, amp) in q.iter().enumerate() {
        for particle in 0..3 {
            let mask = 1 << (2 - particle);
            let flipped = idx ^ mask;
            let up = idx & mask == 0;
            // σx|0> = |1>, σy|0> = i|1>, σy|1> = -i|0>, σz|0> = |0>
            out[0][flipped] += amp * 0.5;
            out[1][flipped] += amp * if up { i * 0.5 } else { -i * 0.5 };
            out[2][idx] += amp * if up { 0.5 } else { -0.5 };
        }
    }
    out
}

pub fn spin_moments(state: &ThreeBosonState) -> SpinMoments {
    let q = to_qubit_expansion(state).amplitudes;
    let images = spin_images(&q);
    let dot = |u: &[Complex64; 8], v: &[Complex64; 8]| -> f64 {
        u.iter()
            .zip(v)
            .map(|(x, y)| x.conj() * y)
            .sum::<Complex64>()
            .re
    };
    let mean = SpinVector {
        x: dot(&q, &images[0]),
        y: dot(&q, &images[1]),
        z: dot(&q, &images[2]),
    };
    let mut second = Matrix3::zeros();
    for j in 0..3 {
        for k in 0..3 {
            second[(j, k)] = dot(&images[j], &images[k]);
        }
    }
    SpinMoments { mean, second }
}

/// `<S>` computed directly from the amplitudes.
pub fn mean_spin_direct(state: &ThreeBosonState) -> SpinVector {
    spin_moments(state).mean
}

/// Right-handed orthonormal triad with `zhat` along `<S>`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Frame {
    pub xhat: [f64; 3],
    pub yhat: [f64; 3],
    pub zhat: [f64; 3],
    pub degenerate: bool,
}

impl Frame {
    fn standard(degenerate: bool) -> Frame {
        Frame {
            xhat: [1.0, 0.0, 0.0],
            yhat: [0.0, 1.0, 0.0],
            zhat: [0.0, 0.0, 1.0],
            degenerate,
        }
    }

    /// Frame for an arbitrary mean spin: `x̂ = (sin φ_m, -cos φ_m, 0)` with
    /// `φ_m` the azimuth of `<S>`, and `ŷ = ẑ × x̂`.
    pub fn from_mean_spin(mean: &SpinVector, epsilon: f64) -> Frame {
        let norm = mean.norm();
        if norm <= epsilon {
            return Frame::standard(true);
        }
        let z = mean.vector() / norm;
        let azimuth = mean.y.atan2(mean.x);
        let x = Vector3::new(azimuth.sin(), -azimuth.cos(), 0.0);
        let y = z.cross(&x);
        Frame {
            xhat: x.into(),
            yhat: y.into(),
            zhat: z.into(),
            degenerate: false,
        }
    }

    /// `n⊥(θ) = ŷ cos θ + x̂ sin θ`.
    pub fn transverse(&self, theta: f64) -> [f64; 3] {
        let (s, c) = theta.sin_cos();
        [0, 1, 2].map(|k| self.yhat[k] * c + self.xhat[k] * s)
    }

    /// Largest deviation from orthonormality, and `|x̂ × ŷ - ẑ|`.
    pub fn orthonormality_defect(&self) -> (f64, f64) {
        let (x, y, z) = (
            Vector3::from(self.xhat),
            Vector3::from(self.yhat),
            Vector3::from(self.zhat),
        );
        let ortho = [
            x.dot(&y).abs(),
            x.dot(&z).abs(),
            y.dot(&z).abs(),
            (x.norm() - 1.0).abs(),
            (y.norm() - 1.0).abs(),
            (z.norm() - 1.0).abs(),
        ]
        .into_iter()
        .fold(0.0, f64::max);
        (ortho, (x.cross(&y) - z).norm())
    }
}

/// Mean-spin frame from the standard-form parameters:
/// `x̂ = (sin φ, -cos φ, 0)`, `ŷ = u (g cos φ, g sin φ, -2rs)`,
/// `ẑ = u (2rs cos φ, 2rs sin φ, g)` with `g = r² + s² - t²`.
pub fn build_frame(p: &ParamPoint, epsilon: f64) -> Result<Frame> {
    let mean = mean_spin(p)?;
    if mean.norm() <= epsilon {
        return Ok(Frame::standard(true));
    }
    let g = p.r * p.r + p.s * p.s - p.t * p.t;
    let rs2 = 2.0 * p.r * p.s;
    let u = 1.0 / (g * g + rs2 * rs2).sqrt();
    let (sin, cos) = p.phi.sin_cos();
    Ok(Frame {
        xhat: [sin, -cos, 0.0],
        yhat: [u * g * cos, u * g * sin, -u * rs2],
        zhat: [u * rs2 * cos, u * rs2 * sin, u * g],
        degenerate: false,
    })
}

/// Trigonometric coefficients of `(4/3) Var(S·n⊥) = A cos²θ + B cos θ sin θ + C`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct AbcCoefficients {
    pub a: f64,
    pub b: f64,
    pub c_coef: f64,
    pub u: f64,
}

///
/// The printed polynomials are evaluated in the regrouped form
/// `A = u²[8st cos 3φ (g² + 2r²s²) - 8r²s²(r² + 5s² - 3t²)]`,
/// `B = 8stgu sin 3φ`, which is algebraically identical but keeps full
/// precision as `1/u = sqrt(g² + 4r²s²)` approaches zero.
pub fn abc_coefficients(p: &ParamPoint) -> Result<AbcCoefficients> {
    if mean_spin(p)?.norm() <= DEFAULT_EPSILON {
        return Err(Error::DegenerateFrame);
    }
    let (r, s, t) = (p.r, p.s, p.t);
    let g = r * r + s * s - t * t;
    let rs2 = r * r * s * s;
    let inv_u2 = g * g + 4.0 * rs2;
    let u = 1.0 / inv_u2.sqrt();
    let (sin3, cos3) = (3.0 * p.phi).sin_cos();
    let st = s * t;
    let a = (8.0 * st * cos3 * (g * g + 2.0 * rs2)
        - 8.0 * rs2 * (r * r + 5.0 * s * s - 3.0 * t * t))
        / inv_u2;
    let b = 8.0 * st * g * u * sin3;
    let cos = p.phi.cos();
    let c_coef = 1.0 + 4.0 * s * s + 12.0 * st * cos - 16.0 * st * cos * cos * cos;
    Ok(AbcCoefficients { a, b, c_coef, u })
}

/// `A cos²θ + B cos θ sin θ + C`.
pub fn variance_at_theta(p: &ParamPoint, theta: f64) -> Result<f64> {
    let abc = abc_coefficients(p)?;
    let (s, c) = theta.sin_cos();
    Ok(abc.a * c * c + abc.b * c * s + abc.c_coef)
}

/// `(4/3) Var(S·n⊥(θ))` from the amplitudes, in the frame of [`build_frame`].
pub fn variance_at_theta_direct(p: &ParamPoint, theta: f64) -> Result<f64> {
    let frame = build_frame(p, DEFAULT_EPSILON)?;
    if frame.degenerate {
        return Err(Error::DegenerateFrame);
    }
    let cov = spin_moments(&p.state()?).covariance();
    let n = Vector3::from(frame.transverse(theta));
    Ok(FRAC_4_3 * (n.transpose() * cov * n)[(0, 0)])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub enum SqueezingMethod {
    ClosedForm,
    SpecialCase,
    DirectOracle,
    FullSphereFallback,
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "camelCase"))]
pub struct SqueezingResult {
    pub xi: f64,
    /// Minimizing angle in `[0, π)`.
    pub theta_star: f64,
    pub mean_spin: SpinVector,
    pub frame: Frame,
    pub method: SqueezingMethod,
    pub degenerate: bool,
}

fn to_half_turn(theta: f64) -> f64 {
    let t = num_traits::Euclid::rem_euclid(&theta, &core::f64::consts::PI);
    if t >= core::f64::consts::PI {
        0.0
    } else {
        t
    }
}

/// `ξ = A/2 + C - sqrt(A² + B²)/2` at `θ* = atan2(-B, -A)/2`; falls back to
/// [`full_sphere_min`] when the mean spin vanishes.
pub fn xi_closed(p: &ParamPoint) -> Result<SqueezingResult> {
    let mean = mean_spin(p)?;
    if mean.norm() <= DEFAULT_EPSILON {
        let mut out = full_sphere_min(&p.state()?)?;
        out.mean_spin = mean;
        return Ok(out);
    }
    let abc = abc_coefficients(p)?;
    let xi = abc.a / 2.0 + abc.c_coef - (abc.a * abc.a + abc.b * abc.b).sqrt() / 2.0;
    Ok(SqueezingResult {
        xi,
        theta_star: to_half_turn(0.5 * (-abc.b).atan2(-abc.a)),
        mean_spin: mean,
        frame: build_frame(p, DEFAULT_EPSILON)?,
        method: SqueezingMethod::ClosedForm,
        degenerate: false,
    })
}

/// One-parameter slices of the standard form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub enum SliceKind {
    SEqualsZero,
    TEqualsZero,
    REqualsZero,
}

/// Closed `ξ(s)` on the `s = 0`, `t = 0` and `r = 0` slices.
pub fn xi_special(slice: SliceKind, s: f64) -> Result<f64> {
    let s_max = 1.0 / 3f64.sqrt();
    let in_range = (0.0..=s_max + 1e-12).contains(&s);
    match slice {
        SliceKind::SEqualsZero => Ok(1.0),
        _ if !in_range => Err(Error::OutOfRange(s)),
        SliceKind::TEqualsZero => {
            let s2 = s * s;
            Ok((1.0 - 4.0 * s2 + 16.0 * s2 * s2 * s2) / (1.0 - 8.0 * s2 * s2))
        }
        SliceKind::REqualsZero => {
            let s2 = s * s;
            Ok(1.0 + 4.0 * s2 - 4.0 * (s2 - 3.0 * s2 * s2).max(0.0).sqrt())
        }
    }
}

/// `ξ` from the covariance matrix of `S` on any state, no canonicalization.
pub fn xi_direct(state: &ThreeBosonState) -> SqueezingResult {
    let moments = spin_moments(state);
    if moments.mean.norm() <= DEFAULT_EPSILON {
        return fallback(&moments);
    }
    let frame = Frame::from_mean_spin(&moments.mean, DEFAULT_EPSILON);
    let cov = moments.covariance();
    let (x, y) = (Vector3::from(frame.xhat), Vector3::from(frame.yhat));
    let p = (y.transpose() * cov * y)[(0, 0)];
    let q = (y.transpose() * cov * x)[(0, 0)];
    let r = (x.transpose() * cov * x)[(0, 0)];
    let (min, angle) = symmetric_min2(p, q, r);
    SqueezingResult {
        xi: FRAC_4_3 * min,
        theta_star: to_half_turn(angle),
        mean_spin: moments.mean,
        frame,
        method: SqueezingMethod::DirectOracle,
        degenerate: false,
    }
}

fn fallback(moments: &SpinMoments) -> SqueezingResult {
    let min = symmetric_eigenvalues3(&moments.covariance())[0];
    SqueezingResult {
        xi: FRAC_4_3 * min,
        theta_star: 0.0,
        mean_spin: moments.mean,
        frame: Frame::standard(true),
        method: SqueezingMethod::FullSphereFallback,
        degenerate: true,
    }
}

/// `(4/3)` times the smallest covariance eigenvalue, for states whose mean
/// spin vanishes.
pub fn full_sphere_min(state: &ThreeBosonState) -> Result<SqueezingResult> {
    let moments = spin_moments(state);
    if moments.mean.norm() > DEFAULT_EPSILON {
        return Err(Error::NotDegenerate);
    }
    Ok(fallback(&moments))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn mean_spin_examples() {
        let s = 1.0 / 3f64.sqrt();
        let w = mean_spin(&ParamPoint::new(0.0, s, 0.0, 0.0)).unwrap();
        assert_abs_diff_eq!(w.z, 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(w.x, 0.0);
        let up = mean_spin(&ParamPoint::new(1.0, 0.0, 0.0, 0.0)).unwrap();
        assert_eq!(
            up,
            SpinVector {
                x: 0.0,
                y: 0.0,
                z: 1.5
            }
        );
        let h = core::f64::consts::FRAC_1_SQRT_2;
        assert_abs_diff_eq!(
            mean_spin(&ParamPoint::new(h, 0.0, h, 0.0)).unwrap().norm(),
            0.0,
            epsilon = 1e-15
        );
    }

    #[test]
    fn mean_spin_oracle_agrees() {
        let p = ParamPoint::with_free_t(0.5, 0.3, 1.1);
        let closed = mean_spin(&p).unwrap();
        let direct = mean_spin_direct(&p.state().unwrap());
        assert_abs_diff_eq!(closed.x, direct.x, epsilon = 1e-12);
        assert_abs_diff_eq!(closed.y, direct.y, epsilon = 1e-12);
        assert_abs_diff_eq!(closed.z, direct.z, epsilon = 1e-12);
    }

    #[test]
    fn w_frame() {
        let s = 1.0 / 3f64.sqrt();
        let f = build_frame(&ParamPoint::new(0.0, s, 0.0, 0.0), 1e-9).unwrap();
        assert!(!f.degenerate);
        assert_abs_diff_eq!(f.xhat[1], -1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(f.yhat[0], 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(f.zhat[2], 1.0, epsilon = 1e-15);
        let h = core::f64::consts::FRAC_1_SQRT_2;
        assert!(
            build_frame(&ParamPoint::new(h, 0.0, h, 0.0), 1e-9)
                .unwrap()
                .degenerate
        );
    }

    #[test]
    fn abc_examples() {
        let p = ParamPoint::new(0.8, 0.0, 0.6, 0.4);
        let abc = abc_coefficients(&p).unwrap();
        assert_eq!((abc.a, abc.b, abc.c_coef), (0.0, 0.0, 1.0));

        // t = 0, s² = 0.1, r² = 0.7: A = -8u²s²r²(5s² + r²), u² = 1/0.92
        let p = ParamPoint::new(0.7f64.sqrt(), 0.1f64.sqrt(), 0.0, 0.0);
        let abc = abc_coefficients(&p).unwrap();
        assert_abs_diff_eq!(abc.a, -8.0 * 0.1 * 0.7 * 1.2 / 0.92, epsilon = 1e-12);
        assert_abs_diff_eq!(abc.b, 0.0);
        assert_abs_diff_eq!(abc.c_coef, 1.4, epsilon = 1e-12);
        assert_abs_diff_eq!(xi_closed(&p).unwrap().xi, 0.616 / 0.92, epsilon = 1e-12);

        // r = 0: A reduces to 8 s t cos 3φ.
        let p = ParamPoint::with_free_t(0.0, 0.35, 0.7);
        let abc = abc_coefficients(&p).unwrap();
        assert_abs_diff_eq!(
            abc.a,
            8.0 * p.s * p.t * (3.0 * p.phi).cos(),
            epsilon = 1e-12
        );

        let h = core::f64::consts::FRAC_1_SQRT_2;
        assert_eq!(
            abc_coefficients(&ParamPoint::new(h, 0.0, h, 0.0)),
            Err(Error::DegenerateFrame)
        );
    }

    /// The coefficients term by term as printed.
    fn printed_abc(p: &ParamPoint) -> (f64, f64) {
        let (r, s, t) = (p.r, p.s, p.t);
        let g = r * r + s * s - t * t;
        let u = 1.0 / (g * g + 4.0 * r * r * s * s).sqrt();
        let (sn, c) = p.phi.sin_cos();
        let (c3, u2) = (c * c * c, u * u);
        let (r2, r4) = (r * r, r.powi(4));
        let (s2, s3, s4, s5) = (s * s, s.powi(3), s.powi(4), s.powi(5));
        let (t2, t3, t5) = (t * t, t.powi(3), t.powi(5));
        let a = u2
            * (128.0 * s3 * r2 * t * c3
                - 96.0 * s3 * r2 * t * c
                - 40.0 * s4 * r2
                - 64.0 * s * t3 * r2 * c3
                - 24.0 * s * t5 * c
                + 48.0 * s3 * t3 * c
                - 24.0 * s5 * t * c
                - 64.0 * s3 * t3 * c3
                + 32.0 * s5 * t * c3
                + 32.0 * s * t5 * c3
                + 24.0 * s2 * r2 * t2
                + 48.0 * s * t3 * r2 * c
                - 24.0 * s * r4 * t * c
                + 32.0 * s * r4 * t * c3
                - 8.0 * s2 * r4);
        let b = u
            * (-32.0 * t3 * s * c * c * sn
                + 32.0 * s3 * t * c * c * sn
                + 32.0 * r2 * s * t * c * c * sn
                - 8.0 * r2 * s * t * sn
                - 8.0 * s3 * t * sn
                + 8.0 * t3 * s * sn);
        (a, b)
    }

    #[test]
    fn regrouped_coefficients_match_printed_terms() {
        for (r, s, phi) in [
            (0.5, 0.3, 0.2),
            (0.1, 0.5, 2.9),
            (0.8, 0.1, 4.0),
            (0.0, 0.2, 1.0),
            (0.3, 0.0, 0.5),
        ] {
            let p = ParamPoint::with_free_t(r, s, phi);
            let abc = abc_coefficients(&p).unwrap();
            let (a, b) = printed_abc(&p);
            assert_abs_diff_eq!(abc.a, a, epsilon = 1e-13);
            assert_abs_diff_eq!(abc.b, b, epsilon = 1e-13);
        }
    }

    #[test]
    fn variance_examples() {
        let p = ParamPoint::new(0.8, 0.0, 0.6, 0.0);
        for k in 0..8 {
            assert_abs_diff_eq!(
                variance_at_theta(&p, k as f64 * 0.4).unwrap(),
                1.0,
                epsilon = 1e-15
            );
        }
        let w = ParamPoint::new(0.0, 1.0 / 3f64.sqrt(), 0.0, 0.0);
        assert_abs_diff_eq!(
            variance_at_theta(&w, 0.3).unwrap(),
            7.0 / 3.0,
            epsilon = 1e-12
        );
        assert_abs_diff_eq!(
            variance_at_theta_direct(&w, 0.3).unwrap(),
            7.0 / 3.0,
            epsilon = 1e-12
        );
    }

    #[test]
    fn special_slices() {
        let s = 1.0 / 3f64.sqrt();
        assert_abs_diff_eq!(
            xi_special(SliceKind::REqualsZero, s).unwrap(),
            7.0 / 3.0,
            epsilon = 1e-12
        );
        assert_abs_diff_eq!(xi_special(SliceKind::REqualsZero, 0.0).unwrap(), 1.0);
        assert_abs_diff_eq!(
            xi_special(SliceKind::REqualsZero, 0.5).unwrap(),
            1.0,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(xi_special(SliceKind::TEqualsZero, 0.0).unwrap(), 1.0);
        assert_eq!(xi_special(SliceKind::SEqualsZero, 0.9), Ok(1.0));
        assert_eq!(
            xi_special(SliceKind::TEqualsZero, 0.7),
            Err(Error::OutOfRange(0.7))
        );
        assert!(xi_special(SliceKind::REqualsZero, -0.1).is_err());
    }

    #[test]
    fn closed_special_values() {
        let s = 3f64.sqrt() / 6.0;
        assert_abs_diff_eq!(
            xi_closed(&ParamPoint::with_free_t(0.0, s, 0.0)).unwrap().xi,
            1.0 / 3.0,
            epsilon = 1e-12
        );
        let h = core::f64::consts::FRAC_1_SQRT_2;
        let ghz = xi_closed(&ParamPoint::new(h, 0.0, h, 0.0)).unwrap();
        assert!(ghz.degenerate);
        assert_eq!(ghz.method, SqueezingMethod::FullSphereFallback);
        assert_abs_diff_eq!(ghz.xi, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn direct_examples() {
        let w = xi_direct(&ThreeBosonState::w());
        assert_abs_diff_eq!(w.xi, 7.0 / 3.0, epsilon = 1e-12);
        assert_eq!(w.method, SqueezingMethod::DirectOracle);
        let ghz = xi_direct(&ThreeBosonState::ghz());
        assert!(ghz.degenerate);
        assert_abs_diff_eq!(ghz.xi, 1.0, epsilon = 1e-12);

        let ghz_cov = spin_moments(&ThreeBosonState::ghz()).covariance();
        let eig = symmetric_eigenvalues3(&ghz_cov);
        assert_abs_diff_eq!(eig[0], 0.75, epsilon = 1e-12);
        assert_abs_diff_eq!(eig[1], 0.75, epsilon = 1e-12);
        assert_abs_diff_eq!(eig[2], 2.25, epsilon = 1e-12);

        let half = ParamPoint::new(0.0, 0.5, 0.5, 0.0).state().unwrap();
        assert_abs_diff_eq!(full_sphere_min(&half).unwrap().xi, 1.0, epsilon = 1e-12);
        assert_eq!(
            full_sphere_min(&ThreeBosonState::w()),
            Err(Error::NotDegenerate)
        );
    }
}

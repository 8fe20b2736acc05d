//! Multi-start Newton solver for the non-holomorphic elimination equation of
//! the `|011>` coefficient.
//!
//! With `z = α/β*` the coefficient equals `β* β^2 f(z)` where
//!
//! ```text
//! f(z) = a z - d z̄² - b + c z z̄² + 2b z z̄ - 2c z̄
//! ```
//!
//! and with `w = β*/α = 1/z` it equals `α ᾱ² g(w)` where
//!
//! ```text
//! g(w) = a w̄² - d w - b w w̄² + c + 2b w̄ - 2c w w̄.
//! ```
//!
//! Iterates switch to the `w` chart whenever `|z| > 1` (and back), so every
//! solve stays in the unit disc and roots at `β = 0` are reachable.

use core::f64::consts::PI;

use alloc::vec::Vec;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const MAX_ITERATIONS: usize = 60;
const MAX_BACKTRACKS: usize = 30;
/// Chart residual below which an iterate is reported as a root candidate.
const ACCEPT_RESIDUAL: f64 = 1e-11;
/// Chordal distance under which two roots are merged.
pub(crate) const DEDUP_DISTANCE: f64 = 1e-8;

pub(crate) const GRID_RADII: usize = 16;
pub(crate) const GRID_ANGLES: usize = 13;
pub(crate) const RANDOM_RESTARTS: usize = 100;
pub(crate) const GRID_MAX_RADIUS: f64 = 10.0;
const RESTART_SEED: u64 = 0x5eed_0011;

#[derive(Debug, Clone, Copy, PartialEq)]
enum Chart {
    /// `z = α/β*`
    Near,
    /// `w = β*/α`
    Far,
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct MixedSystem {
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
    pub d: Complex64,
}

/// Value and Wirtinger derivatives `(F, ∂F/∂v, ∂F/∂v̄)`.
fn evaluate(sys: &MixedSystem, chart: Chart, v: Complex64) -> (Complex64, Complex64, Complex64) {
    let MixedSystem { a, b, c, d } = *sys;
    let vb = v.conj();
    match chart {
        Chart::Near => {
            let f = a * v - d * vb * vb - b + c * v * vb * vb + b * v * vb * 2.0 - c * vb * 2.0;
            let fv = a + c * vb * vb + b * vb * 2.0;
            let fvb = -d * vb * 2.0 + c * v * vb * 2.0 + b * v * 2.0 - c * 2.0;
            (f, fv, fvb)
        }
        Chart::Far => {
            let g = a * vb * vb - d * v - b * v * vb * vb + c + b * vb * 2.0 - c * v * vb * 2.0;
            let gv = -d - b * vb * vb - c * vb * 2.0;
            let gvb = a * vb * 2.0 - b * v * vb * 2.0 + b * 2.0 - c * v * 2.0;
            (g, gv, gvb)
        }
    }
}

/// A unit vector `(α, β)` parametrizing `from_alpha_beta(α, β)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Homogeneous {
    pub alpha: Complex64,
    pub beta: Complex64,
}

impl Homogeneous {
    fn from_chart(chart: Chart, v: Complex64) -> Self {
        let scale = 1.0 / (1.0 + v.norm_sqr()).sqrt();
        match chart {
            Chart::Near => Homogeneous {
                alpha: v * scale,
                beta: Complex64::new(scale, 0.0),
            },
            Chart::Far => Homogeneous {
                alpha: Complex64::new(scale, 0.0),
                beta: v.conj() * scale,
            },
        }
    }

    /// Chordal distance between the points `α/β*` on the Riemann sphere.
    pub fn chordal_distance(&self, other: &Homogeneous) -> f64 {
        (self.alpha * other.beta - other.alpha * self.beta).norm()
    }
}

fn newton_step(sys: &MixedSystem, chart: Chart, v: Complex64) -> Option<Complex64> {
    let (f, fv, fvb) = evaluate(sys, chart, v);
    // Real Jacobian columns: ∂F/∂x = F_v + F_v̄, ∂F/∂y = i(F_v - F_v̄).
    let p = fv + fvb;
    let q = (fv - fvb) * Complex64::new(0.0, 1.0);
    let det = p.re * q.im - q.re * p.im;
    let jac_scale = p.norm_sqr() + q.norm_sqr();
    if jac_scale == 0.0 {
        return None;
    }
    let (dx, dy) = if det.abs() > 1e-12 * jac_scale {
        (
            (-f.re * q.im + q.re * f.im) / det,
            (-p.re * f.im + p.im * f.re) / det,
        )
    } else {
        // Levenberg-Marquardt step on a (near) singular Jacobian.
        let mu = 1e-8 * jac_scale;
        let (j11, j12, j21, j22) = (p.re, q.re, p.im, q.im);
        let a11 = j11 * j11 + j21 * j21 + mu;
        let a12 = j11 * j12 + j21 * j22;
        let a22 = j12 * j12 + j22 * j22 + mu;
        let g1 = -(j11 * f.re + j21 * f.im);
        let g2 = -(j12 * f.re + j22 * f.im);
        let det = a11 * a22 - a12 * a12;
        ((a22 * g1 - a12 * g2) / det, (a11 * g2 - a12 * g1) / det)
    };
    let step = Complex64::new(dx, dy);
    if step.re.is_finite() && step.im.is_finite() {
        Some(step)
    } else {
        None
    }
}

fn run(sys: &MixedSystem, mut chart: Chart, mut v: Complex64) -> Option<Homogeneous> {
    let mut residual = evaluate(sys, chart, v).0.norm();
    for _ in 0..MAX_ITERATIONS {
        if residual < 1e-16 {
            break;
        }
        let Some(step) = newton_step(sys, chart, v) else {
            break;
        };
        let mut scale = 1.0;
        let mut accepted = false;
        for _ in 0..MAX_BACKTRACKS {
            let candidate = v + step * scale;
            let r = evaluate(sys, chart, candidate).0.norm();
            if r < residual {
                v = candidate;
                residual = r;
                accepted = true;
                break;
            }
            scale *= 0.5;
        }
        if !accepted {
            break;
        }
        if v.norm() > 1.0 {
            v = v.inv();
            chart = match chart {
                Chart::Near => Chart::Far,
                Chart::Far => Chart::Near,
            };
            residual = evaluate(sys, chart, v).0.norm();
        }
        if step.norm() * scale < 1e-16 * (1.0 + v.norm()) {
            break;
        }
    }
    (residual <= ACCEPT_RESIDUAL).then(|| Homogeneous::from_chart(chart, v))
}

fn starting_points() -> Vec<(Chart, Complex64)> {
    let mut starts = Vec::with_capacity(1 + GRID_RADII * GRID_ANGLES + RANDOM_RESTARTS + 9);
    starts.push((Chart::Near, Complex64::new(0.0, 0.0)));
    // Geometric radii from 0.05 to GRID_MAX_RADIUS, staggered angles.
    let (r_min, r_max) = (0.05f64, GRID_MAX_RADIUS);
    for i in 0..GRID_RADII {
        let radius = r_min * (r_max / r_min).powf(i as f64 / (GRID_RADII - 1) as f64);
        let offset = if i % 2 == 0 { 0.0 } else { 0.5 };
        for j in 0..GRID_ANGLES {
            let angle = 2.0 * PI * (j as f64 + offset) / GRID_ANGLES as f64;
            starts.push(start_in_chart(Complex64::from_polar(radius, angle)));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(RESTART_SEED);
    for _ in 0..RANDOM_RESTARTS {
        let radius = GRID_MAX_RADIUS * rng.random::<f64>().sqrt();
        let angle = 2.0 * PI * rng.random::<f64>();
        starts.push(start_in_chart(Complex64::from_polar(radius, angle)));
    }
    // Neighbourhood of z = ∞.
    starts.push((Chart::Far, Complex64::new(0.0, 0.0)));
    for j in 0..8 {
        starts.push((
            Chart::Far,
            Complex64::from_polar(0.05, 2.0 * PI * j as f64 / 8.0),
        ));
    }
    starts
}

fn start_in_chart(z: Complex64) -> (Chart, Complex64) {
    if z.norm() > 1.0 {
        (Chart::Far, z.inv())
    } else {
        (Chart::Near, z)
    }
}

/// All distinct roots reached from the structured grid and the seeded
/// restarts, in order of discovery.
pub(crate) fn solve(sys: &MixedSystem) -> Vec<Homogeneous> {
    let mut roots: Vec<Homogeneous> = Vec::new();
    for (chart, v) in starting_points() {
        if let Some(root) = run(sys, chart, v) {
            if roots
                .iter()
                .all(|r| r.chordal_distance(&root) >= DEDUP_DISTANCE)
            {
                roots.push(root);
            }
        }
    }
    roots
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::state::{apply_mode_transform, random_mode_transform, random_state, ModeTransform};

    fn system_of(s: &crate::ThreeBosonState) -> MixedSystem {
        MixedSystem {
            a: s.a(),
            b: s.b(),
            c: s.c(),
            d: s.d(),
        }
    }

    #[test]
    fn chart_functions_match_tensor_path() {
        for seed in 0..40 {
            let s = random_state(seed);
            let u = random_mode_transform(seed + 77);
            let (al, be) = (u.alpha(), u.beta());
            let c_new = apply_mode_transform(&s, &u).unwrap().c();
            let sys = system_of(&s);
            let z = al / be.conj();
            let near = evaluate(&sys, Chart::Near, z).0 * be.conj() * be * be;
            assert!((near - c_new).norm() < 1e-12, "near {seed}");
            let w = be.conj() / al;
            let far = evaluate(&sys, Chart::Far, w).0 * al * al.conj() * al.conj();
            assert!((far - c_new).norm() < 1e-12, "far {seed}");
        }
    }

    #[test]
    fn wirtinger_derivatives_match_finite_differences() {
        let s = random_state(4);
        let sys = system_of(&s);
        let h = 1e-6;
        for chart in [Chart::Near, Chart::Far] {
            let v = Complex64::new(0.3, -0.2);
            let (_, fv, fvb) = evaluate(&sys, chart, v);
            let dx = (evaluate(&sys, chart, v + h).0 - evaluate(&sys, chart, v - h).0) / (2.0 * h);
            let ih = Complex64::new(0.0, h);
            let dy =
                (evaluate(&sys, chart, v + ih).0 - evaluate(&sys, chart, v - ih).0) / (2.0 * h);
            assert!((dx - (fv + fvb)).norm() < 1e-8);
            assert!((dy - (fv - fvb) * Complex64::new(0.0, 1.0)).norm() < 1e-8);
        }
    }

    #[test]
    fn start_count() {
        assert!(starting_points().len() >= 300);
    }

    #[test]
    fn roots_zero_the_coefficient() {
        for seed in 0..20 {
            let s = random_state(seed);
            let roots = solve(&system_of(&s));
            assert!(!roots.is_empty());
            for r in roots {
                let u = ModeTransform::from_alpha_beta(r.alpha, r.beta);
                let c = apply_mode_transform(&s, &u).unwrap().c();
                assert!(c.norm() < 1e-12, "seed {seed}: {}", c.norm());
            }
        }
    }
}

//! Explicit single-particle pairs realizing a standard form as
//! `|ααα> + |βββ>` (GHZ type) or `|αββ> + |βαβ> + |ββα>` (W type).
//!
//! `α` and `β` are linearly independent but neither normalized nor
//! orthogonal. The complex middle amplitude `s e^{iφ}` enters every
//! construction in place of `s`.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::canonical::{classify, CanonicalForm, EntanglementClass};
use crate::poly::{cube_roots, polynomial_roots};
use crate::state::to_qubit_expansion;
use crate::{Error, Result, DEFAULT_EPSILON};

/// Best-branch errors above this mark the pair as suspect.
pub const SUSPECT_THRESHOLD: f64 = 1e-8;
/// Smallest accepted `|det(α, β)|`.
pub const INDEPENDENCE_THRESHOLD: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub enum DecompositionKind {
    GHZ,
    W,
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "camelCase"))]
pub struct DecompositionPair {
    /// Components on `|0>`, `|1>`.
    pub alpha: [Complex64; 2],
    pub beta: [Complex64; 2],
    pub kind: DecompositionKind,
    /// Euclidean distance between the rebuilt and canonical eight amplitudes.
    pub reconstruction_error: f64,
    pub suspect_formula: bool,
}

impl DecompositionPair {
    pub fn determinant(&self) -> Complex64 {
        self.alpha[0] * self.beta[1] - self.alpha[1] * self.beta[0]
    }

    /// The eight amplitudes of the rebuilt (unnormalized) state.
    pub fn rebuild(&self) -> [Complex64; 8] {
        rebuild(self.kind, &self.alpha, &self.beta)
    }
}

fn bits(idx: usize) -> [usize; 3] {
    [(idx >> 2) & 1, (idx >> 1) & 1, idx & 1]
}

fn rebuild(
    kind: DecompositionKind,
    alpha: &[Complex64; 2],
    beta: &[Complex64; 2],
) -> [Complex64; 8] {
    core::array::from_fn(|idx| {
        let [i, j, k] = bits(idx);
        match kind {
            DecompositionKind::GHZ => alpha[i] * alpha[j] * alpha[k] + beta[i] * beta[j] * beta[k],
            DecompositionKind::W => {
                alpha[i] * beta[j] * beta[k]
                    + beta[i] * alpha[j] * beta[k]
                    + beta[i] * beta[j] * alpha[k]
            }
        }
    })
}

fn target_amplitudes(form: &CanonicalForm) -> Result<[Complex64; 8]> {
    Ok(to_qubit_expansion(&form.state()?).amplitudes)
}

fn distance(x: &[Complex64; 8], y: &[Complex64; 8]) -> f64 {
    x.iter()
        .zip(y)
        .map(|(p, q)| (p - q).norm_sqr())
        .sum::<f64>()
        .sqrt()
}

fn finite(v: &[Complex64; 2]) -> bool {
    v.iter().all(|c| c.re.is_finite() && c.im.is_finite())
}

/// Picks the candidate with the smallest reconstruction error among the
/// linearly independent ones.
fn best_pair(
    kind: DecompositionKind,
    candidates: Vec<([Complex64; 2], [Complex64; 2])>,
    target: &[Complex64; 8],
) -> Result<DecompositionPair> {
    candidates
        .into_iter()
        .filter(|(a, b)| finite(a) && finite(b))
        .map(|(alpha, beta)| {
            let reconstruction_error = distance(&rebuild(kind, &alpha, &beta), target);
            DecompositionPair {
                alpha,
                beta,
                kind,
                reconstruction_error,
                suspect_formula: false,
            }
        })
        .filter(|p| {
            p.determinant().norm() > INDEPENDENCE_THRESHOLD && p.reconstruction_error.is_finite()
        })
        .min_by(|p, q| p.reconstruction_error.total_cmp(&q.reconstruction_error))
        .map(|mut p| {
            p.suspect_formula = p.reconstruction_error > SUSPECT_THRESHOLD;
            p
        })
        .ok_or(Error::Inconsistent(
            "no independent decomposition pair",
            0.0,
        ))
}

fn sixth_roots(x: Complex64) -> Vec<Complex64> {
    cube_roots(x)
        .into_iter()
        .flat_map(|c| {
            let root = c.sqrt();
            [root, -root]
        })
        .collect()
}

/// Branches of the general construction: `u` from the quadratic in `u³`,
/// `v³ = t - u³`, then `a, b, c, d` as functions of `(u, v)`.
fn general_candidates(r: f64, s: Complex64, t: f64) -> Vec<([Complex64; 2], [Complex64; 2])> {
    let k = s.powi(3) * 4.0 + t * r * r;
    let quadratic = [s.powi(3) * t * t, -(s.powi(3) * 4.0 * t) - t * t * r * r, k];
    let mut out = Vec::new();
    for u3 in polynomial_roots(&quadratic) {
        for u in cube_roots(u3) {
            let u3 = u * u * u;
            for v in cube_roots(-u3 + t) {
                let a = s * s * t * t * r / (k * (u3 * 2.0 - t) * v * v);
                let c = u * r * (u3 - t) / (s * (u3 * 2.0 - t));
                out.push(([a, v], [c, u]));
            }
        }
    }
    out
}

/// `|ααα> + |βββ>` pair for a GHZ-class standard form.
pub fn decompose_ghz(form: &CanonicalForm) -> Result<DecompositionPair> {
    if classify(form, DEFAULT_EPSILON) != EntanglementClass::GHZ {
        return Err(Error::WrongClass);
    }
    let target = target_amplitudes(form)?;
    let (r, t) = (form.r, form.t);
    let s = Complex64::from_polar(form.s, form.phi);
    let candidates = if form.s < DEFAULT_EPSILON {
        let (x, y) = (r.cbrt(), t.cbrt());
        let zero = Complex64::new(0.0, 0.0);
        alloc::vec![(
            [Complex64::new(x, 0.0), zero],
            [zero, Complex64::new(y, 0.0)]
        )]
    } else if r < DEFAULT_EPSILON {
        sixth_roots(s.powi(3) / (4.0 * t))
            .into_iter()
            .map(|w| {
                let lower = s / (w * w * 2.0);
                ([-w, lower], [w, lower])
            })
            .collect()
    } else {
        general_candidates(r, s, t)
    };
    best_pair(DecompositionKind::GHZ, candidates, &target)
}

/// `|αββ> + |βαβ> + |ββα>` pair with `α = (r/3)|0> + s e^{iφ}|1>`, `β = |0>`.
pub fn decompose_w(form: &CanonicalForm) -> Result<DecompositionPair> {
    if form.t >= DEFAULT_EPSILON || form.s < DEFAULT_EPSILON {
        return Err(Error::WrongClass);
    }
    let target = target_amplitudes(form)?;
    let alpha = [
        Complex64::new(form.r / 3.0, 0.0),
        Complex64::from_polar(form.s, form.phi),
    ];
    let beta = [Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)];
    best_pair(DecompositionKind::W, alloc::vec![(alpha, beta)], &target)
}

//! Pairwise concurrence and the three-tangle.
//!
//! Closed forms are evaluated on standard-form parameters ([`ParamPoint`]);
//! the oracles work on any state through its density matrices or its eight
//! first-quantized amplitudes. The two routes are reported side by side and
//! never substituted for one another: the closed concurrence expression
//! does not agree with the Wootters value in general (already at the W point
//! it gives `(√6-√2)/3` against `2/3`).

use alloc::vec::Vec;

use nalgebra::Matrix4;
use num_complex::Complex64;

use crate::canonical::{canonicalize, classify, CanonicalForm, EntanglementClass};
use crate::linalg::{clamp_nonnegative, hermitian_eigen4};
use crate::state::{reduced_density_one, reduced_density_two, to_qubit_expansion, ThreeBosonState};
use crate::{Error, Result, DEFAULT_EPSILON};

/// Normalization tolerance for [`ParamPoint`].
pub const PARAM_NORM_TOLERANCE: f64 = 1e-10;
/// Threshold for the report's consistency flags.
pub const FLAG_TOLERANCE: f64 = 1e-6;

/// Raw standard-form evaluation point; `t` may carry a sign.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ParamPoint {
    pub r: f64,
    pub s: f64,
    pub t: f64,
    pub phi: f64,
    pub normalized: bool,
}

impl ParamPoint {
    pub fn new(r: f64, s: f64, t: f64, phi: f64) -> Self {
        let norm = r * r + 3.0 * s * s + t * t;
        ParamPoint {
            r,
            s,
            t,
            phi,
            normalized: (norm - 1.0).abs() <= PARAM_NORM_TOLERANCE,
        }
    }

    /// The point with `t = sqrt(1 - r² - 3s²)`.
    pub fn with_free_t(r: f64, s: f64, phi: f64) -> Self {
        let t = (1.0 - r * r - 3.0 * s * s).max(0.0).sqrt();
        Self::new(r, s, t, phi)
    }

    /// The point with `s = sqrt((1 - r² - t²)/3)`.
    pub fn with_free_s(r: f64, t: f64, phi: f64) -> Self {
        let s = ((1.0 - r * r - t * t) / 3.0).max(0.0).sqrt();
        Self::new(r, s, t, phi)
    }

    pub fn norm_sqr(&self) -> f64 {
        self.r * self.r + 3.0 * self.s * self.s + self.t * self.t
    }

    pub(crate) fn require_normalized(&self) -> Result<()> {
        if self.normalized {
            Ok(())
        } else {
            Err(Error::NotNormalized(self.norm_sqr()))
        }
    }

    pub fn state(&self) -> Result<ThreeBosonState> {
        ThreeBosonState::from_standard_form(self.r, self.s, self.t, self.phi)
    }
}

/// Square roots of the eigenvalues of `ρ (σy⊗σy) ρ* (σy⊗σy)`, descending.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct WoottersSpectrum {
    pub lambda: [f64; 4],
}

fn sigma_yy() -> Matrix4<Complex64> {
    let one = Complex64::new(1.0, 0.0);
    let mut yy = Matrix4::<Complex64>::zeros();
    yy[(0, 3)] = -one;
    yy[(1, 2)] = one;
    yy[(2, 1)] = one;
    yy[(3, 0)] = -one;
    yy
}

/// Wootters concurrence of the two-particle reduced state.
///
/// All three pairs share the same reduced density matrix, so this is
/// `C_AB = C_BC = C_AC`. With `ρ = V V†`, `V = [√p_i e_i]`, the `λ_i` are the
/// singular values of `Vᵀ (σy⊗σy) V`. This avoids square roots of the
/// vanishing eigenvalues of `ρ ρ̃` (the pair state has rank at most two).
pub fn concurrence_wootters(state: &ThreeBosonState) -> (f64, WoottersSpectrum) {
    let rho = reduced_density_two(state).rho;
    let (values, vectors) = hermitian_eigen4(&rho);
    let mut v = vectors;
    for (k, p) in values.iter().enumerate() {
        debug_assert!(*p >= -1e-10, "negative density eigenvalue {p}");
        let scale = p.max(0.0).sqrt();
        v.column_mut(k).iter_mut().for_each(|x| *x *= scale);
    }
    let tau = v.transpose() * sigma_yy() * v;
    let sv = tau.singular_values();
    let mut lambda = [sv[0], sv[1], sv[2], sv[3]];
    lambda.sort_by(|x, y| y.total_cmp(x));
    let c = (lambda[0] - lambda[1] - lambda[2] - lambda[3]).max(0.0);
    (c, WoottersSpectrum { lambda })
}

/// The closed two-radical concurrence expression in `(r, s, t, φ)`.
pub fn concurrence_closed(p: &ParamPoint) -> Result<f64> {
    p.require_normalized()?;
    let (r, s, t) = (p.r, p.s, p.t);
    let (r2, s2, t2) = (r * r, s * s, t * t);
    let outer = 4.0 * t2 * s2 + 2.0 * t2 * r2 + 4.0 * s2 * s2;
    let inner = t2 * t2 * s2 * s2 + t2 * t2 * r2 * s2 - 2.0 * s2 * s2 * s2 * t2
        + s2 * s2 * t2 * r2
        + s2 * s2 * s2 * s2
        + 2.0 * r2 * s2 * s * t2 * t * (3.0 * p.phi).cos();
    let root = clamp_nonnegative(inner, "concurrence inner radicand")?.sqrt();
    let plus = clamp_nonnegative(outer + 2.0 * root, "concurrence outer radicand")?;
    let minus = clamp_nonnegative(outer - 2.0 * root, "concurrence outer radicand")?;
    Ok(plus.sqrt() - minus.sqrt())
}

/// Pure-state concurrence of the split `A | BC`, `2 sqrt(det ρ_A)`.
pub fn bipartite_concurrence(state: &ThreeBosonState) -> f64 {
    let det = reduced_density_one(state).determinant();
    2.0 * det.max(0.0).sqrt()
}

/// `4 |r²t² + 4 t s³ e^{3iφ}|`.
pub fn tau_closed(p: &ParamPoint) -> Result<f64> {
    p.require_normalized()?;
    let (r, s, t) = (p.r, p.s, p.t);
    let z = Complex64::new(r * r * t * t, 0.0)
        + Complex64::from_polar(4.0 * t * s * s * s, 3.0 * p.phi);
    Ok(4.0 * z.norm())
}

/// Cayley hyperdeterminant of the eight amplitudes.
pub fn hyperdeterminant(state: &ThreeBosonState) -> Complex64 {
    let q = to_qubit_expansion(state).amplitudes;
    let (a000, a001, a010, a011) = (q[0], q[1], q[2], q[3]);
    let (a100, a101, a110, a111) = (q[4], q[5], q[6], q[7]);
    let sq = |x: Complex64| x * x;
    let d1 = sq(a000) * sq(a111) + sq(a001) * sq(a110) + sq(a010) * sq(a101) + sq(a100) * sq(a011);
    let d2 = a000 * a111 * a011 * a100
        + a000 * a111 * a101 * a010
        + a000 * a111 * a110 * a001
        + a011 * a100 * a101 * a010
        + a011 * a100 * a110 * a001
        + a101 * a010 * a110 * a001;
    let d3 = a000 * a110 * a101 * a011 + a111 * a001 * a010 * a100;
    d1 - d2 * 2.0 + d3 * 4.0
}

/// Three-tangle as `4 |hyperdeterminant|`.
pub fn tau_hyperdeterminant(state: &ThreeBosonState) -> f64 {
    4.0 * hyperdeterminant(state).norm()
}

/// `C²_{A(BC)} - C²_AB - C²_AC` before clamping.
pub fn tau_ckw_raw(state: &ThreeBosonState) -> f64 {
    let bipartite = bipartite_concurrence(state);
    let pair = concurrence_wootters(state).0;
    bipartite * bipartite - 2.0 * pair * pair
}

/// Three-tangle from the monogamy identity with oracle concurrences, clamped at 0.
pub fn tau_ckw(state: &ThreeBosonState) -> f64 {
    tau_ckw_raw(state).max(0.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "SCREAMING_SNAKE_CASE"))]
pub enum ReportFlag {
    /// Closed-form and Wootters concurrences differ by more than [`FLAG_TOLERANCE`].
    ClosedFormConcurrenceMismatch,
    /// The closed forms violate `τ = C²_{A(BC)} - 2 C²` by more than [`FLAG_TOLERANCE`].
    CkwClosedViolation,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "camelCase"))]
pub struct EntanglementReport {
    pub canonical: CanonicalForm,
    pub class: EntanglementClass,
    pub concurrence_closed: f64,
    pub concurrence_oracle: f64,
    pub tau_closed: f64,
    pub tau_oracle: f64,
    pub tau_ckw: f64,
    pub bipartite_concurrence: f64,
    pub ckw_residual_oracle: f64,
    pub ckw_residual_closed: f64,
    pub flags: Vec<ReportFlag>,
}

pub fn report(state: &ThreeBosonState) -> Result<EntanglementReport> {
    report_with_epsilon(state, DEFAULT_EPSILON)
}

/// Canonicalizes `state` and evaluates every measure on both routes.
pub fn report_with_epsilon(state: &ThreeBosonState, epsilon: f64) -> Result<EntanglementReport> {
    let canonical = canonicalize(state)?;
    let class = classify(&canonical, epsilon);
    let point = canonical.param_point();
    let concurrence_closed = concurrence_closed(&point)?;
    let tau_closed = tau_closed(&point)?;
    let concurrence_oracle = concurrence_wootters(state).0;
    let tau_oracle = tau_hyperdeterminant(state);
    let bipartite = bipartite_concurrence(state);
    let b2 = bipartite * bipartite;
    let ckw_residual_oracle =
        (tau_oracle - (b2 - 2.0 * concurrence_oracle * concurrence_oracle)).abs();
    let ckw_residual_closed =
        (tau_closed - (b2 - 2.0 * concurrence_closed * concurrence_closed)).abs();

    let mut flags = Vec::new();
    if (concurrence_closed - concurrence_oracle).abs() > FLAG_TOLERANCE {
        flags.push(ReportFlag::ClosedFormConcurrenceMismatch);
    }
    if ckw_residual_closed > FLAG_TOLERANCE {
        flags.push(ReportFlag::CkwClosedViolation);
    }
    Ok(EntanglementReport {
        canonical,
        class,
        concurrence_closed,
        concurrence_oracle,
        tau_closed,
        tau_oracle,
        tau_ckw: tau_ckw(state),
        bipartite_concurrence: bipartite,
        ckw_residual_oracle,
        ckw_residual_closed,
        flags,
    })
}

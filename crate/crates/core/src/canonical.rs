//! Reduction to the standard form `r|000> + s e^{iφ}(|100>+|010>+|001>) + t|111>`
//! and entanglement classification.

use core::cmp::Ordering;
use core::f64::consts::PI;

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::newton::{self, Homogeneous, MixedSystem};
use crate::poly;
use crate::state::{apply_mode_transform, reduced_density_one, ModeTransform, ThreeBosonState};
use crate::{Error, ParamPoint, Result};

/// Largest accepted modulus of an eliminated coefficient.
pub const ROOT_RESIDUAL_TOLERANCE: f64 = 1e-12;
/// Below this `r`, `s` or `t` count as zero when fixing phases.
const PHASE_TINY: f64 = 1e-10;
/// Tolerance for treating two candidate parameters as equal during selection.
const TIE_TOLERANCE: f64 = 1e-9;

const THIRD_TURN: f64 = 2.0 * PI / 3.0;

/// Which transformed coefficient an elimination drives to zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum EliminationTarget {
    Coeff000,
    Coeff111,
    Coeff011,
    Coeff100,
}

impl EliminationTarget {
    pub fn is_cubic(self) -> bool {
        matches!(
            self,
            EliminationTarget::Coeff000 | EliminationTarget::Coeff111
        )
    }

    /// The targeted coefficient of an already transformed state.
    pub fn coefficient(self, state: &ThreeBosonState) -> Complex64 {
        match self {
            EliminationTarget::Coeff000 => state.a(),
            EliminationTarget::Coeff111 => state.d(),
            EliminationTarget::Coeff011 => state.c(),
            EliminationTarget::Coeff100 => state.b(),
        }
    }
}

/// A solution of the elimination equation, stored as the unit pair `(α, β)`
/// of the SU(2) transform [`ModeTransform::from_alpha_beta`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverRoot {
    pub target: EliminationTarget,
    pub alpha: Complex64,
    pub beta: Complex64,
    /// Modulus of the targeted coefficient after applying the transform.
    pub residual: f64,
}

impl SolverRoot {
    pub fn transform(&self) -> ModeTransform {
        ModeTransform::from_alpha_beta(self.alpha, self.beta)
    }

    /// The solution variable: `β*/α` for the cubic targets, `α/β*` for the
    /// mixed ones. `None` when it sits at infinity.
    pub fn z(&self) -> Option<Complex64> {
        let (num, den) = if self.target.is_cubic() {
            (self.beta.conj(), self.alpha)
        } else {
            (self.alpha, self.beta.conj())
        };
        (den.norm() > 0.0).then(|| num / den)
    }
}

fn unit_pair(alpha: Complex64, beta: Complex64) -> (Complex64, Complex64) {
    let n = (alpha.norm_sqr() + beta.norm_sqr()).sqrt();
    (alpha / n, beta / n)
}

/// Homogeneous candidates for the cubic targets, including the point at
/// infinity (`α = 0`).
fn cubic_candidates(
    state: &ThreeBosonState,
    target: EliminationTarget,
) -> Vec<(Complex64, Complex64)> {
    let (a, b, c, d) = (state.a(), state.b(), state.c(), state.d());
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    let mut out = Vec::with_capacity(4);
    match target {
        EliminationTarget::Coeff000 => {
            // a α³ - 3b α² β* + 3c α β*² - d β*³ with w = β*/α
            for w in poly::polynomial_roots(&[a, -b * 3.0, c * 3.0, -d]) {
                out.push(unit_pair(one, w.conj()));
            }
        }
        _ => {
            // a β³ + 3b β² α* + 3c β α*² + d α*³ with v = β/α*
            for v in poly::polynomial_roots(&[d, c * 3.0, b * 3.0, a]) {
                out.push(unit_pair(one, v));
            }
        }
    }
    out.push((zero, one));
    out
}

/// Finds single-particle transforms that zero one transformed coefficient.
///
/// Cubic targets are solved through companion-matrix eigenvalues, the mixed
/// targets by multi-start Newton in two real unknowns. Every returned root is
/// checked on the tensor-product path and has `residual <= 1e-12`. Roots are
/// ordered by residual, then by the real and imaginary parts of `z`.
pub fn eliminate_coefficient(
    state: &ThreeBosonState,
    target: EliminationTarget,
) -> Result<Vec<SolverRoot>> {
    let candidates: Vec<(Complex64, Complex64)> = match target {
        EliminationTarget::Coeff000 | EliminationTarget::Coeff111 => {
            cubic_candidates(state, target)
        }
        EliminationTarget::Coeff011 => newton::solve(&MixedSystem {
            a: state.a(),
            b: state.b(),
            c: state.c(),
            d: state.d(),
        })
        .into_iter()
        .map(|h| (h.alpha, h.beta))
        .collect(),
        EliminationTarget::Coeff100 => {
            // Conjugating by the mode swap X maps the |100> coefficient of U psi
            // onto the |011> coefficient of (X U X)(X psi), and X U X is the
            // SU(2) element with (α*, -β*).
            newton::solve(&MixedSystem {
                a: state.d(),
                b: state.c(),
                c: state.b(),
                d: state.a(),
            })
            .into_iter()
            .map(|h| (h.alpha.conj(), -h.beta.conj()))
            .collect()
        }
    };

    let mut roots: Vec<SolverRoot> = Vec::new();
    for (alpha, beta) in candidates {
        let u = ModeTransform::from_alpha_beta(alpha, beta);
        let residual = target.coefficient(&apply_mode_transform(state, &u)?).norm();
        if residual > ROOT_RESIDUAL_TOLERANCE {
            continue;
        }
        let h = Homogeneous { alpha, beta };
        let root = SolverRoot {
            target,
            alpha,
            beta,
            residual,
        };
        match roots.iter_mut().find(|r| {
            Homogeneous {
                alpha: r.alpha,
                beta: r.beta,
            }
            .chordal_distance(&h)
                < newton::DEDUP_DISTANCE
        }) {
            Some(existing) if existing.residual > residual => *existing = root,
            Some(_) => {}
            None => roots.push(root),
        }
    }
    if roots.is_empty() {
        return Err(Error::NoRootFound);
    }
    roots.sort_by(|x, y| {
        x.residual.total_cmp(&y.residual).then_with(|| {
            let zx = x.z().unwrap_or(Complex64::new(f64::INFINITY, 0.0));
            let zy = y.z().unwrap_or(Complex64::new(f64::INFINITY, 0.0));
            zx.re.total_cmp(&zy.re).then(zx.im.total_cmp(&zy.im))
        })
    });
    Ok(roots)
}

/// Standard-form parameters together with the transform that produces them.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct CanonicalForm {
    pub r: f64,
    pub s: f64,
    pub t: f64,
    /// In `[0, 2π/3)`.
    pub phi: f64,
    /// Maps the input state onto the standard form.
    pub transform: ModeTransform,
    /// Modulus of the eliminated `|011>` coefficient.
    pub residual: f64,
}

impl CanonicalForm {
    /// The standard-form state itself.
    pub fn state(&self) -> Result<ThreeBosonState> {
        ThreeBosonState::from_standard_form(self.r, self.s, self.t, self.phi)
    }

    pub fn param_point(&self) -> ParamPoint {
        ParamPoint::new(self.r, self.s, self.t, self.phi)
    }

    /// Maps the standard form back through the inverse transform.
    pub fn reconstruct(&self) -> Result<ThreeBosonState> {
        apply_mode_transform(&self.state()?, &self.transform.adjoint())
    }

    /// Distance between the reconstruction and `input`, up to global phase.
    pub fn reconstruction_error(&self, input: &ThreeBosonState) -> Result<f64> {
        Ok(self.reconstruct()?.distance_up_to_phase(input))
    }

    pub fn norm_defect(&self) -> f64 {
        (self.r * self.r + 3.0 * self.s * self.s + self.t * self.t - 1.0).abs()
    }

    /// Selection order between candidates: a `t = 0` representative first,
    /// then larger `r`, larger `t`, smaller `φ`.
    fn preference(&self, other: &CanonicalForm) -> Ordering {
        let self_w = self.t < crate::DEFAULT_EPSILON;
        let other_w = other.t < crate::DEFAULT_EPSILON;
        if self_w != other_w {
            return if self_w {
                Ordering::Less
            } else {
                Ordering::Greater
            };
        }
        let tied = |x: f64, y: f64| (x - y).abs() <= TIE_TOLERANCE;
        if !tied(self.r, other.r) {
            return other.r.total_cmp(&self.r);
        }
        if !tied(self.t, other.t) {
            return other.t.total_cmp(&self.t);
        }
        if !tied(self.phi, other.phi) {
            return self.phi.total_cmp(&other.phi);
        }
        Ordering::Equal
    }
}

/// Applies diagonal phases after an elimination so that `r, t >= 0` and
/// `φ ∈ [0, 2π/3)`.
fn standardize(
    input: &ThreeBosonState,
    eliminated: &ThreeBosonState,
    transform: ModeTransform,
) -> Result<CanonicalForm> {
    let (a, b, d) = (eliminated.a(), eliminated.b(), eliminated.d());
    let (r, s, t) = (a.norm(), b.norm(), d.norm());
    let (chi0, chi1) = if s < PHASE_TINY {
        let chi0 = if r >= PHASE_TINY { -a.arg() / 3.0 } else { 0.0 };
        let chi1 = if t >= PHASE_TINY { -d.arg() / 3.0 } else { 0.0 };
        (chi0, chi1)
    } else if r < PHASE_TINY {
        // The |000> phase is free: spend it on making s e^{iφ} real.
        let chi1 = if t >= PHASE_TINY { -d.arg() / 3.0 } else { 0.0 };
        ((-b.arg() - chi1) / 2.0, chi1)
    } else if t < PHASE_TINY {
        let chi0 = -a.arg() / 3.0;
        (chi0, -b.arg() - 2.0 * chi0)
    } else {
        let chi0 = -a.arg() / 3.0;
        let chi1 = -d.arg() / 3.0;
        // Cube-root branches of e^{3iχ1} shift φ by multiples of 2π/3.
        let phi0 = b.arg() + 2.0 * chi0 + chi1;
        let turns = ((phi0 + 1e-12) / THIRD_TURN).floor();
        (chi0, chi1 - turns * THIRD_TURN)
    };
    let total = ModeTransform::phases(chi0, chi1).compose(&transform);
    let fin = apply_mode_transform(input, &total)?;
    let (r, s, t) = (fin.a().norm(), fin.b().norm(), fin.d().norm());
    let phi = if s < PHASE_TINY || r < PHASE_TINY || t < PHASE_TINY {
        0.0
    } else {
        let p = fin.b().arg();
        // A value a hair below zero is the same point as the 2π/3 boundary.
        if p < 0.0 && p > -1e-9 {
            0.0
        } else {
            num_traits::Euclid::rem_euclid(&p, &(2.0 * PI)).min(THIRD_TURN - f64::EPSILON)
        }
    };
    Ok(CanonicalForm {
        r,
        s,
        t,
        phi,
        transform: total,
        residual: fin.c().norm(),
    })
}

/// `det ρ₁` at or below which a state is treated as a product `x⊗x⊗x`.
///
/// Product states make `|011>` vanish on a double root, which Newton only
/// resolves to about `sqrt(f64::EPSILON)`; the leftover `s` would then exceed
/// the classification threshold. `det ρ₁` is quadratic in the distance to the
/// nearest product, so this cutoff corresponds to a distance of ~3e-8.
pub const PRODUCT_DETERMINANT_TOLERANCE: f64 = 1e-15;

/// For a product state, the unitary sending its single-particle vector to `|0>`.
fn product_alignment(state: &ThreeBosonState) -> Option<ModeTransform> {
    let rho = reduced_density_one(state);
    if rho.determinant() > PRODUCT_DETERMINANT_TOLERANCE {
        return None;
    }
    let lambda = rho.eigenvalues()[1];
    let (p, q, r) = (rho.rho[(0, 0)].re, rho.rho[(0, 1)], rho.rho[(1, 1)].re);
    let v1 = [q, Complex64::new(lambda - p, 0.0)];
    let v2 = [Complex64::new(lambda - r, 0.0), q.conj()];
    let norm_sqr = |v: &[Complex64; 2]| v[0].norm_sqr() + v[1].norm_sqr();
    let v = if norm_sqr(&v1) >= norm_sqr(&v2) {
        v1
    } else {
        v2
    };
    let n = norm_sqr(&v).sqrt();
    let (x0, x1) = (v[0] / n, v[1] / n);
    ModeTransform::new(x0.conj(), x1.conj(), -x1, x0).ok()
}

/// Reduces `state` to its standard form.
///
/// Every root that zeros the `|011>` coefficient yields a candidate; the
/// representative is chosen deterministically (see [`CanonicalForm`]'s
/// selection order), so that W-type states always land on `t = 0`.
pub fn canonicalize(state: &ThreeBosonState) -> Result<CanonicalForm> {
    if let Some(u) = product_alignment(state) {
        let aligned = apply_mode_transform(state, &u)?;
        return standardize(state, &aligned, u);
    }
    let roots = eliminate_coefficient(state, EliminationTarget::Coeff011)?;
    let mut best: Option<CanonicalForm> = None;
    for root in roots {
        let u = root.transform();
        let eliminated = apply_mode_transform(state, &u)?;
        let candidate = standardize(state, &eliminated, u)?;
        best = match best {
            Some(current) if current.preference(&candidate) != Ordering::Greater => Some(current),
            _ => Some(candidate),
        };
    }
    best.ok_or(Error::NoRootFound)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub enum EntanglementClass {
    Unentangled,
    W,
    GHZ,
}

/// Entanglement type from standard-form parameters.
///
/// `s < ε` with `r < ε` or `t < ε` is a product state; `t < ε <= s` is
/// W-type; everything else is GHZ-type.
pub fn classify(form: &CanonicalForm, epsilon: f64) -> EntanglementClass {
    if form.s < epsilon && (form.r < epsilon || form.t < epsilon) {
        EntanglementClass::Unentangled
    } else if form.t < epsilon {
        EntanglementClass::W
    } else {
        EntanglementClass::GHZ
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::state::{random_mode_transform, random_state};
    use approx::assert_abs_diff_eq;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn form(r: f64, s: f64, t: f64) -> CanonicalForm {
        CanonicalForm {
            r,
            s,
            t,
            phi: 0.0,
            transform: ModeTransform::identity(),
            residual: 0.0,
        }
    }

    #[test]
    fn ghz_cubic_roots_are_cube_roots_of_unity() {
        let roots =
            eliminate_coefficient(&ThreeBosonState::ghz(), EliminationTarget::Coeff000).unwrap();
        let finite: Vec<Complex64> = roots.iter().filter_map(|r| r.z()).collect();
        assert_eq!(finite.len(), 3);
        for z in finite {
            assert!((z * z * z - 1.0).norm() < 1e-13, "{z}");
        }
    }

    #[test]
    fn cubic_targets_on_random_states() {
        for seed in 0..100 {
            let s = random_state(seed);
            for target in [EliminationTarget::Coeff000, EliminationTarget::Coeff111] {
                let roots = eliminate_coefficient(&s, target).unwrap();
                assert_eq!(roots.len(), 3, "seed {seed} {target:?}");
                assert!(roots.iter().all(|r| r.residual <= 1e-12));
            }
        }
    }

    #[test]
    fn vanishing_leading_coefficient_gives_root_at_infinity() {
        // d = 0: α = 0 zeros the |000> coefficient.
        let s = ThreeBosonState::new(c(0.5), c(0.3), c(0.2), c(0.0)).unwrap();
        let roots = eliminate_coefficient(&s, EliminationTarget::Coeff000).unwrap();
        assert!(roots.iter().any(|r| r.z().is_none()));
    }

    #[test]
    fn mixed_target_already_zero() {
        // c = 0: the identity (β = 0, z at infinity) is a root.
        let s = ThreeBosonState::new(c(0.6), Complex64::new(0.2, 0.1), c(0.0), c(0.4)).unwrap();
        let roots = eliminate_coefficient(&s, EliminationTarget::Coeff011).unwrap();
        assert!(roots.iter().any(|r| r.beta.norm() < 1e-12));
        // b = 0: z = 0 (the mode swap) is a root.
        let s = ThreeBosonState::new(c(0.6), c(0.0), Complex64::new(0.2, 0.1), c(0.4)).unwrap();
        let roots = eliminate_coefficient(&s, EliminationTarget::Coeff011).unwrap();
        assert!(roots
            .iter()
            .any(|r| r.z().is_some_and(|z| z.norm() < 1e-10)));
    }

    #[test]
    fn coeff100_roots() {
        for seed in 0..20 {
            let s = random_state(seed);
            let roots = eliminate_coefficient(&s, EliminationTarget::Coeff100).unwrap();
            for r in roots {
                let b = apply_mode_transform(&s, &r.transform()).unwrap().b();
                assert!(b.norm() <= 1e-12);
            }
        }
    }

    #[test]
    fn ghz_is_already_standard() {
        let f = canonicalize(&ThreeBosonState::ghz()).unwrap();
        let h = core::f64::consts::FRAC_1_SQRT_2;
        assert_abs_diff_eq!(f.r, h, epsilon = 1e-12);
        assert_abs_diff_eq!(f.s, 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(f.t, h, epsilon = 1e-12);
        assert_eq!(f.phi, 0.0);
        assert_eq!(classify(&f, 1e-9), EntanglementClass::GHZ);
    }

    #[test]
    fn w_state_keeps_t_zero() {
        let f = canonicalize(&ThreeBosonState::w()).unwrap();
        assert_abs_diff_eq!(f.r, 0.0, epsilon = 1e-10);
        assert_abs_diff_eq!(f.s, 1.0 / 3f64.sqrt(), epsilon = 1e-10);
        assert_abs_diff_eq!(f.t, 0.0, epsilon = 1e-10);
        assert_eq!(classify(&f, 1e-9), EntanglementClass::W);
        let rotated =
            apply_mode_transform(&ThreeBosonState::w(), &random_mode_transform(3)).unwrap();
        let g = canonicalize(&rotated).unwrap();
        assert_eq!(classify(&g, 1e-9), EntanglementClass::W);
        assert_abs_diff_eq!(g.s, f.s, epsilon = 1e-8);
    }

    #[test]
    fn product_state_canonicalizes_to_000() {
        let q = 1.0 / (2.0 * 2f64.sqrt());
        let s = ThreeBosonState::new(c(q), c(q), c(q), c(q)).unwrap();
        let f = canonicalize(&s).unwrap();
        assert_abs_diff_eq!(f.r, 1.0, epsilon = 1e-10);
        assert!(f.s < 1e-8 && f.t < 1e-8);
        assert_eq!(classify(&f, 1e-9), EntanglementClass::Unentangled);
    }

    #[test]
    fn random_states_reconstruct() {
        for seed in 0..100 {
            let s = random_state(seed);
            let f = canonicalize(&s).unwrap();
            assert!(f.residual <= 1e-10);
            assert!(f.norm_defect() <= 1e-10);
            assert!((0.0..THIRD_TURN).contains(&f.phi), "{}", f.phi);
            assert!(f.reconstruction_error(&s).unwrap() <= 1e-8);
            assert_eq!(classify(&f, 1e-9), EntanglementClass::GHZ);
        }
    }

    #[test]
    fn classification_table() {
        let h = core::f64::consts::FRAC_1_SQRT_2;
        assert_eq!(classify(&form(h, 0.0, h), 1e-9), EntanglementClass::GHZ);
        assert_eq!(
            classify(&form(0.0, 1.0 / 3f64.sqrt(), 0.0), 1e-9),
            EntanglementClass::W
        );
        assert_eq!(
            classify(&form(1.0, 0.0, 0.0), 1e-9),
            EntanglementClass::Unentangled
        );
        assert_eq!(
            classify(&form(0.0, 0.0, 1.0), 1e-9),
            EntanglementClass::Unentangled
        );
        assert_eq!(classify(&form(0.5, 0.5, 0.0), 1e-9), EntanglementClass::W);
        assert_eq!(classify(&form(0.0, 0.5, 0.5), 1e-9), EntanglementClass::GHZ);
        assert_eq!(classify(&form(0.6, 0.3, 0.6), 1e-9), EntanglementClass::GHZ);
    }
}

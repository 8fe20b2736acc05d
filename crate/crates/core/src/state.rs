//! Three-boson two-mode pure states, single-particle mode transforms and
//! reduced density matrices.
//!
//! A state is stored as the four symmetric amplitudes `(a, b, c, d)` that
//! multiply the *unnormalized* symmetric sums
//!
//! ```text
//! a|000> + b(|100>+|010>+|001>) + c(|011>+|101>+|110>) + d|111>
//! ```
//!
//! so the norm is `|a|^2 + 3|b|^2 + 3|c|^2 + |d|^2`. The `sqrt(3)` factors of
//! the occupation-number basis live only in [`FockAmplitudes`].

use core::f64::consts::PI;

use nalgebra::{Matrix2, Matrix4};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::{Error, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const SQRT3: f64 = 1.732_050_807_568_877_2;

/// Smallest squared norm accepted by [`make_state`].
pub const MIN_NORM_SQR: f64 = 1e-14;

/// Largest allowed deviation of `U^dagger U` from the identity.
pub const UNITARITY_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThreeBosonState {
    a: Complex64,
    b: Complex64,
    c: Complex64,
    d: Complex64,
}

/// Builds a state from its symmetric amplitudes, rescaled to unit norm.
pub fn make_state(
    a: Complex64,
    b: Complex64,
    c: Complex64,
    d: Complex64,
) -> Result<ThreeBosonState> {
    let norm_sqr = a.norm_sqr() + 3.0 * b.norm_sqr() + 3.0 * c.norm_sqr() + d.norm_sqr();
    if !(norm_sqr > MIN_NORM_SQR) || !norm_sqr.is_finite() {
        return Err(Error::ZeroState);
    }
    let scale = 1.0 / norm_sqr.sqrt();
    Ok(ThreeBosonState {
        a: a * scale,
        b: b * scale,
        c: c * scale,
        d: d * scale,
    })
}

impl ThreeBosonState {
    pub fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Result<Self> {
        make_state(a, b, c, d)
    }

    /// `r|000> + s e^{i phi}(|100>+|010>+|001>) + t|111>`, renormalized.
    pub fn from_standard_form(r: f64, s: f64, t: f64, phi: f64) -> Result<Self> {
        make_state(
            Complex64::new(r, 0.0),
            Complex64::from_polar(s, phi),
            ZERO,
            Complex64::new(t, 0.0),
        )
    }

    /// The `|000>` state.
    pub fn all_zero() -> Self {
        ThreeBosonState {
            a: Complex64::new(1.0, 0.0),
            b: ZERO,
            c: ZERO,
            d: ZERO,
        }
    }

    /// `(|000> + |111>)/sqrt(2)`.
    pub fn ghz() -> Self {
        let h = Complex64::new(core::f64::consts::FRAC_1_SQRT_2, 0.0);
        ThreeBosonState {
            a: h,
            b: ZERO,
            c: ZERO,
            d: h,
        }
    }

    /// `(|100> + |010> + |001>)/sqrt(3)`.
    pub fn w() -> Self {
        ThreeBosonState {
            a: ZERO,
            b: Complex64::new(1.0 / SQRT3, 0.0),
            c: ZERO,
            d: ZERO,
        }
    }

    /// `(x|0> + y|1>)^{⊗3}`, normalized.
    pub fn product(x: Complex64, y: Complex64) -> Result<Self> {
        make_state(x * x * x, x * x * y, x * y * y, y * y * y)
    }

    pub fn a(&self) -> Complex64 {
        self.a
    }

    pub fn b(&self) -> Complex64 {
        self.b
    }

    pub fn c(&self) -> Complex64 {
        self.c
    }

    pub fn d(&self) -> Complex64 {
        self.d
    }

    pub fn amplitudes(&self) -> [Complex64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.a.norm_sqr() + 3.0 * self.b.norm_sqr() + 3.0 * self.c.norm_sqr() + self.d.norm_sqr()
    }

    /// Inner product `<self|other>` in the three-particle tensor space.
    pub fn inner(&self, other: &ThreeBosonState) -> Complex64 {
        self.a.conj() * other.a
            + self.b.conj() * other.b * 3.0
            + self.c.conj() * other.c * 3.0
            + self.d.conj() * other.d
    }

    /// Euclidean distance to `other` after removing the optimal global phase.
    pub fn distance_up_to_phase(&self, other: &ThreeBosonState) -> f64 {
        let overlap = self.inner(other);
        let phase = if overlap.norm() > 0.0 {
            overlap.conj() / overlap.norm()
        } else {
            Complex64::new(1.0, 0.0)
        };
        let diff = ThreeBosonState {
            a: self.a - other.a * phase,
            b: self.b - other.b * phase,
            c: self.c - other.c * phase,
            d: self.d - other.d * phase,
        };
        diff.norm_sqr().sqrt()
    }

    pub fn to_fock(&self) -> FockAmplitudes {
        FockAmplitudes {
            f: [self.a, self.b * SQRT3, self.c * SQRT3, self.d],
        }
    }

    pub fn from_fock(fock: &FockAmplitudes) -> Result<Self> {
        let [f0, f1, f2, f3] = fock.f;
        make_state(f0, f1 / SQRT3, f2 / SQRT3, f3)
    }
}

/// Amplitudes on the occupation-number states `|3,0>, |2,1>, |1,2>, |0,3>`,
/// indexed by the number of bosons in mode 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FockAmplitudes {
    pub f: [Complex64; 4],
}

impl FockAmplitudes {
    pub fn norm_sqr(&self) -> f64 {
        self.f.iter().map(|x| x.norm_sqr()).sum()
    }
}

/// A 2x2 matrix acting on single-particle amplitude vectors.
///
/// Column `j` is the image of mode `|j>`, so a state transforms as
/// `psi' = (U ⊗ U ⊗ U) psi`. The basis change `|0> -> α|0> + β|1>`,
/// `|1> -> -β*|0> + α*|1>` is [`ModeTransform::from_alpha_beta`].
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ModeTransform {
    pub u00: Complex64,
    pub u01: Complex64,
    pub u10: Complex64,
    pub u11: Complex64,
}

impl ModeTransform {
    /// Checked constructor; rejects matrices that are not unitary within
    /// [`UNITARITY_TOLERANCE`].
    pub fn new(u00: Complex64, u01: Complex64, u10: Complex64, u11: Complex64) -> Result<Self> {
        let m = ModeTransform { u00, u01, u10, u11 };
        let defect = m.unitarity_defect();
        if !(defect <= UNITARITY_TOLERANCE) {
            return Err(Error::NonUnitary(defect));
        }
        Ok(m)
    }

    pub fn identity() -> Self {
        let one = Complex64::new(1.0, 0.0);
        ModeTransform {
            u00: one,
            u01: ZERO,
            u10: ZERO,
            u11: one,
        }
    }

    /// The SU(2) element with columns `(α, β)` and `(-β*, α*)`.
    /// The caller is responsible for `|α|^2 + |β|^2 = 1`.
    pub fn from_alpha_beta(alpha: Complex64, beta: Complex64) -> Self {
        ModeTransform {
            u00: alpha,
            u01: -beta.conj(),
            u10: beta,
            u11: alpha.conj(),
        }
    }

    /// `diag(e^{i chi0}, e^{i chi1})`.
    pub fn phases(chi0: f64, chi1: f64) -> Self {
        ModeTransform {
            u00: Complex64::from_polar(1.0, chi0),
            u01: ZERO,
            u10: ZERO,
            u11: Complex64::from_polar(1.0, chi1),
        }
    }

    pub fn alpha(&self) -> Complex64 {
        self.u00
    }

    pub fn beta(&self) -> Complex64 {
        self.u10
    }

    pub fn matrix(&self) -> Matrix2<Complex64> {
        Matrix2::new(self.u00, self.u01, self.u10, self.u11)
    }

    fn from_matrix(m: &Matrix2<Complex64>) -> Self {
        ModeTransform {
            u00: m[(0, 0)],
            u01: m[(0, 1)],
            u10: m[(1, 0)],
            u11: m[(1, 1)],
        }
    }

    /// `self · other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &ModeTransform) -> ModeTransform {
        Self::from_matrix(&(self.matrix() * other.matrix()))
    }

    pub fn adjoint(&self) -> ModeTransform {
        Self::from_matrix(&self.matrix().adjoint())
    }

    /// Max-entry deviation of `U^dagger U` from the identity.
    pub fn unitarity_defect(&self) -> f64 {
        let m = self.matrix();
        let p = m.adjoint() * m - Matrix2::identity();
        p.iter().map(|x| x.norm()).fold(0.0, f64::max)
    }

    fn entry(&self, row: usize, col: usize) -> Complex64 {
        match (row, col) {
            (0, 0) => self.u00,
            (0, 1) => self.u01,
            (1, 0) => self.u10,
            _ => self.u11,
        }
    }
}

/// The eight first-quantized amplitudes, indexed by the bit string of the
/// three particles with particle 1 as the most significant bit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QubitExpansion {
    pub amplitudes: [Complex64; 8],
}

impl QubitExpansion {
    pub fn amplitude(&self, bits: usize) -> Complex64 {
        self.amplitudes[bits]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|x| x.norm_sqr()).sum()
    }

    /// Projects onto the symmetric subspace and renormalizes.
    pub fn to_state(&self) -> Result<ThreeBosonState> {
        let q = &self.amplitudes;
        let third = 1.0 / 3.0;
        make_state(
            q[0],
            (q[1] + q[2] + q[4]) * third,
            (q[3] + q[5] + q[6]) * third,
            q[7],
        )
    }
}

pub fn to_qubit_expansion(state: &ThreeBosonState) -> QubitExpansion {
    let mut amplitudes = [ZERO; 8];
    for (bits, amp) in amplitudes.iter_mut().enumerate() {
        *amp = match bits.count_ones() {
            0 => state.a,
            1 => state.b,
            2 => state.c,
            _ => state.d,
        };
    }
    QubitExpansion { amplitudes }
}

pub fn from_qubit_expansion(expansion: &QubitExpansion) -> Result<ThreeBosonState> {
    expansion.to_state()
}

fn bit(index: usize, particle: usize) -> usize {
    (index >> (2 - particle)) & 1
}

/// `(U ⊗ U ⊗ U) psi` on the qubit expansion.
pub fn apply_to_expansion(u: &ModeTransform, expansion: &QubitExpansion) -> QubitExpansion {
    let mut out = [ZERO; 8];
    for (row, dst) in out.iter_mut().enumerate() {
        let mut acc = ZERO;
        for (col, amp) in expansion.amplitudes.iter().enumerate() {
            let w = u.entry(bit(row, 0), bit(col, 0))
                * u.entry(bit(row, 1), bit(col, 1))
                * u.entry(bit(row, 2), bit(col, 2));
            acc += w * amp;
        }
        *dst = acc;
    }
    QubitExpansion { amplitudes: out }
}

/// Expresses `state` in the single-particle basis rotated by `u`.
///
/// This is the tensor-product path and the reference for every other
/// transform computation in the crate.
pub fn apply_mode_transform(state: &ThreeBosonState, u: &ModeTransform) -> Result<ThreeBosonState> {
    let defect = u.unitarity_defect();
    if !(defect <= UNITARITY_TOLERANCE) {
        return Err(Error::NonUnitary(defect));
    }
    let q = apply_to_expansion(u, &to_qubit_expansion(state)).amplitudes;
    let third = 1.0 / 3.0;
    Ok(ThreeBosonState {
        a: q[0],
        b: (q[1] + q[2] + q[4]) * third,
        c: (q[3] + q[5] + q[6]) * third,
        d: q[7],
    })
}

/// The transformed `|000>, |111>, |011>, |100>` coefficients evaluated from
/// the closed expressions in `α, β` exactly as they are usually printed,
/// including the `-d α* β*^2` term on `|011>`.
///
/// Only used to audit the printed expressions against
/// [`apply_mode_transform`]; the `|011>` entry differs from the tensor path
/// whenever `d != 0`.
pub fn printed_transform_coefficients(
    state: &ThreeBosonState,
    alpha: Complex64,
    beta: Complex64,
) -> [Complex64; 4] {
    let (a, b, c, d) = (state.a, state.b, state.c, state.d);
    let (al, be) = (alpha, beta);
    let (alc, bec) = (alpha.conj(), beta.conj());
    let c000 =
        a * al * al * al - d * bec * bec * bec - b * bec * al * al * 3.0 + c * al * bec * bec * 3.0;
    let c111 =
        a * be * be * be + d * alc * alc * alc + b * alc * be * be * 3.0 + c * be * alc * alc * 3.0;
    let c011 = a * al * be * be - d * alc * bec * bec - b * bec * be * be
        + c * al * alc * alc
        + b * al * alc * be * 2.0
        - c * be * bec * alc * 2.0;
    let c100 = a * be * al * al + d * alc * bec * bec + b * alc * al * al + c * be * bec * bec
        - b * be * bec * al * 2.0
        - c * alc * al * bec * 2.0;
    [c000, c111, c011, c100]
}

/// Two-particle reduced density matrix over the basis `{00, 01, 10, 11}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairDensity {
    pub rho: Matrix4<Complex64>,
    pub trace: f64,
}

impl PairDensity {
    fn from_matrix(rho: Matrix4<Complex64>) -> Self {
        let trace = rho.trace().re;
        PairDensity { rho, trace }
    }

    /// Max-entry deviation from Hermiticity.
    pub fn hermiticity_defect(&self) -> f64 {
        (self.rho - self.rho.adjoint())
            .iter()
            .map(|x| x.norm())
            .fold(0.0, f64::max)
    }

    /// Ascending eigenvalues.
    pub fn eigenvalues(&self) -> [f64; 4] {
        crate::linalg::hermitian_eigen4(&self.rho).0
    }

    /// Weight outside `span{|00>, (|01>+|10>)/sqrt(2), |11>}`, i.e. on the singlet.
    pub fn singlet_weight(&self) -> f64 {
        let s = core::f64::consts::FRAC_1_SQRT_2;
        let v = [ZERO, Complex64::new(s, 0.0), Complex64::new(-s, 0.0), ZERO];
        let mut acc = ZERO;
        for i in 0..4 {
            for j in 0..4 {
                acc += v[i].conj() * self.rho[(i, j)] * v[j];
            }
        }
        acc.re
    }
}

/// One-particle reduced density matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SingleDensity {
    pub rho: Matrix2<Complex64>,
}

impl SingleDensity {
    pub fn trace(&self) -> f64 {
        self.rho.trace().re
    }

    pub fn determinant(&self) -> f64 {
        (self.rho[(0, 0)] * self.rho[(1, 1)] - self.rho[(0, 1)] * self.rho[(1, 0)]).re
    }

    /// Ascending eigenvalues.
    pub fn eigenvalues(&self) -> [f64; 2] {
        let tr = self.trace();
        let disc = (0.25 * tr * tr - self.determinant()).max(0.0).sqrt();
        [0.5 * tr - disc, 0.5 * tr + disc]
    }
}

/// Partial trace of `|psi><psi|` over particle 3.
pub fn reduced_density_two(state: &ThreeBosonState) -> PairDensity {
    let q = to_qubit_expansion(state).amplitudes;
    let mut rho = Matrix4::zeros();
    for row in 0..4 {
        for col in 0..4 {
            let mut acc = ZERO;
            for k in 0..2 {
                acc += q[2 * row + k] * q[2 * col + k].conj();
            }
            rho[(row, col)] = acc;
        }
    }
    PairDensity::from_matrix(rho)
}

/// Applies a mode annihilator to an `n`-boson Fock vector indexed by the
/// occupation of mode 1. Returns the `n - 1` boson vector.
fn annihilate(v: &[Complex64], mode: usize) -> ([Complex64; 4], usize) {
    let n = v.len() - 1;
    let mut out = [ZERO; 4];
    for (k, amp) in v.iter().enumerate() {
        let (n0, n1) = (n - k, k);
        match mode {
            0 if n0 > 0 => out[k] += *amp * (n0 as f64).sqrt(),
            1 if n1 > 0 => out[k - 1] += *amp * (n1 as f64).sqrt(),
            _ => {}
        }
    }
    (out, n)
}

fn annihilate_pair(f: &[Complex64; 4], first: usize, second: usize) -> [Complex64; 2] {
    let (once, len) = annihilate(f, first);
    let (twice, _) = annihilate(&once[..len], second);
    [twice[0], twice[1]]
}

/// The same matrix as [`reduced_density_two`], built from second-quantized
/// expectation values `<a_k^† a_l^† a_j a_i> / N(N-1)` on the Fock amplitudes.
pub fn reduced_density_two_fock(state: &ThreeBosonState) -> PairDensity {
    let f = state.to_fock().f;
    let mut lowered = [[ZERO; 2]; 4];
    for (idx, slot) in lowered.iter_mut().enumerate() {
        let (i, j) = (idx >> 1, idx & 1);
        // a_j a_i |psi>
        *slot = annihilate_pair(&f, i, j);
    }
    let mut rho = Matrix4::zeros();
    for row in 0..4 {
        for col in 0..4 {
            let ket = &lowered[row];
            let bra = &lowered[col];
            let overlap = bra[0].conj() * ket[0] + bra[1].conj() * ket[1];
            rho[(row, col)] = overlap / 6.0;
        }
    }
    PairDensity::from_matrix(rho)
}

/// Partial trace of `|psi><psi|` over particles 2 and 3.
pub fn reduced_density_one(state: &ThreeBosonState) -> SingleDensity {
    let q = to_qubit_expansion(state).amplitudes;
    let mut rho = Matrix2::zeros();
    for row in 0..2 {
        for col in 0..2 {
            let mut acc = ZERO;
            for rest in 0..4 {
                acc += q[4 * row + rest] * q[4 * col + rest].conj();
            }
            rho[(row, col)] = acc;
        }
    }
    SingleDensity { rho }
}

/// Haar-random state: standard normal Fock components, normalized.
pub fn random_state(seed: u64) -> ThreeBosonState {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut f = [ZERO; 4];
        for amp in f.iter_mut() {
            let re: f64 = rng.sample(StandardNormal);
            let im: f64 = rng.sample(StandardNormal);
            *amp = Complex64::new(re, im);
        }
        if let Ok(state) = ThreeBosonState::from_fock(&FockAmplitudes { f }) {
            return state;
        }
    }
}

/// Haar-random SU(2) element `α = cos χ e^{iφ1}`, `β = sin χ e^{iφ2}` with
/// `cos^2 χ` uniform on `[0, 1]`.
pub fn random_mode_transform(seed: u64) -> ModeTransform {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(1);
    let weight: f64 = rng.random();
    let phi1: f64 = rng.random::<f64>() * 2.0 * PI;
    let phi2: f64 = rng.random::<f64>() * 2.0 * PI;
    let alpha = Complex64::from_polar(weight.sqrt(), phi1);
    let beta = Complex64::from_polar((1.0 - weight).sqrt(), phi2);
    ModeTransform::from_alpha_beta(alpha, beta)
}

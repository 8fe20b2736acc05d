//! Pure states of three identical bosons in two modes.
//!
//! The crate canonicalizes states to the form
//! `r|000> + s e^{iφ}(|100>+|010>+|001>) + t|111>`, classifies them as
//! unentangled, W-type or GHZ-type, and evaluates the pairwise concurrence,
//! the three-tangle and the spin squeezing parameter. Every closed-form
//! expression has an independent brute-force counterpart computed on the
//! eight-amplitude first-quantized expansion.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod canonical;
pub mod decompose;
mod error;
mod linalg;
pub mod measures;
mod newton;
mod poly;
pub mod squeezing;
pub mod state;

pub use canonical::{
    canonicalize, classify, eliminate_coefficient, CanonicalForm, EliminationTarget,
    EntanglementClass, SolverRoot,
};
pub use decompose::{decompose_ghz, decompose_w, DecompositionKind, DecompositionPair};
pub use error::Error;
pub use measures::{
    bipartite_concurrence, concurrence_closed, concurrence_wootters, report, report_with_epsilon,
    tau_ckw, tau_closed, tau_hyperdeterminant, EntanglementReport, ParamPoint, ReportFlag,
    WoottersSpectrum,
};
pub use squeezing::{
    abc_coefficients, build_frame, full_sphere_min, mean_spin, variance_at_theta, xi_closed,
    xi_direct, xi_special, AbcCoefficients, Frame, SliceKind, SpinVector, SqueezingMethod,
    SqueezingResult,
};
pub use state::{
    apply_mode_transform, make_state, random_mode_transform, random_state, reduced_density_one,
    reduced_density_two, to_qubit_expansion, FockAmplitudes, ModeTransform, PairDensity,
    QubitExpansion, SingleDensity, ThreeBosonState,
};

pub use num_complex::Complex64;

pub type Result<T> = core::result::Result<T, Error>;

/// Default zero threshold used by classification and frame construction.
pub const DEFAULT_EPSILON: f64 = 1e-9;

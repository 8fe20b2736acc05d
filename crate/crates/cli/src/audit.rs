//! Randomized cross-checks of every closed form against its oracle.
//!
//! Trial `i` draws its state and transform from seeds derived from
//! `(seed, i)` alone, trials run on the rayon pool and are merged in index
//! order, so the report does not depend on the number of workers.

use std::f64::consts::PI;

use rayon::prelude::*;
use serde::Serialize;
use triboson_core::measures::tau_closed;
use triboson_core::squeezing::variance_at_theta_direct;
use triboson_core::{
    apply_mode_transform, canonicalize, classify, concurrence_closed, concurrence_wootters,
    random_mode_transform, random_state, report, tau_ckw, tau_hyperdeterminant, variance_at_theta,
    xi_closed, xi_direct, EntanglementClass, ThreeBosonState, DEFAULT_EPSILON,
};

use crate::CliError;

pub const MAX_DISCREPANCY_RECORDS: usize = 100;
pub const MAX_VIOLATION_RECORDS: usize = 100;
/// Closed-vs-oracle concurrence gaps above this are recorded.
pub const DISCREPANCY_TOLERANCE: f64 = 1e-6;

/// One bound per assertable identity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Residuals {
    pub canonical_residual: f64,
    pub reconstruction: f64,
    pub oracle_ckw: f64,
    pub tau_closed_vs_hyperdeterminant: f64,
    pub variance_closed_vs_oracle: f64,
    pub xi_closed_vs_direct: f64,
    pub rotation_invariance: f64,
}

pub const THRESHOLDS: Residuals = Residuals {
    canonical_residual: 1e-10,
    reconstruction: 1e-8,
    oracle_ckw: 1e-9,
    tau_closed_vs_hyperdeterminant: 1e-9,
    variance_closed_vs_oracle: 1e-10,
    xi_closed_vs_direct: 1e-8,
    rotation_invariance: 1e-9,
};

impl Residuals {
    const ZERO: Residuals = Residuals {
        canonical_residual: 0.0,
        reconstruction: 0.0,
        oracle_ckw: 0.0,
        tau_closed_vs_hyperdeterminant: 0.0,
        variance_closed_vs_oracle: 0.0,
        xi_closed_vs_direct: 0.0,
        rotation_invariance: 0.0,
    };

    fn entries(&self) -> [(&'static str, f64); 7] {
        [
            ("canonicalResidual", self.canonical_residual),
            ("reconstruction", self.reconstruction),
            ("oracleCkw", self.oracle_ckw),
            (
                "tauClosedVsHyperdeterminant",
                self.tau_closed_vs_hyperdeterminant,
            ),
            ("varianceClosedVsOracle", self.variance_closed_vs_oracle),
            ("xiClosedVsDirect", self.xi_closed_vs_direct),
            ("rotationInvariance", self.rotation_invariance),
        ]
    }

    fn max(&self, other: &Residuals) -> Residuals {
        Residuals {
            canonical_residual: self.canonical_residual.max(other.canonical_residual),
            reconstruction: self.reconstruction.max(other.reconstruction),
            oracle_ckw: self.oracle_ckw.max(other.oracle_ckw),
            tau_closed_vs_hyperdeterminant: self
                .tau_closed_vs_hyperdeterminant
                .max(other.tau_closed_vs_hyperdeterminant),
            variance_closed_vs_oracle: self
                .variance_closed_vs_oracle
                .max(other.variance_closed_vs_oracle),
            xi_closed_vs_direct: self.xi_closed_vs_direct.max(other.xi_closed_vs_direct),
            rotation_invariance: self.rotation_invariance.max(other.rotation_invariance),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct DiscrepancyRecord {
    /// Trial index, absent for the fixed reference record.
    pub trial: Option<usize>,
    pub r: f64,
    pub s: f64,
    pub t: f64,
    pub phi: f64,
    pub concurrence_closed: f64,
    pub concurrence_oracle: f64,
    pub ckw_residual_closed: f64,
    pub ckw_residual_oracle: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Violation {
    pub trial: usize,
    pub invariant: String,
    /// Absent when the trial could not be evaluated at all.
    pub value: Option<f64>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ClassCounts {
    pub unentangled: usize,
    pub w: usize,
    pub ghz: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AuditReport {
    pub trial_count: usize,
    pub seed: u64,
    pub passed: bool,
    pub max_residuals: Residuals,
    pub thresholds: Residuals,
    pub violation_count: usize,
    pub violations: Vec<Violation>,
    pub class_counts: ClassCounts,
    /// The W point, where the closed concurrence is known to disagree.
    pub w_reference: DiscrepancyRecord,
    pub discrepancy_count: usize,
    pub discrepancy_records: Vec<DiscrepancyRecord>,
}

/// SplitMix64 finalizer.
fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seeds of trial `index`: state, transform, and angle.
pub fn trial_seeds(seed: u64, index: usize) -> [u64; 3] {
    let base = mix(seed ^ mix(index as u64));
    [mix(base), mix(base ^ 1), mix(base ^ 2)]
}

struct Trial {
    residuals: Residuals,
    class: Option<EntanglementClass>,
    discrepancy: Option<DiscrepancyRecord>,
    failure: Option<String>,
}

fn record(trial: Option<usize>, state: &ThreeBosonState) -> Result<DiscrepancyRecord, CliError> {
    let rep = report(state)?;
    let f = &rep.canonical;
    Ok(DiscrepancyRecord {
        trial,
        r: f.r,
        s: f.s,
        t: f.t,
        phi: f.phi,
        concurrence_closed: rep.concurrence_closed,
        concurrence_oracle: rep.concurrence_oracle,
        ckw_residual_closed: rep.ckw_residual_closed,
        ckw_residual_oracle: rep.ckw_residual_oracle,
    })
}

fn run_trial(seed: u64, index: usize) -> Result<Trial, CliError> {
    let [state_seed, transform_seed, angle_seed] = trial_seeds(seed, index);
    let state = random_state(state_seed);
    let form = canonicalize(&state)?;
    let point = form.param_point();
    let rotated = apply_mode_transform(&state, &random_mode_transform(transform_seed))?;

    let mut r = Residuals::ZERO;
    r.canonical_residual = form.residual;
    r.reconstruction = form.reconstruction_error(&state)?;
    let tau = tau_hyperdeterminant(&state);
    r.oracle_ckw = (tau_ckw(&state) - tau).abs();
    r.tau_closed_vs_hyperdeterminant = (tau_closed(&point)? - tau).abs();

    let theta = PI * (angle_seed >> 11) as f64 / (1u64 << 53) as f64;
    let closed = xi_closed(&point)?;
    if !closed.degenerate {
        r.variance_closed_vs_oracle =
            (variance_at_theta(&point, theta)? - variance_at_theta_direct(&point, theta)?).abs();
    }
    let direct = xi_direct(&state);
    r.xi_closed_vs_direct = (closed.xi - direct.xi).abs();

    let (c0, c1) = (
        concurrence_wootters(&state).0,
        concurrence_wootters(&rotated).0,
    );
    r.rotation_invariance = (c0 - c1)
        .abs()
        .max((tau - tau_hyperdeterminant(&rotated)).abs())
        .max((direct.xi - xi_direct(&rotated).xi).abs());

    let c_closed = concurrence_closed(&point)?;
    let discrepancy = if (c_closed - c0).abs() > DISCREPANCY_TOLERANCE {
        Some(record(Some(index), &state)?)
    } else {
        None
    };
    Ok(Trial {
        residuals: r,
        class: Some(classify(&form, DEFAULT_EPSILON)),
        discrepancy,
        failure: None,
    })
}

/// Runs `trials` seeded trials on the current rayon pool.
pub fn audit(trials: usize, seed: u64) -> Result<AuditReport, CliError> {
    if trials == 0 {
        return Err(CliError::Input("trials must be at least 1".into()));
    }
    let results: Vec<Trial> = (0..trials)
        .into_par_iter()
        .map(|i| {
            run_trial(seed, i).unwrap_or_else(|e| Trial {
                residuals: Residuals::ZERO,
                class: None,
                discrepancy: None,
                failure: Some(e.to_string()),
            })
        })
        .collect();

    let mut max = Residuals::ZERO;
    let mut violations = Vec::new();
    let mut violation_count = 0;
    let mut counts = ClassCounts::default();
    let mut discrepancies = Vec::new();
    let mut discrepancy_count = 0;
    for (i, trial) in results.into_iter().enumerate() {
        if let Some(msg) = trial.failure {
            violation_count += 1;
            if violations.len() < MAX_VIOLATION_RECORDS {
                violations.push(Violation {
                    trial: i,
                    invariant: msg,
                    value: None,
                });
            }
            continue;
        }
        max = max.max(&trial.residuals);
        for ((name, value), (_, bound)) in trial
            .residuals
            .entries()
            .into_iter()
            .zip(THRESHOLDS.entries())
        {
            if !(value <= bound) {
                violation_count += 1;
                if violations.len() < MAX_VIOLATION_RECORDS {
                    violations.push(Violation {
                        trial: i,
                        invariant: name.to_string(),
                        value: Some(value),
                    });
                }
            }
        }
        match trial.class {
            Some(EntanglementClass::Unentangled) => counts.unentangled += 1,
            Some(EntanglementClass::W) => counts.w += 1,
            Some(EntanglementClass::GHZ) => counts.ghz += 1,
            None => {}
        }
        if let Some(d) = trial.discrepancy {
            discrepancy_count += 1;
            if discrepancies.len() < MAX_DISCREPANCY_RECORDS {
                discrepancies.push(d);
            }
        }
    }
    Ok(AuditReport {
        trial_count: trials,
        seed,
        passed: violation_count == 0,
        max_residuals: max,
        thresholds: THRESHOLDS,
        violation_count,
        violations,
        class_counts: counts,
        w_reference: record(None, &ThreeBosonState::w())?,
        discrepancy_count,
        discrepancy_records: discrepancies,
    })
}

/// Pretty JSON with a trailing newline.
pub fn to_json(report: &AuditReport) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("audit report serializes");
    s.push('\n');
    s
}

//! Output documents of the `analyze` and `canonicalize` commands.

use std::fmt::Write as _;

use serde::Serialize;
use triboson_core::{
    canonicalize, classify, report_with_epsilon, xi_closed, xi_direct, CanonicalForm,
    EntanglementClass, ModeTransform, ReportFlag, SqueezingResult, ThreeBosonState,
};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Amplitudes {
    pub a: [f64; 2],
    pub b: [f64; 2],
    pub c: [f64; 2],
    pub d: [f64; 2],
}

impl From<&ThreeBosonState> for Amplitudes {
    fn from(s: &ThreeBosonState) -> Self {
        let p = |z: triboson_core::Complex64| [z.re, z.im];
        Amplitudes {
            a: p(s.a()),
            b: p(s.b()),
            c: p(s.c()),
            d: p(s.d()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CanonicalDocument {
    pub r: f64,
    pub s: f64,
    pub t: f64,
    pub phi: f64,
    /// Row-major acting matrix as `[re, im]` pairs.
    pub transform: [[[f64; 2]; 2]; 2],
    pub residual: f64,
    pub reconstruction_error: f64,
    pub class: EntanglementClass,
}

fn matrix_entries(u: &ModeTransform) -> [[[f64; 2]; 2]; 2] {
    let p = |z: triboson_core::Complex64| [z.re, z.im];
    [[p(u.u00), p(u.u01)], [p(u.u10), p(u.u11)]]
}

impl CanonicalDocument {
    pub fn new(
        form: &CanonicalForm,
        input: &ThreeBosonState,
        epsilon: f64,
    ) -> Result<Self, CliError> {
        Ok(CanonicalDocument {
            r: form.r,
            s: form.s,
            t: form.t,
            phi: form.phi,
            transform: matrix_entries(&form.transform),
            residual: form.residual,
            reconstruction_error: form.reconstruction_error(input)?,
            class: classify(form, epsilon),
        })
    }
}

pub fn canonicalize_document(
    state: &ThreeBosonState,
    epsilon: f64,
) -> Result<CanonicalDocument, CliError> {
    CanonicalDocument::new(&canonicalize(state)?, state, epsilon)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct EntanglementSummary {
    pub concurrence_closed: f64,
    pub concurrence_oracle: f64,
    pub tau_closed: f64,
    pub tau_oracle: f64,
    pub tau_ckw: f64,
    pub bipartite_concurrence: f64,
    pub ckw_residual_closed: f64,
    pub ckw_residual_oracle: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SqueezingPair {
    pub closed: SqueezingResult,
    pub oracle: SqueezingResult,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AnalysisDocument {
    pub input: Amplitudes,
    pub canonical: CanonicalDocument,
    pub class: EntanglementClass,
    pub entanglement: EntanglementSummary,
    pub squeezing: SqueezingPair,
    pub flags: Vec<String>,
}

pub const DEGENERATE_FRAME_FLAG: &str = "DEGENERATE_FRAME";

fn flag_name(flag: ReportFlag) -> &'static str {
    match flag {
        ReportFlag::ClosedFormConcurrenceMismatch => "CLOSED_FORM_CONCURRENCE_MISMATCH",
        ReportFlag::CkwClosedViolation => "CKW_CLOSED_VIOLATION",
    }
}

pub fn analyze(state: &ThreeBosonState, epsilon: f64) -> Result<AnalysisDocument, CliError> {
    let report = report_with_epsilon(state, epsilon)?;
    let closed = xi_closed(&report.canonical.param_point())?;
    let oracle = xi_direct(state);
    let mut flags: Vec<String> = report
        .flags
        .iter()
        .map(|f| flag_name(*f).to_string())
        .collect();
    if closed.degenerate || oracle.degenerate {
        flags.push(DEGENERATE_FRAME_FLAG.to_string());
    }
    Ok(AnalysisDocument {
        input: Amplitudes::from(state),
        canonical: CanonicalDocument::new(&report.canonical, state, epsilon)?,
        class: report.class,
        entanglement: EntanglementSummary {
            concurrence_closed: report.concurrence_closed,
            concurrence_oracle: report.concurrence_oracle,
            tau_closed: report.tau_closed,
            tau_oracle: report.tau_oracle,
            tau_ckw: report.tau_ckw,
            bipartite_concurrence: report.bipartite_concurrence,
            ckw_residual_closed: report.ckw_residual_closed,
            ckw_residual_oracle: report.ckw_residual_oracle,
        },
        squeezing: SqueezingPair { closed, oracle },
        flags,
    })
}

/// Plain-text rendering for terminals.
pub fn render_text(doc: &AnalysisDocument) -> String {
    let mut out = String::new();
    let c = &doc.canonical;
    let e = &doc.entanglement;
    let _ = writeln!(out, "class          {:?}", doc.class);
    let _ = writeln!(
        out,
        "standard form  r={:.12} s={:.12} t={:.12} phi={:.12}",
        c.r, c.s, c.t, c.phi
    );
    let _ = writeln!(
        out,
        "residual       {:.3e} (reconstruction {:.3e})",
        c.residual, c.reconstruction_error
    );
    let _ = writeln!(
        out,
        "concurrence    closed {:.12}  oracle {:.12}",
        e.concurrence_closed, e.concurrence_oracle
    );
    let _ = writeln!(
        out,
        "tau            closed {:.12}  oracle {:.12}  ckw {:.12}",
        e.tau_closed, e.tau_oracle, e.tau_ckw
    );
    let _ = writeln!(
        out,
        "ckw residual   closed {:.3e}  oracle {:.3e}",
        e.ckw_residual_closed, e.ckw_residual_oracle
    );
    let (xc, xo) = (&doc.squeezing.closed, &doc.squeezing.oracle);
    let _ = writeln!(
        out,
        "xi             closed {:.12} ({:?})  oracle {:.12} ({:?})",
        xc.xi, xc.method, xo.xi, xo.method
    );
    let flags = if doc.flags.is_empty() {
        "none".to_string()
    } else {
        doc.flags.join(", ")
    };
    let _ = writeln!(out, "flags          {flags}");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ghz_document() {
        let doc = analyze(&ThreeBosonState::ghz(), 1e-9).unwrap();
        assert_eq!(doc.class, EntanglementClass::GHZ);
        assert!((doc.entanglement.tau_oracle - 1.0).abs() < 1e-12);
        assert!(doc.entanglement.concurrence_oracle < 1e-12);
        assert!((doc.squeezing.closed.xi - 1.0).abs() < 1e-12);
        assert_eq!(doc.flags, [DEGENERATE_FRAME_FLAG]);
        assert!(render_text(&doc).contains("GHZ"));
    }

    #[test]
    fn w_document_flags_the_closed_concurrence() {
        let doc = analyze(&ThreeBosonState::w(), 1e-9).unwrap();
        assert_eq!(doc.class, EntanglementClass::W);
        assert!(doc
            .flags
            .iter()
            .any(|f| f == "CLOSED_FORM_CONCURRENCE_MISMATCH"));
        let json = serde_json::to_value(&doc).unwrap();
        assert_eq!(json["class"], "W");
        assert!(json["squeezing"]["oracle"]["xi"].as_f64().unwrap() > 2.33);
    }

    #[test]
    fn product_document() {
        let doc = analyze(&ThreeBosonState::all_zero(), 1e-9).unwrap();
        assert_eq!(doc.class, EntanglementClass::Unentangled);
        let e = doc.entanglement;
        for v in [
            e.concurrence_closed,
            e.concurrence_oracle,
            e.tau_closed,
            e.tau_oracle,
        ] {
            assert!(v.abs() < 1e-12);
        }
        assert!((doc.squeezing.oracle.xi - 1.0).abs() < 1e-12);
    }
}

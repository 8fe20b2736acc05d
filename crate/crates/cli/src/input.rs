//! JSON state input: either raw amplitudes or standard-form parameters.

use std::io::Read;

use serde::Deserialize;
use triboson_core::{Complex64, ThreeBosonState};

use crate::CliError;

/// Allowed deviation of `r² + 3s² + t²` from one for parameter input.
pub const PARAM_INPUT_TOLERANCE: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum StateInput {
    Amplitudes([Complex64; 4]),
    Canonical { r: f64, s: f64, t: f64, phi: f64 },
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct AmplitudeShape {
    a: [f64; 2],
    b: [f64; 2],
    c: [f64; 2],
    d: [f64; 2],
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ParameterShape {
    r: f64,
    s: f64,
    t: f64,
    phi: f64,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Shape {
    Amplitudes(AmplitudeShape),
    Parameters(ParameterShape),
}

impl StateInput {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let shape: Shape = serde_json::from_str(text).map_err(|_| {
            CliError::Input(
                "expected exactly one of {\"a\",\"b\",\"c\",\"d\"} as [re, im] pairs or {\"r\",\"s\",\"t\",\"phi\"}"
                    .into(),
            )
        })?;
        Ok(match shape {
            Shape::Amplitudes(x) => {
                let c = |p: [f64; 2]| Complex64::new(p[0], p[1]);
                StateInput::Amplitudes([c(x.a), c(x.b), c(x.c), c(x.d)])
            }
            Shape::Parameters(p) => StateInput::Canonical {
                r: p.r,
                s: p.s,
                t: p.t,
                phi: p.phi,
            },
        })
    }

    pub fn to_state(&self) -> Result<ThreeBosonState, CliError> {
        match *self {
            StateInput::Amplitudes([a, b, c, d]) => Ok(ThreeBosonState::new(a, b, c, d)?),
            StateInput::Canonical { r, s, t, phi } => {
                let norm = r * r + 3.0 * s * s + t * t;
                if !((norm - 1.0).abs() <= PARAM_INPUT_TOLERANCE) {
                    return Err(CliError::Input(format!(
                        "r² + 3s² + t² = {norm}, expected 1"
                    )));
                }
                Ok(ThreeBosonState::from_standard_form(r, s, t, phi)?)
            }
        }
    }
}

/// Reads a file, or standard input for `-`.
pub fn read_input(path: &str) -> Result<StateInput, CliError> {
    let mut text = String::new();
    if path == "-" {
        std::io::stdin().read_to_string(&mut text)?;
    } else {
        text =
            std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{path}: {e}")))?;
    }
    StateInput::parse(&text)
}

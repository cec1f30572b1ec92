//! Text records describing a state, shared by the CLI and sweep files.
//!
//! A record is a mapping with a `family` tag and family-specific `params`.
//! YAML flow syntax and JSON are both accepted:
//!
//! ```text
//! {family: pure, params: {n: 0.6}}
//! {family: cq, params: {p1: 0.3, theta: 0.2, phi: 0.0, a1: [1, 0, 0], a2: [0, 0, 1]}}
//! {family: cc, params: {p: [[0.4, 0.1], [0.2, 0.3]], theta: 0, phi: 0, theta_b: 0.5, phi_b: 1}}
//! {family: x, params: {rho11: 0.1, rho22: 0.1, rho33: 0.4, rho44: 0.4, rho14: 0.2, rho23: 0.2}}
//! {family: rho_d, params: {w: 0.1, s: 0.2}}
//! {family: rho_theta, params: {theta: 0.785398}}
//! {family: bell_diagonal, params: {c: [0.5, -0.3, 0.2]}}
//! {family: raw, params: {re: [[...4 rows of 4...]], im: [[...]]}}
//! ```
//!
//! Angles are in radians. For `cc`, `theta_b`/`phi_b` default to the A-side
//! angles; for `raw`, `im` defaults to zero.

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::states::{
    bell_diagonal, cc_state, cq_state, pure_state, rho_d, rho_theta, x_state, BlochVector,
    DensityMatrix, ProbTable2x2, XStateParams,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Pure,
    Cq,
    Cc,
    X,
    RhoD,
    RhoTheta,
    BellDiagonal,
    Raw,
}

impl Family {
    pub fn param_names(self) -> &'static [&'static str] {
        match self {
            Family::Pure => &["n"],
            Family::Cq => &["p1", "theta", "phi", "a1", "a2"],
            Family::Cc => &["p", "theta", "phi", "theta_b", "phi_b"],
            Family::X => &["rho11", "rho22", "rho33", "rho44", "rho14", "rho23"],
            Family::RhoD => &["w", "s"],
            Family::RhoTheta => &["theta"],
            Family::BellDiagonal => &["c"],
            Family::Raw => &["re", "im"],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Pure => "pure",
            Family::Cq => "cq",
            Family::Cc => "cc",
            Family::X => "x",
            Family::RhoD => "rho_d",
            Family::RhoTheta => "rho_theta",
            Family::BellDiagonal => "bell_diagonal",
            Family::Raw => "raw",
        }
    }
}

/// Parses YAML (and therefore JSON) text into any record type.
pub fn parse_yaml<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_yaml::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

fn zero_4x4() -> [[f64; 4]; 4] {
    [[0.0; 4]; 4]
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", content = "params", rename_all = "snake_case", deny_unknown_fields)]
pub enum StateSpec {
    Pure {
        n: f64,
    },
    Cq {
        p1: f64,
        #[serde(default)]
        theta: f64,
        #[serde(default)]
        phi: f64,
        a1: [f64; 3],
        a2: [f64; 3],
    },
    Cc {
        p: [[f64; 2]; 2],
        #[serde(default)]
        theta: f64,
        #[serde(default)]
        phi: f64,
        #[serde(default)]
        theta_b: Option<f64>,
        #[serde(default)]
        phi_b: Option<f64>,
    },
    X {
        rho11: f64,
        rho22: f64,
        rho33: f64,
        rho44: f64,
        rho14: f64,
        rho23: f64,
    },
    RhoD {
        w: f64,
        s: f64,
    },
    RhoTheta {
        theta: f64,
    },
    BellDiagonal {
        c: [f64; 3],
    },
    Raw {
        re: [[f64; 4]; 4],
        #[serde(default = "zero_4x4")]
        im: [[f64; 4]; 4],
    },
}

impl StateSpec {
    pub fn parse(text: &str) -> Result<Self> {
        parse_yaml(text)
    }

    pub fn from_json_value(v: serde_json::Value) -> Result<Self> {
        serde_json::from_value(v).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn family(&self) -> Family {
        match self {
            StateSpec::Pure { .. } => Family::Pure,
            StateSpec::Cq { .. } => Family::Cq,
            StateSpec::Cc { .. } => Family::Cc,
            StateSpec::X { .. } => Family::X,
            StateSpec::RhoD { .. } => Family::RhoD,
            StateSpec::RhoTheta { .. } => Family::RhoTheta,
            StateSpec::BellDiagonal { .. } => Family::BellDiagonal,
            StateSpec::Raw { .. } => Family::Raw,
        }
    }

    /// Runs the family's constructor, with all of its validation.
    pub fn build(&self) -> Result<DensityMatrix> {
        match *self {
            StateSpec::Pure { n } => pure_state(n),
            StateSpec::Cq {
                p1,
                theta,
                phi,
                a1,
                a2,
            } => cq_state(
                p1,
                theta,
                phi,
                &BlochVector::try_from(a1)?,
                &BlochVector::try_from(a2)?,
            ),
            StateSpec::Cc {
                p,
                theta,
                phi,
                theta_b,
                phi_b,
            } => cc_state(
                &ProbTable2x2::try_from(p)?,
                theta,
                phi,
                theta_b.unwrap_or(theta),
                phi_b.unwrap_or(phi),
            ),
            StateSpec::X {
                rho11,
                rho22,
                rho33,
                rho44,
                rho14,
                rho23,
            } => x_state(&XStateParams::new(rho11, rho22, rho33, rho44, rho14, rho23)?),
            StateSpec::RhoD { w, s } => rho_d(w, s),
            StateSpec::RhoTheta { theta } => rho_theta(theta),
            StateSpec::BellDiagonal { c } => bell_diagonal(c[0], c[1], c[2]),
            StateSpec::Raw { re, im } => DensityMatrix::new(ComplexMatrix::from_parts(&re, &im)?),
        }
    }
}

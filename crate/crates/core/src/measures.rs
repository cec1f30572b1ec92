//! Closed-form evaluation of the four correlation measures.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{singular_values_3, trace_norm_hermitian, RealMatrix3};
use crate::oracles::{d1_oracle, SearchConfig};
use crate::states::{bloch_vectors, correlation_tensor, BlochVector, DensityMatrix, XStateParams};

/// Entries off the X pattern below this magnitude are treated as zero.
pub const X_PATTERN_TOL: f64 = 1e-12;
/// Closeness of `x`, `|α1|`, `|α2|`, `|α3|` that counts as the degenerate
/// configuration of the X-state discord formula.
pub const DEGENERATE_TOL: f64 = 1e-9;
pub const DENOMINATOR_TOL: f64 = 1e-14;

/// `q_ij = tr(ρ σ_i⊗σ_j) − tr(ρ σ_i⊗I) tr(ρ I⊗σ_j)`
pub fn covariance_matrix(rho: &DensityMatrix) -> RealMatrix3 {
    let (a, b) = bloch_vectors(rho);
    correlation_tensor(rho).sub(&RealMatrix3::outer(a.components(), b.components()))
}

/// Maximal mutual correlation: the largest singular value of the covariance
/// matrix.
pub fn mmc(rho: &DensityMatrix) -> f64 {
    singular_values_3(&covariance_matrix(rho))[0]
}

/// `¼(|t1+t2+t3| + |t1+t2−t3| + |t1−t2+t3| + |−t1+t2+t3|)`
pub fn correlation_distance_from_singular_values(t: [f64; 3]) -> f64 {
    let [t1, t2, t3] = t;
    0.25 * ((t1 + t2 + t3).abs()
        + (t1 + t2 - t3).abs()
        + (t1 - t2 + t3).abs()
        + (-t1 + t2 + t3).abs())
}

/// `‖ρ − ρ_A ⊗ ρ_B‖₁`, evaluated from the singular values of `Q`.
pub fn correlation_distance(rho: &DensityMatrix) -> f64 {
    correlation_distance_from_singular_values(singular_values_3(&covariance_matrix(rho)))
}

/// `‖ρ^{T_B}‖₁ − 1`, clamped at zero.
pub fn negativity(rho: &DensityMatrix) -> f64 {
    let n = trace_norm_hermitian(&rho.partial_transpose()).expect("Hermitian") - 1.0;
    debug_assert!(n >= -1e-10, "trace norm below trace: {n}");
    n.max(0.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum D1Method {
    ClosedForm,
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct D1Value {
    pub value: f64,
    pub method: D1Method,
}

/// Intermediate quantities of the X-state discord formula.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct XStateTerms {
    /// z-component of subsystem A's Bloch vector.
    pub x: f64,
    pub alpha: [f64; 3],
    pub a: f64,
    pub b: f64,
}

impl XStateTerms {
    pub fn new(p: &XStateParams) -> Self {
        let x = 2.0 * (p.rho11 + p.rho22) - 1.0;
        let alpha = [
            2.0 * (p.rho23 + p.rho14),
            2.0 * (p.rho23 - p.rho14),
            1.0 - 2.0 * (p.rho22 + p.rho33),
        ];
        let [a1, a2, a3] = alpha.map(|v| v * v);
        XStateTerms {
            x,
            alpha,
            a: a3.max(a2 + x * x),
            b: a3.min(a1),
        }
    }

    /// `x = 0` and `|α1| = |α2| = |α3|`, where the closed form is 0/0.
    pub fn is_degenerate(&self) -> bool {
        let [a1, a2, a3] = self.alpha.map(f64::abs);
        self.x.abs() < DEGENERATE_TOL
            && (a1 - a2).abs() < DEGENERATE_TOL
            && (a2 - a3).abs() < DEGENERATE_TOL
    }
}

/// Trace-norm discord of an X-state:
/// `√((a α1² − b α2²) / (a − b + α1² − α2²))`.
///
/// Falls back to [`d1_oracle`] in the degenerate configuration, and refuses
/// to evaluate a vanishing denominator anywhere else.
pub fn d1_x_state(params: &XStateParams, cfg: &SearchConfig) -> Result<D1Value> {
    params.validate()?;
    let terms = XStateTerms::new(params);
    if terms.is_degenerate() {
        let rho = DensityMatrix::new(params.matrix())?;
        return Ok(D1Value {
            value: d1_oracle(&rho, cfg),
            method: D1Method::Oracle,
        });
    }
    let [a1, a2, _] = terms.alpha.map(|v| v * v);
    let (a, b) = (terms.a, terms.b);
    let den = a - b + a1 - a2;
    if den.abs() < DENOMINATOR_TOL {
        return Err(Error::NumericalDegeneracy(format!(
            "X-state discord denominator {den:e} (x = {}, α = {:?})",
            terms.x, terms.alpha
        )));
    }
    let value = ((a * a1 - b * a2) / den).max(0.0).sqrt();
    Ok(D1Value {
        value,
        method: D1Method::ClosedForm,
    })
}

/// All measures for one state.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(into = "FlatReport", from = "FlatReport")]
pub struct MeasureReport {
    pub mmc: f64,
    pub correlation_distance: f64,
    pub negativity: f64,
    pub d1: f64,
    pub d1_method: D1Method,
    /// Singular values of the covariance matrix, descending.
    pub singular_values: [f64; 3],
    pub bloch_a: BlochVector,
    pub bloch_b: BlochVector,
}

/// Serialized form of [`MeasureReport`]: one named number per field.
#[derive(Serialize, Deserialize)]
struct FlatReport {
    mmc: f64,
    correlation_distance: f64,
    negativity: f64,
    d1: f64,
    d1_method: D1Method,
    t1: f64,
    t2: f64,
    t3: f64,
    bloch_a_x: f64,
    bloch_a_y: f64,
    bloch_a_z: f64,
    bloch_b_x: f64,
    bloch_b_y: f64,
    bloch_b_z: f64,
}

impl From<MeasureReport> for FlatReport {
    fn from(r: MeasureReport) -> Self {
        let [t1, t2, t3] = r.singular_values;
        let [bloch_a_x, bloch_a_y, bloch_a_z] = r.bloch_a.components();
        let [bloch_b_x, bloch_b_y, bloch_b_z] = r.bloch_b.components();
        FlatReport {
            mmc: r.mmc,
            correlation_distance: r.correlation_distance,
            negativity: r.negativity,
            d1: r.d1,
            d1_method: r.d1_method,
            t1,
            t2,
            t3,
            bloch_a_x,
            bloch_a_y,
            bloch_a_z,
            bloch_b_x,
            bloch_b_y,
            bloch_b_z,
        }
    }
}

impl From<FlatReport> for MeasureReport {
    fn from(f: FlatReport) -> Self {
        // reports are produced from valid states; keep the components as written
        let bloch = |v: [f64; 3]| BlochVector::try_from(v).unwrap_or_else(|_| BlochVector::zero());
        MeasureReport {
            mmc: f.mmc,
            correlation_distance: f.correlation_distance,
            negativity: f.negativity,
            d1: f.d1,
            d1_method: f.d1_method,
            singular_values: [f.t1, f.t2, f.t3],
            bloch_a: bloch([f.bloch_a_x, f.bloch_a_y, f.bloch_a_z]),
            bloch_b: bloch([f.bloch_b_x, f.bloch_b_y, f.bloch_b_z]),
        }
    }
}

/// Computes every measure. X-shaped states get the closed-form discord,
/// everything else goes through the search oracle.
pub fn full_report(rho: &DensityMatrix, cfg: &SearchConfig) -> Result<MeasureReport> {
    let q = covariance_matrix(rho);
    let t = singular_values_3(&q);
    let (bloch_a, bloch_b) = bloch_vectors(rho);
    let d1 = match XStateParams::from_density(rho, X_PATTERN_TOL) {
        Some(p) => d1_x_state(&p, cfg)?,
        None => D1Value {
            value: d1_oracle(rho, cfg),
            method: D1Method::Oracle,
        },
    };
    Ok(MeasureReport {
        mmc: t[0],
        correlation_distance: correlation_distance_from_singular_values(t),
        negativity: negativity(rho),
        d1: d1.value,
        d1_method: d1.method,
        singular_values: t,
        bloch_a,
        bloch_b,
    })
}

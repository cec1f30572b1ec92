//! Correlation measures for two-qubit states.
//!
//! Four quantities are computed for a two-qubit density matrix `ρ`:
//!
//! * maximal mutual correlation `M(ρ)`, the supremum of
//!   `|<AB> - <A><B>|` over normalized local observables, which equals the
//!   largest singular value of the covariance matrix `Q`;
//! * correlation distance `C(ρ) = ‖ρ - ρ_A ⊗ ρ_B‖₁`;
//! * negativity `N(ρ) = ‖ρ^{T_B}‖₁ - 1`;
//! * trace-norm geometric discord `D₁(ρ)`, the smallest trace-norm
//!   disturbance caused by a projective measurement on subsystem A.
//!
//! Closed forms live in [`measures`]; [`oracles`] evaluates the same
//! quantities by direct search over their definitions so that each closed
//! form can be checked independently.

pub mod error;
pub mod linalg;
pub mod measures;
pub mod oracles;
pub mod sampling;
pub mod statespec;
pub mod states;
pub mod sweep;
pub mod verify;

pub use error::{Error, Result};
pub use linalg::{ComplexMatrix, RealMatrix3};
pub use measures::{full_report, D1Method, MeasureReport};
pub use oracles::SearchConfig;
pub use states::{BlochVector, DensityMatrix, ProbTable2x2, Subsystem, XStateParams};

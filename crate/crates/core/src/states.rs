//! Two-qubit density matrices and the state families they are built from.
//!
//! Basis ordering is `|00>, |01>, |10>, |11>` with subsystem A as the first
//! tensor factor, so A's local observables are `σ_i ⊗ I` and B's are `I ⊗ σ_j`.

use std::f64::consts::FRAC_PI_2;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigenvalues, kron, ComplexMatrix, RealMatrix3, C64, HERMITIAN_TOL, ONE, ZERO};

pub const TRACE_TOL: f64 = 1e-12;
/// Smallest eigenvalue a density matrix may have.
pub const PSD_TOL: f64 = -1e-10;
pub const BLOCH_TOL: f64 = 1e-12;

/// Pauli matrix `σ_i` for `i` in 1..=3.
pub fn pauli(i: usize) -> Result<ComplexMatrix> {
    let m = match i {
        1 => ComplexMatrix::from_real(&[[0.0, 1.0], [1.0, 0.0]]),
        2 => ComplexMatrix::from_rows(&[[ZERO, C64::new(0.0, -1.0)], [C64::new(0.0, 1.0), ZERO]]),
        3 => ComplexMatrix::diag(&[1.0, -1.0]),
        _ => {
            return Err(Error::InvalidParameter(format!(
                "Pauli index {i} not in 1..=3"
            )))
        }
    };
    m
}

pub(crate) fn paulis() -> [ComplexMatrix; 3] {
    [1, 2, 3].map(|i| pauli(i).expect("valid index"))
}

/// `σ_i ⊗ I`, the A-side observable.
pub fn local_a(i: usize) -> Result<ComplexMatrix> {
    kron(&pauli(i)?, &ComplexMatrix::identity(2)?)
}

/// `I ⊗ σ_j`, the B-side observable.
pub fn local_b(j: usize) -> Result<ComplexMatrix> {
    kron(&ComplexMatrix::identity(2)?, &pauli(j)?)
}

/// Orthogonal rank-one projectors onto `±n` with Bloch axis
/// `n = (sin 2θ cos φ, sin 2θ sin φ, cos 2θ)`.
pub fn projector_pair(theta: f64, phi: f64) -> (ComplexMatrix, ComplexMatrix) {
    let (c2, s2) = (theta.cos().powi(2), theta.sin().powi(2));
    let off = C64::from_polar(0.5 * (2.0 * theta).sin(), -phi);
    let p1 = ComplexMatrix::from_rows(&[[C64::new(c2, 0.0), off], [off.conj(), C64::new(s2, 0.0)]])
        .expect("2x2");
    let p2 = ComplexMatrix::from_rows(&[[C64::new(s2, 0.0), -off], [-off.conj(), C64::new(c2, 0.0)]])
        .expect("2x2");
    (p1, p2)
}

/// Real 3-vector of norm at most one.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(try_from = "[f64; 3]", into = "[f64; 3]")]
pub struct BlochVector([f64; 3]);

impl BlochVector {
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        Self::try_from([x, y, z])
    }

    pub fn zero() -> Self {
        BlochVector([0.0; 3])
    }

    /// Unit vector `(sin 2θ cos φ, sin 2θ sin φ, cos 2θ)`: the `+` axis of
    /// [`projector_pair`].
    pub fn projector_axis(theta: f64, phi: f64) -> Self {
        let s = (2.0 * theta).sin();
        BlochVector([s * phi.cos(), s * phi.sin(), (2.0 * theta).cos()])
    }

    pub fn components(&self) -> [f64; 3] {
        self.0
    }

    pub fn norm(&self) -> f64 {
        self.0.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn scaled(&self, s: f64) -> Result<Self> {
        Self::try_from(self.0.map(|x| x * s))
    }

    pub fn distance(&self, other: &Self) -> f64 {
        self.0
            .iter()
            .zip(other.0)
            .map(|(a, b)| (a - b).powi(2))
            .sum::<f64>()
            .sqrt()
    }
}

impl TryFrom<[f64; 3]> for BlochVector {
    type Error = Error;

    fn try_from(v: [f64; 3]) -> Result<Self> {
        let b = BlochVector(v);
        let n = b.norm();
        if !n.is_finite() || n > 1.0 + BLOCH_TOL {
            return Err(Error::InvalidBloch(n));
        }
        Ok(b)
    }
}

impl From<BlochVector> for [f64; 3] {
    fn from(b: BlochVector) -> Self {
        b.0
    }
}

/// `½(I + a·σ)`
pub fn qubit_state(a: &BlochVector) -> ComplexMatrix {
    let [x, y, z] = a.0;
    ComplexMatrix::from_rows(&[
        [C64::new(0.5 * (1.0 + z), 0.0), C64::new(0.5 * x, -0.5 * y)],
        [C64::new(0.5 * x, 0.5 * y), C64::new(0.5 * (1.0 - z), 0.0)],
    ])
    .expect("2x2")
}

/// Which tensor factor to keep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subsystem {
    A,
    B,
}

/// Validated 4×4 density matrix: Hermitian, unit trace, positive semidefinite.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(into = "ComplexMatrix")]
pub struct DensityMatrix(ComplexMatrix);

impl From<DensityMatrix> for ComplexMatrix {
    fn from(r: DensityMatrix) -> Self {
        r.0
    }
}

impl DensityMatrix {
    pub fn new(mat: ComplexMatrix) -> Result<Self> {
        if mat.dim() != 4 {
            return Err(Error::InvalidDimension(format!(
                "density matrix must be 4x4, got {0}x{0}",
                mat.dim()
            )));
        }
        let dev = mat.hermitian_deviation();
        if !dev.is_finite() || dev > HERMITIAN_TOL {
            return Err(Error::state(
                "hermitian",
                format!("max |ρ_ij - conj(ρ_ji)| = {dev:e}"),
            ));
        }
        let tr = mat.trace();
        if (tr - ONE).norm() > TRACE_TOL {
            return Err(Error::state("unit-trace", format!("trace = {tr}")));
        }
        let min_ev = *hermitian_eigenvalues(&mat)?.last().expect("4 eigenvalues");
        if min_ev < PSD_TOL {
            return Err(Error::state(
                "positive-semidefinite",
                format!("minimum eigenvalue {min_ev:e}"),
            ));
        }
        Ok(DensityMatrix(mat))
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.0
    }

    pub fn eigenvalues(&self) -> Vec<f64> {
        hermitian_eigenvalues(&self.0).expect("validated Hermitian")
    }

    /// `tr(ρ O)`
    pub fn expectation(&self, op: &ComplexMatrix) -> Result<C64> {
        self.0.trace_product(op)
    }

    pub fn partial_trace(&self, side: Subsystem) -> ComplexMatrix {
        partial_trace(&self.0, side).expect("4x4")
    }

    pub fn partial_transpose(&self) -> ComplexMatrix {
        partial_transpose(&self.0).expect("4x4")
    }

    /// `(U_A ⊗ U_B) ρ (U_A ⊗ U_B)†`
    pub fn conjugate_local(&self, ua: &ComplexMatrix, ub: &ComplexMatrix) -> Result<Self> {
        let u = kron(ua, ub)?;
        DensityMatrix::new(u.mul(&self.0)?.mul(&u.adjoint())?)
    }
}

fn require_4x4(m: &ComplexMatrix) -> Result<()> {
    if m.dim() == 4 {
        Ok(())
    } else {
        Err(Error::InvalidDimension(format!(
            "expected a 4x4 two-qubit operator, got {0}x{0}",
            m.dim()
        )))
    }
}

/// Reduced operator on one qubit: `side = A` traces out B and vice versa.
pub fn partial_trace(m: &ComplexMatrix, side: Subsystem) -> Result<ComplexMatrix> {
    require_4x4(m)?;
    let mut out = ComplexMatrix::zeros(2)?;
    for i in 0..2 {
        for j in 0..2 {
            out[(i, j)] = match side {
                Subsystem::A => (0..2).map(|k| m[(2 * i + k, 2 * j + k)]).sum(),
                Subsystem::B => (0..2).map(|k| m[(2 * k + i, 2 * k + j)]).sum(),
            };
        }
    }
    Ok(out)
}

/// Transpose of the second (B) tensor factor.
pub fn partial_transpose(m: &ComplexMatrix) -> Result<ComplexMatrix> {
    require_4x4(m)?;
    let mut out = *m;
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    out[(2 * i + k, 2 * j + l)] = m[(2 * i + l, 2 * j + k)];
                }
            }
        }
    }
    Ok(out)
}

/// Bloch vectors of the two marginals: `a_i = tr(ρ σ_i⊗I)`, `b_j = tr(ρ I⊗σ_j)`.
pub fn bloch_vectors(rho: &DensityMatrix) -> (BlochVector, BlochVector) {
    let ra = rho.partial_trace(Subsystem::A);
    let rb = rho.partial_trace(Subsystem::B);
    let s = paulis();
    let comp = |r: &ComplexMatrix| s.map(|p| r.trace_product(&p).expect("2x2").re);
    // marginals of a valid state are valid qubit states, up to rounding
    let clamp = |v: [f64; 3]| {
        let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        let v = if n > 1.0 { v.map(|x| x / n) } else { v };
        BlochVector(v)
    };
    (clamp(comp(&ra)), clamp(comp(&rb)))
}

/// `T_ij = tr(ρ σ_i⊗σ_j)`
pub fn correlation_tensor(rho: &DensityMatrix) -> RealMatrix3 {
    let s = paulis();
    let mut t = RealMatrix3::zeros();
    for i in 0..3 {
        for j in 0..3 {
            let op = kron(&s[i], &s[j]).expect("2x2 ⊗ 2x2");
            t.0[i][j] = rho.expectation(&op).expect("4x4").re;
        }
    }
    t
}

/// Pure state with negativity `n`, in Schmidt form.
pub fn pure_state(n: f64) -> Result<DensityMatrix> {
    if !(0.0..=1.0).contains(&n) {
        return Err(Error::InvalidParameter(format!("pure-state N = {n} not in [0, 1]")));
    }
    let r = (1.0 - n * n).sqrt();
    x_state(&XStateParams::new(0.5 * (1.0 + r), 0.0, 0.0, 0.5 * (1.0 - r), 0.5 * n, 0.0)?)
}

fn check_prob(p: f64, name: &str) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("{name} = {p} not in [0, 1]")))
    }
}

/// `p1 P1 ⊗ ρ1 + p2 P2 ⊗ ρ2` with `(P1, P2) = projector_pair(θ, φ)` and
/// `ρk = qubit_state(ak)`.
pub fn cq_state(
    p1: f64,
    theta: f64,
    phi: f64,
    a1: &BlochVector,
    a2: &BlochVector,
) -> Result<DensityMatrix> {
    check_prob(p1, "p1")?;
    let (proj1, proj2) = projector_pair(theta, phi);
    let t1 = kron(&proj1, &qubit_state(a1))?.scale_real(p1);
    let t2 = kron(&proj2, &qubit_state(a2))?.scale_real(1.0 - p1);
    DensityMatrix::new(t1.add(&t2)?)
}

/// Joint distribution `p_jk` of two ±1-valued variables; `p_jk` is indexed
/// `[j][k]` with index 0 meaning the value +1.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "[[f64; 2]; 2]", into = "[[f64; 2]; 2]")]
pub struct ProbTable2x2([[f64; 2]; 2]);

impl ProbTable2x2 {
    pub fn new(p11: f64, p12: f64, p21: f64, p22: f64) -> Result<Self> {
        Self::try_from([[p11, p12], [p21, p22]])
    }

    pub fn get(&self, j: usize, k: usize) -> f64 {
        self.0[j][k]
    }

    pub fn entries(&self) -> [[f64; 2]; 2] {
        self.0
    }
}

impl TryFrom<[[f64; 2]; 2]> for ProbTable2x2 {
    type Error = Error;

    fn try_from(p: [[f64; 2]; 2]) -> Result<Self> {
        if p.iter().flatten().any(|&x| !(x >= 0.0)) {
            return Err(Error::InvalidParameter(format!(
                "probability table {p:?} has a negative entry"
            )));
        }
        let sum: f64 = p.iter().flatten().sum();
        if (sum - 1.0).abs() > TRACE_TOL {
            return Err(Error::InvalidParameter(format!(
                "probability table sums to {sum}"
            )));
        }
        Ok(ProbTable2x2(p))
    }
}

impl From<ProbTable2x2> for [[f64; 2]; 2] {
    fn from(p: ProbTable2x2) -> Self {
        p.0
    }
}

/// `Σ p_jk P_j ⊗ P'_k`, where `P` and `P'` are the projector pairs at
/// `(θ_A, φ_A)` and `(θ_B, φ_B)`.
pub fn cc_state(
    p: &ProbTable2x2,
    theta_a: f64,
    phi_a: f64,
    theta_b: f64,
    phi_b: f64,
) -> Result<DensityMatrix> {
    let (a1, a2) = projector_pair(theta_a, phi_a);
    let (b1, b2) = projector_pair(theta_b, phi_b);
    let pa = [a1, a2];
    let pb = [b1, b2];
    let mut m = ComplexMatrix::zeros(4)?;
    for j in 0..2 {
        for k in 0..2 {
            m = m.add(&kron(&pa[j], &pb[k])?.scale_real(p.get(j, k)))?;
        }
    }
    DensityMatrix::new(m)
}

/// Entries of an X-shaped state with real, non-negative coherences.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct XStateParams {
    pub rho11: f64,
    pub rho22: f64,
    pub rho33: f64,
    pub rho44: f64,
    pub rho14: f64,
    pub rho23: f64,
}

impl XStateParams {
    pub fn new(
        rho11: f64,
        rho22: f64,
        rho33: f64,
        rho44: f64,
        rho14: f64,
        rho23: f64,
    ) -> Result<Self> {
        let p = XStateParams {
            rho11,
            rho22,
            rho33,
            rho44,
            rho14,
            rho23,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        let all = [
            self.rho11, self.rho22, self.rho33, self.rho44, self.rho14, self.rho23,
        ];
        if all.iter().any(|&x| !(x >= 0.0) || !x.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "X-state entries must be finite and non-negative: {self:?}"
            )));
        }
        let tr = self.rho11 + self.rho22 + self.rho33 + self.rho44;
        if (tr - 1.0).abs() > TRACE_TOL {
            return Err(Error::state("unit-trace", format!("X-state diagonal sums to {tr}")));
        }
        if self.rho14.powi(2) > self.rho11 * self.rho44 + TRACE_TOL {
            return Err(Error::state(
                "positive-semidefinite",
                "rho14² > rho11·rho44".to_string(),
            ));
        }
        if self.rho23.powi(2) > self.rho22 * self.rho33 + TRACE_TOL {
            return Err(Error::state(
                "positive-semidefinite",
                "rho23² > rho22·rho33".to_string(),
            ));
        }
        Ok(())
    }

    pub fn matrix(&self) -> ComplexMatrix {
        let mut m = ComplexMatrix::diag(&[self.rho11, self.rho22, self.rho33, self.rho44])
            .expect("4x4");
        m[(0, 3)] = C64::new(self.rho14, 0.0);
        m[(3, 0)] = C64::new(self.rho14, 0.0);
        m[(1, 2)] = C64::new(self.rho23, 0.0);
        m[(2, 1)] = C64::new(self.rho23, 0.0);
        m
    }

    /// Reads the X-state entries of `rho` if every entry off the diagonal and
    /// anti-diagonal is below `tol` in magnitude. Coherences are replaced by
    /// their moduli; the phases can be removed by a diagonal local unitary,
    /// which leaves every measure in this crate unchanged.
    pub fn from_density(rho: &DensityMatrix, tol: f64) -> Option<Self> {
        let m = rho.matrix();
        for i in 0..4 {
            for j in 0..4 {
                if i != j && i + j != 3 && m[(i, j)].norm() >= tol {
                    return None;
                }
            }
        }
        Some(XStateParams {
            rho11: m[(0, 0)].re.max(0.0),
            rho22: m[(1, 1)].re.max(0.0),
            rho33: m[(2, 2)].re.max(0.0),
            rho44: m[(3, 3)].re.max(0.0),
            rho14: m[(0, 3)].norm(),
            rho23: m[(1, 2)].norm(),
        })
    }
}

/// Density matrix with the X sparsity pattern.
pub fn x_state(params: &XStateParams) -> Result<DensityMatrix> {
    params.validate()?;
    DensityMatrix::new(params.matrix())
}

/// `s_max = √(w/2 − w²)` for the separable discordant family.
pub fn rho_d_smax(w: f64) -> f64 {
    (0.5 * w - w * w).max(0.0).sqrt()
}

/// Separable X-state with diagonal `(w, w, ½−w, ½−w)` and all four
/// anti-diagonal coherences equal to `s`.
pub fn rho_d(w: f64, s: f64) -> Result<DensityMatrix> {
    if !(w > 0.0 && w < 0.5) {
        return Err(Error::InvalidParameter(format!("w = {w} not in (0, 1/2)")));
    }
    let smax = rho_d_smax(w);
    if !(s > 0.0) || s > smax + 1e-15 {
        return Err(Error::InvalidParameter(format!(
            "s = {s} not in (0, s_max = {smax}]"
        )));
    }
    let half = 0.5 - w;
    let mut m = ComplexMatrix::diag(&[w, w, half, half])?;
    for (i, j) in [(0, 3), (3, 0), (1, 2), (2, 1)] {
        m[(i, j)] = C64::new(s, 0.0);
    }
    DensityMatrix::new(m)
}

pub(crate) fn rho_theta_matrix(theta: f64) -> ComplexMatrix {
    let s2 = (2.0 * theta).sin();
    let mut m = ComplexMatrix::diag(&[
        0.5 * theta.cos().powi(2),
        0.0,
        0.5,
        0.5 * theta.sin().powi(2),
    ])
    .expect("4x4");
    m[(0, 3)] = C64::new(0.25 * s2, 0.0);
    m[(3, 0)] = C64::new(0.25 * s2, 0.0);
    m
}

/// Entangled family `ρ_θ`, θ in (0, π/2).
pub fn rho_theta(theta: f64) -> Result<DensityMatrix> {
    if !(theta > 0.0 && theta < FRAC_PI_2) {
        return Err(Error::InvalidParameter(format!(
            "theta = {theta} not in (0, π/2)"
        )));
    }
    DensityMatrix::new(rho_theta_matrix(theta))
}

/// The four eigenvalues of a Bell-diagonal state, in the order
/// `¼(1−c1−c2−c3), ¼(1−c1+c2+c3), ¼(1+c1−c2+c3), ¼(1+c1+c2−c3)`.
pub fn bell_diagonal_weights(c: [f64; 3]) -> [f64; 4] {
    let [c1, c2, c3] = c;
    [
        0.25 * (1.0 - c1 - c2 - c3),
        0.25 * (1.0 - c1 + c2 + c3),
        0.25 * (1.0 + c1 - c2 + c3),
        0.25 * (1.0 + c1 + c2 - c3),
    ]
}

/// `¼(I⊗I + Σ c_j σ_j⊗σ_j)`, valid when `c` lies in the tetrahedron where
/// all [`bell_diagonal_weights`] are non-negative.
pub fn bell_diagonal(c1: f64, c2: f64, c3: f64) -> Result<DensityMatrix> {
    let w = bell_diagonal_weights([c1, c2, c3]);
    if let Some(bad) = w.iter().find(|&&x| !(x >= PSD_TOL)) {
        return Err(Error::state(
            "positive-semidefinite",
            format!("c = ({c1}, {c2}, {c3}) outside the tetrahedron, eigenvalue {bad}"),
        ));
    }
    let s = paulis();
    let mut m = ComplexMatrix::identity(4)?;
    for (k, ck) in [c1, c2, c3].into_iter().enumerate() {
        m = m.add(&kron(&s[k], &s[k])?.scale_real(ck))?;
    }
    DensityMatrix::new(m.scale_real(0.25))
}

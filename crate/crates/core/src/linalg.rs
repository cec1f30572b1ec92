//! Dense linear algebra for the handful of shapes two-qubit work needs:
//! 2×2 and 4×4 complex operators, 3×3 real correlation matrices, and the
//! 3×3 Gram matrices used to get their singular values.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type C64 = Complex64;

/// Maximum absolute entry deviation `|h_ij - conj(h_ji)|` accepted as Hermitian.
pub const HERMITIAN_TOL: f64 = 1e-12;

const MAX_DIM: usize = 4;
const MAX_SWEEPS: usize = 64;

pub(crate) const ZERO: C64 = C64::new(0.0, 0.0);
pub(crate) const ONE: C64 = C64::new(1.0, 0.0);

/// Square complex matrix of dimension 2, 3 or 4, stored row-major.
#[derive(Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "MatrixRepr", into = "MatrixRepr")]
pub struct ComplexMatrix {
    dim: usize,
    data: [C64; MAX_DIM * MAX_DIM],
}

/// On-disk form: separate real and imaginary row arrays.
#[derive(Serialize, Deserialize)]
struct MatrixRepr {
    re: Vec<Vec<f64>>,
    im: Vec<Vec<f64>>,
}

impl From<ComplexMatrix> for MatrixRepr {
    fn from(m: ComplexMatrix) -> Self {
        let rows = |f: fn(&C64) -> f64| {
            (0..m.dim)
                .map(|i| (0..m.dim).map(|j| f(&m[(i, j)])).collect())
                .collect()
        };
        MatrixRepr {
            re: rows(|z| z.re),
            im: rows(|z| z.im),
        }
    }
}

impl TryFrom<MatrixRepr> for ComplexMatrix {
    type Error = Error;

    fn try_from(r: MatrixRepr) -> Result<Self> {
        ComplexMatrix::from_parts(&r.re, &r.im)
    }
}

fn check_dim(dim: usize) -> Result<()> {
    if (2..=MAX_DIM).contains(&dim) {
        Ok(())
    } else {
        Err(Error::InvalidDimension(format!(
            "dimension {dim} not in 2..=4"
        )))
    }
}

impl ComplexMatrix {
    pub fn zeros(dim: usize) -> Result<Self> {
        check_dim(dim)?;
        Ok(ComplexMatrix {
            dim,
            data: [ZERO; MAX_DIM * MAX_DIM],
        })
    }

    pub fn identity(dim: usize) -> Result<Self> {
        let mut m = Self::zeros(dim)?;
        for i in 0..dim {
            m[(i, i)] = ONE;
        }
        Ok(m)
    }

    /// Builds a matrix from square rows of complex entries.
    pub fn from_rows<R: AsRef<[C64]>>(rows: &[R]) -> Result<Self> {
        let mut m = Self::zeros(rows.len())?;
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != m.dim {
                return Err(Error::InvalidDimension(format!(
                    "row {i} has {} entries, expected {}",
                    row.len(),
                    m.dim
                )));
            }
            for (j, z) in row.iter().enumerate() {
                m[(i, j)] = *z;
            }
        }
        Ok(m)
    }

    /// Builds a matrix from equally shaped real-part and imaginary-part rows.
    pub fn from_parts<R: AsRef<[f64]>>(re: &[R], im: &[R]) -> Result<Self> {
        if re.len() != im.len() {
            return Err(Error::InvalidDimension(format!(
                "real part has {} rows, imaginary part has {}",
                re.len(),
                im.len()
            )));
        }
        let rows: Vec<Vec<C64>> = re
            .iter()
            .zip(im)
            .map(|(r, i)| {
                let (r, i) = (r.as_ref(), i.as_ref());
                if r.len() != i.len() {
                    return Err(Error::InvalidDimension(
                        "real and imaginary rows differ in length".into(),
                    ));
                }
                Ok(r.iter().zip(i).map(|(&a, &b)| C64::new(a, b)).collect())
            })
            .collect::<Result<_>>()?;
        Self::from_rows(&rows)
    }

    pub fn from_real<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        let zeros: Vec<Vec<f64>> = rows.iter().map(|r| vec![0.0; r.as_ref().len()]).collect();
        let rows: Vec<&[f64]> = rows.iter().map(|r| r.as_ref()).collect();
        let zeros: Vec<&[f64]> = zeros.iter().map(|r| r.as_slice()).collect();
        Self::from_parts(&rows, &zeros)
    }

    pub fn diag(entries: &[f64]) -> Result<Self> {
        let mut m = Self::zeros(entries.len())?;
        for (i, &x) in entries.iter().enumerate() {
            m[(i, i)] = C64::new(x, 0.0);
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rows(&self) -> Vec<Vec<C64>> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self[(i, j)]).collect())
            .collect()
    }

    fn same_dim(&self, other: &Self) -> Result<()> {
        if self.dim == other.dim {
            Ok(())
        } else {
            Err(Error::InvalidDimension(format!(
                "operands have dimensions {} and {}",
                self.dim, other.dim
            )))
        }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(C64, C64) -> C64) -> Result<Self> {
        self.same_dim(other)?;
        let mut out = *self;
        for k in 0..self.dim * self.dim {
            out.data[k] = f(self.data[k], other.data[k]);
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_dim(other)?;
        let n = self.dim;
        let mut out = Self::zeros(n)?;
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a == ZERO {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, s: C64) -> Self {
        let mut out = *self;
        for z in out.data.iter_mut().take(self.dim * self.dim) {
            *z *= s;
        }
        out
    }

    pub fn scale_real(&self, s: f64) -> Self {
        self.scale(C64::new(s, 0.0))
    }

    pub fn adjoint(&self) -> Self {
        let mut out = *self;
        for i in 0..self.dim {
            for j in 0..self.dim {
                out[(i, j)] = self[(j, i)].conj();
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut out = *self;
        for i in 0..self.dim {
            for j in 0..self.dim {
                out[(i, j)] = self[(j, i)];
            }
        }
        out
    }

    pub fn trace(&self) -> C64 {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    /// `tr(self * other)` without forming the product.
    pub fn trace_product(&self, other: &Self) -> Result<C64> {
        self.same_dim(other)?;
        let n = self.dim;
        let mut acc = ZERO;
        for i in 0..n {
            for k in 0..n {
                acc += self[(i, k)] * other[(k, i)];
            }
        }
        Ok(acc)
    }

    /// Largest `|a_ij - b_ij|` over all entries.
    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        self.same_dim(other)?;
        Ok((0..self.dim * self.dim)
            .map(|k| (self.data[k] - other.data[k]).norm())
            .fold(0.0, f64::max))
    }

    /// Largest `|h_ij - conj(h_ji)|`.
    pub fn hermitian_deviation(&self) -> f64 {
        let mut dev: f64 = 0.0;
        for i in 0..self.dim {
            for j in i..self.dim {
                dev = dev.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        dev
    }

    pub fn is_hermitian(&self) -> bool {
        self.hermitian_deviation() <= HERMITIAN_TOL
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data[..self.dim * self.dim]
            .iter()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = C64;

    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        debug_assert!(i < self.dim && j < self.dim);
        &self.data[i * self.dim + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        debug_assert!(i < self.dim && j < self.dim);
        &mut self.data[i * self.dim + j]
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix({}x{}) [", self.dim, self.dim)?;
        for i in 0..self.dim {
            write!(f, "  ")?;
            for j in 0..self.dim {
                let z = self[(i, j)];
                write!(f, "{:+.6}{:+.6}i  ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Tensor product; `kron(a, b)[(i*n + k, j*n + l)] = a[i, j] * b[k, l]`.
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    let (m, n) = (a.dim, b.dim);
    if m * n > MAX_DIM {
        return Err(Error::InvalidDimension(format!(
            "kron of {m}x{m} and {n}x{n} exceeds 4x4"
        )));
    }
    // m*n <= 4 with m, n >= 2 leaves only 2x2 ⊗ 2x2
    let mut out = ComplexMatrix::zeros(m * n)?;
    for i in 0..m {
        for j in 0..m {
            for k in 0..n {
                for l in 0..n {
                    out[(i * n + k, j * n + l)] = a[(i, j)] * b[(k, l)];
                }
            }
        }
    }
    Ok(out)
}

/// Eigen-decomposition of a Hermitian matrix.
///
/// Eigenvalues are sorted descending and `vectors` holds the matching
/// unit eigenvectors as columns.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    pub values: Vec<f64>,
    pub vectors: ComplexMatrix,
}

impl HermitianEigen {
    pub fn vector(&self, k: usize) -> Vec<C64> {
        (0..self.vectors.dim).map(|i| self.vectors[(i, k)]).collect()
    }
}

/// Cyclic complex Jacobi. Each rotation first strips the phase of the pivot
/// `h_pq = g e^{iα}` and then applies the real symmetric Jacobi rotation.
pub fn hermitian_eigen(h: &ComplexMatrix) -> Result<HermitianEigen> {
    let dev = h.hermitian_deviation();
    if dev > HERMITIAN_TOL {
        return Err(Error::NotHermitian(dev));
    }
    let n = h.dim;
    let mut a = *h;
    // symmetrize exactly so the rotations see a true Hermitian matrix
    for i in 0..n {
        a[(i, i)] = C64::new(a[(i, i)].re, 0.0);
        for j in i + 1..n {
            let avg = (a[(i, j)] + a[(j, i)].conj()) * 0.5;
            a[(i, j)] = avg;
            a[(j, i)] = avg.conj();
        }
    }
    let mut v = ComplexMatrix::identity(n)?;
    let scale = a.frobenius_norm();

    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .map(|(i, j)| a[(i, j)].norm_sqr())
            .sum();
        if off.sqrt() <= f64::EPSILON * 1e-3 * scale || off == 0.0 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| a[(y, y)].re.total_cmp(&a[(x, x)].re));
    let values = order.iter().map(|&k| a[(k, k)].re).collect();
    let mut vectors = ComplexMatrix::zeros(n)?;
    for (col, &k) in order.iter().enumerate() {
        for i in 0..n {
            vectors[(i, col)] = v[(i, k)];
        }
    }
    Ok(HermitianEigen { values, vectors })
}

fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let n = a.dim;
    let apq = a[(p, q)];
    let g = apq.norm();
    if g == 0.0 {
        return;
    }
    let (app, aqq) = (a[(p, p)].re, a[(q, q)].re);
    if g < f64::EPSILON * 1e-3 * (app.abs() + aqq.abs()) {
        a[(p, q)] = ZERO;
        a[(q, p)] = ZERO;
        return;
    }
    let e = apq / g;
    let tau = (aqq - app) / (2.0 * g);
    let t = if tau >= 0.0 {
        1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        -1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;
    // J = [[c, s], [-conj(e) s, conj(e) c]] on the (p, q) plane; A <- J† A J
    let ec = e.conj();
    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * c - akq * ec * s;
        a[(k, q)] = akp * s + akq * ec * c;
    }
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = apk * c - aqk * e * s;
        a[(q, k)] = apk * s + aqk * e * c;
    }
    a[(p, q)] = ZERO;
    a[(q, p)] = ZERO;
    a[(p, p)] = C64::new(a[(p, p)].re, 0.0);
    a[(q, q)] = C64::new(a[(q, q)].re, 0.0);
    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * c - vkq * ec * s;
        v[(k, q)] = vkp * s + vkq * ec * c;
    }
}

/// Eigenvalues of a Hermitian matrix, descending.
pub fn hermitian_eigenvalues(h: &ComplexMatrix) -> Result<Vec<f64>> {
    Ok(hermitian_eigen(h)?.values)
}

/// Sum of absolute eigenvalues.
pub fn trace_norm_hermitian(h: &ComplexMatrix) -> Result<f64> {
    Ok(hermitian_eigenvalues(h)?.iter().map(|x| x.abs()).sum())
}

/// Real 3×3 matrix, indexed `[row][col]`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct RealMatrix3(pub [[f64; 3]; 3]);

impl RealMatrix3 {
    pub fn zeros() -> Self {
        RealMatrix3([[0.0; 3]; 3])
    }

    pub fn diag(d: [f64; 3]) -> Self {
        let mut m = Self::zeros();
        for i in 0..3 {
            m.0[i][i] = d[i];
        }
        m
    }

    /// `u vᵀ`
    pub fn outer(u: [f64; 3], v: [f64; 3]) -> Self {
        let mut m = Self::zeros();
        for i in 0..3 {
            for j in 0..3 {
                m.0[i][j] = u[i] * v[j];
            }
        }
        m
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zeros();
        for i in 0..3 {
            for j in 0..3 {
                m.0[i][j] = self.0[j][i];
            }
        }
        m
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut m = Self::zeros();
        for i in 0..3 {
            for j in 0..3 {
                m.0[i][j] = (0..3).map(|k| self.0[i][k] * other.0[k][j]).sum();
            }
        }
        m
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut m = *self;
        for i in 0..3 {
            for j in 0..3 {
                m.0[i][j] -= other.0[i][j];
            }
        }
        m
    }

    pub fn scale(&self, s: f64) -> Self {
        let mut m = *self;
        m.0.iter_mut().flatten().for_each(|x| *x *= s);
        m
    }

    pub fn apply(&self, x: [f64; 3]) -> [f64; 3] {
        let mut y = [0.0; 3];
        for (i, yi) in y.iter_mut().enumerate() {
            *yi = (0..3).map(|k| self.0[i][k] * x[k]).sum();
        }
        y
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.0
            .iter()
            .flatten()
            .zip(other.0.iter().flatten())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().flatten().all(|x| x.is_finite())
    }
}

/// Singular values `t1 >= t2 >= t3 >= 0`, from the eigenvalues of `qᵀq`.
pub fn singular_values_3(q: &RealMatrix3) -> [f64; 3] {
    let gram = q.transpose().mul(q);
    let h = ComplexMatrix::from_real(&gram.0).expect("3x3 is a supported dimension");
    let ev = hermitian_eigenvalues(&h).expect("qᵀq is symmetric");
    let mut t = [0.0; 3];
    for (ti, &lambda) in t.iter_mut().zip(&ev) {
        debug_assert!(lambda >= -1e-14 * gram.0.iter().flatten().map(|x| x.abs()).fold(1.0, f64::max));
        *ti = lambda.max(0.0).sqrt();
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn sigma(k: usize) -> ComplexMatrix {
        match k {
            1 => ComplexMatrix::from_real(&[[0.0, 1.0], [1.0, 0.0]]).unwrap(),
            2 => ComplexMatrix::from_rows(&[[ZERO, c(0.0, -1.0)], [c(0.0, 1.0), ZERO]]).unwrap(),
            _ => ComplexMatrix::diag(&[1.0, -1.0]).unwrap(),
        }
    }

    #[test]
    fn dimension_bounds() {
        assert!(ComplexMatrix::zeros(1).is_err());
        assert!(ComplexMatrix::zeros(5).is_err());
        assert!(ComplexMatrix::zeros(3).is_ok());
        assert!(ComplexMatrix::from_real(&[vec![1.0, 2.0], vec![3.0]]).is_err());
    }

    #[test]
    fn kron_examples() {
        let i2 = ComplexMatrix::identity(2).unwrap();
        assert_eq!(kron(&i2, &i2).unwrap(), ComplexMatrix::identity(4).unwrap());
        assert_eq!(
            kron(&sigma(3), &i2).unwrap(),
            ComplexMatrix::diag(&[1.0, 1.0, -1.0, -1.0]).unwrap()
        );
        let xx = kron(&sigma(1), &sigma(1)).unwrap();
        let anti = ComplexMatrix::from_real(&[
            [0.0, 0.0, 0.0, 1.0],
            [0.0, 0.0, 1.0, 0.0],
            [0.0, 1.0, 0.0, 0.0],
            [1.0, 0.0, 0.0, 0.0],
        ])
        .unwrap();
        assert_eq!(xx, anti);
        let i3 = ComplexMatrix::identity(3).unwrap();
        assert!(matches!(kron(&i3, &i2), Err(Error::InvalidDimension(_))));
    }

    #[test]
    fn basic_algebra_examples() {
        assert_eq!(ComplexMatrix::identity(4).unwrap().trace(), c(4.0, 0.0));
        let xy = sigma(1).mul(&sigma(2)).unwrap();
        assert_eq!(xy, sigma(3).scale(c(0.0, 1.0)));
        let a = ComplexMatrix::from_rows(&[[c(1.0, 2.0), c(3.0, -1.0)], [c(0.5, 0.0), c(0.0, 7.0)]])
            .unwrap();
        assert_eq!(a.adjoint().adjoint(), a);
        let i3 = ComplexMatrix::identity(3).unwrap();
        assert!(a.add(&i3).is_err());
        assert!(a.mul(&i3).is_err());
        assert_eq!(a.trace_product(&sigma(1)).unwrap(), a.mul(&sigma(1)).unwrap().trace());
    }

    #[test]
    fn eigenvalue_examples() {
        assert_eq!(
            hermitian_eigenvalues(&ComplexMatrix::identity(4).unwrap()).unwrap(),
            vec![1.0; 4]
        );
        let ev = hermitian_eigenvalues(&sigma(1)).unwrap();
        assert!((ev[0] - 1.0).abs() < 1e-15 && (ev[1] + 1.0).abs() < 1e-15);
        let ev = hermitian_eigenvalues(&sigma(2)).unwrap();
        assert!((ev[0] - 1.0).abs() < 1e-15 && (ev[1] + 1.0).abs() < 1e-15);
    }

    #[test]
    fn bell_diagonal_spectrum() {
        // ¼(I + Σ c_j σ_j⊗σ_j) with c = (0.5, -0.3, 0.2)
        let c3 = [0.5, -0.3, 0.2];
        let mut h = ComplexMatrix::identity(4).unwrap();
        for (k, ck) in c3.iter().enumerate() {
            let s = kron(&sigma(k + 1), &sigma(k + 1)).unwrap();
            h = h.add(&s.scale_real(*ck)).unwrap();
        }
        let h = h.scale_real(0.25);
        let ev = hermitian_eigenvalues(&h).unwrap();
        for (got, want) in ev.iter().zip([0.5, 0.25, 0.15, 0.1]) {
            assert!((got - want).abs() < 1e-14, "{ev:?}");
        }
    }

    #[test]
    fn non_hermitian_rejected() {
        let m = ComplexMatrix::from_real(&[[1.0, 2.0], [0.0, 1.0]]).unwrap();
        assert!(matches!(hermitian_eigenvalues(&m), Err(Error::NotHermitian(_))));
        assert!(matches!(trace_norm_hermitian(&m), Err(Error::NotHermitian(_))));
        let tiny = ComplexMatrix::from_real(&[[1.0, 1e-13], [0.0, 1.0]]).unwrap();
        assert!(hermitian_eigenvalues(&tiny).is_ok());
    }

    #[test]
    fn trace_norm_examples() {
        assert_eq!(trace_norm_hermitian(&ComplexMatrix::zeros(4).unwrap()).unwrap(), 0.0);
        let d = ComplexMatrix::diag(&[0.5, -0.5]).unwrap();
        assert_eq!(trace_norm_hermitian(&d).unwrap(), 1.0);
        // partial transpose of the Bell state (|00>+|11>)/√2
        let pt = ComplexMatrix::from_real(&[
            [0.5, 0.0, 0.0, 0.0],
            [0.0, 0.0, 0.5, 0.0],
            [0.0, 0.5, 0.0, 0.0],
            [0.0, 0.0, 0.0, 0.5],
        ])
        .unwrap();
        assert!((trace_norm_hermitian(&pt).unwrap() - 2.0).abs() < 1e-14);
    }

    #[test]
    fn singular_value_examples() {
        assert_eq!(singular_values_3(&RealMatrix3::zeros()), [0.0; 3]);
        let n = 0.6;
        let t = singular_values_3(&RealMatrix3::diag([n, -n, n * n]));
        for (got, want) in t.iter().zip([0.6, 0.6, 0.36]) {
            assert!((got - want).abs() < 1e-14);
        }
        // 2 p1 p2 · n (a1 - a2)ᵀ; ‖a1 - a2‖ = ‖(0.6, -0.3, 0.3)‖
        let (p1, p2) = (0.3, 0.7);
        let nvec = [0.0, 0.6, 0.8];
        let diff = [0.6, -0.3, 0.3];
        let q = RealMatrix3::outer(nvec, diff).scale(2.0 * p1 * p2);
        let t = singular_values_3(&q);
        let expected = 2.0 * p1 * p2 * (0.36f64 + 0.09 + 0.09).sqrt();
        assert!((t[0] - expected).abs() < 1e-14);
        assert!(t[1] < 1e-7 && t[2] < 1e-7);
    }

    #[test]
    fn serde_round_trip_is_bit_exact() {
        let m = ComplexMatrix::from_rows(&[
            [c(0.1, 0.0), c(1.0 / 3.0, -2.0f64.sqrt())],
            [c(std::f64::consts::PI, 1e-300), c(-0.0, 5e-324)],
        ])
        .unwrap();
        let s = serde_json::to_string(&m).unwrap();
        let back: ComplexMatrix = serde_json::from_str(&s).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(m[(i, j)].re.to_bits(), back[(i, j)].re.to_bits());
                assert_eq!(m[(i, j)].im.to_bits(), back[(i, j)].im.to_bits());
            }
        }
        assert!(serde_json::from_str::<ComplexMatrix>(r#"{"re":[[1.0]],"im":[[0.0]]}"#).is_err());
    }
}

//! Brute-force evaluation of the measures straight from their definitions.
//!
//! Nothing here uses the closed forms in [`crate::measures`]; these routines
//! exist to check them.

use std::f64::consts::{FRAC_PI_4, PI};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{kron, trace_norm_hermitian, ComplexMatrix, C64, ZERO};
use crate::states::{projector_pair, DensityMatrix, ProbTable2x2};

/// Grid and refinement settings for the search oracles.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct SearchConfig {
    /// `(nθ, nφ)` points of the coarse grid.
    pub coarse_grid: (usize, usize),
    /// Step-size levels of the pattern search.
    pub refine_iters: usize,
    pub refine_shrink: f64,
    pub seed: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            coarse_grid: (64, 128),
            refine_iters: 40,
            refine_shrink: 0.5,
            seed: 0,
        }
    }
}

impl SearchConfig {
    /// Smallest grid and refinement budget accepted by [`SearchConfig::validate`].
    pub fn minimal() -> Self {
        SearchConfig {
            coarse_grid: (32, 64),
            refine_iters: 20,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        let (nt, np) = self.coarse_grid;
        if nt < 32 || np < 64 {
            return Err(Error::InvalidParameter(format!(
                "coarse grid {nt}x{np} below the 32x64 minimum"
            )));
        }
        if self.refine_iters < 20 {
            return Err(Error::InvalidParameter(format!(
                "refine_iters = {} below the minimum of 20",
                self.refine_iters
            )));
        }
        if !(self.refine_shrink > 0.0 && self.refine_shrink < 1.0) {
            return Err(Error::InvalidParameter(format!(
                "refine_shrink = {} not in (0, 1)",
                self.refine_shrink
            )));
        }
        Ok(())
    }
}

/// Number of refinement starts taken from the best grid cells.
const GRID_STARTS: usize = 4;
/// Number of extra refinement starts drawn from the seeded generator.
const RANDOM_STARTS: usize = 4;

fn a_side_projectors(theta: f64, phi: f64) -> (ComplexMatrix, ComplexMatrix) {
    let (p1, p2) = projector_pair(theta, phi);
    let id = ComplexMatrix::identity(2).expect("2x2");
    (
        kron(&p1, &id).expect("4x4"),
        kron(&p2, &id).expect("4x4"),
    )
}

fn dephase(rho: &ComplexMatrix, k1: &ComplexMatrix, k2: &ComplexMatrix) -> ComplexMatrix {
    let t1 = k1.mul(rho).and_then(|m| m.mul(k1)).expect("4x4");
    let t2 = k2.mul(rho).and_then(|m| m.mul(k2)).expect("4x4");
    t1.add(&t2).expect("4x4")
}

/// `Σ_k (P_k ⊗ I) ρ (P_k ⊗ I)` for the projective measurement on A along the
/// axis of [`projector_pair`]`(θ, φ)`.
pub fn measurement_map(rho: &DensityMatrix, theta: f64, phi: f64) -> DensityMatrix {
    let (k1, k2) = a_side_projectors(theta, phi);
    DensityMatrix::new(dephase(rho.matrix(), &k1, &k2))
        .expect("a projective measurement maps states to states")
}

/// `‖ρ − 𝒫_{θ,φ}(ρ)‖₁`
pub fn measurement_disturbance(rho: &DensityMatrix, theta: f64, phi: f64) -> f64 {
    let (k1, k2) = a_side_projectors(theta, phi);
    let diff = rho.matrix().sub(&dephase(rho.matrix(), &k1, &k2)).expect("4x4");
    trace_norm_hermitian(&diff).expect("difference of Hermitian matrices")
}

/// Same value as [`measurement_disturbance`], computed from the block
/// structure: in the measured basis `ρ − 𝒫(ρ)` only keeps the off-diagonal
/// blocks `X` and `X†`, so its trace norm is `2‖X‖₁`, and for 2×2 blocks
/// `‖X‖₁ = √(‖X‖_F² + 2|det X|)`.
fn disturbance_by_blocks(rho: &ComplexMatrix, theta: f64, phi: f64) -> f64 {
    let (c, s) = (theta.cos(), theta.sin());
    let e1 = [C64::new(c, 0.0), C64::from_polar(s, phi)];
    let e2 = [-C64::from_polar(s, -phi), C64::new(c, 0.0)];
    let mut x = [[ZERO; 2]; 2];
    for (b, row) in x.iter_mut().enumerate() {
        for (bp, entry) in row.iter_mut().enumerate() {
            for a in 0..2 {
                for ap in 0..2 {
                    *entry += e1[a].conj() * rho[(2 * a + b, 2 * ap + bp)] * e2[ap];
                }
            }
        }
    }
    let frob: f64 = x.iter().flatten().map(|z| z.norm_sqr()).sum();
    let det = (x[0][0] * x[1][1] - x[0][1] * x[1][0]).norm();
    2.0 * (frob + 2.0 * det).sqrt()
}

/// Compass pattern search from `start`. Each of the `levels` rounds moves
/// to the best improving neighbour until none improves, then shrinks the step.
fn pattern_search(
    f: &impl Fn(f64, f64) -> f64,
    start: (f64, f64, f64),
    step: (f64, f64),
    levels: usize,
    shrink: f64,
) -> f64 {
    const DIRS: [(f64, f64); 8] = [
        (1.0, 0.0),
        (-1.0, 0.0),
        (0.0, 1.0),
        (0.0, -1.0),
        (1.0, 1.0),
        (1.0, -1.0),
        (-1.0, 1.0),
        (-1.0, -1.0),
    ];
    const MAX_MOVES: usize = 64;
    let (mut x, mut y, mut best) = start;
    let (mut sx, mut sy) = step;
    for _ in 0..levels {
        for _ in 0..MAX_MOVES {
            let mut next = None;
            for (dx, dy) in DIRS {
                let (cx, cy) = (x + dx * sx, y + dy * sy);
                let v = f(cx, cy);
                if v < next.map_or(best, |(_, _, b)| b) {
                    next = Some((cx, cy, v));
                }
            }
            let Some((cx, cy, v)) = next else { break };
            x = cx;
            y = cy;
            best = v;
        }
        sx *= shrink;
        sy *= shrink;
    }
    best
}

/// Minimizes `f(θ, φ)` over measurement directions: a coarse grid over the
/// hemisphere `θ ∈ [0, π/4]` (antipodal axes define the same measurement),
/// then pattern search from the best cells and from a few seeded starts.
fn minimize_over_axes(f: impl Fn(f64, f64) -> f64, cfg: &SearchConfig) -> f64 {
    let (nt, np) = cfg.coarse_grid;
    let dt = FRAC_PI_4 / (nt - 1) as f64;
    let dp = 2.0 * PI / np as f64;

    let mut cells: Vec<(f64, usize, usize)> = Vec::with_capacity(nt * np);
    for i in 0..nt {
        // φ is irrelevant at the pole
        let cols = if i == 0 { 1 } else { np };
        for j in 0..cols {
            cells.push((f(i as f64 * dt, j as f64 * dp), i, j));
        }
    }
    cells.sort_by(|a, b| a.0.total_cmp(&b.0).then((a.1, a.2).cmp(&(b.1, b.2))));

    let mut starts: Vec<(f64, f64, f64)> = cells
        .iter()
        .take(GRID_STARTS)
        .map(|&(v, i, j)| (i as f64 * dt, j as f64 * dp, v))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..RANDOM_STARTS {
        // uniform on the hemisphere: cos 2θ uniform in [0, 1]
        let theta = 0.5 * rng.random::<f64>().acos();
        let phi = 2.0 * PI * rng.random::<f64>();
        starts.push((theta, phi, f(theta, phi)));
    }

    starts
        .into_iter()
        .map(|s| pattern_search(&f, s, (dt, dp), cfg.refine_iters, cfg.refine_shrink))
        .fold(cells[0].0, f64::min)
}

/// Trace-norm geometric discord by direct minimization of
/// `‖ρ − 𝒫(ρ)‖₁` over projective measurements on A.
pub fn d1_oracle(rho: &DensityMatrix, cfg: &SearchConfig) -> f64 {
    minimize_over_axes(|t, p| disturbance_by_blocks(rho.matrix(), t, p), cfg).max(0.0)
}

fn unit(v: [f64; 3]) -> Option<[f64; 3]> {
    let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    (n > 0.0).then(|| v.map(|x| x / n))
}

fn sphere_point(polar: f64, azimuth: f64) -> [f64; 3] {
    [
        polar.sin() * azimuth.cos(),
        polar.sin() * azimuth.sin(),
        polar.cos(),
    ]
}

/// `ω(AB) − ω(A)ω(B)` for `A = a·σ ⊗ I` and `B = I ⊗ b·σ`, from operator
/// traces against `ρ`.
pub fn local_covariance(rho: &DensityMatrix, a: [f64; 3], b: [f64; 3]) -> f64 {
    let id = ComplexMatrix::identity(2).expect("2x2");
    let obs = |v: [f64; 3]| {
        let s = crate::states::paulis();
        s[0].scale_real(v[0])
            .add(&s[1].scale_real(v[1]))
            .and_then(|m| m.add(&s[2].scale_real(v[2])))
            .expect("2x2")
    };
    let (oa, ob) = (obs(a), obs(b));
    let ev = |op: ComplexMatrix| rho.expectation(&op).expect("4x4").re;
    ev(kron(&oa, &ob).expect("4x4")) - ev(kron(&oa, &id).expect("4x4")) * ev(kron(&id, &ob).expect("4x4"))
}

/// Maximal mutual correlation by direct search over normalized local
/// observables.
///
/// The covariance is bilinear in the two axis vectors, so it is sampled on
/// basis pairs through [`local_covariance`]. Spherical grids over each side
/// (with the best response on the other side) seed an alternating
/// maximization that is run to a fixed point.
pub fn mmc_oracle(rho: &DensityMatrix, cfg: &SearchConfig) -> f64 {
    let e = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]];
    let mut form = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            form[i][j] = local_covariance(rho, e[i], e[j]);
        }
    }
    let apply = |b: [f64; 3]| -> [f64; 3] {
        [0, 1, 2].map(|i| (0..3).map(|j| form[i][j] * b[j]).sum())
    };
    let apply_t = |a: [f64; 3]| -> [f64; 3] {
        [0, 1, 2].map(|j| (0..3).map(|i| form[i][j] * a[i]).sum())
    };
    let norm = |v: [f64; 3]| v.iter().map(|x| x * x).sum::<f64>().sqrt();
    let dot = |u: [f64; 3], v: [f64; 3]| u.iter().zip(v).map(|(x, y)| x * y).sum::<f64>();

    let (nt, np) = cfg.coarse_grid;
    let mut candidates: Vec<(f64, [f64; 3], bool)> = Vec::new();
    for i in 0..nt {
        let polar = 0.5 * PI * i as f64 / (nt - 1) as f64;
        for j in 0..np {
            let v = sphere_point(polar, 2.0 * PI * j as f64 / np as f64);
            candidates.push((norm(apply_t(v)), v, true));
            candidates.push((norm(apply(v)), v, false));
        }
    }
    candidates.sort_by(|x, y| y.0.total_cmp(&x.0));

    let mut best = candidates[0].0;
    for &(_, v, is_a) in candidates.iter().take(GRID_STARTS) {
        let mut a = if is_a {
            v
        } else {
            match unit(apply(v)) {
                Some(a) => a,
                None => continue,
            }
        };
        let mut value = 0.0;
        for _ in 0..100_000 {
            let Some(b) = unit(apply_t(a)) else { break };
            let Some(next_a) = unit(apply(b)) else { break };
            let next = dot(next_a, apply(b)).abs();
            a = next_a;
            // converged once successive values agree to rounding
            let done = (next - value).abs() <= 1e-15 * next.max(1.0);
            value = next;
            if done {
                break;
            }
        }
        best = best.max(value);
    }
    best
}

/// `Cov(X, Y)` for ±1-valued variables with joint distribution `p`, using
/// `p11 + p22 − p12 − p21 + (p12 − p21)² − (p11 − p22)²`.
pub fn classical_cov(p: &ProbTable2x2) -> f64 {
    let [[p11, p12], [p21, p22]] = p.entries();
    p11 + p22 - p12 - p21 + (p12 - p21).powi(2) - (p11 - p22).powi(2)
}

/// `<XY> − <X><Y>` from the first moments of the same distribution.
pub fn classical_cov_moments(p: &ProbTable2x2) -> f64 {
    let [[p11, p12], [p21, p22]] = p.entries();
    let ex = p11 + p12 - p21 - p22;
    let ey = p11 + p21 - p12 - p22;
    let exy = p11 + p22 - p12 - p21;
    exy - ex * ey
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ComplexMatrix;
    use crate::states::{
        bell_diagonal, cq_state, pure_state, qubit_state, rho_d, BlochVector,
    };

    fn fast() -> SearchConfig {
        SearchConfig::minimal()
    }

    #[test]
    fn config_validation() {
        assert!(SearchConfig::default().validate().is_ok());
        assert!(SearchConfig::minimal().validate().is_ok());
        let bad = SearchConfig {
            coarse_grid: (16, 128),
            ..Default::default()
        };
        assert!(bad.validate().is_err());
        let bad = SearchConfig {
            refine_iters: 5,
            ..Default::default()
        };
        assert!(bad.validate().is_err());
        let bad = SearchConfig {
            refine_shrink: 1.0,
            ..Default::default()
        };
        assert!(bad.validate().is_err());
    }

    #[test]
    fn block_formula_matches_explicit_disturbance() {
        use rand::SeedableRng;
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..300 {
            let rho = crate::sampling::mixed_state(&mut rng);
            let (t, p) = crate::sampling::projector_angles(&mut rng);
            let explicit = measurement_disturbance(&rho, t, p);
            assert!((disturbance_by_blocks(rho.matrix(), t, p) - explicit).abs() < 1e-12);
        }
    }

    #[test]
    fn measurement_map_examples() {
        let d = DensityMatrix::new(ComplexMatrix::diag(&[0.1, 0.2, 0.3, 0.4]).unwrap()).unwrap();
        assert!(measurement_map(&d, 0.0, 0.0).matrix().max_abs_diff(d.matrix()).unwrap() < 1e-15);

        let bell = pure_state(1.0).unwrap();
        let out = measurement_map(&bell, 0.0, 0.0);
        let want = ComplexMatrix::diag(&[0.5, 0.0, 0.0, 0.5]).unwrap();
        assert!(out.matrix().max_abs_diff(&want).unwrap() < 1e-15);

        let a1 = BlochVector::new(0.2, 0.4, -0.1).unwrap();
        let a2 = BlochVector::new(-0.7, 0.0, 0.3).unwrap();
        let (theta, phi) = (0.9, 2.3);
        let cq = cq_state(0.4, theta, phi, &a1, &a2).unwrap();
        let out = measurement_map(&cq, theta, phi);
        assert!(out.matrix().max_abs_diff(cq.matrix()).unwrap() < 1e-15);
    }

    #[test]
    fn measurement_map_is_idempotent() {
        let rho = rho_d(0.15, 0.2).unwrap();
        let once = measurement_map(&rho, 0.4, 1.3);
        let twice = measurement_map(&once, 0.4, 1.3);
        assert!(once.matrix().max_abs_diff(twice.matrix()).unwrap() < 1e-12);
    }

    #[test]
    fn d1_oracle_examples() {
        let a1 = BlochVector::new(1.0, 0.0, 0.0).unwrap();
        let a2 = BlochVector::new(0.0, 0.0, 1.0).unwrap();
        let cq = cq_state(0.3, 0.0, 0.0, &a1, &a2).unwrap();
        assert!(d1_oracle(&cq, &fast()) < 1e-6);

        let cfg = SearchConfig::default();
        assert!((d1_oracle(&rho_d(0.1, 0.2).unwrap(), &cfg) - 0.48).abs() < 2e-3);
        assert!((d1_oracle(&pure_state(0.6).unwrap(), &cfg) - 0.6).abs() < 2e-3);
    }

    #[test]
    fn d1_oracle_is_deterministic_and_antipodal_invariant() {
        let rho = bell_diagonal(0.4, -0.2, 0.1).unwrap();
        let cfg = fast();
        assert_eq!(d1_oracle(&rho, &cfg).to_bits(), d1_oracle(&rho, &cfg).to_bits());
        // (θ, φ) and (π/2 − θ, φ + π) swap P1 and P2
        let (t, p) = (0.3, 0.8);
        let x = measurement_disturbance(&rho, t, p);
        let y = measurement_disturbance(&rho, PI / 2.0 - t, p + PI);
        assert!((x - y).abs() < 1e-13);
    }

    #[test]
    fn mmc_oracle_examples() {
        let ra = qubit_state(&BlochVector::new(0.1, 0.2, 0.3).unwrap());
        let rb = qubit_state(&BlochVector::new(-0.5, 0.0, 0.4).unwrap());
        let prod = DensityMatrix::new(kron(&ra, &rb).unwrap()).unwrap();
        let cfg = fast();
        assert!(mmc_oracle(&prod, &cfg) < 1e-9);
        assert!((mmc_oracle(&bell_diagonal(0.5, -0.3, 0.2).unwrap(), &cfg) - 0.5).abs() < 1e-9);
        assert!((mmc_oracle(&pure_state(0.6).unwrap(), &cfg) - 0.6).abs() < 1e-9);
    }

    #[test]
    fn classical_cov_examples() {
        let uniform = ProbTable2x2::new(0.25, 0.25, 0.25, 0.25).unwrap();
        assert_eq!(classical_cov(&uniform), 0.0);
        let t = ProbTable2x2::new(0.4, 0.1, 0.2, 0.3).unwrap();
        assert!((classical_cov(&t) - 0.4).abs() < 1e-15);
        assert!((classical_cov_moments(&t) - 0.4).abs() < 1e-15);
        let corr = ProbTable2x2::new(0.5, 0.0, 0.0, 0.5).unwrap();
        assert_eq!(classical_cov(&corr), 1.0);
    }

    #[test]
    fn classical_cov_paths_agree_on_simplex() {
        // 0.01 steps over the 3-simplex
        let mut count = 0;
        for i in 0..=100u32 {
            for j in 0..=(100 - i) {
                for k in 0..=(100 - i - j) {
                    let l = 100 - i - j - k;
                    let t = ProbTable2x2::new(
                        i as f64 / 100.0,
                        j as f64 / 100.0,
                        k as f64 / 100.0,
                        l as f64 / 100.0,
                    );
                    let Ok(t) = t else { continue };
                    assert!((classical_cov(&t) - classical_cov_moments(&t)).abs() <= 1e-14);
                    count += 1;
                }
            }
        }
        assert!(count > 170_000);
    }
}

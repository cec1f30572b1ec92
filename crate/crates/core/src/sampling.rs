//! Seeded random states and parameters for sweeps and property checks.

use std::f64::consts::PI;

use rand::Rng;
use rand_distr::{Distribution, Exp1, StandardNormal};

use crate::linalg::{ComplexMatrix, C64};
use crate::states::{
    bell_diagonal_weights, BlochVector, DensityMatrix, ProbTable2x2, XStateParams,
};

/// Point drawn uniformly from the probability simplex with `n` vertices.
pub fn simplex<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<f64> {
    let w: Vec<f64> = (0..n).map(|_| Exp1.sample(rng)).collect();
    let total: f64 = w.iter().sum();
    w.into_iter().map(|x| x / total).collect()
}

pub fn unit_vector<R: Rng + ?Sized>(rng: &mut R) -> [f64; 3] {
    loop {
        let v: [f64; 3] = [0; 3].map(|_| StandardNormal.sample(rng));
        let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if n > 1e-8 {
            return v.map(|x| x / n);
        }
    }
}

/// Bloch vector uniform in the unit ball.
pub fn bloch_in_ball<R: Rng + ?Sized>(rng: &mut R) -> BlochVector {
    let r = rng.random::<f64>().cbrt();
    let [x, y, z] = unit_vector(rng).map(|c| c * r);
    BlochVector::new(x, y, z).expect("norm at most one")
}

/// Random pure state in C⁴ (Haar measure).
pub fn pure_vector<R: Rng + ?Sized>(rng: &mut R) -> [C64; 4] {
    let v: [C64; 4] = [0; 4].map(|_| C64::new(StandardNormal.sample(rng), StandardNormal.sample(rng)));
    let n = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    v.map(|z| z / n)
}

/// Mixture of one to four random pure states with simplex weights.
pub fn mixed_state<R: Rng + ?Sized>(rng: &mut R) -> DensityMatrix {
    let k = rng.random_range(1..=4);
    let weights = simplex(rng, k);
    let mut m = ComplexMatrix::zeros(4).expect("4x4");
    for w in weights {
        let v = pure_vector(rng);
        for i in 0..4 {
            for j in 0..4 {
                m[(i, j)] += v[i] * v[j].conj() * w;
            }
        }
    }
    // renormalize the trace to absorb rounding
    let tr = m.trace().re;
    DensityMatrix::new(m.scale_real(1.0 / tr)).expect("convex mixture of pure states")
}

/// X-state with a random diagonal and coherences drawn up to their bounds.
pub fn x_params<R: Rng + ?Sized>(rng: &mut R) -> XStateParams {
    let d = simplex(rng, 4);
    let rho14 = rng.random::<f64>() * (d[0] * d[3]).sqrt();
    let rho23 = rng.random::<f64>() * (d[1] * d[2]).sqrt();
    XStateParams::new(d[0], d[1], d[2], 1.0 - d[0] - d[1] - d[2], rho14, rho23)
        .expect("coherences within bounds")
}

/// Uniform point of the Bell-diagonal tetrahedron.
pub fn tetrahedron_point<R: Rng + ?Sized>(rng: &mut R) -> [f64; 3] {
    loop {
        let c = [0; 3].map(|_| rng.random_range(-1.0..=1.0));
        if bell_diagonal_weights(c).iter().all(|&w| w >= 0.0) {
            return c;
        }
    }
}

pub fn prob_table<R: Rng + ?Sized>(rng: &mut R) -> ProbTable2x2 {
    let p = simplex(rng, 4);
    ProbTable2x2::new(p[0], p[1], p[2], 1.0 - p[0] - p[1] - p[2]).expect("simplex point")
}

/// Projector angles `(θ, φ)` whose axis is uniform on the sphere.
pub fn projector_angles<R: Rng + ?Sized>(rng: &mut R) -> (f64, f64) {
    let theta = 0.5 * rng.random_range(-1.0f64..=1.0).acos();
    (theta, 2.0 * PI * rng.random::<f64>())
}

/// Haar-random 2×2 unitary.
pub fn unitary_2<R: Rng + ?Sized>(rng: &mut R) -> ComplexMatrix {
    let q: [f64; 4] = [0; 4].map(|_| StandardNormal.sample(rng));
    let n = q.iter().map(|x| x * x).sum::<f64>().sqrt();
    let [a, b, c, d] = q.map(|x| x / n);
    let phase = C64::from_polar(1.0, 2.0 * PI * rng.random::<f64>());
    let u = ComplexMatrix::from_rows(&[
        [C64::new(a, b), C64::new(c, d)],
        [C64::new(-c, d), C64::new(a, -b)],
    ])
    .expect("2x2");
    u.scale(phase)
}

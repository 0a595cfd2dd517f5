//! Shared random generators for unit tests.

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use std::f64::consts::{PI, TAU};

use crate::channels::KrausChannel;
use crate::matrix::ComplexMatrix;
use crate::states::{AxisVector, BlochVector, DensityMatrix};

/// Uniform point in the Bloch ball: r ~ cbrt(u), cos(theta) uniform.
pub(crate) fn random_bloch(rng: &mut ChaCha8Rng) -> BlochVector {
    let r = rng.random::<f64>().cbrt();
    let theta = (1.0 - 2.0 * rng.random::<f64>()).clamp(-1.0, 1.0).acos();
    let phi = (rng.random::<f64>() * TAU).min(TAU - f64::EPSILON);
    BlochVector::new(r, theta, phi).unwrap()
}

pub(crate) fn random_axis(rng: &mut ChaCha8Rng) -> AxisVector {
    let theta = (1.0 - 2.0 * rng.random::<f64>()).clamp(-1.0, 1.0).acos();
    let phi = (rng.random::<f64>() * TAU).min(TAU - f64::EPSILON);
    AxisVector::new(theta, phi).unwrap()
}

/// An axis perpendicular to `axis`, rotated by a random angle around it.
pub(crate) fn random_perpendicular_axis(rng: &mut ChaCha8Rng, axis: &AxisVector) -> AxisVector {
    let [x, y, z] = axis.cartesian();
    // Any vector not parallel to the axis seeds the cross products.
    let seed = if z.abs() < 0.9 {
        [0.0, 0.0, 1.0]
    } else {
        [1.0, 0.0, 0.0]
    };
    let u = [
        y * seed[2] - z * seed[1],
        z * seed[0] - x * seed[2],
        x * seed[1] - y * seed[0],
    ];
    let nu = (u[0] * u[0] + u[1] * u[1] + u[2] * u[2]).sqrt();
    let u = [u[0] / nu, u[1] / nu, u[2] / nu];
    let v = [
        y * u[2] - z * u[1],
        z * u[0] - x * u[2],
        x * u[1] - y * u[0],
    ];
    let angle = rng.random::<f64>() * TAU;
    let (c, s) = (angle.cos(), angle.sin());
    let w = [
        c * u[0] + s * v[0],
        c * u[1] + s * v[1],
        c * u[2] + s * v[2],
    ];
    let theta = w[2].clamp(-1.0, 1.0).acos();
    let mut phi = w[1].atan2(w[0]);
    if phi < 0.0 {
        phi += TAU;
    }
    AxisVector::new(theta.clamp(0.0, PI), phi.min(TAU - f64::EPSILON)).unwrap()
}

fn random_ket(rng: &mut ChaCha8Rng, dim: usize) -> Vec<Complex64> {
    let mut amps: Vec<Complex64> = (0..dim)
        .map(|_| Complex64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5))
        .collect();
    let norm: f64 = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
    for a in &mut amps {
        *a /= norm;
    }
    amps
}

/// Random mixed state: a convex mixture of a few random pure states.
pub(crate) fn random_density(rng: &mut ChaCha8Rng, dim: usize) -> DensityMatrix {
    let n = 1 + rng.random_range(0..3usize);
    let mut weights: Vec<f64> = (0..n).map(|_| rng.random::<f64>() + 1e-3).collect();
    let total: f64 = weights.iter().sum();
    for w in &mut weights {
        *w /= total;
    }
    let mut m = ComplexMatrix::zeros(dim);
    for w in weights {
        let ket = random_ket(rng, dim);
        for i in 0..dim {
            for j in 0..dim {
                let term = ket[i] * ket[j].conj() * w;
                m.set(i, j, m.get(i, j) + term);
            }
        }
    }
    DensityMatrix::new(m).expect("random mixture is a valid state")
}

/// Random CPTP channel: random operators whitened so completeness holds.
pub(crate) fn random_kraus_channel(rng: &mut ChaCha8Rng) -> KrausChannel {
    let n_ops = 1 + rng.random_range(0..3usize);
    let generators: Vec<ComplexMatrix> = (0..n_ops)
        .map(|_| {
            let entries: Vec<Complex64> = (0..4)
                .map(|_| Complex64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5))
                .collect();
            ComplexMatrix::from_rows(2, &entries).unwrap()
        })
        .collect();
    let mut gram = ComplexMatrix::zeros(2);
    for g in &generators {
        gram = &gram + &(&g.adjoint() * g);
    }
    // gram^(-1/2) through its Hermitian eigendecomposition.
    let mut inv_sqrt = ComplexMatrix::zeros(2);
    for (value, vector) in gram.hermitian_eigenpairs() {
        let scale = 1.0 / value.sqrt();
        for i in 0..2 {
            for j in 0..2 {
                let term = vector[i] * vector[j].conj() * scale;
                inv_sqrt.set(i, j, inv_sqrt.get(i, j) + term);
            }
        }
    }
    let ops: Vec<ComplexMatrix> = generators.iter().map(|g| g * &inv_sqrt).collect();
    KrausChannel::new(ops).expect("whitened operators satisfy completeness")
}

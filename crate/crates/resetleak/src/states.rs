//! Qubit state model: density matrices, Bloch-ball coordinates, and
//! measurement axes.
//!
//! A [`DensityMatrix`] is validated on construction (Hermitian, unit trace,
//! positive semidefinite within tolerances). Operations that preserve these
//! invariants by construction build results through an internal unchecked
//! path; `validate` re-checks on demand.

use num_complex::Complex64;
use std::f64::consts::{PI, TAU};

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;

/// Entry-wise tolerance for the Hermitian check.
pub const HERMITIAN_TOL: f64 = 1e-12;
/// Tolerance for `|trace - 1|`.
pub const TRACE_TOL: f64 = 1e-12;
/// Eigenvalue floor for the positive-semidefinite check. Channel arithmetic
/// accumulates rounding; a strict zero cutoff would produce false rejections.
pub const PSD_TOL: f64 = 1e-10;
/// Slack allowed on the Bloch magnitude before a state is rejected.
pub const BLOCH_TOL: f64 = 1e-12;

/// Point in the Bloch ball: magnitude `r` in [0, 1], polar angle `theta` in
/// [0, pi], azimuth `phi` in [0, 2*pi).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochVector {
    r: f64,
    theta: f64,
    phi: f64,
}

impl BlochVector {
    pub fn new(r: f64, theta: f64, phi: f64) -> Result<Self> {
        if !r.is_finite() || !(0.0..=1.0 + BLOCH_TOL).contains(&r) {
            return Err(Error::BlochMagnitude { r });
        }
        if !theta.is_finite() || !(-BLOCH_TOL..=PI + BLOCH_TOL).contains(&theta) {
            return Err(Error::AngleOutOfRange {
                name: "theta",
                value: theta,
            });
        }
        if !phi.is_finite() || !(-BLOCH_TOL..TAU + BLOCH_TOL).contains(&phi) {
            return Err(Error::AngleOutOfRange {
                name: "phi",
                value: phi,
            });
        }
        let mut phi = phi.rem_euclid(TAU);
        if phi >= TAU {
            phi = 0.0;
        }
        Ok(Self {
            r,
            theta: theta.clamp(0.0, PI),
            phi,
        })
    }

    /// The origin of the ball, i.e. the maximally mixed state.
    pub fn origin() -> Self {
        Self {
            r: 0.0,
            theta: 0.0,
            phi: 0.0,
        }
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    /// Cartesian components `r * (sin t cos p, sin t sin p, cos t)`.
    pub fn cartesian(&self) -> [f64; 3] {
        let (st, ct) = (self.theta.sin(), self.theta.cos());
        let (sp, cp) = (self.phi.sin(), self.phi.cos());
        [self.r * st * cp, self.r * st * sp, self.r * ct]
    }

    /// The density matrix `(I + r.sigma) / 2`.
    pub fn to_density(&self) -> DensityMatrix {
        let [x, y, z] = self.cartesian();
        let m = ComplexMatrix::from_rows(
            2,
            &[
                Complex64::new(0.5 * (1.0 + z), 0.0),
                Complex64::new(0.5 * x, -0.5 * y),
                Complex64::new(0.5 * x, 0.5 * y),
                Complex64::new(0.5 * (1.0 - z), 0.0),
            ],
        )
        .expect("2x2 entry count");
        DensityMatrix::from_matrix_unchecked(m)
    }
}

/// Unit vector on the Bloch sphere, used for measurement axes and for the
/// axes of generalized Pauli-X gates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AxisVector {
    theta: f64,
    phi: f64,
}

impl AxisVector {
    pub fn new(theta: f64, phi: f64) -> Result<Self> {
        let unit = BlochVector::new(1.0, theta, phi)?;
        Ok(Self {
            theta: unit.theta,
            phi: unit.phi,
        })
    }

    /// The +Z axis.
    pub fn z() -> Self {
        Self {
            theta: 0.0,
            phi: 0.0,
        }
    }

    /// The +X axis.
    pub fn x() -> Self {
        Self {
            theta: PI / 2.0,
            phi: 0.0,
        }
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    pub fn cartesian(&self) -> [f64; 3] {
        BlochVector::new(1.0, self.theta, self.phi)
            .expect("axis angles are validated")
            .cartesian()
    }

    pub fn dot(&self, other: &Self) -> f64 {
        let a = self.cartesian();
        let b = other.cartesian();
        a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
    }

    /// Amplitudes of the +1 eigenstate `cos(t/2)|0> + e^{i p} sin(t/2)|1>`.
    pub fn ket_plus(&self) -> [Complex64; 2] {
        let half = self.theta / 2.0;
        [
            Complex64::new(half.cos(), 0.0),
            Complex64::from_polar(half.sin(), self.phi),
        ]
    }

    /// Amplitudes of the orthogonal -1 eigenstate.
    pub fn ket_minus(&self) -> [Complex64; 2] {
        let half = self.theta / 2.0;
        [
            Complex64::new(half.sin(), 0.0),
            -Complex64::from_polar(half.cos(), self.phi),
        ]
    }
}

/// Hermitian, unit-trace, positive semidefinite matrix describing a
/// (possibly mixed) state of one or two qubits.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
}

impl DensityMatrix {
    /// Validates the three defining invariants before accepting the matrix.
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        let state = Self { matrix };
        state.validate()?;
        Ok(state)
    }

    /// Wraps a matrix that is valid by construction.
    pub(crate) fn from_matrix_unchecked(matrix: ComplexMatrix) -> Self {
        Self { matrix }
    }

    /// Re-checks Hermiticity, trace, and positivity.
    pub fn validate(&self) -> Result<()> {
        let residual = self.matrix.hermitian_residual();
        if residual > HERMITIAN_TOL {
            return Err(Error::NotHermitian { residual });
        }
        let deviation = (self.matrix.trace() - Complex64::new(1.0, 0.0)).norm();
        if deviation > TRACE_TOL {
            return Err(Error::TraceNotOne { deviation });
        }
        let min_eigenvalue = self.matrix.min_hermitian_eigenvalue();
        if min_eigenvalue < -PSD_TOL {
            return Err(Error::NotPositiveSemidefinite { min_eigenvalue });
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    /// The pure state `|i><i|` of the given dimension.
    pub fn basis_state(dim: usize, index: usize) -> Self {
        assert!(index < dim, "basis index out of range");
        let mut m = ComplexMatrix::zeros(dim);
        m.set(index, index, Complex64::new(1.0, 0.0));
        Self::from_matrix_unchecked(m)
    }

    /// `I / dim`.
    pub fn maximally_mixed(dim: usize) -> Self {
        Self::from_matrix_unchecked(ComplexMatrix::identity(dim).scale_real(1.0 / dim as f64))
    }

    /// Projector onto a normalized ket.
    pub fn from_ket(amplitudes: &[Complex64]) -> Result<Self> {
        let norm: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        if (norm - 1.0).abs() > 1e-10 {
            return Err(Error::NotNormalized { norm });
        }
        let dim = amplitudes.len();
        let mut m = ComplexMatrix::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                m.set(i, j, amplitudes[i] * amplitudes[j].conj());
            }
        }
        Ok(Self::from_matrix_unchecked(m))
    }

    /// Inverts the Bloch parametrization. `r = 0` returns zero angles by
    /// convention.
    pub fn to_bloch(&self) -> Result<BlochVector> {
        self.matrix.require_dim(2)?;
        let x = 2.0 * self.matrix.get(0, 1).re;
        let y = -2.0 * self.matrix.get(0, 1).im;
        let z = self.matrix.get(0, 0).re - self.matrix.get(1, 1).re;
        let r = (x * x + y * y + z * z).sqrt();
        if r == 0.0 {
            return Ok(BlochVector::origin());
        }
        let theta = (z / r).clamp(-1.0, 1.0).acos();
        let mut phi = y.atan2(x);
        if phi < 0.0 {
            phi += TAU;
        }
        if phi >= TAU {
            phi = 0.0;
        }
        BlochVector::new(r.min(1.0), theta, phi)
    }

    /// Kronecker product of two states; the first factor owns the high bit
    /// of the composite index.
    pub fn tensor(&self, other: &Self) -> Self {
        Self::from_matrix_unchecked(self.matrix.kronecker(&other.matrix))
    }

    pub fn approx_eq(&self, other: &Self, epsilon: f64) -> bool {
        self.matrix.approx_eq(&other.matrix, epsilon)
    }
}

/// Trace over the first tensor factor of a 4x4 matrix:
/// `out[a][b] = m[a][b] + m[2+a][2+b]`.
pub fn partial_trace_first(m: &ComplexMatrix) -> Result<ComplexMatrix> {
    m.require_dim(4)?;
    let mut out = ComplexMatrix::zeros(2);
    for a in 0..2 {
        for b in 0..2 {
            out.set(a, b, m.get(a, b) + m.get(2 + a, 2 + b));
        }
    }
    Ok(out)
}

/// Trace over the second tensor factor of a 4x4 matrix.
pub fn partial_trace_second(m: &ComplexMatrix) -> Result<ComplexMatrix> {
    m.require_dim(4)?;
    let mut out = ComplexMatrix::zeros(2);
    for i in 0..2 {
        for j in 0..2 {
            out.set(i, j, m.get(2 * i, 2 * j) + m.get(2 * i + 1, 2 * j + 1));
        }
    }
    Ok(out)
}

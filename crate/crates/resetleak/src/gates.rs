//! Single-qubit unitary gates used by the victim circuit and the one-time
//! pad schemes.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::states::{AxisVector, DensityMatrix};

/// Tolerance for the unitarity check `max |UU' - I|`.
pub const UNITARY_TOL: f64 = 1e-12;

/// A 2x2 unitary with a descriptive label. Global phases are kept as
/// constructed; density-matrix conjugation makes them unobservable.
#[derive(Debug, Clone, PartialEq)]
pub struct Gate {
    matrix: ComplexMatrix,
    label: String,
}

impl Gate {
    pub fn new(matrix: ComplexMatrix, label: impl Into<String>) -> Result<Self> {
        let product = &matrix * &matrix.adjoint();
        let residual = product.max_abs_diff(&ComplexMatrix::identity(matrix.dim()));
        if residual > UNITARY_TOL {
            return Err(Error::NotUnitary { residual });
        }
        Ok(Self {
            matrix,
            label: label.into(),
        })
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// `U rho U'`; trace and positivity are preserved.
    pub fn apply(&self, rho: &DensityMatrix) -> Result<DensityMatrix> {
        if rho.dim() != self.matrix.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.matrix.dim(),
                got: rho.dim(),
            });
        }
        Ok(DensityMatrix::from_matrix_unchecked(
            self.conjugate(rho.matrix()),
        ))
    }

    /// `U m U'` on a raw matrix.
    pub(crate) fn conjugate(&self, m: &ComplexMatrix) -> ComplexMatrix {
        &(&self.matrix * m) * &self.matrix.adjoint()
    }
}

/// The Pauli-family gates appearing in the pad schemes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PauliKind {
    I,
    X,
    Z,
    Xz,
}

/// Exact I, X, Z, and XZ matrices.
pub fn pauli(kind: PauliKind) -> Gate {
    let (entries, label) = match kind {
        PauliKind::I => ([1.0, 0.0, 0.0, 1.0], "I"),
        PauliKind::X => ([0.0, 1.0, 1.0, 0.0], "X"),
        PauliKind::Z => ([1.0, 0.0, 0.0, -1.0], "Z"),
        PauliKind::Xz => ([0.0, -1.0, 1.0, 0.0], "XZ"),
    };
    let matrix = ComplexMatrix::from_real_rows(2, &entries).expect("2x2 entry count");
    Gate::new(matrix, label).expect("Pauli matrices are unitary")
}

/// Rotation about the X axis by `theta`:
/// `[[cos(t/2), -i sin(t/2)], [-i sin(t/2), cos(t/2)]]`.
pub fn rotation_x(theta: f64) -> Gate {
    let (c, s) = ((theta / 2.0).cos(), (theta / 2.0).sin());
    let matrix = ComplexMatrix::from_rows(
        2,
        &[
            Complex64::new(c, 0.0),
            Complex64::new(0.0, -s),
            Complex64::new(0.0, -s),
            Complex64::new(c, 0.0),
        ],
    )
    .expect("2x2 entry count");
    Gate::new(matrix, format!("Rx({theta})")).expect("rotations are unitary")
}

/// Generalized Pauli-X along an axis `n`: eigenstate `|n>` with eigenvalue +1
/// and `|-n>` with eigenvalue -1. Hermitian, unitary, and an involution.
/// `(pi/2, 0)` recovers the ordinary Pauli-X; `theta = 0` gives Pauli-Z.
pub fn generalized_pauli_x(axis: &AxisVector) -> Gate {
    let (ct, st) = (axis.theta().cos(), axis.theta().sin());
    let matrix = ComplexMatrix::from_rows(
        2,
        &[
            Complex64::new(ct, 0.0),
            Complex64::from_polar(st, -axis.phi()),
            Complex64::from_polar(st, axis.phi()),
            Complex64::new(-ct, 0.0),
        ],
    )
    .expect("2x2 entry count");
    Gate::new(matrix, format!("Xn({}, {})", axis.theta(), axis.phi()))
        .expect("generalized Pauli-X is unitary")
}

/// `(1/sqrt 2) [[1, 1], [1, -1]]`. Restores the computational basis after an
/// X-axis measurement; equals the generalized Pauli-X with axis theta = pi/4.
pub fn hadamard() -> Gate {
    let f = std::f64::consts::FRAC_1_SQRT_2;
    let matrix = ComplexMatrix::from_real_rows(2, &[f, f, f, -f]).expect("2x2 entry count");
    Gate::new(matrix, "H").expect("Hadamard is unitary")
}

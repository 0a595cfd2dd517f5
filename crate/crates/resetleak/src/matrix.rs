//! Dense complex matrices of small dimension (2 or 4 in this crate).
//!
//! Every state, gate, and channel representation is carried by
//! [`ComplexMatrix`]. Storage and decompositions are delegated to
//! `nalgebra`; the type exposes only what the rest of the crate needs.

use nalgebra::DMatrix;
use num_complex::Complex64;
use std::ops::{Add, Mul, Sub};

use crate::error::{Error, Result};

/// A dim x dim complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    data: DMatrix<Complex64>,
}

impl ComplexMatrix {
    /// Builds a matrix from row-major entries; `entries.len()` must be `dim * dim`.
    pub fn from_rows(dim: usize, entries: &[Complex64]) -> Result<Self> {
        if entries.len() != dim * dim {
            return Err(Error::BadEntryCount {
                dim,
                got: entries.len(),
            });
        }
        Ok(Self {
            data: DMatrix::from_row_slice(dim, dim, entries),
        })
    }

    /// Builds a matrix from real row-major entries.
    pub fn from_real_rows(dim: usize, entries: &[f64]) -> Result<Self> {
        let entries: Vec<Complex64> = entries.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        Self::from_rows(dim, &entries)
    }

    pub fn zeros(dim: usize) -> Self {
        Self {
            data: DMatrix::zeros(dim, dim),
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self {
            data: DMatrix::identity(dim, dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.data.nrows()
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.data[(row, col)]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Complex64) {
        self.data[(row, col)] = value;
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self {
            data: self.data.adjoint(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self {
            data: self.data.transpose(),
        }
    }

    pub fn trace(&self) -> Complex64 {
        self.data.trace()
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self {
            data: &self.data * factor,
        }
    }

    pub fn scale_real(&self, factor: f64) -> Self {
        self.scale(Complex64::new(factor, 0.0))
    }

    /// Kronecker product, row index `dim_b * i_a + i_b`.
    pub fn kronecker(&self, other: &Self) -> Self {
        Self {
            data: self.data.kronecker(&other.data),
        }
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Largest entry-wise difference `max_ij |a_ij - b_ij|`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim(), other.dim(), "matrix dimensions differ");
        self.data
            .iter()
            .zip(other.data.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Equality within an entry-wise tolerance.
    pub fn approx_eq(&self, other: &Self, epsilon: f64) -> bool {
        self.dim() == other.dim() && self.max_abs_diff(other) <= epsilon
    }

    /// `max_ij |m_ij - conj(m_ji)|`, zero for Hermitian matrices.
    pub fn hermitian_residual(&self) -> f64 {
        self.max_abs_diff(&self.adjoint())
    }

    /// Eigenvalues of a Hermitian matrix, ascending. The matrix is assumed
    /// Hermitian up to rounding; the decomposition only sees `(M + M†)/2`.
    pub fn hermitian_eigenvalues(&self) -> Vec<f64> {
        let mut eigs: Vec<f64> = self.hermitian_eigenpairs().iter().map(|(v, _)| *v).collect();
        eigs.sort_by(|a, b| a.partial_cmp(b).expect("eigenvalues are finite"));
        eigs
    }

    /// Eigenpairs of a Hermitian matrix as (eigenvalue, eigenvector columns),
    /// computed by cyclic Jacobi rotations. Jacobi converges unconditionally
    /// on Hermitian input, which matters here: the structured (block sparse)
    /// Choi matrices of this crate can defeat shifted-QR implementations.
    pub fn hermitian_eigenpairs(&self) -> Vec<(f64, Vec<Complex64>)> {
        let n = self.dim();
        let mut a: Vec<Complex64> = {
            let sym = (&self.data + self.data.adjoint()).scale(0.5);
            (0..n)
                .flat_map(|i| (0..n).map(move |j| (i, j)))
                .map(|(i, j)| sym[(i, j)])
                .collect()
        };
        let mut v: Vec<Complex64> = (0..n * n)
            .map(|k| {
                if k % (n + 1) == 0 {
                    Complex64::new(1.0, 0.0)
                } else {
                    Complex64::new(0.0, 0.0)
                }
            })
            .collect();

        let idx = |i: usize, j: usize| i * n + j;
        for _sweep in 0..60 {
            let off: f64 = (0..n)
                .flat_map(|i| (0..n).map(move |j| (i, j)))
                .filter(|&(i, j)| i != j)
                .map(|(i, j)| a[idx(i, j)].norm_sqr())
                .sum();
            if off <= 1e-30 {
                break;
            }
            for p in 0..n {
                for q in (p + 1)..n {
                    let apq = a[idx(p, q)];
                    if apq.norm() <= 1e-300 {
                        continue;
                    }
                    // Unitary 2x2 rotation zeroing a[p][q]: the phase of the
                    // pivot is absorbed into s, reducing to the real Jacobi
                    // angle for tan(2 theta) = 2|apq| / (app - aqq).
                    let app = a[idx(p, p)].re;
                    let aqq = a[idx(q, q)].re;
                    let abs = apq.norm();
                    let phase = apq / abs;
                    let tau = (app - aqq) / (2.0 * abs);
                    let t = tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt());
                    let c = 1.0 / (1.0 + t * t).sqrt();
                    let s = phase.conj() * (t * c);

                    // Columns: [cp, cq] <- [c*cp + s*cq, -conj(s)*cp + c*cq].
                    for i in 0..n {
                        let aip = a[idx(i, p)];
                        let aiq = a[idx(i, q)];
                        a[idx(i, p)] = aip * c + aiq * s;
                        a[idx(i, q)] = aiq * c - aip * s.conj();
                    }
                    // Rows: the conjugate-transposed update.
                    for j in 0..n {
                        let apj = a[idx(p, j)];
                        let aqj = a[idx(q, j)];
                        a[idx(p, j)] = apj * c + aqj * s.conj();
                        a[idx(q, j)] = aqj * c - apj * s;
                    }
                    for i in 0..n {
                        let vip = v[idx(i, p)];
                        let viq = v[idx(i, q)];
                        v[idx(i, p)] = vip * c + viq * s;
                        v[idx(i, q)] = viq * c - vip * s.conj();
                    }
                }
            }
        }

        (0..n)
            .map(|k| {
                let value = a[idx(k, k)].re;
                let vector = (0..n).map(|i| v[idx(i, k)]).collect();
                (value, vector)
            })
            .collect()
    }

    pub fn min_hermitian_eigenvalue(&self) -> f64 {
        self.hermitian_eigenvalues()[0]
    }

    /// Checks dimension equality, returning a crate error instead of panicking.
    pub fn require_dim(&self, expected: usize) -> Result<()> {
        if self.dim() == expected {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected,
                got: self.dim(),
            })
        }
    }

    /// `Tr[self * other]` without forming the product.
    pub fn trace_product(&self, other: &Self) -> Complex64 {
        assert_eq!(self.dim(), other.dim(), "matrix dimensions differ");
        let d = self.dim();
        let mut acc = Complex64::new(0.0, 0.0);
        for i in 0..d {
            for j in 0..d {
                acc += self.get(i, j) * other.get(j, i);
            }
        }
        acc
    }

    pub fn entries_row_major(&self) -> Vec<Complex64> {
        let d = self.dim();
        (0..d)
            .flat_map(|i| (0..d).map(move |j| (i, j)))
            .map(|(i, j)| self.data[(i, j)])
            .collect()
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        ComplexMatrix {
            data: &self.data * &rhs.data,
        }
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        ComplexMatrix {
            data: &self.data + &rhs.data,
        }
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        ComplexMatrix {
            data: &self.data - &rhs.data,
        }
    }
}

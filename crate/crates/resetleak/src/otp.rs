//! Classical and quantum one-time pads, in averaged (channel) and keyed
//! (per-shot) form.
//!
//! The classical pad applies a generalized Pauli-X with probability 1/2; the
//! quantum pad adds a second generalized gate on an orthogonal axis. Averaged
//! over keys, the quantum pad sends every input to the maximally mixed state.

use num_complex::Complex64;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::gates::generalized_pauli_x;
use crate::matrix::ComplexMatrix;
use crate::states::{AxisVector, DensityMatrix};

/// Tolerance on the axis orthogonality required by the quantum pad.
pub const ORTHOGONALITY_TOL: f64 = 1e-10;

/// Which pad is applied between the victim circuit and the reset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OtpKind {
    None,
    Cotp,
    Qotp,
}

impl fmt::Display for OtpKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            OtpKind::None => "none",
            OtpKind::Cotp => "cotp",
            OtpKind::Qotp => "qotp",
        };
        f.write_str(name)
    }
}

impl FromStr for OtpKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "none" => Ok(OtpKind::None),
            "cotp" => Ok(OtpKind::Cotp),
            "qotp" => Ok(OtpKind::Qotp),
            other => Err(format!("unknown otp kind `{other}`")),
        }
    }
}

/// A pad scheme: the kind plus the axes of its generalized gates. For the
/// quantum pad the two axes must be orthogonal.
#[derive(Debug, Clone, PartialEq)]
pub struct OtpScheme {
    kind: OtpKind,
    x_axis: AxisVector,
    z_axis: AxisVector,
}

impl OtpScheme {
    pub fn none() -> Self {
        Self {
            kind: OtpKind::None,
            x_axis: AxisVector::x(),
            z_axis: AxisVector::z(),
        }
    }

    /// Classical pad with the ordinary Pauli-X gate.
    pub fn cotp_x() -> Self {
        Self::cotp(AxisVector::x())
    }

    /// Classical pad with a generalized Pauli-X along `axis`.
    pub fn cotp(axis: AxisVector) -> Self {
        Self {
            kind: OtpKind::Cotp,
            x_axis: axis,
            z_axis: AxisVector::z(),
        }
    }

    /// Quantum pad with the ordinary Pauli-X and Pauli-Z gates.
    pub fn qotp_xz() -> Self {
        Self::qotp(AxisVector::x(), AxisVector::z()).expect("X and Z axes are orthogonal")
    }

    /// Quantum pad with generalized gates along two orthogonal axes.
    pub fn qotp(x_axis: AxisVector, z_axis: AxisVector) -> Result<Self> {
        let dot = x_axis.dot(&z_axis);
        if dot.abs() > ORTHOGONALITY_TOL {
            return Err(Error::AxesNotOrthogonal { dot });
        }
        Ok(Self {
            kind: OtpKind::Qotp,
            x_axis,
            z_axis,
        })
    }

    /// The standard scheme for a kind: Pauli-X and Pauli-Z gates.
    pub fn standard(kind: OtpKind) -> Self {
        match kind {
            OtpKind::None => Self::none(),
            OtpKind::Cotp => Self::cotp_x(),
            OtpKind::Qotp => Self::qotp_xz(),
        }
    }

    pub fn kind(&self) -> OtpKind {
        self.kind
    }

    pub fn x_axis(&self) -> &AxisVector {
        &self.x_axis
    }

    pub fn z_axis(&self) -> &AxisVector {
        &self.z_axis
    }

    /// The equally weighted pad unitaries, indexed by `k1 + 2 * k2`:
    /// none -> `[I]`, classical -> `[I, Xn]`,
    /// quantum -> `[I, Xn, Xz, Xz Xn]`.
    pub fn pad_unitaries(&self) -> Vec<ComplexMatrix> {
        let identity = ComplexMatrix::identity(2);
        match self.kind {
            OtpKind::None => vec![identity],
            OtpKind::Cotp => {
                let xn = generalized_pauli_x(&self.x_axis).matrix().clone();
                vec![identity, xn]
            }
            OtpKind::Qotp => {
                let xn = generalized_pauli_x(&self.x_axis).matrix().clone();
                let xz = generalized_pauli_x(&self.z_axis).matrix().clone();
                let both = &xz * &xn;
                vec![identity, xn, xz, both]
            }
        }
    }

    /// Number of equiprobable keys.
    pub fn key_count(&self) -> usize {
        match self.kind {
            OtpKind::None => 1,
            OtpKind::Cotp => 2,
            OtpKind::Qotp => 4,
        }
    }
}

/// Per-shot pad key; `k2` is unused by the classical pad.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OtpKey {
    pub k1: bool,
    pub k2: bool,
}

impl OtpKey {
    pub fn new(k1: bool, k2: bool) -> Self {
        Self { k1, k2 }
    }

    /// All four keys in pad-unitary index order.
    pub fn all() -> [Self; 4] {
        [
            Self::new(false, false),
            Self::new(true, false),
            Self::new(false, true),
            Self::new(true, true),
        ]
    }

    fn index(&self, scheme: &OtpScheme) -> usize {
        match scheme.kind() {
            OtpKind::None => 0,
            OtpKind::Cotp => usize::from(self.k1),
            OtpKind::Qotp => usize::from(self.k1) + 2 * usize::from(self.k2),
        }
    }
}

fn conjugate(u: &ComplexMatrix, m: &ComplexMatrix) -> ComplexMatrix {
    &(u * m) * &u.adjoint()
}

/// The pad averaged over keys. The none scheme returns the input, the
/// classical pad the equal mixture over `{I, Xn}`, and the quantum pad the
/// maximally mixed state for every input.
pub fn otp_average(scheme: &OtpScheme, rho: &DensityMatrix) -> DensityMatrix {
    assert_eq!(rho.dim(), 2, "pads act on one qubit");
    let unitaries = scheme.pad_unitaries();
    let mut sum = ComplexMatrix::zeros(2);
    for u in &unitaries {
        sum = &sum + &conjugate(u, rho.matrix());
    }
    DensityMatrix::from_matrix_unchecked(sum.scale_real(1.0 / unitaries.len() as f64))
}

/// Applies the keyed pad `G = Xz^{k2} Xn^{k1}`.
pub fn otp_keyed(scheme: &OtpScheme, key: OtpKey, rho: &DensityMatrix) -> DensityMatrix {
    assert_eq!(rho.dim(), 2, "pads act on one qubit");
    let idx = key.index(scheme);
    if idx == 0 {
        return rho.clone();
    }
    let u = &scheme.pad_unitaries()[idx];
    DensityMatrix::from_matrix_unchecked(conjugate(u, rho.matrix()))
}

/// Undoes a keyed pad: `Xn^{k1} Xz^{k2}` applied to the padded state.
pub fn otp_decrypt(scheme: &OtpScheme, key: OtpKey, rho: &DensityMatrix) -> DensityMatrix {
    assert_eq!(rho.dim(), 2, "pads act on one qubit");
    let mut u = ComplexMatrix::identity(2);
    if key.k2 && scheme.kind() == OtpKind::Qotp {
        u = &u * generalized_pauli_x(scheme.z_axis()).matrix();
    }
    if key.k1 && scheme.kind() != OtpKind::None {
        u = generalized_pauli_x(scheme.x_axis()).matrix() * &u;
    }
    DensityMatrix::from_matrix_unchecked(conjugate(&u, rho.matrix()))
}

/// Pad average of a two-qubit state with independent keys per qubit.
pub fn otp_average_two_qubit(scheme: &OtpScheme, rho: &DensityMatrix) -> DensityMatrix {
    assert_eq!(rho.dim(), 4, "expected a two-qubit state");
    let unitaries = scheme.pad_unitaries();
    let mut sum = ComplexMatrix::zeros(4);
    for ua in &unitaries {
        for ub in &unitaries {
            sum = &sum + &conjugate(&ua.kronecker(ub), rho.matrix());
        }
    }
    let weight = 1.0 / (unitaries.len() * unitaries.len()) as f64;
    DensityMatrix::from_matrix_unchecked(sum.scale_real(weight))
}

/// Probability of observing the target state `(x, y)` after the classical
/// Pauli-X pad is applied to the pure input `(alpha, beta)`, i.e.
/// `<n| ((rho + X rho X) / 2) |n>`.
pub fn cotp_measurement_probability(
    input: (Complex64, Complex64),
    target: (Complex64, Complex64),
) -> Result<f64> {
    for (a, b) in [input, target] {
        let norm = (a.norm_sqr() + b.norm_sqr()).sqrt();
        if (norm - 1.0).abs() > 1e-10 {
            return Err(Error::NotNormalized { norm });
        }
    }
    let rho = DensityMatrix::from_ket(&[input.0, input.1])?;
    let padded = otp_average(&OtpScheme::cotp_x(), &rho);
    let target_proj = DensityMatrix::from_ket(&[target.0, target.1])?;
    Ok(target_proj
        .matrix()
        .trace_product(padded.matrix())
        .re
        .clamp(0.0, 1.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channels::measure;
    use crate::gates::{generalized_pauli_x, pauli, PauliKind};
    use crate::states::BlochVector;
    use crate::testutil::{random_axis, random_bloch, random_density, random_perpendicular_axis};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::{FRAC_1_SQRT_2, PI};

    #[test]
    fn quantum_pad_sends_everything_to_the_maximally_mixed_state() {
        let mut rng = ChaCha8Rng::seed_from_u64(51);
        let scheme = OtpScheme::qotp_xz();
        let mixed = DensityMatrix::maximally_mixed(2);
        for _ in 0..1000 {
            let rho = random_bloch(&mut rng).to_density();
            let out = otp_average(&scheme, &rho);
            assert!(out.matrix().max_abs_diff(mixed.matrix()) <= 1e-12);
        }
    }

    #[test]
    fn quantum_pad_mixes_for_any_orthogonal_axis_pair() {
        let mut rng = ChaCha8Rng::seed_from_u64(52);
        let mixed = DensityMatrix::maximally_mixed(2);
        for _ in 0..50 {
            let x_axis = random_axis(&mut rng);
            let z_axis = random_perpendicular_axis(&mut rng, &x_axis);
            let scheme = OtpScheme::qotp(x_axis, z_axis).unwrap();
            let rho = random_bloch(&mut rng).to_density();
            assert!(otp_average(&scheme, &rho).matrix().max_abs_diff(mixed.matrix()) <= 1e-12);
        }
    }

    #[test]
    fn non_orthogonal_quantum_axes_are_rejected() {
        let err = OtpScheme::qotp(AxisVector::x(), AxisVector::x());
        assert!(matches!(err, Err(Error::AxesNotOrthogonal { .. })));
    }

    #[test]
    fn classical_pad_average_matches_closed_form() {
        let mut rng = ChaCha8Rng::seed_from_u64(53);
        for _ in 0..50 {
            let bloch = random_bloch(&mut rng);
            let off = 0.5 * bloch.r() * bloch.theta().sin() * bloch.phi().cos();
            let expected =
                ComplexMatrix::from_real_rows(2, &[0.5, off, off, 0.5]).unwrap();
            let out = otp_average(&OtpScheme::cotp_x(), &bloch.to_density());
            assert!(out.matrix().approx_eq(&expected, 1e-12));
        }
    }

    #[test]
    fn classical_pad_hides_z_basis_mixtures_completely() {
        let rho = BlochVector::new(0.7, 0.0, 0.0).unwrap().to_density();
        let out = otp_average(&OtpScheme::cotp_x(), &rho);
        assert!(out.approx_eq(&DensityMatrix::maximally_mixed(2), 1e-12));
    }

    #[test]
    fn classical_pad_output_commutes_with_its_gate() {
        let mut rng = ChaCha8Rng::seed_from_u64(54);
        for _ in 0..50 {
            let axis = random_axis(&mut rng);
            let out = otp_average(&OtpScheme::cotp(axis), &random_bloch(&mut rng).to_density());
            let xn = generalized_pauli_x(&axis);
            let forward = out.matrix() * xn.matrix();
            let backward = xn.matrix() * out.matrix();
            assert!(forward.max_abs_diff(&backward) <= 1e-12);
        }
    }

    #[test]
    fn classical_pad_is_transparent_on_perpendicular_measurement_axes() {
        let mut rng = ChaCha8Rng::seed_from_u64(55);
        for _ in 0..50 {
            let gate_axis = random_axis(&mut rng);
            let out = otp_average(
                &OtpScheme::cotp(gate_axis),
                &random_bloch(&mut rng).to_density(),
            );
            let perp = random_perpendicular_axis(&mut rng, &gate_axis);
            let m = measure(&out, &perp);
            assert!((m.p_plus - 0.5).abs() <= 1e-10);
        }
    }

    #[test]
    fn zero_key_leaves_the_state_unchanged() {
        let mut rng = ChaCha8Rng::seed_from_u64(56);
        let rho = random_bloch(&mut rng).to_density();
        for scheme in [OtpScheme::none(), OtpScheme::cotp_x(), OtpScheme::qotp_xz()] {
            let out = otp_keyed(&scheme, OtpKey::new(false, false), &rho);
            assert!(out.approx_eq(&rho, 0.0));
        }
    }

    #[test]
    fn classical_key_flips_the_ground_state() {
        let out = otp_keyed(
            &OtpScheme::cotp_x(),
            OtpKey::new(true, false),
            &DensityMatrix::basis_state(2, 0),
        );
        assert!(out.approx_eq(&DensityMatrix::basis_state(2, 1), 1e-15));
    }

    #[test]
    fn key_average_reproduces_the_averaged_channel() {
        let mut rng = ChaCha8Rng::seed_from_u64(57);
        for scheme in [OtpScheme::none(), OtpScheme::cotp_x(), OtpScheme::qotp_xz()] {
            let rho = random_bloch(&mut rng).to_density();
            let mut sum = ComplexMatrix::zeros(2);
            let mut seen = Vec::new();
            for key in OtpKey::all() {
                let idx = key.index(&scheme);
                if seen.contains(&idx) {
                    continue;
                }
                seen.push(idx);
                sum = &sum + otp_keyed(&scheme, key, &rho).matrix();
            }
            let averaged = sum.scale_real(1.0 / seen.len() as f64);
            assert!(averaged.max_abs_diff(otp_average(&scheme, &rho).matrix()) <= 1e-15);
        }
    }

    #[test]
    fn quantum_key_average_is_maximally_mixed() {
        let mut rng = ChaCha8Rng::seed_from_u64(58);
        let rho = random_bloch(&mut rng).to_density();
        let scheme = OtpScheme::qotp_xz();
        let mut sum = ComplexMatrix::zeros(2);
        for key in OtpKey::all() {
            sum = &sum + otp_keyed(&scheme, key, &rho).matrix();
        }
        let mean = sum.scale_real(0.25);
        assert!(mean.max_abs_diff(DensityMatrix::maximally_mixed(2).matrix()) <= 1e-12);
    }

    #[test]
    fn decrypt_round_trips_every_key() {
        let mut rng = ChaCha8Rng::seed_from_u64(59);
        for scheme in [OtpScheme::none(), OtpScheme::cotp_x(), OtpScheme::qotp_xz()] {
            for key in OtpKey::all() {
                let rho = random_bloch(&mut rng).to_density();
                let padded = otp_keyed(&scheme, key, &rho);
                let recovered = otp_decrypt(&scheme, key, &padded);
                assert!(recovered.approx_eq(&rho, 1e-12));
            }
        }
    }

    #[test]
    fn decrypt_round_trips_generalized_axes() {
        let mut rng = ChaCha8Rng::seed_from_u64(60);
        let x_axis = random_axis(&mut rng);
        let z_axis = random_perpendicular_axis(&mut rng, &x_axis);
        let scheme = OtpScheme::qotp(x_axis, z_axis).unwrap();
        for key in OtpKey::all() {
            let rho = random_bloch(&mut rng).to_density();
            let recovered = otp_decrypt(&scheme, key, &otp_keyed(&scheme, key, &rho));
            assert!(recovered.approx_eq(&rho, 1e-12));
        }
    }

    #[test]
    fn classical_flip_round_trips_the_excited_state() {
        let excited = DensityMatrix::basis_state(2, 1);
        let key = OtpKey::new(true, false);
        let scheme = OtpScheme::cotp_x();
        let back = otp_decrypt(&scheme, key, &otp_keyed(&scheme, key, &excited));
        assert!(back.approx_eq(&excited, 1e-15));
    }

    #[test]
    fn pad_probability_is_half_for_computational_targets() {
        let input = (
            Complex64::new(0.6, 0.0),
            Complex64::new(0.0, 0.8),
        );
        let zero = (Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0));
        let one = (Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0));
        assert!((cotp_measurement_probability(input, zero).unwrap() - 0.5).abs() < 1e-12);
        assert!((cotp_measurement_probability(input, one).unwrap() - 0.5).abs() < 1e-12);
    }

    #[test]
    fn pad_probability_on_x_basis_targets_depends_on_the_input() {
        let (theta, phi): (f64, f64) = (0.9, 0.4);
        let input = (
            Complex64::new((theta / 2.0).cos(), 0.0),
            Complex64::from_polar((theta / 2.0).sin(), phi),
        );
        let plus = (
            Complex64::new(FRAC_1_SQRT_2, 0.0),
            Complex64::new(FRAC_1_SQRT_2, 0.0),
        );
        let minus = (
            Complex64::new(FRAC_1_SQRT_2, 0.0),
            Complex64::new(-FRAC_1_SQRT_2, 0.0),
        );
        let expected = 0.5 * (1.0 + theta.sin() * phi.cos());
        assert!((cotp_measurement_probability(input, plus).unwrap() - expected).abs() < 1e-12);
        assert!(
            (cotp_measurement_probability(input, minus).unwrap() - (1.0 - expected)).abs() < 1e-12
        );
    }

    #[test]
    fn pad_probability_rejects_unnormalized_inputs() {
        let bad = (Complex64::new(1.0, 0.0), Complex64::new(1.0, 0.0));
        let zero = (Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0));
        assert!(matches!(
            cotp_measurement_probability(bad, zero),
            Err(Error::NotNormalized { .. })
        ));
    }

    #[test]
    fn two_qubit_classical_pad_flattens_the_diagonal() {
        let mut rng = ChaCha8Rng::seed_from_u64(61);
        for _ in 0..100 {
            let rho = random_density(&mut rng, 4);
            let out = otp_average_two_qubit(&OtpScheme::cotp_x(), &rho);
            for i in 0..4 {
                assert!((out.matrix().get(i, i).re - 0.25).abs() <= 1e-12);
                assert!(out.matrix().get(i, i).im.abs() <= 1e-12);
            }
        }
    }

    #[test]
    fn two_qubit_quantum_pad_is_maximally_mixed() {
        let mut rng = ChaCha8Rng::seed_from_u64(62);
        for _ in 0..100 {
            let rho = random_density(&mut rng, 4);
            let out = otp_average_two_qubit(&OtpScheme::qotp_xz(), &rho);
            assert!(out.matrix().max_abs_diff(DensityMatrix::maximally_mixed(4).matrix()) <= 1e-12);
        }
    }

    #[test]
    fn quantum_pad_keyed_matches_explicit_pauli_products() {
        // The standard-axis pad gates coincide with the exact Pauli matrices.
        let mut rng = ChaCha8Rng::seed_from_u64(63);
        let rho = random_bloch(&mut rng).to_density();
        let scheme = OtpScheme::qotp_xz();
        let x = pauli(PauliKind::X);
        let z = pauli(PauliKind::Z);
        let keyed = otp_keyed(&scheme, OtpKey::new(true, true), &rho);
        let expected = z.apply(&x.apply(&rho).unwrap()).unwrap();
        assert!(keyed.approx_eq(&expected, 1e-12));
    }

    #[test]
    fn otp_kind_round_trips_through_strings() {
        for kind in [OtpKind::None, OtpKind::Cotp, OtpKind::Qotp] {
            assert_eq!(kind.to_string().parse::<OtpKind>().unwrap(), kind);
        }
        assert!("quantum".parse::<OtpKind>().is_err());
    }

    #[test]
    fn pad_average_from_equator_states_stays_on_the_gate_axis() {
        // A pure state on the equator padded along X keeps only its X component.
        let bloch = BlochVector::new(1.0, PI / 2.0, 0.6).unwrap();
        let out = otp_average(&OtpScheme::cotp_x(), &bloch.to_density());
        let back = out.to_bloch().unwrap();
        let [x, y, z] = back.cartesian();
        assert!((x - 0.6f64.cos()).abs() < 1e-12);
        assert!(y.abs() < 1e-12);
        assert!(z.abs() < 1e-12);
    }
}

//! Density-matrix simulation of qubit state leakage through noisy reset
//! operations, and of the one-time-pad countermeasures that suppress it.
//!
//! The pipeline mirrors a shared-hardware threat model: a victim circuit
//! prepares and measures a qubit, a (classical or quantum) one-time pad may
//! scramble the post-measurement state, a reset operation runs, and an
//! attacker measures what survives. The crate provides
//!
//! - the state model ([`states`]) and gate set ([`gates`]),
//! - the three reset operations as quantum channels with CPTP validation
//!   ([`channels`]),
//! - averaged and keyed one-time pads ([`otp`]),
//! - closed-form attacker probabilities and theoretical SNR ([`analytic`]),
//! - seeded Monte Carlo shot sampling, sweeps, and SNR grids
//!   ([`experiment`]),
//! - self-checks ([`verify`]) and the command-line front end ([`cli`]).
//!
//! Every runnable capability has a matching example under `examples/`; see
//! the README for the tour.

pub mod analytic;
pub mod channels;
pub mod cli;
pub mod error;
pub mod experiment;
pub mod gates;
pub mod matrix;
pub mod otp;
pub mod states;
pub mod verify;

#[cfg(test)]
pub(crate) mod testutil;

pub use analytic::{snr_theoretical, Axis, LeakageFormulaInput};
pub use channels::{
    measure, measurementless_reset, thermal_relaxation, validate_choi, validate_kraus,
    validate_reset, ChoiChannel, CptpReport, KrausChannel, Measurement, MeasurementlessParams,
    ResetChannel, ResetInstrParams, ResetInstruction, ResetSpec, ThermalParams,
};
pub use error::{Error, Result};
pub use experiment::{
    reference_alphas, run_shot, run_snr_grid, run_sweep, snr_empirical, ExperimentConfig, GridParams,
    GridProtocol, SnrGrid, SweepResult,
};
pub use gates::{generalized_pauli_x, hadamard, pauli, rotation_x, Gate, PauliKind};
pub use matrix::ComplexMatrix;
pub use otp::{
    cotp_measurement_probability, otp_average, otp_average_two_qubit, otp_decrypt, otp_keyed,
    OtpKey, OtpKind, OtpScheme,
};
pub use states::{partial_trace_first, AxisVector, BlochVector, DensityMatrix};

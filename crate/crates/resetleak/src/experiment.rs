//! End-to-end pipeline simulation: per-shot Monte Carlo sampling of the
//! victim -> pad -> reset -> attacker flow, alpha sweeps, empirical SNR, and
//! SNR grids over error rates.
//!
//! Determinism contract: every (alpha, experiment) cell draws from its own
//! ChaCha stream derived from the master seed plus the cell index, so sweep
//! results are bit-identical no matter how cells are scheduled across
//! threads. Shots sample channel branches (measurement outcomes, reset-vs-
//! keep, Kraus branches) rather than only the final attacker distribution,
//! so the keyed pad path is exercised shot by shot.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::f64::consts::PI;

use crate::analytic::{p_minus, Axis, LeakageFormulaInput};
use crate::channels::{measure, ResetChannel, ResetSpec};
use crate::error::{Error, Result};
use crate::gates::{hadamard, pauli, PauliKind};
use crate::matrix::ComplexMatrix;
use crate::otp::{OtpKind, OtpScheme};
use crate::states::{AxisVector, BlochVector, DensityMatrix};

/// The nine victim rotation angles `{0, pi/8, ..., pi}`.
pub fn reference_alphas() -> Vec<f64> {
    (0..=8).map(|k| k as f64 * PI / 8.0).collect()
}

/// Shots per experiment in the reference protocol.
pub const REFERENCE_SHOTS: u64 = 10_000;
/// Experiment repetitions in the reference protocol.
pub const REFERENCE_EXPERIMENTS: u32 = 10;

/// Whether the pad is sampled per shot from a fresh key or applied as the
/// key-averaged channel. Keyed is the threat-model path; the averaged form
/// exists as an oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OtpApplication {
    Keyed,
    Averaged,
}

/// Full description of one pipeline configuration.
#[derive(Debug, Clone)]
pub struct ExperimentConfig {
    /// Victim rotation angle in radians.
    pub alpha: f64,
    pub victim_axis: Axis,
    pub otp: OtpScheme,
    pub reset: ResetSpec,
    pub attacker_axis: Axis,
    pub n_shots: u64,
    pub n_experiments: u32,
    pub master_seed: u64,
    pub otp_application: OtpApplication,
}

impl ExperimentConfig {
    /// Reference protocol: 10 experiments of 10,000 shots, keyed pads.
    pub fn reference_protocol(
        victim_axis: Axis,
        otp: OtpScheme,
        reset: ResetSpec,
        attacker_axis: Axis,
    ) -> Self {
        Self {
            alpha: 0.0,
            victim_axis,
            otp,
            reset,
            attacker_axis,
            n_shots: REFERENCE_SHOTS,
            n_experiments: REFERENCE_EXPERIMENTS,
            master_seed: 0,
            otp_application: OtpApplication::Keyed,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_shots < 1 {
            return Err(Error::ShotCount);
        }
        // Bessel's correction in the empirical SNR needs at least two.
        if self.n_experiments < 2 {
            return Err(Error::ExperimentCount {
                got: self.n_experiments,
            });
        }
        Ok(())
    }
}

/// The victim state entering the pad stage: prepare `R_alpha |0>`, apply the
/// protocol's Pauli-Z, measure along `victim_axis` without reading the
/// outcome. The averaged post-measurement state sits on the measurement axis
/// with signed magnitude `2 P(+1) - 1`.
pub fn victim_bloch_after_measurement(alpha: f64, victim_axis: Axis) -> BlochVector {
    let r_signed = 2.0 * victim_p_plus(alpha, victim_axis) - 1.0;
    let (r, flip) = if r_signed >= 0.0 {
        (r_signed, false)
    } else {
        (-r_signed, true)
    };
    let bloch = match (victim_axis, flip) {
        (Axis::Z, false) => BlochVector::new(r, 0.0, 0.0),
        (Axis::Z, true) => BlochVector::new(r, PI, 0.0),
        (Axis::X, false) => BlochVector::new(r, PI / 2.0, 0.0),
        (Axis::X, true) => BlochVector::new(r, PI / 2.0, PI),
    };
    bloch.expect("encoded magnitude is within the unit ball")
}

fn prepared_state(alpha: f64) -> DensityMatrix {
    let rotated = crate::gates::rotation_x(alpha)
        .apply(&DensityMatrix::basis_state(2, 0))
        .expect("one-qubit state");
    pauli(PauliKind::Z)
        .apply(&rotated)
        .expect("one-qubit state")
}

/// `P(+1)` of the victim measurement under the stated protocol. The X-axis
/// measurement is realized as Hadamard, measure along Z, Hadamard.
fn victim_p_plus(alpha: f64, victim_axis: Axis) -> f64 {
    let prepared = prepared_state(alpha);
    match victim_axis {
        Axis::Z => measure(&prepared, &AxisVector::z()).p_plus,
        Axis::X => {
            let rotated = hadamard().apply(&prepared).expect("one-qubit state");
            measure(&rotated, &AxisVector::z()).p_plus
        }
    }
}

// ---------------------------------------------------------------------------
// Fixed-size 2x2 arithmetic for the shot loop. One shot touches a handful of
// matrices; keeping them on the stack keeps sweeps fast on one core.

#[derive(Debug, Clone, Copy)]
struct Mat2 {
    e: [Complex64; 4],
}

impl Mat2 {
    fn from_matrix(m: &ComplexMatrix) -> Self {
        assert_eq!(m.dim(), 2, "shot pipeline states are one qubit");
        Self {
            e: [m.get(0, 0), m.get(0, 1), m.get(1, 0), m.get(1, 1)],
        }
    }

    fn zero() -> Self {
        Self {
            e: [Complex64::new(0.0, 0.0); 4],
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        let a = &self.e;
        let b = &rhs.e;
        Self {
            e: [
                a[0] * b[0] + a[1] * b[2],
                a[0] * b[1] + a[1] * b[3],
                a[2] * b[0] + a[3] * b[2],
                a[2] * b[1] + a[3] * b[3],
            ],
        }
    }

    fn adjoint(&self) -> Self {
        Self {
            e: [
                self.e[0].conj(),
                self.e[2].conj(),
                self.e[1].conj(),
                self.e[3].conj(),
            ],
        }
    }

    /// `u * self * u'`.
    fn conjugated_by(&self, u: &Self) -> Self {
        u.mul(self).mul(&u.adjoint())
    }

    fn scale(&self, factor: f64) -> Self {
        let mut e = self.e;
        for z in &mut e {
            *z *= factor;
        }
        Self { e }
    }

    fn add(&self, rhs: &Self) -> Self {
        let mut e = self.e;
        for (z, w) in e.iter_mut().zip(rhs.e.iter()) {
            *z += *w;
        }
        Self { e }
    }

    /// `Re Tr[self * rhs]`.
    fn trace_re_product(&self, rhs: &Self) -> f64 {
        let a = &self.e;
        let b = &rhs.e;
        (a[0] * b[0] + a[1] * b[2] + a[2] * b[1] + a[3] * b[3]).re
    }
}

/// Branch sampler for one reset operation.
#[derive(Debug, Clone)]
enum ResetSampler {
    /// Kraus branch sampling: branch `k` fires with `Tr[rho K_k' K_k]`.
    Thermal { ops: Vec<Mat2>, grams: Vec<Mat2> },
    /// Sample the true measurement outcome, flip the classical report with
    /// the readout errors, and apply the conditional gate (which itself
    /// fails with `p_bf`) on a reported "1".
    Instruction {
        m10: f64,
        m01: f64,
        p_bf: f64,
        plus: Mat2,
        minus: Mat2,
    },
    /// Keep the state or replace it with the ground state.
    Measurementless { p_r: f64, ground: Mat2 },
}

impl ResetSampler {
    fn from_spec(spec: &ResetSpec) -> Self {
        match spec.build() {
            ResetChannel::Thermal { kraus, .. } => {
                let ops: Vec<Mat2> = kraus.ops().iter().map(Mat2::from_matrix).collect();
                let grams = kraus
                    .ops()
                    .iter()
                    .map(|k| Mat2::from_matrix(&(&k.adjoint() * k)))
                    .collect();
                ResetSampler::Thermal { ops, grams }
            }
            ResetChannel::Instruction(instr) => ResetSampler::Instruction {
                m10: instr.params().m10(),
                m01: instr.params().m01(),
                p_bf: instr.params().p_bf(),
                plus: Mat2::from_matrix(instr.target_projector()),
                minus: Mat2::from_matrix(instr.rejected_projector()),
            },
            ResetChannel::Measurementless { p_r, .. } => ResetSampler::Measurementless {
                p_r,
                ground: Mat2::from_matrix(DensityMatrix::basis_state(2, 0).matrix()),
            },
        }
    }

    fn sample(&self, state: &Mat2, rng: &mut ChaCha8Rng) -> Mat2 {
        match self {
            ResetSampler::Thermal { ops, grams } => {
                let mut probs = [0.0f64; 4];
                let mut total = 0.0;
                for (k, gram) in grams.iter().enumerate() {
                    probs[k] = state.trace_re_product(gram).max(0.0);
                    total += probs[k];
                }
                let target = rng.random::<f64>() * total;
                let mut acc = 0.0;
                let mut chosen = 0;
                for (k, &p) in probs.iter().take(ops.len()).enumerate() {
                    acc += p;
                    chosen = k;
                    if target < acc {
                        break;
                    }
                }
                state
                    .conjugated_by(&ops[chosen])
                    .scale(1.0 / probs[chosen])
            }
            ResetSampler::Instruction {
                m10,
                m01,
                p_bf,
                plus,
                minus,
            } => {
                let p_plus = state.trace_re_product(plus).clamp(0.0, 1.0);
                let true_plus = rng.random::<f64>() < p_plus;
                let reported_one = if true_plus {
                    rng.random::<f64>() < *m10
                } else {
                    rng.random::<f64>() >= *m01
                };
                let mut final_plus = true_plus;
                if reported_one && rng.random::<f64>() >= *p_bf {
                    final_plus = !final_plus;
                }
                if final_plus {
                    *plus
                } else {
                    *minus
                }
            }
            ResetSampler::Measurementless { p_r, ground } => {
                if rng.random::<f64>() < *p_r {
                    *state
                } else {
                    *ground
                }
            }
        }
    }
}

/// Everything a shot needs, precomputed once per alpha.
struct ShotContext {
    victim_p_plus: f64,
    collapsed: [Mat2; 2],
    pad_kind: OtpKind,
    /// Pad unitaries indexed by `k1 + 2 * k2`; index 0 is the identity.
    pads: Vec<Mat2>,
    averaged_pad: bool,
    reset: ResetSampler,
    attacker_minus: Mat2,
}

impl ShotContext {
    fn build(cfg: &ExperimentConfig) -> Self {
        let prepared = prepared_state(cfg.alpha);
        let (victim_p_plus, plus, minus) = match cfg.victim_axis {
            Axis::Z => {
                let m = measure(&prepared, &AxisVector::z());
                (m.p_plus, m.collapsed_plus, m.collapsed_minus)
            }
            Axis::X => {
                // Hadamard, measure along Z, then the basis-restoring
                // Hadamard on the collapsed state.
                let h = hadamard();
                let rotated = h.apply(&prepared).expect("one-qubit state");
                let m = measure(&rotated, &AxisVector::z());
                (
                    m.p_plus,
                    h.apply(&m.collapsed_plus).expect("one-qubit state"),
                    h.apply(&m.collapsed_minus).expect("one-qubit state"),
                )
            }
        };
        let pads = cfg
            .otp
            .pad_unitaries()
            .iter()
            .map(Mat2::from_matrix)
            .collect();
        let attacker_minus = DensityMatrix::from_ket(&cfg.attacker_axis.to_axis_vector().ket_minus())
            .expect("axis kets are normalized");
        Self {
            victim_p_plus,
            collapsed: [
                Mat2::from_matrix(plus.matrix()),
                Mat2::from_matrix(minus.matrix()),
            ],
            pad_kind: cfg.otp.kind(),
            pads,
            averaged_pad: cfg.otp_application == OtpApplication::Averaged,
            reset: ResetSampler::from_spec(&cfg.reset),
            attacker_minus: Mat2::from_matrix(attacker_minus.matrix()),
        }
    }

    fn sample(&self, rng: &mut ChaCha8Rng) -> i32 {
        let mut state = if rng.random::<f64>() < self.victim_p_plus {
            self.collapsed[0]
        } else {
            self.collapsed[1]
        };

        if self.averaged_pad {
            if self.pads.len() > 1 {
                let mut sum = Mat2::zero();
                for pad in &self.pads {
                    sum = sum.add(&state.conjugated_by(pad));
                }
                state = sum.scale(1.0 / self.pads.len() as f64);
            }
        } else {
            let key_index = match self.pad_kind {
                OtpKind::None => 0,
                OtpKind::Cotp => usize::from(rng.random::<bool>()),
                OtpKind::Qotp => {
                    let k1 = usize::from(rng.random::<bool>());
                    let k2 = usize::from(rng.random::<bool>());
                    k1 + 2 * k2
                }
            };
            if key_index > 0 {
                state = state.conjugated_by(&self.pads[key_index]);
            }
        }

        state = self.reset.sample(&state, rng);

        let p_minus = state.trace_re_product(&self.attacker_minus).clamp(0.0, 1.0);
        if rng.random::<f64>() < p_minus {
            -1
        } else {
            1
        }
    }
}

/// Samples one attacker outcome (+1 or -1) for the configured pipeline.
pub fn run_shot(cfg: &ExperimentConfig, rng: &mut ChaCha8Rng) -> i32 {
    ShotContext::build(cfg).sample(rng)
}

/// Frequencies of the -1 outcome per (alpha, experiment) cell.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    pub alphas: Vec<f64>,
    pub n_shots: u64,
    pub n_experiments: u32,
    /// `frequencies[alpha_index][experiment_index]`.
    pub frequencies: Vec<Vec<f64>>,
}

impl SweepResult {
    /// Mean frequency across experiments at one alpha. All experiments use
    /// the same shot count, so this is also the pooled frequency.
    pub fn mean_at(&self, alpha_index: usize) -> f64 {
        let row = &self.frequencies[alpha_index];
        row.iter().sum::<f64>() / row.len() as f64
    }

    /// Population standard deviation across experiments at one alpha.
    pub fn std_at(&self, alpha_index: usize) -> f64 {
        let row = &self.frequencies[alpha_index];
        let mean = self.mean_at(alpha_index);
        let var = row.iter().map(|f| (f - mean).powi(2)).sum::<f64>() / row.len() as f64;
        var.sqrt()
    }

    pub fn alpha_index(&self, alpha: f64) -> Option<usize> {
        self.alphas.iter().position(|a| (a - alpha).abs() <= 1e-12)
    }
}

fn cell_rng(master_seed: u64, salt: u64, stream: u64) -> ChaCha8Rng {
    let mut seed = [0u8; 32];
    seed[0..8].copy_from_slice(&master_seed.to_le_bytes());
    seed[8..16].copy_from_slice(&salt.to_le_bytes());
    let mut rng = ChaCha8Rng::from_seed(seed);
    rng.set_stream(stream);
    rng
}

/// Runs the sweep with an extra salt folded into the RNG seed, so grid cells
/// can share one master seed without sharing streams.
pub fn run_sweep_salted(
    cfg: &ExperimentConfig,
    alphas: &[f64],
    salt: u64,
) -> Result<SweepResult> {
    cfg.validate()?;
    if alphas.is_empty() {
        return Err(Error::EmptyAlphas);
    }
    let contexts: Vec<ShotContext> = alphas
        .iter()
        .map(|&alpha| {
            let mut cell_cfg = cfg.clone();
            cell_cfg.alpha = alpha;
            ShotContext::build(&cell_cfg)
        })
        .collect();

    let n_exp = cfg.n_experiments as usize;
    let cells: Vec<(usize, usize)> = (0..alphas.len())
        .flat_map(|ai| (0..n_exp).map(move |ei| (ai, ei)))
        .collect();
    let flat: Vec<f64> = cells
        .par_iter()
        .map(|&(ai, ei)| {
            let mut rng = cell_rng(cfg.master_seed, salt, (ai * n_exp + ei) as u64);
            let ctx = &contexts[ai];
            let mut minus_count = 0u64;
            for _ in 0..cfg.n_shots {
                if ctx.sample(&mut rng) < 0 {
                    minus_count += 1;
                }
            }
            minus_count as f64 / cfg.n_shots as f64
        })
        .collect();

    let frequencies = flat
        .chunks(n_exp)
        .map(|chunk| chunk.to_vec())
        .collect();
    Ok(SweepResult {
        alphas: alphas.to_vec(),
        n_shots: cfg.n_shots,
        n_experiments: cfg.n_experiments,
        frequencies,
    })
}

/// Runs `n_experiments` repetitions of `n_shots` shots for every alpha.
/// Deterministic in `(config, master_seed)` regardless of thread count.
pub fn run_sweep(cfg: &ExperimentConfig, alphas: &[f64]) -> Result<SweepResult> {
    run_sweep_salted(cfg, alphas, 0)
}

/// Empirical SNR of a sweep containing alpha = 0 and alpha = pi:
/// the mean frequency difference between the extremes over the
/// Bessel-corrected cross-experiment deviation averaged over alphas.
/// A zero denominator is reported as an infinite sentinel.
pub fn snr_empirical(sweep: &SweepResult) -> Result<f64> {
    let zero = sweep
        .alpha_index(0.0)
        .ok_or(Error::MissingAlpha { required: 0.0 })?;
    let pi = sweep
        .alpha_index(PI)
        .ok_or(Error::MissingAlpha { required: PI })?;
    let numerator = sweep.mean_at(pi) - sweep.mean_at(zero);
    let n_exp = sweep.n_experiments as f64;
    let bessel = (n_exp / (n_exp - 1.0)).sqrt();
    let denominator = (0..sweep.alphas.len())
        .map(|ai| sweep.std_at(ai) * bessel)
        .sum::<f64>()
        / sweep.alphas.len() as f64;
    if denominator == 0.0 {
        return Ok(f64::INFINITY.copysign(numerator));
    }
    Ok(numerator / denominator)
}

/// Parameter grid for one reset kind. Thermal cells violating
/// `gamma1 <= 2 * gamma2` are invalid (marked, not computed).
#[derive(Debug, Clone)]
pub enum GridParams {
    Thermal {
        gamma1: Vec<f64>,
        gamma2: Vec<f64>,
        p0: f64,
    },
    Instruction {
        m10: Vec<f64>,
        m01: Vec<f64>,
        p_bf: f64,
    },
    Measurementless {
        p_r: Vec<f64>,
    },
}

impl GridParams {
    pub fn kind_name(&self) -> &'static str {
        match self {
            GridParams::Thermal { .. } => "thermal",
            GridParams::Instruction { .. } => "reset_instruction",
            GridParams::Measurementless { .. } => "measurementless",
        }
    }

    pub fn param1_name(&self) -> &'static str {
        match self {
            GridParams::Thermal { .. } => "gamma1",
            GridParams::Instruction { .. } => "m10",
            GridParams::Measurementless { .. } => "p_r",
        }
    }

    pub fn param2_name(&self) -> &'static str {
        match self {
            GridParams::Thermal { .. } => "gamma2",
            GridParams::Instruction { .. } => "m01",
            GridParams::Measurementless { .. } => "none",
        }
    }

    pub fn param1_values(&self) -> &[f64] {
        match self {
            GridParams::Thermal { gamma1, .. } => gamma1,
            GridParams::Instruction { m10, .. } => m10,
            GridParams::Measurementless { p_r } => p_r,
        }
    }

    /// The second grid axis; a singleton placeholder for 1-D grids.
    pub fn param2_values(&self) -> Vec<f64> {
        match self {
            GridParams::Thermal { gamma2, .. } => gamma2.clone(),
            GridParams::Instruction { m01, .. } => m01.clone(),
            GridParams::Measurementless { .. } => vec![0.0],
        }
    }

    /// Builds the reset for one cell; `Ok(None)` marks an invalid cell.
    fn build_cell(&self, v1: f64, v2: f64) -> Result<Option<ResetSpec>> {
        match self {
            GridParams::Thermal { p0, .. } => {
                match crate::channels::ThermalParams::with_populations(v1, v2, *p0, 1.0 - *p0) {
                    Ok(params) => Ok(Some(ResetSpec::Thermal(params))),
                    Err(Error::GammaOrdering { .. }) => Ok(None),
                    Err(e) => Err(e),
                }
            }
            GridParams::Instruction { p_bf, .. } => {
                let params =
                    crate::channels::ResetInstrParams::new(v1, v2, *p_bf, AxisVector::z())?;
                Ok(Some(ResetSpec::Instruction(params)))
            }
            GridParams::Measurementless { .. } => {
                let params = crate::channels::MeasurementlessParams::new(v1)?;
                Ok(Some(ResetSpec::Measurementless(params)))
            }
        }
    }
}

/// Sweep protocol shared by every grid cell.
#[derive(Debug, Clone)]
pub struct GridProtocol {
    pub victim_axis: Axis,
    pub alphas: Vec<f64>,
    pub n_shots: u64,
    pub n_experiments: u32,
    pub master_seed: u64,
}

impl GridProtocol {
    pub fn reference(victim_axis: Axis) -> Self {
        Self {
            victim_axis,
            alphas: reference_alphas(),
            n_shots: REFERENCE_SHOTS,
            n_experiments: REFERENCE_EXPERIMENTS,
            master_seed: 0,
        }
    }
}

/// One grid cell's empirical and theoretical SNR.
#[derive(Debug, Clone)]
pub struct SnrGridCell {
    pub i1: usize,
    pub i2: usize,
    pub otp: OtpKind,
    pub attacker_axis: Axis,
    pub valid: bool,
    pub snr_empirical: f64,
    pub snr_theoretical: f64,
}

/// Tabulated SNR over a parameter grid.
#[derive(Debug, Clone)]
pub struct SnrGrid {
    pub reset_kind: &'static str,
    pub param1_name: &'static str,
    pub param1_values: Vec<f64>,
    pub param2_name: &'static str,
    pub param2_values: Vec<f64>,
    pub cells: Vec<SnrGridCell>,
}

/// Runs a full sweep per (cell, pad, axis) combination and tabulates both
/// SNR estimates. Pads use the standard Pauli-X / Pauli-Z gates.
pub fn run_snr_grid(
    params: &GridParams,
    otps: &[OtpKind],
    axes: &[Axis],
    proto: &GridProtocol,
) -> Result<SnrGrid> {
    if proto.alphas.is_empty() {
        return Err(Error::EmptyAlphas);
    }
    for required in [0.0, PI] {
        if !proto.alphas.iter().any(|a| (a - required).abs() <= 1e-12) {
            return Err(Error::MissingAlpha { required });
        }
    }
    let param1 = params.param1_values().to_vec();
    let param2 = params.param2_values();
    let mut cells = Vec::new();
    for (i1, &v1) in param1.iter().enumerate() {
        for (i2, &v2) in param2.iter().enumerate() {
            let spec = params.build_cell(v1, v2)?;
            for (oi, &otp) in otps.iter().enumerate() {
                for (xi, &axis) in axes.iter().enumerate() {
                    let Some(reset) = spec.clone() else {
                        cells.push(SnrGridCell {
                            i1,
                            i2,
                            otp,
                            attacker_axis: axis,
                            valid: false,
                            snr_empirical: f64::NAN,
                            snr_theoretical: f64::NAN,
                        });
                        continue;
                    };
                    let mut cfg = ExperimentConfig::reference_protocol(
                        proto.victim_axis,
                        OtpScheme::standard(otp),
                        reset.clone(),
                        axis,
                    );
                    cfg.n_shots = proto.n_shots;
                    cfg.n_experiments = proto.n_experiments;
                    cfg.master_seed = proto.master_seed;
                    let salt =
                        (((i1 * param2.len() + i2) * otps.len() + oi) * axes.len() + xi) as u64 + 1;
                    let sweep = run_sweep_salted(&cfg, &proto.alphas, salt)?;
                    let empirical = snr_empirical(&sweep)?;
                    let theoretical = snr_theoretical_for(
                        &reset,
                        otp,
                        proto.victim_axis,
                        axis,
                        &proto.alphas,
                        proto.n_shots,
                    );
                    cells.push(SnrGridCell {
                        i1,
                        i2,
                        otp,
                        attacker_axis: axis,
                        valid: true,
                        snr_empirical: empirical,
                        snr_theoretical: theoretical,
                    });
                }
            }
        }
    }
    Ok(SnrGrid {
        reset_kind: params.kind_name(),
        param1_name: params.param1_name(),
        param1_values: param1,
        param2_name: params.param2_name(),
        param2_values: param2,
        cells,
    })
}

/// Theoretical SNR of a configuration under the measured-victim encoding.
pub fn snr_theoretical_for(
    reset: &ResetSpec,
    otp: OtpKind,
    victim_axis: Axis,
    attacker_axis: Axis,
    alphas: &[f64],
    n_shots: u64,
) -> f64 {
    crate::analytic::snr_theoretical(
        |alpha| {
            p_minus(&LeakageFormulaInput {
                victim: victim_bloch_after_measurement(alpha, victim_axis),
                otp,
                reset: reset.clone(),
                attacker_axis,
            })
        },
        alphas,
        n_shots,
    )
}

/// Analytic P(-1) for one pipeline configuration (used for CSV columns and
/// oracle comparisons).
pub fn analytic_p_minus(cfg: &ExperimentConfig) -> f64 {
    p_minus(&LeakageFormulaInput {
        victim: victim_bloch_after_measurement(cfg.alpha, cfg.victim_axis),
        otp: cfg.otp.kind(),
        reset: cfg.reset.clone(),
        attacker_axis: cfg.attacker_axis,
    })
}

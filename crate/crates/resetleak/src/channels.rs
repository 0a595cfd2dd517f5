//! Quantum channels in Kraus and Choi form, the three reset operations, and
//! projective measurement.
//!
//! Choi convention used throughout: `L = sum_ij |i><j| (x) E(|i><j|)` with
//! composite row index `2*(input copy) + (output index)`. Application is
//! `E(rho) = Tr_1[L (rho^T (x) I)]` and trace preservation reads
//! `Tr_2[L] = I`. This ordering reproduces the closed-form thermal-relaxation
//! action on Bloch states.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::states::{partial_trace_second, AxisVector, DensityMatrix};

/// Residual threshold for channel validity checks. One order looser than the
/// construction arithmetic so representation conversions do not false-fail.
pub const CPTP_TOL: f64 = 1e-10;

/// Operator-sum representation `E(rho) = sum_i K_i rho K_i'`.
#[derive(Debug, Clone, PartialEq)]
pub struct KrausChannel {
    ops: Vec<ComplexMatrix>,
}

impl KrausChannel {
    /// Rejects operator sets that do not satisfy `sum_i K_i' K_i = I`.
    pub fn new(ops: Vec<ComplexMatrix>) -> Result<Self> {
        for op in &ops {
            op.require_dim(2)?;
        }
        let channel = Self { ops };
        let residual = channel.completeness_residual();
        if residual > CPTP_TOL {
            return Err(Error::KrausIncomplete { residual });
        }
        Ok(channel)
    }

    /// Accepts the operators without the completeness check. Intended for
    /// feeding deliberately broken sets to [`validate_kraus`].
    pub fn new_unchecked(ops: Vec<ComplexMatrix>) -> Self {
        Self { ops }
    }

    pub fn identity() -> Self {
        Self {
            ops: vec![ComplexMatrix::identity(2)],
        }
    }

    pub fn ops(&self) -> &[ComplexMatrix] {
        &self.ops
    }

    pub fn completeness_residual(&self) -> f64 {
        let mut sum = ComplexMatrix::zeros(2);
        for op in &self.ops {
            sum = &sum + &(&op.adjoint() * op);
        }
        sum.max_abs_diff(&ComplexMatrix::identity(2))
    }

    /// Linear action on an arbitrary matrix.
    pub fn apply_matrix(&self, m: &ComplexMatrix) -> ComplexMatrix {
        let mut out = ComplexMatrix::zeros(2);
        for op in &self.ops {
            out = &out + &(&(op * m) * &op.adjoint());
        }
        out
    }

    pub fn apply(&self, rho: &DensityMatrix) -> DensityMatrix {
        assert_eq!(rho.dim(), 2, "Kraus channels act on one qubit");
        DensityMatrix::from_matrix_unchecked(self.apply_matrix(rho.matrix()))
    }

    pub fn to_choi(&self) -> ChoiChannel {
        ChoiChannel::new(choi_from_linear_map(|m| self.apply_matrix(m)))
            .expect("a complete Kraus set converts to a CPTP Choi matrix")
    }
}

/// Choi-matrix representation of a one-qubit channel.
#[derive(Debug, Clone, PartialEq)]
pub struct ChoiChannel {
    choi: ComplexMatrix,
}

impl ChoiChannel {
    pub fn new(choi: ComplexMatrix) -> Result<Self> {
        choi.require_dim(4)?;
        let channel = Self { choi };
        let residual = channel.trace_preservation_residual();
        if residual > CPTP_TOL {
            return Err(Error::ChoiNotTracePreserving { residual });
        }
        let min_eigenvalue = channel.choi.min_hermitian_eigenvalue();
        if min_eigenvalue < -CPTP_TOL {
            return Err(Error::NotPositiveSemidefinite { min_eigenvalue });
        }
        Ok(channel)
    }

    /// Accepts the matrix without validity checks (diagnostics path).
    pub fn new_unchecked(choi: ComplexMatrix) -> Self {
        Self { choi }
    }

    pub fn choi(&self) -> &ComplexMatrix {
        &self.choi
    }

    /// `max |Tr_2[L] - I|`; zero for trace-preserving channels.
    pub fn trace_preservation_residual(&self) -> f64 {
        partial_trace_second(&self.choi)
            .expect("Choi matrices are 4x4")
            .max_abs_diff(&ComplexMatrix::identity(2))
    }

    /// `E(m) = Tr_1[L (m^T (x) I)]`.
    pub fn apply_matrix(&self, m: &ComplexMatrix) -> ComplexMatrix {
        let lifted = m.transpose().kronecker(&ComplexMatrix::identity(2));
        crate::states::partial_trace_first(&(&self.choi * &lifted))
            .expect("product of 4x4 matrices is 4x4")
    }

    pub fn apply(&self, rho: &DensityMatrix) -> DensityMatrix {
        assert_eq!(rho.dim(), 2, "Choi channels act on one qubit");
        DensityMatrix::from_matrix_unchecked(self.apply_matrix(rho.matrix()))
    }

    /// Kraus operators from the Hermitian eigendecomposition of the Choi
    /// matrix: each eigenpair `(l, v)` with `l > 0` yields
    /// `K[a][i] = sqrt(l) * v[2i + a]`.
    pub fn to_kraus(&self) -> KrausChannel {
        let mut ops = Vec::new();
        for (value, vector) in self.choi.hermitian_eigenpairs() {
            if value <= 1e-12 {
                continue;
            }
            let scale = value.sqrt();
            let mut op = ComplexMatrix::zeros(2);
            for i in 0..2 {
                for a in 0..2 {
                    op.set(a, i, vector[2 * i + a] * scale);
                }
            }
            ops.push(op);
        }
        KrausChannel::new(ops).expect("eigendecomposition of a CPTP Choi matrix is complete")
    }
}

/// `L = sum_ij |i><j| (x) f(|i><j|)` for a linear map `f`.
pub fn choi_from_linear_map(f: impl Fn(&ComplexMatrix) -> ComplexMatrix) -> ComplexMatrix {
    let mut choi = ComplexMatrix::zeros(4);
    for i in 0..2 {
        for j in 0..2 {
            let mut basis = ComplexMatrix::zeros(2);
            basis.set(i, j, Complex64::new(1.0, 0.0));
            let image = f(&basis);
            for a in 0..2 {
                for b in 0..2 {
                    choi.set(2 * i + a, 2 * j + b, image.get(a, b));
                }
            }
        }
    }
    choi
}

/// Thermal-relaxation parameters. `gamma1`/`gamma2` are the dimensionless
/// exponents `t / T1` and `t / T2` for idle time `t`; `p0`/`p1` are the
/// equilibrium populations (near 1 and 0 on typical hardware).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThermalParams {
    gamma1: f64,
    gamma2: f64,
    p0: f64,
    p1: f64,
}

impl ThermalParams {
    /// Standard equilibrium `p0 = 1`, `p1 = 0`.
    pub fn new(gamma1: f64, gamma2: f64) -> Result<Self> {
        Self::with_populations(gamma1, gamma2, 1.0, 0.0)
    }

    pub fn with_populations(gamma1: f64, gamma2: f64, p0: f64, p1: f64) -> Result<Self> {
        for (name, value) in [("gamma1", gamma1), ("gamma2", gamma2)] {
            if !value.is_finite() || value < 0.0 {
                return Err(Error::NegativeDecay { name, value });
            }
        }
        // T2 <= 2*T1 physically, hence gamma1 <= 2*gamma2.
        if gamma1 > 2.0 * gamma2 + 1e-12 {
            return Err(Error::GammaOrdering {
                gamma1,
                twice_gamma2: 2.0 * gamma2,
            });
        }
        for (name, value) in [("p0", p0), ("p1", p1)] {
            if !value.is_finite() || !(0.0..=1.0).contains(&value) {
                return Err(Error::InvalidProbability { name, value });
            }
        }
        if (p0 + p1 - 1.0).abs() > 1e-12 {
            return Err(Error::PopulationSum { sum: p0 + p1 });
        }
        Ok(Self {
            gamma1,
            gamma2,
            p0,
            p1,
        })
    }

    pub fn gamma1(&self) -> f64 {
        self.gamma1
    }

    pub fn gamma2(&self) -> f64 {
        self.gamma2
    }

    pub fn p0(&self) -> f64 {
        self.p0
    }

    pub fn p1(&self) -> f64 {
        self.p1
    }
}

/// The thermal-relaxation channel in Choi form:
/// diagonal `1 - p1 g, p1 g, p0 g, 1 - p0 g` with `g = 1 - exp(-gamma1)` and
/// corner entries `exp(-gamma2)`.
pub fn thermal_relaxation(params: &ThermalParams) -> ChoiChannel {
    let g = 1.0 - (-params.gamma1).exp();
    let od = (-params.gamma2).exp();
    let mut choi = ComplexMatrix::zeros(4);
    choi.set(0, 0, Complex64::new(1.0 - params.p1 * g, 0.0));
    choi.set(1, 1, Complex64::new(params.p1 * g, 0.0));
    choi.set(2, 2, Complex64::new(params.p0 * g, 0.0));
    choi.set(3, 3, Complex64::new(1.0 - params.p0 * g, 0.0));
    choi.set(0, 3, Complex64::new(od, 0.0));
    choi.set(3, 0, Complex64::new(od, 0.0));
    ChoiChannel::new(choi).expect("validated thermal parameters give a CPTP channel")
}

/// Parameters of the measure-then-conditionally-flip reset. `m10` is the
/// probability of reporting the excited outcome from the ground state, `m01`
/// the reverse, `p_bf` the bit-flip error of the conditional gate, and
/// `axis` the measurement axis (Z on current hardware).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResetInstrParams {
    m10: f64,
    m01: f64,
    p_bf: f64,
    axis: AxisVector,
}

impl ResetInstrParams {
    pub fn new(m10: f64, m01: f64, p_bf: f64, axis: AxisVector) -> Result<Self> {
        for (name, value) in [("m10", m10), ("m01", m01), ("p_bf", p_bf)] {
            if !value.is_finite() || !(0.0..=1.0).contains(&value) {
                return Err(Error::InvalidProbability { name, value });
            }
        }
        Ok(Self {
            m10,
            m01,
            p_bf,
            axis,
        })
    }

    /// Measurement along Z with an error-free conditional gate.
    pub fn along_z(m10: f64, m01: f64) -> Result<Self> {
        Self::new(m10, m01, 0.0, AxisVector::z())
    }

    pub fn m10(&self) -> f64 {
        self.m10
    }

    pub fn m01(&self) -> f64 {
        self.m01
    }

    pub fn p_bf(&self) -> f64 {
        self.p_bf
    }

    pub fn axis(&self) -> &AxisVector {
        &self.axis
    }
}

/// Idealized reset that keeps the state with probability `p_r` and resets to
/// the ground state otherwise.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasurementlessParams {
    p_r: f64,
}

impl MeasurementlessParams {
    pub fn new(p_r: f64) -> Result<Self> {
        if !p_r.is_finite() || !(0.0..=1.0).contains(&p_r) {
            return Err(Error::InvalidProbability {
                name: "p_r",
                value: p_r,
            });
        }
        Ok(Self { p_r })
    }

    pub fn p_r(&self) -> f64 {
        self.p_r
    }
}

/// `E(rho) = p_r rho + (1 - p_r) |0><0|` as the Kraus set
/// `{sqrt(p_r) I, sqrt(1-p_r) |0><0|, sqrt(1-p_r) |0><1|}`.
pub fn measurementless_reset(params: &MeasurementlessParams) -> KrausChannel {
    let keep = params.p_r.sqrt();
    let reset = (1.0 - params.p_r).sqrt();
    let mut k1 = ComplexMatrix::zeros(2);
    k1.set(0, 0, Complex64::new(reset, 0.0));
    let mut k2 = ComplexMatrix::zeros(2);
    k2.set(0, 1, Complex64::new(reset, 0.0));
    KrausChannel::new(vec![ComplexMatrix::identity(2).scale_real(keep), k1, k2])
        .expect("convex combination of identity and reset is CPTP")
}

/// The reset instruction as the composition of its physical pieces: a
/// projective measurement whose classical report flips with `m10`/`m01`,
/// followed by a conditional flip (applied on report "1") that itself fails
/// with probability `p_bf`. The fused closed form is recovered exactly; the
/// composition keeps the true-state/report correlation explicit.
#[derive(Debug, Clone, PartialEq)]
pub struct ResetInstruction {
    params: ResetInstrParams,
    proj_plus: ComplexMatrix,
    proj_minus: ComplexMatrix,
}

impl ResetInstruction {
    pub fn new(params: ResetInstrParams) -> Self {
        let plus = DensityMatrix::from_ket(&params.axis().ket_plus())
            .expect("axis kets are normalized");
        let minus = DensityMatrix::from_ket(&params.axis().ket_minus())
            .expect("axis kets are normalized");
        Self {
            params,
            proj_plus: plus.matrix().clone(),
            proj_minus: minus.matrix().clone(),
        }
    }

    pub fn params(&self) -> &ResetInstrParams {
        &self.params
    }

    /// Projector onto the reset target `|m><m|`.
    pub fn target_projector(&self) -> &ComplexMatrix {
        &self.proj_plus
    }

    pub fn rejected_projector(&self) -> &ComplexMatrix {
        &self.proj_minus
    }

    /// Averaged linear action, composed from the two physical pieces.
    ///
    /// Stage one (noisy measurement): the state collapses onto the true
    /// outcome while the classical report flips with `m10`/`m01`, leaving
    /// four (true, reported) branches. Stage two (conditional gate): a
    /// reported "1" triggers the flip, which itself fails with `p_bf`.
    pub fn apply_matrix(&self, m: &ComplexMatrix) -> ComplexMatrix {
        let a = self.proj_plus.trace_product(m);
        let b = self.proj_minus.trace_product(m);
        let (m10, m01, p_bf) = (self.params.m10, self.params.m01, self.params.p_bf);
        // (true outcome, reported bit) branch weights after the measurement.
        let plus_rep0 = a * (1.0 - m10);
        let plus_rep1 = a * m10;
        let minus_rep0 = b * m01;
        let minus_rep1 = b * (1.0 - m01);
        // Reported "1" applies the flip with probability 1 - p_bf.
        let w_plus = plus_rep0 + plus_rep1 * p_bf + minus_rep1 * (1.0 - p_bf);
        let w_minus = minus_rep0 + minus_rep1 * p_bf + plus_rep1 * (1.0 - p_bf);
        &self.proj_plus.scale(w_plus) + &self.proj_minus.scale(w_minus)
    }

    pub fn apply(&self, rho: &DensityMatrix) -> DensityMatrix {
        assert_eq!(rho.dim(), 2, "reset instructions act on one qubit");
        DensityMatrix::from_matrix_unchecked(self.apply_matrix(rho.matrix()))
    }

    pub fn to_choi(&self) -> ChoiChannel {
        ChoiChannel::new(choi_from_linear_map(|m| self.apply_matrix(m)))
            .expect("the reset instruction is CPTP for probabilities in [0, 1]")
    }
}

/// Which reset operation runs between executions, with its parameters.
#[derive(Debug, Clone, PartialEq)]
pub enum ResetSpec {
    Thermal(ThermalParams),
    Instruction(ResetInstrParams),
    Measurementless(MeasurementlessParams),
}

impl ResetSpec {
    pub fn kind_name(&self) -> &'static str {
        match self {
            ResetSpec::Thermal(_) => "thermal",
            ResetSpec::Instruction(_) => "reset_instruction",
            ResetSpec::Measurementless(_) => "measurementless",
        }
    }

    /// Prepares the runtime channel.
    pub fn build(&self) -> ResetChannel {
        match self {
            ResetSpec::Thermal(p) => {
                let choi = thermal_relaxation(p);
                let kraus = choi.to_kraus();
                ResetChannel::Thermal { choi, kraus }
            }
            ResetSpec::Instruction(p) => ResetChannel::Instruction(ResetInstruction::new(*p)),
            ResetSpec::Measurementless(p) => ResetChannel::Measurementless {
                kraus: measurementless_reset(p),
                p_r: p.p_r(),
            },
        }
    }
}

/// A prepared reset operation; application averages over all branches.
#[derive(Debug, Clone)]
pub enum ResetChannel {
    Thermal {
        choi: ChoiChannel,
        kraus: KrausChannel,
    },
    Instruction(ResetInstruction),
    Measurementless {
        kraus: KrausChannel,
        p_r: f64,
    },
}

impl ResetChannel {
    pub fn apply_matrix(&self, m: &ComplexMatrix) -> ComplexMatrix {
        match self {
            ResetChannel::Thermal { choi, .. } => choi.apply_matrix(m),
            ResetChannel::Instruction(instr) => instr.apply_matrix(m),
            ResetChannel::Measurementless { kraus, .. } => kraus.apply_matrix(m),
        }
    }

    /// The averaged channel `E(rho)`.
    pub fn apply_average(&self, rho: &DensityMatrix) -> DensityMatrix {
        assert_eq!(rho.dim(), 2, "reset channels act on one qubit");
        DensityMatrix::from_matrix_unchecked(self.apply_matrix(rho.matrix()))
    }

    pub fn to_choi(&self) -> ChoiChannel {
        match self {
            ResetChannel::Thermal { choi, .. } => choi.clone(),
            ResetChannel::Instruction(instr) => instr.to_choi(),
            ResetChannel::Measurementless { kraus, .. } => kraus.to_choi(),
        }
    }
}

/// Outcome probabilities and post-measurement states of a projective
/// measurement along an axis.
#[derive(Debug, Clone)]
pub struct Measurement {
    pub p_plus: f64,
    pub p_minus: f64,
    pub collapsed_plus: DensityMatrix,
    pub collapsed_minus: DensityMatrix,
}

/// Born-rule measurement of a one-qubit state along `axis`:
/// `p+ = <m|rho|m>` with `|m> = cos(t/2)|0> + e^{i p} sin(t/2)|1>`.
pub fn measure(rho: &DensityMatrix, axis: &AxisVector) -> Measurement {
    assert_eq!(rho.dim(), 2, "measurement acts on one qubit");
    let plus = DensityMatrix::from_ket(&axis.ket_plus()).expect("axis kets are normalized");
    let minus = DensityMatrix::from_ket(&axis.ket_minus()).expect("axis kets are normalized");
    let p_plus = plus.matrix().trace_product(rho.matrix()).re.clamp(0.0, 1.0);
    let p_minus = minus
        .matrix()
        .trace_product(rho.matrix())
        .re
        .clamp(0.0, 1.0);
    Measurement {
        p_plus,
        p_minus,
        collapsed_plus: plus,
        collapsed_minus: minus,
    }
}

/// Residuals of the CPTP checks for one channel, evaluated at [`CPTP_TOL`].
#[derive(Debug, Clone)]
pub struct CptpReport {
    pub channel: String,
    /// `max |sum K'K - I|`; absent for channels given in Choi form.
    pub completeness_residual: Option<f64>,
    /// `max |Tr_2[L] - I|`.
    pub trace_residual: f64,
    /// Smallest eigenvalue of the Choi matrix.
    pub min_eigenvalue: f64,
}

impl CptpReport {
    pub fn passed(&self) -> bool {
        self.completeness_residual.unwrap_or(0.0) <= CPTP_TOL
            && self.trace_residual <= CPTP_TOL
            && self.min_eigenvalue >= -CPTP_TOL
    }

    pub fn summary(&self) -> String {
        let verdict = if self.passed() { "pass" } else { "FAIL" };
        let completeness = match self.completeness_residual {
            Some(r) => format!("completeness {r:.2e}, "),
            None => String::new(),
        };
        format!(
            "{verdict}: {} ({}trace {:.2e}, min eigenvalue {:.2e})",
            self.channel, completeness, self.trace_residual, self.min_eigenvalue
        )
    }
}

fn report_from_raw_choi(
    name: &str,
    choi: &ComplexMatrix,
    completeness_residual: Option<f64>,
) -> CptpReport {
    let trace_residual = partial_trace_second(choi)
        .expect("Choi matrices are 4x4")
        .max_abs_diff(&ComplexMatrix::identity(2));
    CptpReport {
        channel: name.to_string(),
        completeness_residual,
        trace_residual,
        min_eigenvalue: choi.min_hermitian_eigenvalue(),
    }
}

/// Report-only CPTP check of a (possibly unchecked) Kraus set.
pub fn validate_kraus(name: &str, channel: &KrausChannel) -> CptpReport {
    let choi = choi_from_linear_map(|m| channel.apply_matrix(m));
    report_from_raw_choi(name, &choi, Some(channel.completeness_residual()))
}

/// Report-only CPTP check of a Choi matrix.
pub fn validate_choi(name: &str, channel: &ChoiChannel) -> CptpReport {
    report_from_raw_choi(name, channel.choi(), None)
}

/// Report-only CPTP check of a prepared reset operation.
pub fn validate_reset(name: &str, channel: &ResetChannel) -> CptpReport {
    let choi = choi_from_linear_map(|m| channel.apply_matrix(m));
    let completeness = match channel {
        ResetChannel::Thermal { kraus, .. } | ResetChannel::Measurementless { kraus, .. } => {
            Some(kraus.completeness_residual())
        }
        ResetChannel::Instruction(_) => None,
    };
    report_from_raw_choi(name, &choi, completeness)
}

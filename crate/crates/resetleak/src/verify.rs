//! Built-in self checks: CPTP validation of the stock channels, maximal
//! mixing of the quantum pad, closed-form vs pipeline agreement, and Monte
//! Carlo spot checks against the analytic probabilities.

use rand_chacha::ChaCha8Rng;

use crate::analytic::{p_minus, Axis, LeakageFormulaInput};
use crate::channels::{
    measure, validate_kraus, validate_reset, KrausChannel, MeasurementlessParams,
    ResetInstrParams, ResetSpec, ThermalParams,
};
use crate::experiment::{run_sweep_salted, ExperimentConfig};
use crate::otp::{otp_average, OtpKind, OtpScheme};
use crate::states::{AxisVector, BlochVector, DensityMatrix};
use rand::{Rng, SeedableRng};
use std::f64::consts::{PI, TAU};

/// Options for a verification run. `extra_kraus` lets callers (and tests)
/// inject channels into the CPTP section.
#[derive(Debug, Default)]
pub struct VerifyOptions {
    /// Reduced grids and shot counts.
    pub quick: bool,
    pub seed: u64,
    pub extra_kraus: Vec<(String, KrausChannel)>,
}

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// One line per check.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for check in &self.checks {
            let verdict = if check.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("{verdict} {} ({})\n", check.name, check.detail));
        }
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        out.push_str(&format!(
            "{verdict} overall: {}/{} checks passed\n",
            self.checks.iter().filter(|c| c.passed).count(),
            self.checks.len()
        ));
        out
    }
}

fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![lo];
    }
    (0..n)
        .map(|k| lo + (hi - lo) * k as f64 / (n - 1) as f64)
        .collect()
}

fn cptp_grid_check(name: &str, channels: Vec<ResetSpec>) -> CheckResult {
    let mut worst_trace: f64 = 0.0;
    let mut worst_eig: f64 = f64::INFINITY;
    let mut worst_completeness: f64 = 0.0;
    let mut all_passed = true;
    for spec in &channels {
        let report = validate_reset(spec.kind_name(), &spec.build());
        all_passed &= report.passed();
        worst_trace = worst_trace.max(report.trace_residual);
        worst_eig = worst_eig.min(report.min_eigenvalue);
        if let Some(c) = report.completeness_residual {
            worst_completeness = worst_completeness.max(c);
        }
    }
    CheckResult {
        name: name.to_string(),
        passed: all_passed,
        detail: format!(
            "{} channels, worst trace residual {worst_trace:.2e}, min eigenvalue {worst_eig:.2e}, worst completeness {worst_completeness:.2e}",
            channels.len()
        ),
    }
}

fn qotp_mixing_check(n_states: usize, seed: u64) -> CheckResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let scheme = OtpScheme::qotp_xz();
    let mixed = DensityMatrix::maximally_mixed(2);
    let mut worst: f64 = 0.0;
    for _ in 0..n_states {
        let r = rng.random::<f64>().cbrt();
        let theta = (1.0 - 2.0 * rng.random::<f64>()).clamp(-1.0, 1.0).acos();
        let phi = (rng.random::<f64>() * TAU).min(TAU - f64::EPSILON);
        let rho = BlochVector::new(r, theta, phi).unwrap().to_density();
        worst = worst.max(otp_average(&scheme, &rho).matrix().max_abs_diff(mixed.matrix()));
    }
    CheckResult {
        name: "qotp/maximal-mixing".to_string(),
        passed: worst <= 1e-12,
        detail: format!("{n_states} states, max deviation from I/2 is {worst:.2e}"),
    }
}

fn reference_resets() -> Vec<ResetSpec> {
    vec![
        ResetSpec::Thermal(ThermalParams::new(2.5, 2.5).unwrap()),
        ResetSpec::Instruction(ResetInstrParams::along_z(0.05, 0.10).unwrap()),
        ResetSpec::Measurementless(MeasurementlessParams::new(0.1).unwrap()),
    ]
}

fn analytic_pipeline_check(quick: bool) -> CheckResult {
    let samples = if quick { 2 } else { 3 };
    let rs = linspace(0.0, 1.0, samples);
    let thetas = linspace(0.0, PI, samples + 1);
    let phis = linspace(0.0, 5.0, samples);
    let mut worst: f64 = 0.0;
    let mut count = 0usize;
    for reset in reference_resets() {
        let channel = reset.build();
        for otp in [OtpKind::None, OtpKind::Cotp, OtpKind::Qotp] {
            let scheme = OtpScheme::standard(otp);
            for axis in [Axis::Z, Axis::X] {
                for &r in &rs {
                    for &theta in &thetas {
                        for &phi in &phis {
                            let victim = BlochVector::new(r, theta, phi).unwrap();
                            let formula = p_minus(&LeakageFormulaInput {
                                victim,
                                otp,
                                reset: reset.clone(),
                                attacker_axis: axis,
                            });
                            let padded = otp_average(&scheme, &victim.to_density());
                            let piped =
                                measure(&channel.apply_average(&padded), &axis.to_axis_vector())
                                    .p_minus;
                            worst = worst.max((formula - piped).abs());
                            count += 1;
                        }
                    }
                }
            }
        }
    }
    CheckResult {
        name: "analytic/pipeline-agreement".to_string(),
        passed: worst <= 1e-10,
        detail: format!("{count} combinations, max |formula - pipeline| = {worst:.2e}"),
    }
}

fn monte_carlo_check(quick: bool, seed: u64) -> CheckResult {
    let (n_shots, n_experiments) = if quick { (1_000, 2) } else { (10_000, 5) };
    let alphas = [0.0, PI / 2.0, PI];
    let mut worst_z: f64 = 0.0;
    let mut exact_violation = false;
    let mut count = 0usize;
    for reset in reference_resets() {
        for otp in [OtpKind::None, OtpKind::Cotp, OtpKind::Qotp] {
            let mut cfg = ExperimentConfig::reference_protocol(
                Axis::Z,
                OtpScheme::standard(otp),
                reset.clone(),
                Axis::Z,
            );
            cfg.n_shots = n_shots;
            cfg.n_experiments = n_experiments;
            cfg.master_seed = seed;
            let sweep = run_sweep_salted(&cfg, &alphas, count as u64)
                .expect("verification configs are valid");
            for (ai, &alpha) in alphas.iter().enumerate() {
                let mut point = cfg.clone();
                point.alpha = alpha;
                let p = crate::experiment::analytic_p_minus(&point);
                let pooled = sweep.mean_at(ai);
                let n_total = (n_shots * n_experiments as u64) as f64;
                if p == 0.0 || p == 1.0 {
                    exact_violation |= pooled != p;
                } else {
                    let sigma = (p * (1.0 - p) / n_total).sqrt();
                    worst_z = worst_z.max((pooled - p).abs() / sigma);
                }
            }
            count += 1;
        }
    }
    CheckResult {
        name: "monte-carlo/analytic-agreement".to_string(),
        passed: !exact_violation && worst_z <= 5.0,
        detail: format!(
            "{count} configurations x {} alphas, worst |z| = {worst_z:.2}{}",
            alphas.len(),
            if exact_violation {
                ", exact-probability cell violated"
            } else {
                ""
            }
        ),
    }
}

/// Runs every check and collects the report.
pub fn run_verification(opts: &VerifyOptions) -> VerifyReport {
    let grid_n = if opts.quick { 3 } else { 5 };
    let mut checks = Vec::new();

    let thermal: Vec<ResetSpec> = linspace(0.0, 1.0, grid_n)
        .into_iter()
        .flat_map(|g1| {
            linspace(0.5, 2.5, grid_n).into_iter().map(move |g2| {
                ResetSpec::Thermal(ThermalParams::new(g1, g2).expect("grid satisfies ordering"))
            })
        })
        .collect();
    checks.push(cptp_grid_check("cptp/thermal-grid", thermal));

    let instruction: Vec<ResetSpec> = linspace(0.0, 0.25, grid_n)
        .into_iter()
        .flat_map(|m10| {
            linspace(0.0, 0.25, grid_n).into_iter().map(move |m01| {
                ResetSpec::Instruction(
                    ResetInstrParams::new(m10, m01, 0.02, AxisVector::z())
                        .expect("probabilities in range"),
                )
            })
        })
        .collect();
    checks.push(cptp_grid_check("cptp/reset-instruction-grid", instruction));

    let measurementless: Vec<ResetSpec> = linspace(0.0, 1.0, grid_n * grid_n)
        .into_iter()
        .map(|p_r| {
            ResetSpec::Measurementless(
                MeasurementlessParams::new(p_r).expect("probabilities in range"),
            )
        })
        .collect();
    checks.push(cptp_grid_check(
        "cptp/measurementless-grid",
        measurementless,
    ));

    for (name, channel) in &opts.extra_kraus {
        let report = validate_kraus(name, channel);
        checks.push(CheckResult {
            name: format!("cptp/injected-{name}"),
            passed: report.passed(),
            detail: report.summary(),
        });
    }

    checks.push(qotp_mixing_check(
        if opts.quick { 200 } else { 1000 },
        opts.seed,
    ));
    checks.push(analytic_pipeline_check(opts.quick));
    checks.push(monte_carlo_check(opts.quick, opts.seed));

    VerifyReport { checks }
}

//! Closed-form attacker probabilities P(-1) for each reset operation, pad
//! setting, and attacker axis, plus the theoretical signal-to-noise ratio.
//!
//! The formulas are the independent analytic route to the numbers the
//! channel pipeline produces; tests hold the two routes equal. Classical-pad
//! formulas assume the pad gate is the ordinary Pauli-X and the reset
//! instruction measures along Z, matching the standard scheme.

use std::fmt;
use std::str::FromStr;

use crate::channels::{MeasurementlessParams, ResetInstrParams, ResetSpec, ThermalParams};
use crate::otp::OtpKind;
use crate::states::{AxisVector, BlochVector};

/// Attacker (or victim) measurement axis restricted to the two closed-form
/// cases.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    Z,
    X,
}

impl Axis {
    pub fn to_axis_vector(self) -> AxisVector {
        match self {
            Axis::Z => AxisVector::z(),
            Axis::X => AxisVector::x(),
        }
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axis::Z => "z",
            Axis::X => "x",
        })
    }
}

impl FromStr for Axis {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "z" => Ok(Axis::Z),
            "x" => Ok(Axis::X),
            other => Err(format!("unknown axis `{other}`")),
        }
    }
}

/// One fully specified leakage scenario.
#[derive(Debug, Clone, PartialEq)]
pub struct LeakageFormulaInput {
    pub victim: BlochVector,
    pub otp: OtpKind,
    pub reset: ResetSpec,
    pub attacker_axis: Axis,
}

/// Dispatches on the reset kind.
pub fn p_minus(input: &LeakageFormulaInput) -> f64 {
    match &input.reset {
        ResetSpec::Thermal(p) => {
            p_minus_thermal(&input.victim, input.otp, p, input.attacker_axis)
        }
        ResetSpec::Instruction(p) => {
            p_minus_reset_instruction(&input.victim, input.otp, p, input.attacker_axis)
        }
        ResetSpec::Measurementless(p) => {
            p_minus_measurementless(&input.victim, input.otp, p, input.attacker_axis)
        }
    }
}

/// Signed Z component `r cos(theta)`.
fn z_component(victim: &BlochVector) -> f64 {
    victim.cartesian()[2]
}

/// Signed X component `r sin(theta) cos(phi)`.
fn x_component(victim: &BlochVector) -> f64 {
    victim.cartesian()[0]
}

/// Thermal relaxation. Along Z only `gamma1` (and the equilibrium
/// populations) enter; along X only `gamma2` does. Without a pad the Z-axis
/// probability carries the victim's `r cos(theta)`; the classical pad erases
/// it; the quantum pad is the `r = 0` value. Along X both no-pad and the
/// classical pad leak `r sin(theta) cos(phi)` through the surviving
/// coherence.
pub fn p_minus_thermal(
    victim: &BlochVector,
    otp: OtpKind,
    params: &ThermalParams,
    axis: Axis,
) -> f64 {
    match axis {
        Axis::Z => {
            let g = 1.0 - (-params.gamma1()).exp();
            let (a, b) = match otp {
                OtpKind::None => {
                    let rc = z_component(victim);
                    (0.5 * (1.0 + rc), 0.5 * (1.0 - rc))
                }
                OtpKind::Cotp | OtpKind::Qotp => (0.5, 0.5),
            };
            a * params.p1() * g + b * (1.0 - params.p0() * g)
        }
        Axis::X => {
            let e2 = (-params.gamma2()).exp();
            match otp {
                OtpKind::None | OtpKind::Cotp => 0.5 * (1.0 - e2 * x_component(victim)),
                OtpKind::Qotp => 0.5,
            }
        }
    }
}

/// Reset instruction measuring along Z. Along X the post-reset state is
/// diagonal, so every pad setting gives exactly 1/2; along Z the readout
/// asymmetry `m10 - m01` sets the sign of the leakage.
pub fn p_minus_reset_instruction(
    victim: &BlochVector,
    otp: OtpKind,
    params: &ResetInstrParams,
    axis: Axis,
) -> f64 {
    match axis {
        Axis::X => 0.5,
        Axis::Z => {
            let (m10, m01, p_bf) = (params.m10(), params.m01(), params.p_bf());
            let base = (m10 + m01) * (1.0 - p_bf) + p_bf;
            match otp {
                OtpKind::None => {
                    let slope = (m10 - m01) * (1.0 - p_bf) - p_bf;
                    0.5 * (base + slope * z_component(victim))
                }
                OtpKind::Cotp | OtpKind::Qotp => 0.5 * base,
            }
        }
    }
}

/// Measurement-less reset: keep with probability `p_r`, otherwise reset.
/// Coincides with isotropic thermal relaxation at `p_r = exp(-gamma)`.
pub fn p_minus_measurementless(
    victim: &BlochVector,
    otp: OtpKind,
    params: &MeasurementlessParams,
    axis: Axis,
) -> f64 {
    let p_r = params.p_r();
    match axis {
        Axis::Z => match otp {
            OtpKind::None => 0.5 * p_r * (1.0 - z_component(victim)),
            OtpKind::Cotp | OtpKind::Qotp => 0.5 * p_r,
        },
        Axis::X => match otp {
            OtpKind::None | OtpKind::Cotp => 0.5 * (1.0 - p_r * x_component(victim)),
            OtpKind::Qotp => 0.5,
        },
    }
}

/// Theoretical SNR of an alpha sweep under binomial shot noise:
/// `[P(pi) - P(0)] / mean_alpha sqrt(P (1 - P)) * sqrt(n)`.
///
/// A degenerate denominator (every probability exactly 0 or 1) is reported
/// as an infinite sentinel carrying the numerator's sign.
pub fn snr_theoretical(p_of_alpha: impl Fn(f64) -> f64, alphas: &[f64], n_shots: u64) -> f64 {
    assert!(n_shots >= 1, "at least one shot is required");
    assert!(!alphas.is_empty(), "alpha grid must not be empty");
    let numerator = p_of_alpha(std::f64::consts::PI) - p_of_alpha(0.0);
    let mut acc = 0.0;
    for &alpha in alphas {
        let p = p_of_alpha(alpha);
        assert!(
            (0.0..=1.0).contains(&p),
            "p_of_alpha({alpha}) = {p} is not a probability"
        );
        acc += (p * (1.0 - p)).sqrt();
    }
    let denominator = acc / alphas.len() as f64;
    if denominator == 0.0 {
        return f64::INFINITY.copysign(numerator);
    }
    numerator / denominator * (n_shots as f64).sqrt()
}

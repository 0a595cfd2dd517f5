//! Pads and resets on arbitrary Bloch-sphere axes: the classical pad hides
//! exactly the components perpendicular to its gate axis.
//!
//! Run with: cargo run --example generalized_axes

use resetleak::{
    generalized_pauli_x, measure, otp_average, AxisVector, BlochVector, OtpScheme,
    ResetInstrParams, ResetInstruction,
};
use std::f64::consts::PI;

fn main() -> resetleak::Result<()> {
    // A tilted pad axis and an axis perpendicular to it.
    let pad_axis = AxisVector::new(1.1, 0.7)?;
    let perp_axis = AxisVector::new(1.1 + PI / 2.0, 0.7)?;
    println!(
        "pad axis . perpendicular axis = {:.2e}",
        pad_axis.dot(&perp_axis)
    );

    let gate = generalized_pauli_x(&pad_axis);
    println!("pad gate: {}", gate.label());

    let victim = BlochVector::new(0.95, 2.0, 5.5)?.to_density();
    let padded = otp_average(&OtpScheme::cotp(pad_axis), &victim);

    println!("\nmeasuring the padded state:");
    let along_pad = measure(&padded, &pad_axis);
    println!("  along the pad axis:      P(+1) = {:.6} (victim-dependent)", along_pad.p_plus);
    let along_perp = measure(&padded, &perp_axis);
    println!("  perpendicular to it:     P(+1) = {:.6} (always 1/2)", along_perp.p_plus);

    // The pad hides only components perpendicular to its gate axis, so the
    // reset instruction must measure on a perpendicular axis to stay blind.
    println!("\nreset instruction measuring perpendicular to the pad axis:");
    let reset = ResetInstruction::new(ResetInstrParams::new(0.05, 0.10, 0.0, perp_axis)?);
    let after = reset.apply(&padded);
    let leak = measure(&after, &perp_axis);
    println!(
        "  P(-1) after reset = {:.6} (victim-independent: (m10 + m01) / 2)",
        leak.p_minus
    );

    println!("\nquantum pad on a tilted orthogonal axis pair:");
    let scheme = OtpScheme::qotp(pad_axis, perp_axis)?;
    let mixed = otp_average(&scheme, &victim);
    println!(
        "  deviation from I/2 = {:.2e}",
        mixed
            .matrix()
            .max_abs_diff(resetleak::DensityMatrix::maximally_mixed(2).matrix())
    );
    Ok(())
}

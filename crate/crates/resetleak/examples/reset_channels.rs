//! The three reset operations as quantum channels, with CPTP validation and
//! the Kraus/Choi cross-check.
//!
//! Run with: cargo run --example reset_channels

use resetleak::{
    measure, validate_reset, AxisVector, BlochVector, MeasurementlessParams, ResetInstrParams,
    ResetSpec, ThermalParams,
};
use std::f64::consts::PI;

fn main() -> resetleak::Result<()> {
    // The excited state is the worst case for every reset.
    let excited = BlochVector::new(1.0, PI, 0.0)?.to_density();

    let resets = [
        ResetSpec::Thermal(ThermalParams::new(2.5, 2.5)?),
        ResetSpec::Instruction(ResetInstrParams::along_z(0.05, 0.10)?),
        ResetSpec::Measurementless(MeasurementlessParams::new(0.1)?),
    ];

    println!("=== Residual excitation after each reset ===\n");
    for reset in &resets {
        let channel = reset.build();
        let out = channel.apply_average(&excited);
        let leak = measure(&out, &AxisVector::z()).p_minus;
        println!("{:<18} P(-1 | excited victim) = {:.6}", reset.kind_name(), leak);
    }

    println!("\n=== CPTP validation ===\n");
    for reset in &resets {
        let report = validate_reset(reset.kind_name(), &reset.build());
        println!("{}", report.summary());
    }

    println!("\n=== Kraus and Choi forms agree ===\n");
    let thermal = ThermalParams::new(1.2, 0.8)?;
    let choi = resetleak::thermal_relaxation(&thermal);
    let kraus = choi.to_kraus();
    println!("thermal channel decomposes into {} Kraus operators", kraus.ops().len());
    let rho = BlochVector::new(0.7, 0.9, 2.2)?.to_density();
    let deviation = choi
        .apply(&rho)
        .matrix()
        .max_abs_diff(kraus.apply(&rho).matrix());
    println!("max |choi(rho) - kraus(rho)| = {deviation:.2e}");
    Ok(())
}

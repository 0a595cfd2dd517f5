//! Shot-sampled sweep against the closed forms, plus the empirical SNR.
//!
//! Run with: cargo run --release --example monte_carlo_sweep

use resetleak::experiment::{analytic_p_minus, snr_theoretical_for};
use resetleak::{
    reference_alphas, run_sweep, snr_empirical, Axis, ExperimentConfig, OtpKind, OtpScheme,
    ResetInstrParams, ResetSpec,
};

fn main() -> resetleak::Result<()> {
    let reset = ResetSpec::Instruction(ResetInstrParams::along_z(0.05, 0.10)?);
    let alphas = reference_alphas();

    for otp in [OtpKind::None, OtpKind::Cotp, OtpKind::Qotp] {
        let mut cfg = ExperimentConfig::reference_protocol(
            Axis::Z,
            OtpScheme::standard(otp),
            reset.clone(),
            Axis::Z,
        );
        cfg.master_seed = 2024;
        let sweep = run_sweep(&cfg, &alphas)?;

        println!("reset instruction, otp = {otp} (10 experiments x 10,000 shots)");
        println!("{:>10} {:>12} {:>12} {:>12}", "alpha/pi", "empirical", "analytic", "std");
        for (ai, &alpha) in alphas.iter().enumerate() {
            let mut point = cfg.clone();
            point.alpha = alpha;
            println!(
                "{:>10.3} {:>12.6} {:>12.6} {:>12.6}",
                alpha / std::f64::consts::PI,
                sweep.mean_at(ai),
                analytic_p_minus(&point),
                sweep.std_at(ai)
            );
        }
        let empirical = snr_empirical(&sweep)?;
        let theoretical =
            snr_theoretical_for(&reset, otp, Axis::Z, Axis::Z, &alphas, cfg.n_shots);
        println!("empirical SNR = {empirical:.3}, theoretical SNR = {theoretical:.3}\n");
    }
    Ok(())
}

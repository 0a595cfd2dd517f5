//! SNR over a readout-error grid: the leakage pattern reverses sign when
//! m10 exceeds m01.
//!
//! Run with: cargo run --release --example snr_sign_flip

use resetleak::{run_snr_grid, Axis, GridParams, GridProtocol, OtpKind};

fn main() -> resetleak::Result<()> {
    let params = GridParams::Instruction {
        m10: vec![0.02, 0.05, 0.10],
        m01: vec![0.02, 0.05, 0.10],
        p_bf: 0.0,
    };
    let mut proto = GridProtocol::reference(Axis::Z);
    proto.n_shots = 4000;
    proto.n_experiments = 5;
    proto.master_seed = 9;

    let grid = run_snr_grid(&params, &[OtpKind::None], &[Axis::Z], &proto)?;

    println!("reset instruction, no pad, attacker along Z");
    println!(
        "{:>6} {:>6} {:>14} {:>14}",
        "m10", "m01", "empirical SNR", "theoretical SNR"
    );
    for cell in &grid.cells {
        println!(
            "{:>6.2} {:>6.2} {:>14.2} {:>14.2}",
            grid.param1_values[cell.i1],
            grid.param2_values[cell.i2],
            cell.snr_empirical,
            cell.snr_theoretical
        );
    }
    println!("\nNegative SNR wherever m10 > m01: the residual excitation is");
    println!("then anti-correlated with the victim state.");
    Ok(())
}

//! One-time pads: keyed application, decryption, and the averaged channels.
//!
//! Run with: cargo run --example otp_padding

use resetleak::{
    otp_average, otp_average_two_qubit, otp_decrypt, otp_keyed, BlochVector, DensityMatrix,
    OtpKey, OtpKind, OtpScheme,
};

fn main() -> resetleak::Result<()> {
    let victim = BlochVector::new(0.9, 1.0, 0.4)?.to_density();

    println!("=== Keyed pads round-trip ===\n");
    for kind in [OtpKind::Cotp, OtpKind::Qotp] {
        let scheme = OtpScheme::standard(kind);
        for key in OtpKey::all() {
            let padded = otp_keyed(&scheme, key, &victim);
            let recovered = otp_decrypt(&scheme, key, &padded);
            println!(
                "{kind} key (k1={}, k2={}): recovery deviation {:.2e}",
                u8::from(key.k1),
                u8::from(key.k2),
                recovered.matrix().max_abs_diff(victim.matrix())
            );
        }
    }

    println!("\n=== Averaged channels ===\n");
    let cotp = otp_average(&OtpScheme::cotp_x(), &victim);
    println!(
        "classical pad keeps the X component: off-diagonal = {:.6} (expected {:.6})",
        cotp.matrix().get(0, 1).re,
        0.5 * 0.9 * 1.0f64.sin() * 0.4f64.cos()
    );

    let qotp = otp_average(&OtpScheme::qotp_xz(), &victim);
    let mixed = DensityMatrix::maximally_mixed(2);
    println!(
        "quantum pad is maximally mixing: deviation from I/2 = {:.2e}",
        qotp.matrix().max_abs_diff(mixed.matrix())
    );

    println!("\n=== Two qubits, independent pads ===\n");
    let two = victim.tensor(&BlochVector::new(0.5, 2.0, 1.0)?.to_density());
    let padded = otp_average_two_qubit(&OtpScheme::cotp_x(), &two);
    let diag: Vec<String> = (0..4)
        .map(|i| format!("{:.6}", padded.matrix().get(i, i).re))
        .collect();
    println!("classical pad diagonal: [{}]", diag.join(", "));
    let padded = otp_average_two_qubit(&OtpScheme::qotp_xz(), &two);
    println!(
        "quantum pad deviation from I/4: {:.2e}",
        padded
            .matrix()
            .max_abs_diff(DensityMatrix::maximally_mixed(4).matrix())
    );
    Ok(())
}

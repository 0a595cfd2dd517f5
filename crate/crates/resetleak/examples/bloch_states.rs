//! Single-qubit state model: Bloch coordinates, density matrices, and
//! composite states.
//!
//! Run with: cargo run --example bloch_states

use resetleak::{partial_trace_first, BlochVector, DensityMatrix};
use std::f64::consts::PI;

fn print_state(label: &str, rho: &DensityMatrix) {
    println!("{label}:");
    for i in 0..rho.dim() {
        let row: Vec<String> = (0..rho.dim())
            .map(|j| {
                let z = rho.matrix().get(i, j);
                format!("{:+.4}{:+.4}i", z.re, z.im)
            })
            .collect();
        println!("  [{}]", row.join(", "));
    }
}

fn main() -> resetleak::Result<()> {
    println!("=== Bloch coordinates to density matrices ===\n");

    let north = BlochVector::new(1.0, 0.0, 0.0)?;
    print_state("|0><0| (north pole)", &north.to_density());

    let equator = BlochVector::new(1.0, PI / 2.0, 0.0)?;
    print_state("\n|+><+| (equator, phi = 0)", &equator.to_density());

    let mixed = BlochVector::new(0.0, 0.0, 0.0)?;
    print_state("\nmaximally mixed (r = 0)", &mixed.to_density());

    println!("\n=== Round trip through the parametrization ===\n");
    let original = BlochVector::new(0.75, 1.1, 4.0)?;
    let back = original.to_density().to_bloch()?;
    println!(
        "r = {:.6} -> {:.6}, theta = {:.6} -> {:.6}, phi = {:.6} -> {:.6}",
        original.r(),
        back.r(),
        original.theta(),
        back.theta(),
        original.phi(),
        back.phi()
    );

    println!("\n=== Validity checking ===\n");
    match BlochVector::new(1.2, 0.0, 0.0) {
        Err(e) => println!("r = 1.2 rejected: {e}"),
        Ok(_) => unreachable!(),
    }

    println!("\n=== Composite states ===\n");
    let pair = north.to_density().tensor(&equator.to_density());
    println!("dim of |0><0| (x) |+><+| = {}", pair.dim());
    let reduced = partial_trace_first(&pair.matrix().clone())?;
    println!(
        "tracing out the first qubit returns the second: max deviation {:.2e}",
        reduced.max_abs_diff(equator.to_density().matrix())
    );
    Ok(())
}

// Shrink one ball while its tangent neighbour grows and watch the density.

use horopack::catalog::builtin;
use horopack::lorentz::DEFAULT_TOL;
use horopack::packing::sweep;

pub fn run() -> horopack::Result<()> {
    let x5 = builtin("X5")?;
    let curve = sweep(&x5, 0, 8, DEFAULT_TOL)?;
    println!("pivot A0, coupled {:?}, x in [0, {:.6}]", curve.coupled, curve.x_max);
    for p in &curve.samples {
        let bar = "#".repeat(((p.delta - 0.45) * 400.0).max(0.0) as usize);
        println!("  x = {:.4}  δ = {:.6}  {bar}", p.x, p.delta);
    }
    println!(
        "minimum {:.8} at x = {:.8}; ratio to δ(0) = {:.6}",
        curve.minimum.delta,
        curve.minimum.x,
        curve.minimum.delta / curve.start().delta
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> horopack::Result<()> {
    run()
}

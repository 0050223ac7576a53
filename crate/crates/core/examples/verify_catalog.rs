// Structural checks for every builtin simplex.

use horopack::catalog::{builtins, verify};
use horopack::lorentz::gram;

pub fn run() -> horopack::Result<()> {
    for s in builtins() {
        let report = verify(&s, 1e-9);
        let g = gram(&s.geometry()?.forms)?;
        let sig = g.signature(1e-9);
        println!(
            "{:<4} {:<18} ideal {:?}  signature ({},{},{})  {}",
            s.witt,
            s.coxeter_symbol,
            s.ideal_vertices(),
            sig.negative,
            sig.zero,
            sig.positive,
            if report.passed() { "ok" } else { "FAILED" }
        );
        assert!(report.passed());
    }

    // A form with the wrong orientation is caught.
    let bad = horopack::catalog::builtin("U5")?.with_flipped_form(2);
    let report = verify(&bad, 1e-9);
    let failed: Vec<_> = report.failures().map(|c| c.name).collect();
    println!("U5 with u2 flipped fails: {failed:?}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> horopack::Result<()> {
    run()
}
